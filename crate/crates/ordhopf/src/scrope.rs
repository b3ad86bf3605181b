//! Scrope complexes.
//!
//! `Scr(k, z)` lives on vertices `[k−1]` and is generated by the faces
//! `φ_i = [k−1] ∖ [x_i, y_i − 1]`. With no generators it is the full simplex
//! on `[k−1]`; the void marker stands for the complex with no faces at all.

use std::fmt;

use crate::compositions::{Preposet, SetComposition};
use crate::error::{invalid, precondition, Error, Result};
use crate::orders::{descent_composition, LinearOrder};
use crate::set::{Elem, Set};

/// Largest `k` accepted by the brute-force oracle.
pub const BRUTE_FORCE_CEILING: usize = 21;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ScropeComplex {
    k: usize,
    z: Vec<(usize, usize)>,
    void: bool,
}

/// Homotopy type of a Scrope complex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Homotopy {
    Contractible,
    /// A homotopy sphere of the given dimension (`−1` for `{∅}`).
    Sphere(i32),
    /// The void complex.
    Empty,
}

impl Homotopy {
    pub fn reduced_euler(self) -> i64 {
        match self {
            Homotopy::Contractible | Homotopy::Empty => 0,
            Homotopy::Sphere(q) => {
                if q.rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

impl ScropeComplex {
    /// `Scr(k, z)`, normalized.
    pub fn new(k: usize, z: Vec<(usize, usize)>) -> Result<Self> {
        if k < 1 {
            return invalid("Scrope complexes need k ≥ 1");
        }
        for &(x, y) in &z {
            if !(1 <= x && x < y && y <= k) {
                return invalid(format!("bad interval pair ({x},{y}) for k={k}"));
            }
        }
        Ok(ScropeComplex { k, z, void: false }.normalize())
    }

    pub fn full(k: usize) -> Self {
        ScropeComplex { k, z: Vec::new(), void: false }
    }

    pub fn void(k: usize) -> Self {
        ScropeComplex { k, z: Vec::new(), void: true }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.z
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    pub fn is_full(&self) -> bool {
        !self.void && self.z.is_empty()
    }

    /// Keep only pairs whose interval `[x, y−1]` is inclusion-minimal; sort.
    pub fn normalize(&self) -> Self {
        let mut z = self.z.clone();
        z.sort_unstable();
        z.dedup();
        let contains = |outer: (usize, usize), inner: (usize, usize)| {
            outer != inner && outer.0 <= inner.0 && inner.1 <= outer.1
        };
        let keep: Vec<(usize, usize)> = z
            .iter()
            .copied()
            .filter(|&p| !z.iter().any(|&q| contains(p, q)))
            .collect();
        ScropeComplex { k: self.k, z: keep, void: self.void }
    }

    /// Facets as subsets of `[k−1]`.
    pub fn facets(&self) -> Vec<Set> {
        if self.void {
            return Vec::new();
        }
        let all = Set::interval(1, self.k as Elem - 1);
        if self.z.is_empty() {
            return vec![all];
        }
        self.z
            .iter()
            .map(|&(x, y)| all - Set::interval(x as Elem, y as Elem - 1))
            .collect()
    }

    /// Homotopy type by the cone/suspension recursion.
    pub fn homotopy(&self) -> Homotopy {
        if self.void {
            return Homotopy::Empty;
        }
        let s = self.normalize();
        let (k, z) = (s.k, &s.z);
        if z.is_empty() {
            return if k == 1 { Homotopy::Sphere(-1) } else { Homotopy::Contractible };
        }
        let r = z.len();
        if r == 1 {
            return if z[0] == (1, k) { Homotopy::Sphere(-1) } else { Homotopy::Contractible };
        }
        let (xr, yr) = z[r - 1];
        if yr < k {
            return Homotopy::Contractible;
        }
        let inner: Vec<(usize, usize)> = z[..r - 1].iter().map(|&(x, y)| (x, y.min(xr))).collect();
        match (ScropeComplex { k: xr, z: inner, void: false }).homotopy() {
            Homotopy::Sphere(q) => Homotopy::Sphere(q + 1),
            _ => Homotopy::Contractible,
        }
    }

    /// `χ̃` by the recursion; always in `{−1, 0, 1}`.
    pub fn reduced_euler(&self) -> i64 {
        self.homotopy().reduced_euler()
    }

    /// `χ̃` by enumerating all faces.
    pub fn reduced_euler_bruteforce(&self) -> Result<i64> {
        if self.k > BRUTE_FORCE_CEILING {
            return Err(Error::Ceiling(format!("brute force limited to k ≤ {BRUTE_FORCE_CEILING}")));
        }
        let facets = self.facets();
        if facets.is_empty() {
            return Ok(0);
        }
        let all = Set::interval(1, self.k as Elem - 1);
        Ok(all
            .subsets()
            .filter(|s| facets.iter().any(|f| s.is_subset(*f)))
            .map(|s| if s.len() % 2 == 0 { -1 } else { 1 })
            .sum())
    }

    /// Induced subcomplex on `[k−1] ∖ {v}`, renumbered, as a Scrope complex.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v < 1 || v >= self.k {
            return invalid("vertex out of range");
        }
        if self.void {
            return Ok(ScropeComplex::void(self.k - 1));
        }
        // Deleting separator v merges positions v and v+1 of [k].
        let shift = |p: usize| if p > v { p - 1 } else { p };
        let mut z = Vec::new();
        for &(x, y) in &self.z {
            let (nx, ny) = (shift(x), shift(y));
            if nx == ny {
                // the interval was just {v}: its facet is [k−1]∖{v}, now the full simplex
                return Ok(ScropeComplex::full(self.k - 1));
            }
            z.push((nx, ny));
        }
        Ok(ScropeComplex { k: self.k - 1, z, void: false }.normalize())
    }

    /// Star/dot incidence rows: `*` where the vertex lies in the facet.
    pub fn diagram(&self) -> Vec<String> {
        let facets = self.facets();
        facets
            .iter()
            .map(|f| {
                (1..self.k)
                    .map(|j| if f.contains(j as Elem) { "*" } else { "." })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect()
    }
}

impl fmt::Display for ScropeComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.void {
            return write!(f, "Void(k={})", self.k);
        }
        let parts: Vec<String> = self.z.iter().map(|(x, y)| format!("({x},{y})")).collect();
        write!(f, "Scr({}, [{}])", self.k, parts.join(","))
    }
}

/// The Scrope complex of compositions `A` with `D(w,u) ⊴ A ⊴ N_{w,Q}` that
/// collapse a relation of `Q`, on the separators of `N` not already in `D`.
pub fn scrope_from(q: &Preposet, w: &LinearOrder, u: &LinearOrder) -> Result<ScropeComplex> {
    if !q.is_natural(w) {
        return precondition("preposet is not natural for the order");
    }
    let d = descent_composition(w, u)?;
    let n = q.naturalize(w)?;
    if !n.refines(&d)? {
        return precondition("descent composition does not coarsen the naturalization");
    }
    let sep_n = n.separators(w)?;
    let sep_d = d.separators(w)?;
    let free: Vec<Elem> = (sep_n - sep_d).iter().collect();
    let k = free.len() + 1;
    let nsep: Vec<Elem> = sep_n.iter().collect();
    let nidx = n.block_index();
    let didx = d.block_index();
    let rank_of = |s: Elem| free.iter().position(|&v| v == s).unwrap() + 1;
    let mut z = Vec::new();
    let mut any = false;
    for (c, dd) in q.strict_pairs() {
        if didx[c as usize] != didx[dd as usize] {
            continue;
        }
        any = true;
        let (x, y) = (nidx[c as usize] as usize, nidx[dd as usize] as usize);
        if x == y {
            return Ok(ScropeComplex::full(k));
        }
        // separators between N-blocks x..y are nsep[x..y]
        let lo = rank_of(nsep[x]);
        let hi = rank_of(nsep[y - 1]);
        z.push((lo, hi + 1));
    }
    if !any {
        return Ok(ScropeComplex::void(k));
    }
    ScropeComplex::new(k, z)
}

/// `Σ (−1)^{|A|}` over `D ⊴ A ⊴ N` collapsing a relation of `Q`, by enumeration.
pub fn collapse_sum_bruteforce(q: &Preposet, w: &LinearOrder, u: &LinearOrder) -> Result<i64> {
    let d = descent_composition(w, u)?;
    let n = q.naturalize(w)?;
    let mut total = 0;
    for a in SetComposition::natural_coarsenings(w) {
        if a.refines(&d)? && n.refines(&a)? && q.collapses(&a) {
            total += crate::compositions::sign(a.len());
        }
    }
    Ok(total)
}

/// Every normalized interval list for a given `k`, plus the full simplex.
pub fn all_normalized(k: usize) -> Vec<ScropeComplex> {
    let pairs: Vec<(usize, usize)> = (1..k)
        .flat_map(|x| (x + 1..=k).map(move |y| (x, y)))
        .collect();
    let mut out = vec![ScropeComplex::full(k)];
    let mut cur = Vec::new();
    // chains with x and y both strictly increasing
    fn rec(pairs: &[(usize, usize)], k: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<ScropeComplex>) {
        for &p in pairs {
            if let Some(&(lx, ly)) = cur.last() {
                if !(p.0 > lx && p.1 > ly) {
                    continue;
                }
            }
            cur.push(p);
            out.push(ScropeComplex { k, z: cur.clone(), void: false });
            rec(pairs, k, cur, out);
            cur.pop();
        }
    }
    rec(&pairs, k, &mut cur, &mut out);
    out
}
