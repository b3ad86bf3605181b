//! Extended generalized permutohedra over the integers.
//!
//! A polyhedron is a vertex list plus rays, each ray `(i, j)` pointing along
//! `e_i − e_j`. Coordinates are indexed by the labels of the ground set in
//! increasing order.
//!
//! `face_at(p, A)` is the face maximizing a functional that is constant on
//! the blocks of `A` and increases from block to block. It exists iff every
//! ray `(i, j)` has `i ⪯_A j`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::complexes::OrderedComplex;
use crate::compositions::{all_compositions, Preposet, SetComposition};
use crate::error::{invalid, precondition, Error, Result};
use crate::orders::{all_orders, LinearOrder};
use crate::set::{Elem, Set};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePolyhedron {
    ground: Set,
    vertices: Vec<Vec<i64>>,
    rays: Vec<(Elem, Elem)>,
}

fn rank_in(ground: Set, x: Elem) -> usize {
    Set(ground.0 & ((1u32 << x) - 1)).len()
}

impl LatticePolyhedron {
    pub fn new(ground: Set, vertices: Vec<Vec<i64>>, rays: Vec<(Elem, Elem)>) -> Result<Self> {
        let n = ground.len();
        if vertices.is_empty() {
            return invalid("a polyhedron needs at least one vertex");
        }
        if vertices.iter().any(|v| v.len() != n) {
            return invalid("vertex length differs from ground size");
        }
        let s0: i64 = vertices[0].iter().sum();
        if vertices.iter().any(|v| v.iter().sum::<i64>() != s0) {
            return invalid("vertex coordinate sums differ");
        }
        for &(i, j) in &rays {
            if i == j || !ground.contains(i) || !ground.contains(j) {
                return invalid(format!("bad ray ({i},{j})"));
            }
        }
        Ok(Self::build(ground, vertices, rays))
    }

    fn build(ground: Set, mut vertices: Vec<Vec<i64>>, mut rays: Vec<(Elem, Elem)>) -> Self {
        vertices.sort();
        vertices.dedup();
        rays.sort_unstable();
        rays.dedup();
        LatticePolyhedron { ground, vertices, rays }
    }

    /// The unique point of `ℝ^∅`.
    pub fn point0() -> Self {
        LatticePolyhedron { ground: Set::EMPTY, vertices: vec![vec![]], rays: vec![] }
    }

    pub fn ground(&self) -> Set {
        self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn rays(&self) -> &[(Elem, Elem)] {
        &self.rays
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1 && self.rays.is_empty()
    }

    pub fn is_01(&self) -> bool {
        self.vertices.iter().flatten().all(|&c| c == 0 || c == 1)
    }

    pub fn coord(&self, v: &[i64], x: Elem) -> i64 {
        v[rank_in(self.ground, x)]
    }

    fn sum_over(&self, v: &[i64], s: Set) -> i64 {
        self.ground
            .iter()
            .enumerate()
            .filter(|(_, x)| s.contains(*x))
            .map(|(i, _)| v[i])
            .sum()
    }

    /// Dimension of the affine hull of vertices plus rays.
    pub fn dim(&self) -> usize {
        let n = self.n();
        let mut rows: Vec<Vec<i128>> = Vec::new();
        let v0 = &self.vertices[0];
        for v in &self.vertices[1..] {
            rows.push(v.iter().zip(v0).map(|(a, b)| (a - b) as i128).collect());
        }
        for &(i, j) in &self.rays {
            let mut r = vec![0i128; n];
            r[rank_in(self.ground, i)] = 1;
            r[rank_in(self.ground, j)] = -1;
            rows.push(r);
        }
        integer_rank(rows, n)
    }

    /// `p ↦ −p`.
    pub fn negate(&self) -> Self {
        let vs = self.vertices.iter().map(|v| v.iter().map(|c| -c).collect()).collect();
        let rs = self.rays.iter().map(|&(i, j)| (j, i)).collect();
        Self::build(self.ground, vs, rs)
    }

    /// Coordinates restricted to `s ⊆ ground`.
    fn project(&self, s: Set) -> Self {
        let keep: Vec<usize> = self
            .ground
            .iter()
            .enumerate()
            .filter(|(_, x)| s.contains(*x))
            .map(|(i, _)| i)
            .collect();
        let vs = self.vertices.iter().map(|v| keep.iter().map(|&i| v[i]).collect()).collect();
        let rs = self
            .rays
            .iter()
            .copied()
            .filter(|&(i, j)| s.contains(i) && s.contains(j))
            .collect();
        Self::build(s, vs, rs)
    }

    /// Display key: `conv(0011,0101)` with `+ray(i>j)` for each ray.
    pub fn key(&self) -> String {
        let digits = self.vertices.iter().flatten().all(|&c| (0..10).contains(&c));
        let vs: Vec<String> = self
            .vertices
            .iter()
            .map(|v| {
                if digits {
                    v.iter().map(|c| c.to_string()).collect()
                } else {
                    format!("({})", v.iter().map(|c| c.to_string()).join(","))
                }
            })
            .collect();
        let mut s = format!("conv({})", vs.join(","));
        for (i, j) in &self.rays {
            s.push_str(&format!("+ray({i}>{j})"));
        }
        s
    }
}

impl fmt::Display for LatticePolyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key())
    }
}

impl fmt::Debug for LatticePolyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key())
    }
}

fn integer_rank(mut rows: Vec<Vec<i128>>, ncols: usize) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let (a, b) = (rows[rank][col], rows[r][col]);
                for c in 0..ncols {
                    rows[r][c] = rows[r][c] * a - rows[rank][c] * b;
                }
                let g = rows[r].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    rows[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A face together with its normal preposet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub poly: LatticePolyhedron,
    pub normal: Preposet,
    pub dim: usize,
}

/// Every ray `(i, j)` has `i ⪯_A j`.
pub fn is_bounded_at(p: &LatticePolyhedron, a: &SetComposition) -> bool {
    let idx = a.block_index();
    p.rays.iter().all(|&(i, j)| idx[i as usize] <= idx[j as usize])
}

/// `p_A`, or `None` when the functional is unbounded on `p`.
pub fn face_at(p: &LatticePolyhedron, a: &SetComposition) -> Result<Option<LatticePolyhedron>> {
    if a.ground() != p.ground {
        return Err(Error::GroundMismatch);
    }
    Ok(face_at_unchecked(p, a))
}

pub(crate) fn face_at_unchecked(p: &LatticePolyhedron, a: &SetComposition) -> Option<LatticePolyhedron> {
    if !is_bounded_at(p, a) {
        return None;
    }
    let mut vs: Vec<&Vec<i64>> = p.vertices.iter().collect();
    for s in a.suffix_unions() {
        let best = vs.iter().map(|v| p.sum_over(v, s)).max().unwrap();
        vs.retain(|v| p.sum_over(v, s) == best);
    }
    let idx = a.block_index();
    let rays = p
        .rays
        .iter()
        .copied()
        .filter(|&(i, j)| idx[i as usize] == idx[j as usize])
        .collect();
    Some(LatticePolyhedron {
        ground: p.ground,
        vertices: vs.into_iter().cloned().collect(),
        rays,
    })
}

/// Face maximizing `Σ c_m 1_{A_m}` directly, for increasing weights `c`.
pub fn face_weighted(p: &LatticePolyhedron, a: &SetComposition, weights: &[i64]) -> Option<LatticePolyhedron> {
    if !is_bounded_at(p, a) {
        return None;
    }
    let value = |v: &Vec<i64>| -> i64 {
        a.blocks().iter().zip(weights).map(|(&b, &c)| c * p.sum_over(v, b)).sum()
    };
    let best = p.vertices.iter().map(value).max().unwrap();
    let idx = a.block_index();
    Some(LatticePolyhedron {
        ground: p.ground,
        vertices: p.vertices.iter().filter(|v| value(v) == best).cloned().collect(),
        rays: p.rays.iter().copied().filter(|&(i, j)| idx[i as usize] == idx[j as usize]).collect(),
    })
}

/// Best-effort check of the generalized-permutohedron property: faces do not
/// depend on the actual weights, only on their order.
pub fn validate_egp(p: &LatticePolyhedron) -> Result<bool> {
    for a in all_compositions(p.ground)? {
        let k = a.len();
        let lin: Vec<i64> = (1..=k as i64).collect();
        let pow: Vec<i64> = (0..k as u32).map(|e| 1i64 << e).collect();
        let f = face_at_unchecked(p, &a);
        if f != face_weighted(p, &a, &lin) || f != face_weighted(p, &a, &pow) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ℓ_p = {w : p_W is a vertex}`.
pub fn bounded_orders(p: &LatticePolyhedron) -> Vec<LinearOrder> {
    all_orders(p.ground)
        .into_iter()
        .filter(|w| {
            let a = SetComposition::from_order(w).unwrap_or_else(|_| SetComposition::one_block(Set::EMPTY));
            matches!(face_at_unchecked(p, &a), Some(q) if q.is_point())
        })
        .collect()
}

pub fn is_bounded_order(p: &LatticePolyhedron, w: &LinearOrder) -> bool {
    if w.is_empty() {
        return p.is_point();
    }
    let a = SetComposition::from_order(w).unwrap();
    matches!(face_at_unchecked(p, &a), Some(q) if q.is_point())
}

/// `{w : p_{W^rev} is a vertex}`, the orders for which `w ⊗ p` sits in the
/// mirrored convention used by indicator complexes.
pub fn reverse_bounded_orders(p: &LatticePolyhedron) -> Vec<LinearOrder> {
    all_orders(p.ground)
        .into_iter()
        .filter(|w| is_bounded_order(p, &w.reversed()))
        .collect()
}

/// `(p|I, p/I)`: the face at `J|I` (which maximizes `1_I`), split by coordinates.
/// `None` when `1_I` is unbounded on `p`.
pub fn restrict_contract(p: &LatticePolyhedron, i: Set) -> Result<Option<(LatticePolyhedron, LatticePolyhedron)>> {
    if !i.is_subset(p.ground) {
        return invalid("restriction set outside ground");
    }
    let j = p.ground - i;
    let a = SetComposition::from_blocks([j, i].into_iter().filter(|b| !b.is_empty()).collect())?;
    Ok(face_at_unchecked(p, &a).map(|f| (f.project(i), f.project(j))))
}

/// The coproduct split at `I`: the face at `I|J` (maximizing `1_J`), split by
/// coordinates into a factor on `I` and one on `J`.
pub fn split(p: &LatticePolyhedron, i: Set) -> Result<Option<(LatticePolyhedron, LatticePolyhedron)>> {
    if !i.is_subset(p.ground) {
        return invalid("split set outside ground");
    }
    let j = p.ground - i;
    let a = SetComposition::from_blocks([i, j].into_iter().filter(|b| !b.is_empty()).collect())?;
    Ok(face_at_unchecked(p, &a).map(|f| (f.project(i), f.project(j))))
}

/// Cartesian product on disjoint grounds.
pub fn product(p: &LatticePolyhedron, q: &LatticePolyhedron) -> Result<LatticePolyhedron> {
    if !p.ground.is_disjoint(q.ground) {
        return invalid("product of overlapping grounds");
    }
    let ground = p.ground | q.ground;
    let mut vs = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            let v: Vec<i64> = ground
                .iter()
                .map(|x| if p.ground.contains(x) { p.coord(a, x) } else { q.coord(b, x) })
                .collect();
            vs.push(v);
        }
    }
    let rays = p.rays.iter().chain(&q.rays).copied().collect();
    Ok(LatticePolyhedron::build(ground, vs, rays))
}

/// Enumerate every face via all compositions, with its normal preposet.
/// Errors if the compositions landing on a face are not the interior of the
/// closure of the derived preposet, which means `p` is not an EGP.
pub fn all_faces(p: &LatticePolyhedron) -> Result<Vec<Face>> {
    let comps = all_compositions(p.ground)?;
    let groups: BTreeMap<LatticePolyhedron, Vec<SetComposition>> = comps
        .par_iter()
        .filter_map(|a| face_at_unchecked(p, a).map(|f| (f, a.clone())))
        .fold(BTreeMap::new, |mut m: BTreeMap<LatticePolyhedron, Vec<SetComposition>>, (f, a)| {
            m.entry(f).or_default().push(a);
            m
        })
        .reduce(BTreeMap::new, |mut x, y| {
            for (k, mut v) in y {
                x.entry(k).or_default().append(&mut v);
            }
            x
        });
    let mut out = Vec::new();
    for (poly, mut group) in groups {
        group.sort();
        let normal = normal_from_group(p.ground, &group);
        let mut interior: Vec<SetComposition> = normal
            .closure_album()?
            .iter()
            .filter(|a| !normal.collapses(a))
            .cloned()
            .collect();
        interior.sort();
        if interior != group {
            return precondition(format!("face {poly} has a non-convex normal album"));
        }
        let dim = poly.dim();
        out.push(Face { poly, normal, dim });
    }
    out.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.poly.cmp(&b.poly)));
    Ok(out)
}

fn normal_from_group(ground: Set, group: &[SetComposition]) -> Preposet {
    let mut rels = Vec::new();
    let idxs: Vec<[u8; 32]> = group.iter().map(|a| a.block_index()).collect();
    for i in ground.iter() {
        for j in ground.iter() {
            if i != j && idxs.iter().all(|idx| idx[i as usize] <= idx[j as usize]) {
                rels.push((i, j));
            }
        }
    }
    Preposet::from_relations(ground, &rels).unwrap()
}

/// Face counts by dimension, by brute force.
pub fn face_counts(p: &LatticePolyhedron) -> Result<Vec<u64>> {
    let faces = all_faces(p)?;
    let top = faces.iter().map(|f| f.dim).max().unwrap_or(0);
    let mut counts = vec![0u64; top + 1];
    for f in faces {
        counts[f.dim] += 1;
    }
    Ok(counts)
}

fn binom(n: i64, k: i64) -> u64 {
    if k < 0 || k > n || n < 0 {
        return 0;
    }
    let mut acc: u64 = 1;
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}

/// Closed-form f-vector `(f_0, ..., f_{n−1})` of `Δ(n, r)`.
pub fn hypersimplex_face_counts(n: usize, r: usize) -> Result<Vec<u64>> {
    if !(0 < r && r < n) {
        return invalid("hypersimplex needs 0 < r < n");
    }
    let (n, r) = (n as i64, r as i64);
    let mut f = vec![binom(n, r)];
    for d in 1..n {
        let s: u64 = (r - d..r).map(|k| binom(n - d - 1, k)).sum();
        f.push(binom(n, d + 1) * s);
    }
    Ok(f)
}

/// The spider `Q(A, B)`: center `C = I ∖ (A ∪ B)` above each `a ∈ A` and below each `b ∈ B`.
pub fn spider(a: Set, b: Set, ground: Set) -> Result<Preposet> {
    if !a.is_disjoint(b) || !(a | b).is_subset(ground) {
        return invalid("spider legs must be disjoint subsets of the ground");
    }
    let c = ground - a - b;
    let mut rels = Vec::new();
    let cs: Vec<Elem> = c.iter().collect();
    for w in cs.windows(2) {
        rels.push((w[0], w[1]));
        rels.push((w[1], w[0]));
    }
    for x in a.iter() {
        for y in b.iter() {
            rels.push((x, y));
        }
        for &z in &cs {
            rels.push((x, z));
        }
    }
    for &z in &cs {
        for y in b.iter() {
            rels.push((z, y));
        }
    }
    Preposet::from_relations(ground, &rels)
}

/// Indicator complex `Υ(p)`: generated by vertex supports, ordered by `w`.
pub fn indicator_complex(p: &LatticePolyhedron, w: &LinearOrder) -> Result<OrderedComplex> {
    if !p.is_01() {
        return invalid("indicator complexes need a 0/1 polyhedron");
    }
    if w.ground() != p.ground {
        return Err(Error::GroundMismatch);
    }
    let gens = p
        .vertices
        .iter()
        .map(|v| p.ground.iter().enumerate().filter(|(i, _)| v[*i] == 1).map(|(_, x)| x).collect())
        .collect();
    OrderedComplex::new(w.clone(), gens)
}

/// Indicator polytope `p_Γ`: indicator vectors of the facets of a pure complex.
pub fn indicator_polytope(c: &OrderedComplex) -> Result<LatticePolyhedron> {
    if !c.is_pure() {
        return invalid("indicator polytopes need a pure non-void complex");
    }
    let g = c.ground();
    let vs = c.facets().iter().map(|&f| g.iter().map(|x| f.contains(x) as i64).collect()).collect();
    LatticePolyhedron::new(g, vs, vec![])
}

pub fn matroid_polytope(c: &OrderedComplex) -> Result<LatticePolyhedron> {
    indicator_polytope(c)
}

/// `Δ(n, r)` on `[n]`.
pub fn hypersimplex(n: usize, r: usize) -> Result<LatticePolyhedron> {
    if !(0 < r && r < n) || n > 31 {
        return invalid("hypersimplex needs 0 < r < n");
    }
    let vs = (0..n)
        .combinations(r)
        .map(|c| {
            let mut v = vec![0i64; n];
            c.into_iter().for_each(|i| v[i] = 1);
            v
        })
        .collect();
    LatticePolyhedron::new(Set::interval(1, n as Elem), vs, vec![])
}

/// `Π_{n−1}`: convex hull of the permutations of `(1, ..., n)`.
pub fn standard_permutohedron(n: usize) -> Result<LatticePolyhedron> {
    if n == 0 || n > 8 {
        return invalid("permutohedron needs 1 ≤ n ≤ 8");
    }
    let vs = (1..=n as i64).permutations(n).collect();
    LatticePolyhedron::new(Set::interval(1, n as Elem), vs, vec![])
}

/// Zonotope of the star graph centered at `c`: `x_j ∈ {0,1}` for `j ≠ c`,
/// `x_c = n − 1 − Σ_{j≠c} x_j`.
pub fn star_zonotope(n: usize, c: usize) -> Result<LatticePolyhedron> {
    if c < 1 || c > n || n > 20 {
        return invalid("star center must lie in [n]");
    }
    let others: Vec<usize> = (1..=n).filter(|&j| j != c).collect();
    let mut vs = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let mut v = vec![0i64; n];
        let mut sum = 0;
        for (k, &j) in others.iter().enumerate() {
            let bit = (mask >> k & 1) as i64;
            v[j - 1] = bit;
            sum += bit;
        }
        v[c - 1] = n as i64 - 1 - sum;
        vs.push(v);
    }
    LatticePolyhedron::new(Set::interval(1, n as Elem), vs, vec![])
}

/// The segment `conv(100, 010)`.
pub fn example_segment() -> LatticePolyhedron {
    LatticePolyhedron::new(Set::interval(1, 3), vec![vec![1, 0, 0], vec![0, 1, 0]], vec![]).unwrap()
}

/// The ray from `010` along `e_1 − e_2`.
pub fn example_ray() -> LatticePolyhedron {
    LatticePolyhedron::new(Set::interval(1, 3), vec![vec![0, 1, 0]], vec![(1, 2)]).unwrap()
}

/// The simplicial cone at `(1,2,3,4)` with rays `e_1−e_3`, `e_1−e_2`, `e_2−e_4`.
pub fn example_cone() -> LatticePolyhedron {
    LatticePolyhedron::new(
        Set::interval(1, 4),
        vec![vec![1, 2, 3, 4]],
        vec![(1, 3), (1, 2), (2, 4)],
    )
    .unwrap()
}

/// `Δ(2,4)` with `x_4 ≤ 1` and `x_1 ≥ 0` dropped: an unbounded 0/1 EGP
/// with rays along `e_4 − e_1`.
pub fn example_unbounded_hypersimplex() -> LatticePolyhedron {
    LatticePolyhedron::new(
        Set::interval(1, 4),
        vec![vec![0, 1, 1, 0], vec![1, 0, 1, 0], vec![1, 1, 0, 0], vec![1, 0, 0, 1]],
        vec![(4, 1)],
    )
    .unwrap()
}
