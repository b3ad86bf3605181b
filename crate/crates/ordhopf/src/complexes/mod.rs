//! Ordered simplicial complexes `(w, Γ, I)`, stored by facets.
//!
//! The void complex has no faces at all; the trivial complex `{∅}` has only
//! the empty face. Both are legal on any ground set.

mod circuits;
mod shelling;
mod shifted;

use std::fmt;

use crate::compositions::{sign, SetComposition};
use crate::error::{invalid, precondition, Error, Result};
use crate::orders::{shuffles, LinearOrder};
use crate::set::{render_labels, Elem, Set};

pub use circuits::{broken_circuit_complex, circuits, is_bc_representable, reduced_bc, BcVerdict};
pub use shelling::{is_lex_shellable, is_shelling_order, is_strongly_lex_shellable};
pub use shifted::{
    all_shifted, gale_join, gale_leq, gale_meet, gale_truncation, is_color_shifted_given, is_shifted,
    matroid_hull, schubert_interval_minor, shifted_from_generators, threshold_complex,
};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedComplex {
    order: LinearOrder,
    facets: Vec<Set>,
}

/// Inclusion-maximal members, sorted.
pub(crate) fn maximalize(mut sets: Vec<Set>) -> Vec<Set> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut out: Vec<Set> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&f| s.is_subset(f)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

impl OrderedComplex {
    /// Generated by `gens`; non-maximal generators are dropped.
    pub fn new(order: LinearOrder, gens: Vec<Set>) -> Result<Self> {
        let g = order.ground();
        if gens.iter().any(|s| !s.is_subset(g)) {
            return invalid("facet outside ground set");
        }
        Ok(OrderedComplex { order, facets: maximalize(gens) })
    }

    /// Facets written as digit strings over the order `e = 1..n`.
    pub fn parse(n: usize, facets: &[&str]) -> Self {
        let gens = facets
            .iter()
            .map(|f| f.chars().map(|c| c.to_digit(10).unwrap() as Elem).collect())
            .collect();
        OrderedComplex::new(LinearOrder::identity(n), gens).unwrap()
    }

    pub fn void(order: LinearOrder) -> Self {
        OrderedComplex { order, facets: Vec::new() }
    }

    pub fn trivial(order: LinearOrder) -> Self {
        OrderedComplex { order, facets: vec![Set::EMPTY] }
    }

    pub fn simplex(order: LinearOrder) -> Self {
        let g = order.ground();
        OrderedComplex { order, facets: vec![g] }
    }

    pub fn order(&self) -> &LinearOrder {
        &self.order
    }

    pub fn ground(&self) -> Set {
        self.order.ground()
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn facets(&self) -> &[Set] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Same facets, another order on the same ground.
    pub fn with_order(&self, order: LinearOrder) -> Result<Self> {
        if order.ground() != self.ground() {
            return Err(Error::GroundMismatch);
        }
        Ok(OrderedComplex { order, facets: self.facets.clone() })
    }

    /// `r = dim Γ + 1`, the largest facet size; `None` for the void complex.
    pub fn rank(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len()).max()
    }

    pub fn dim(&self) -> Option<isize> {
        self.rank().map(|r| r as isize - 1)
    }

    pub fn is_face(&self, s: Set) -> bool {
        self.facets.iter().any(|&f| s.is_subset(f))
    }

    pub fn is_facet(&self, s: Set) -> bool {
        self.facets.binary_search(&s).is_ok()
    }

    /// Every face, sorted.
    pub fn faces(&self) -> Vec<Set> {
        let mut all: Vec<Set> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        all.sort();
        all.dedup();
        all
    }

    /// `Σ_{σ∈Γ} (−1)^{dim σ}`; 0 for void, −1 for `{∅}`.
    pub fn reduced_euler(&self) -> i64 {
        self.faces().iter().map(|f| -sign(f.len())).sum()
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => false,
            Some(f) => self.facets.iter().all(|g| g.len() == f.len()),
        }
    }

    /// Induced subcomplex `Γ|A` on ground `A`, order `w|_A`.
    pub fn restrict(&self, a: Set) -> Self {
        let order = self.order.restrict(a);
        if self.is_void() {
            return OrderedComplex::void(order);
        }
        let gens = self.facets.iter().map(|&f| f & a).collect();
        OrderedComplex { order, facets: maximalize(gens) }
    }

    /// Link of a face, on the ground minus that face.
    pub fn link(&self, phi: Set) -> Self {
        let order = self.order.restrict(self.ground() - phi);
        let gens: Vec<Set> = self
            .facets
            .iter()
            .filter(|f| phi.is_subset(**f))
            .map(|&f| f - phi)
            .collect();
        OrderedComplex { order, facets: maximalize(gens) }
    }

    /// Positions of `s` in `w`, increasing; the lex key of a face.
    pub fn lex_key(&self, s: Set) -> Vec<usize> {
        let mut v: Vec<usize> = s.iter().map(|x| self.order.pos(x)).collect();
        v.sort_unstable();
        v
    }

    /// Facets in `<_w`-lexicographic order.
    pub fn lex_sorted_facets(&self) -> Vec<Set> {
        let mut fs = self.facets.clone();
        fs.sort_by_key(|&f| self.lex_key(f));
        fs
    }

    /// The `<_w`-lex-minimal facet of `Γ|A`.
    pub fn lex_min_facet_of_restriction(&self, a: Set) -> Option<Set> {
        let r = self.restrict(a);
        r.facets.iter().copied().min_by_key(|&f| self.lex_key(f))
    }

    /// `Γ/A`: the link of the lex-minimal facet of `Γ|A`, on ground `I∖A`.
    pub fn contract(&self, a: Set) -> Self {
        let rest = self.ground() - a;
        match self.lex_min_facet_of_restriction(a) {
            None => OrderedComplex::void(self.order.restrict(rest)),
            Some(phi) => {
                let gens = self
                    .facets
                    .iter()
                    .filter(|f| phi.is_subset(**f))
                    .map(|&f| f - a)
                    .collect();
                OrderedComplex { order: self.order.restrict(rest), facets: maximalize(gens) }
            }
        }
    }

    /// Restriction to an initial segment of `w`.
    pub fn restrict_initial(&self, a: Set) -> Result<Self> {
        if !self.order.is_initial(a) {
            return invalid("not an initial segment of the order");
        }
        Ok(self.restrict(a))
    }

    /// Contraction of an initial segment of `w`.
    pub fn contract_initial(&self, a: Set) -> Result<Self> {
        if !self.order.is_initial(a) {
            return invalid("not an initial segment of the order");
        }
        Ok(self.contract(a))
    }

    /// Every initial restriction is pure.
    pub fn is_prefix_pure(&self) -> bool {
        (0..=self.n()).all(|k| self.restrict(self.order.prefix(k)).is_pure())
    }

    /// Lex-minimal facet is the initial segment `[r]` (or `Γ = {∅}`), and `Γ` is prefix-pure.
    pub fn is_facet_initial(&self) -> bool {
        if !self.is_prefix_pure() {
            return false;
        }
        let r = self.rank().unwrap();
        self.is_facet(self.order.prefix(r))
    }

    /// Basis exchange on facets.
    pub fn is_matroid(&self) -> bool {
        if self.is_void() {
            return false;
        }
        for &f in &self.facets {
            for &g in &self.facets {
                for x in (f - g).iter() {
                    let ok = (g - f).iter().any(|y| self.is_facet(f.without(x).with(y)));
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// For every `S`, all facets of `Γ|S` have the same link in `Γ`.
    pub fn is_link_invariant(&self) -> bool {
        if self.is_void() {
            return false;
        }
        self.ground().subsets().all(|s| {
            let fs = self.restrict(s).facets;
            let first = self.link(fs[0]).facets;
            fs[1..].iter().all(|&f| self.link(f).facets == first)
        })
    }

    /// `(loops, coloops)`.
    pub fn loops_coloops(&self) -> Result<(Set, Set)> {
        if self.is_void() {
            return precondition("void complex has no loops or coloops");
        }
        let union = self.facets.iter().fold(Set::EMPTY, |a, &f| a | f);
        let inter = self.facets.iter().fold(self.ground(), |a, &f| a & f);
        Ok((self.ground() - union, inter))
    }

    pub fn is_primitive(&self) -> bool {
        matches!(self.loops_coloops(), Ok((l, c)) if l.is_empty() && c.is_empty())
    }

    /// Interval minor `Γ(s,t) = (Γ|L⊔J)/L` for the positions `J = [s,t]` of `w`
    /// (one-based), `L` the positions before `s`.
    pub fn interval_minor(&self, s: usize, t: usize) -> Result<Self> {
        if s < 1 || t > self.n() || s > t + 1 {
            return invalid(format!("bad interval [{s},{t}]"));
        }
        let l = self.order.prefix(s - 1);
        let lj = self.order.prefix(t);
        Ok(self.restrict(lj).contract(l))
    }

    /// `Re_A(Γ)`: join of the interval minors along the blocks of a `w`-natural `A`.
    pub fn reassembly(&self, a: &SetComposition) -> Result<Self> {
        if !a.is_natural(&self.order) {
            return invalid("composition is not natural for the order");
        }
        let mut facets = vec![Set::EMPTY];
        let mut start = 1;
        for b in a.blocks() {
            let t = start + b.len() - 1;
            let m = self.interval_minor(start, t)?;
            facets = facets
                .iter()
                .flat_map(|&x| m.facets.iter().map(move |&y| x | y))
                .collect();
            start = t + 1;
        }
        Ok(OrderedComplex { order: self.order.clone(), facets: maximalize(facets) })
    }

    /// Same facets and order restricted away from `w`: useful as a basis key.
    pub fn key(&self) -> String {
        format!("{}⊗{}", self.order, self.facet_string())
    }

    pub fn facet_string(&self) -> String {
        if self.is_void() {
            return "void".into();
        }
        let parts: Vec<String> = self
            .facets
            .iter()
            .map(|f| if f.is_empty() { "∅".to_string() } else { render_labels(f.iter()) })
            .collect();
        format!("<{}>", parts.join(","))
    }
}

impl fmt::Display for OrderedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key())
    }
}

impl fmt::Debug for OrderedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key())
    }
}

/// Ordered join `(w, Γ1 ∗ Γ2)`; `w` must shuffle the two orders.
pub fn join(c1: &OrderedComplex, c2: &OrderedComplex, w: &LinearOrder) -> Result<OrderedComplex> {
    if !c1.ground().is_disjoint(c2.ground()) {
        return invalid("join of overlapping grounds");
    }
    if w.ground() != c1.ground() | c2.ground()
        || w.restrict(c1.ground()) != c1.order
        || w.restrict(c2.ground()) != c2.order
    {
        return invalid("order is not a shuffle of the factors");
    }
    Ok(join_unchecked(c1, c2, w.clone()))
}

pub(crate) fn join_unchecked(c1: &OrderedComplex, c2: &OrderedComplex, w: LinearOrder) -> OrderedComplex {
    let mut facets: Vec<Set> = c1
        .facets
        .iter()
        .flat_map(|&x| c2.facets.iter().map(move |&y| x | y))
        .collect();
    facets.sort();
    OrderedComplex { order: w, facets }
}

/// All ordered joins over shuffles of the two orders.
pub fn joins(c1: &OrderedComplex, c2: &OrderedComplex) -> Result<Vec<OrderedComplex>> {
    let ws = shuffles(&[&c1.order, &c2.order])?;
    Ok(ws.into_iter().map(|w| join_unchecked(c1, c2, w)).collect())
}

/// Every complex on `ground` (antichains of subsets), facets only; `void` included.
/// Feasible up to four or five vertices.
pub fn all_complexes(ground: Set) -> Vec<Vec<Set>> {
    let subsets: Vec<Set> = ground.subsets().collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    antichains(&subsets, 0, &mut cur, &mut out);
    out
}

fn antichains(all: &[Set], i: usize, cur: &mut Vec<Set>, out: &mut Vec<Vec<Set>>) {
    if i == all.len() {
        out.push(cur.clone());
        return;
    }
    antichains(all, i + 1, cur, out);
    let s = all[i];
    if cur.iter().all(|&f| !f.is_subset(s) && !s.is_subset(f)) {
        cur.push(s);
        antichains(all, i + 1, cur, out);
        cur.pop();
    }
}
