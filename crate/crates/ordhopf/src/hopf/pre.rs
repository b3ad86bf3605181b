//! The monoid of ordered prefix-pure complexes: join product, restriction and
//! contraction coproduct, and antipodes.

use std::collections::HashMap;

use rayon::prelude::*;

use super::FormalSum;
use crate::complexes::{is_shifted, joins, OrderedComplex};
use crate::compositions::{sign, SetComposition, ALBUM_CEILING};
use crate::error::{invalid, precondition, Error, Result};
use crate::orders::{all_orders, block_shuffles, dud_decompose, shuffles, LinearOrder};
use crate::set::{Elem, Set};

pub type Tensor = (OrderedComplex, OrderedComplex);

/// `Σ_{w ∈ shuffle(w1,w2)} (w, Γ1 ∗ Γ2)`.
pub fn product(x: &OrderedComplex, y: &OrderedComplex) -> Result<FormalSum<OrderedComplex>> {
    Ok(joins(x, y)?.into_iter().map(|c| (c, 1)).collect())
}

/// Product extended bilinearly.
pub fn product_sums(
    x: &FormalSum<OrderedComplex>,
    y: &FormalSum<OrderedComplex>,
) -> Result<FormalSum<OrderedComplex>> {
    let mut out = FormalSum::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&product(a, b)?, ca * cb);
        }
    }
    Ok(out)
}

/// `(w|I, Γ|I) ⊗ (w|J, Γ/I)` when `I` is initial in `w`, else `None` (zero).
pub fn coproduct(x: &OrderedComplex, i: Set) -> Result<Option<Tensor>> {
    if !i.is_subset(x.ground()) {
        return invalid("coproduct set outside ground");
    }
    if !x.order().is_initial(i) {
        return Ok(None);
    }
    Ok(Some((x.restrict(i), x.contract(i))))
}

/// `μ_A ∘ Δ_A`: zero unless `A` is natural; otherwise `Σ_u u ⊗ Re_A(Γ)` over
/// shuffles of the blocks.
pub fn mu_delta(x: &OrderedComplex, a: &SetComposition) -> Result<FormalSum<OrderedComplex>> {
    if a.ground() != x.ground() {
        return Err(Error::GroundMismatch);
    }
    if !a.is_natural(x.order()) {
        return Ok(FormalSum::zero());
    }
    let re = x.reassembly(a)?;
    Ok(block_shuffles(x.order(), a)
        .into_iter()
        .map(|u| (re.with_order(u).unwrap(), 1))
        .collect())
}

/// `μ_A ∘ Δ_A` computed by iterating the binary coproduct and product.
pub fn mu_delta_iterated(x: &OrderedComplex, a: &SetComposition) -> Result<FormalSum<OrderedComplex>> {
    if a.ground() != x.ground() {
        return Err(Error::GroundMismatch);
    }
    let mut parts = Vec::with_capacity(a.len());
    let mut rest = x.clone();
    for &b in a.blocks() {
        match coproduct(&rest, b)? {
            None => return Ok(FormalSum::zero()),
            Some((left, right)) => {
                parts.push(left);
                rest = right;
            }
        }
    }
    let mut acc = FormalSum::single(OrderedComplex::trivial(LinearOrder::empty()), 1);
    for p in parts {
        acc = product_sums(&acc, &FormalSum::single(p, 1))?;
    }
    Ok(acc)
}

/// Takeuchi: `Σ_{A natural} (−1)^{|A|} μ_A Δ_A (w ⊗ Γ)`.
pub fn takeuchi_antipode_complex(x: &OrderedComplex) -> Result<FormalSum<OrderedComplex>> {
    let n = x.n();
    if n > ALBUM_CEILING {
        return Err(Error::Ceiling(format!("Takeuchi expansion needs n ≤ {ALBUM_CEILING}")));
    }
    if n == 0 {
        return Ok(FormalSum::single(x.clone(), 1));
    }
    let w = x.order();
    let comps = SetComposition::natural_coarsenings(w);
    let total = comps
        .par_iter()
        .map(|a| {
            let re = x.reassembly(a).expect("natural composition");
            let s = sign(a.len());
            block_shuffles(w, a)
                .into_iter()
                .map(|u| (re.with_order(u).unwrap(), s))
                .collect::<FormalSum<_>>()
        })
        .reduce(FormalSum::zero, FormalSum::merge);
    Ok(total)
}

/// Takeuchi extended linearly.
pub fn antipode_sum(x: &FormalSum<OrderedComplex>) -> Result<FormalSum<OrderedComplex>> {
    let mut out = FormalSum::zero();
    for (k, c) in x.iter() {
        out.add_scaled(&takeuchi_antipode_complex(k)?, c);
    }
    Ok(out)
}

/// One signed term of a closed formula, before summation.
pub type RawTerm = (i64, OrderedComplex);

pub fn collect(terms: &[RawTerm]) -> FormalSum<OrderedComplex> {
    terms.iter().map(|(c, k)| (k.clone(), *c)).collect()
}

/// Order-relative view of a facet-initial complex: everything in positions.
struct PositionFrame<'a> {
    x: &'a OrderedComplex,
    n: usize,
    r: usize,
    cache: HashMap<(usize, usize), Vec<Set>>,
}

impl<'a> PositionFrame<'a> {
    fn new(x: &'a OrderedComplex) -> Result<Self> {
        if !x.is_facet_initial() {
            return precondition("complex is not facet-initial for its order");
        }
        Ok(PositionFrame { x, n: x.n(), r: x.rank().unwrap(), cache: HashMap::new() })
    }

    fn label_order(&self, pi: &LinearOrder) -> LinearOrder {
        let w = self.x.order();
        LinearOrder::new(pi.seq().iter().map(|&p| w.at(p as usize - 1)).collect()).unwrap()
    }

    fn minor(&self, s: usize, t: usize) -> OrderedComplex {
        self.x.interval_minor(s, t).expect("interval inside ground")
    }

    /// Facets of `Γ*(s,t) = ⟨[1,s−1]⟩ ∗ Γ(s,t)`, positions after `t` as loops.
    fn gamma_star(&mut self, s: usize, t: usize) -> Vec<Set> {
        if let Some(f) = self.cache.get(&(s, t)) {
            return f.clone();
        }
        let head = self.x.order().prefix(s - 1);
        let facets: Vec<Set> = self.minor(s, t).facets().iter().map(|&f| f | head).collect();
        self.cache.insert((s, t), facets.clone());
        facets
    }

    fn term(&mut self, c: i64, u: &LinearOrder, s: usize, t: usize) -> RawTerm {
        let f = self.gamma_star(s, t);
        (c, OrderedComplex::new(u.clone(), f).unwrap())
    }

    fn label(&self, pos: usize) -> Elem {
        self.x.order().at(pos - 1)
    }

    fn is_loop(&self, s: usize, t: usize, pos: usize) -> bool {
        let m = self.minor(s, t);
        !m.facets().iter().any(|f| f.contains(self.label(pos)))
    }

    fn is_coloop(&self, s: usize, t: usize, pos: usize) -> bool {
        let m = self.minor(s, t);
        !m.is_void() && m.facets().iter().all(|f| f.contains(self.label(pos)))
    }

    fn trivial_case(&self) -> Vec<RawTerm> {
        let u = self.x.order().reversed();
        vec![(sign(self.n), OrderedComplex::new(u, vec![Set::EMPTY]).unwrap())]
    }

    fn positions(&self) -> LinearOrder {
        LinearOrder::identity(self.n)
    }
}

fn rev_interval(hi: usize, lo: usize) -> LinearOrder {
    LinearOrder::new((lo..=hi).rev().map(|p| p as Elem).collect()).unwrap()
}

fn interval(lo: usize, hi: usize) -> LinearOrder {
    LinearOrder::new((lo..=hi).map(|p| p as Elem).collect()).unwrap()
}

/// Raw terms of the facet-initial antipode: `Σ_{s≤r≤t} (−1)^{n−t+s} Σ_{u∈Sh(s,t)} u ⊗ Γ*(s,t)`.
pub fn antipode_facet_initial_terms(x: &OrderedComplex) -> Result<Vec<RawTerm>> {
    let mut fr = PositionFrame::new(x)?;
    let (n, r) = (fr.n, fr.r);
    if r == 0 {
        return Ok(fr.trivial_case());
    }
    let mut out = Vec::new();
    for s in 1..=r {
        for t in r..=n {
            let c = sign(n - t + s);
            let parts = [rev_interval(s - 1, 1), interval(s, t), rev_interval(n, t + 1)];
            let refs: Vec<&LinearOrder> = parts.iter().collect();
            for pi in shuffles(&refs)? {
                let u = fr.label_order(&pi);
                out.push(fr.term(c, &u, s, t));
            }
        }
    }
    Ok(out)
}

pub fn antipode_facet_initial(x: &OrderedComplex) -> Result<FormalSum<OrderedComplex>> {
    Ok(collect(&antipode_facet_initial_terms(x)?))
}

fn four_terms(fr: &mut PositionFrame, sg: i64, u: &LinearOrder, s: usize, t: usize, out: &mut Vec<RawTerm>) {
    out.push(fr.term(sg, u, s, t));
    out.push(fr.term(-sg, u, s, t - 1));
    out.push(fr.term(-sg, u, s + 1, t));
    out.push(fr.term(sg, u, s + 1, t - 1));
}

/// Raw terms of the cancellation-free regrouping over DUD permutations.
pub fn antipode_facet_initial_cf_terms(x: &OrderedComplex) -> Result<Vec<RawTerm>> {
    let mut fr = PositionFrame::new(x)?;
    let (n, r) = (fr.n, fr.r);
    if r == 0 {
        return Ok(fr.trivial_case());
    }
    let mut out = Vec::new();
    for pi in all_orders(fr.positions().ground()) {
        let Some((s, t)) = dud_decompose(&pi, r) else { continue };
        let u = fr.label_order(&pi);
        let sg = sign(n - t + s);
        if s < r && r < t {
            let a = fr.is_loop(s, t, t);
            let b = fr.is_loop(s + 1, t, t);
            let c = fr.is_coloop(s, t, s);
            let d = fr.is_coloop(s, t - 1, s);
            match (a, b, c, d) {
                (false, false, false, false) => four_terms(&mut fr, sg, &u, s, t, &mut out),
                (false, true, false, _) => {
                    out.push(fr.term(sg, &u, s, t));
                    out.push(fr.term(-sg, &u, s, t - 1));
                }
                (false, false, false, true) => {
                    out.push(fr.term(sg, &u, s, t));
                    out.push(fr.term(-sg, &u, s + 1, t));
                }
                (true, true, true, true) | (true, true, false, false) | (false, false, true, true) => {}
                other => {
                    return precondition(format!("unexpected loop/coloop pattern {other:?} at ({s},{t})"));
                }
            }
        } else if s < r && r == t {
            if fr.gamma_star(s, r) != fr.gamma_star(s + 1, r) {
                return precondition("terms with t = r failed to cancel");
            }
        } else if s == r && r < t {
            let phi = x.order().prefix(r - 1).with(fr.label(t));
            if x.is_facet(phi) {
                out.push(fr.term(sign(n - t + r), &u, r, t));
                out.push(fr.term(-sign(n - t + r), &u, r, t - 1));
            }
        } else {
            out.push(fr.term(sign(n), &u, r, r));
        }
    }
    Ok(out)
}

pub fn antipode_facet_initial_cf(x: &OrderedComplex) -> Result<FormalSum<OrderedComplex>> {
    Ok(collect(&antipode_facet_initial_cf_terms(x)?))
}

/// Raw terms of the shifted-complex formula, indexed by `r`, `n`, the coloops
/// `[1,a]` and the loops `[z,n]`.
pub fn antipode_shifted_cf_terms(x: &OrderedComplex) -> Result<Vec<RawTerm>> {
    if !is_shifted(x) {
        return precondition("complex is not shifted for its order");
    }
    let mut fr = PositionFrame::new(x)?;
    let (n, r) = (fr.n, fr.r);
    if r == 0 {
        return Ok(fr.trivial_case());
    }
    let (loops, coloops) = x.loops_coloops()?;
    let a = coloops.len();
    let z = n + 1 - loops.len();
    let mut out = Vec::new();
    for pi in all_orders(fr.positions().ground()) {
        let Some((s, t)) = dud_decompose(&pi, r) else { continue };
        let u = fr.label_order(&pi);
        if a < s && s < r && r + 1 < t && t < z {
            four_terms(&mut fr, sign(n - t + s), &u, s, t, &mut out);
        } else if a < s && s < r && t == r + 1 && t < z {
            let sg = sign(n - r + s + 1);
            out.push(fr.term(sg, &u, s, r + 1));
            out.push(fr.term(-sg, &u, s + 1, r + 1));
        } else if s == r && r < t && t < z {
            let sg = sign(n - t + r);
            out.push(fr.term(sg, &u, r, t));
            out.push(fr.term(-sg, &u, r, t - 1));
        } else if s == r && r == t {
            out.push(fr.term(sign(n), &u, r, r));
        }
    }
    Ok(out)
}

pub fn antipode_shifted_cf(x: &OrderedComplex) -> Result<FormalSum<OrderedComplex>> {
    Ok(collect(&antipode_shifted_cf_terms(x)?))
}

/// Raw terms have `±1` coefficients and pairwise distinct keys.
pub fn is_cancellation_free(terms: &[RawTerm]) -> bool {
    let mut keys: Vec<&OrderedComplex> = terms.iter().map(|(_, k)| k).collect();
    keys.sort();
    let n = keys.len();
    keys.dedup();
    keys.len() == n && terms.iter().all(|(c, _)| c.abs() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::all_complexes;

    fn cx(order: &str, facets: &[&str]) -> OrderedComplex {
        let w = LinearOrder::parse(order);
        let gens = facets
            .iter()
            .map(|f| f.chars().map(|c| c.to_digit(10).unwrap() as Elem).collect())
            .collect();
        OrderedComplex::new(w, gens).unwrap()
    }

    #[test]
    fn small_takeuchi_values() {
        let one = cx("1", &["1"]);
        let s = takeuchi_antipode_complex(&one).unwrap();
        assert_eq!(s, FormalSum::single(one.clone(), -1));

        let u12 = cx("12", &["1", "2"]);
        let s = takeuchi_antipode_complex(&u12).unwrap();
        let mut want = FormalSum::single(u12.clone(), -1);
        want.add_term(cx("12", &["1"]), 1);
        want.add_term(cx("21", &["1"]), 1);
        assert_eq!(s, want);
        assert_eq!(antipode_facet_initial(&u12).unwrap(), want);

        let e = OrderedComplex::trivial(LinearOrder::empty());
        assert_eq!(takeuchi_antipode_complex(&e).unwrap(), FormalSum::single(e, 1));
    }

    #[test]
    fn coproduct_needs_initial_segment() {
        let x = cx("13425", &["134", "135", "145"]);
        let i: Set = [1, 3].into_iter().collect();
        assert!(coproduct(&x, i).unwrap().is_some());
        let j: Set = [1, 2].into_iter().collect();
        assert!(coproduct(&x, j).unwrap().is_none());
    }

    #[test]
    fn mu_delta_agrees_with_iteration() {
        let x = cx("3124", &["12", "13", "24", "34"]);
        for a in crate::compositions::all_compositions(x.ground()).unwrap() {
            assert_eq!(mu_delta(&x, &a).unwrap(), mu_delta_iterated(&x, &a).unwrap(), "{a}");
        }
        let one = SetComposition::one_block(x.ground());
        assert_eq!(mu_delta(&x, &one).unwrap(), FormalSum::single(x.clone(), 1));
    }

    #[test]
    fn unit_is_neutral() {
        let x = cx("21", &["1", "2"]);
        let e = OrderedComplex::trivial(LinearOrder::empty());
        assert_eq!(product(&x, &e).unwrap(), FormalSum::single(x.clone(), 1));
    }

    #[test]
    fn facet_initial_formulas_match_oracle_n4() {
        let g = Set::interval(1, 4);
        for facets in all_complexes(g) {
            let Ok(x) = OrderedComplex::new(LinearOrder::identity(4), facets) else { continue };
            if x.is_void() || !x.is_facet_initial() {
                continue;
            }
            let oracle = takeuchi_antipode_complex(&x).unwrap();
            assert_eq!(antipode_facet_initial(&x).unwrap(), oracle, "{x}");
            let cf = antipode_facet_initial_cf_terms(&x).unwrap();
            assert_eq!(collect(&cf), oracle, "{x}");
            if is_shifted(&x) {
                let sh = antipode_shifted_cf_terms(&x).unwrap();
                assert_eq!(collect(&sh), oracle, "{x}");
            }
        }
    }

    #[test]
    fn relabelled_order_is_handled() {
        let x = cx("3142", &["31", "34", "14"]);
        assert!(x.is_facet_initial());
        assert_eq!(antipode_facet_initial(&x).unwrap(), takeuchi_antipode_complex(&x).unwrap());
    }

    #[test]
    fn trivial_complex_antipode() {
        let x = OrderedComplex::new(LinearOrder::identity(3), vec![Set::EMPTY]).unwrap();
        let s = takeuchi_antipode_complex(&x).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s, antipode_facet_initial(&x).unwrap());
        assert_eq!(s.coeff(&x.with_order(LinearOrder::parse("321")).unwrap()), -1);
    }
}
