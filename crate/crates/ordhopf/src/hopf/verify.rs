//! Checks of the Hopf axioms and of every closed formula against Takeuchi,
//! plus random generators for the randomized suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::ogp::{ogp_antipode, ogp_antipode_terms, symmetrize, symmetrized_antipode, takeuchi_antipode_ogp};
use super::pre::{
    antipode_facet_initial_cf_terms, antipode_facet_initial_terms, antipode_shifted_cf_terms, antipode_sum,
    collect, coproduct, is_cancellation_free, product, product_sums, takeuchi_antipode_complex, Tensor,
};
use super::special::{hypersimplex_antipode, permutohedron_antipode, star_zonotope_antipode};
use super::{FormalSum, OgpTerm};
use super::special::spider_compositions;
use crate::complexes::{all_complexes, all_shifted, is_shifted, shifted_from_generators, OrderedComplex};
use crate::compositions::{sign, Preposet, SetComposition};
use crate::orders::{all_orders, descent_composition, LinearOrder};
use crate::polyhedra::{
    face_counts, hypersimplex, hypersimplex_face_counts, is_bounded_order, spider, standard_permutohedron,
    star_zonotope, LatticePolyhedron,
};
use crate::scrope::{all_normalized, scrope_from, ScropeComplex};
use crate::set::{Elem, Set};
use crate::error::Result;

/// Outcome of a single check; failures carry a printable counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    fn from_eq<K: Ord + Clone + std::fmt::Debug>(what: &str, a: &FormalSum<K>, b: &FormalSum<K>) -> Verdict {
        match a.first_difference(b) {
            None => Verdict::Pass,
            Some((k, x, y)) => Verdict::Fail(format!("{what}: {k:?} has {x} vs {y}")),
        }
    }

    /// First failure of a sequence, or pass.
    pub fn all(vs: impl IntoIterator<Item = Verdict>) -> Verdict {
        vs.into_iter().find(|v| !v.is_pass()).unwrap_or(Verdict::Pass)
    }
}

fn counit(x: &OrderedComplex) -> FormalSum<OrderedComplex> {
    if x.n() == 0 {
        FormalSum::single(x.clone(), 1)
    } else {
        FormalSum::zero()
    }
}

/// `μ∘(S⊗Id)∘Δ = u∘ε = μ∘(Id⊗S)∘Δ`.
pub fn defining_property(x: &OrderedComplex) -> Result<Verdict> {
    let mut left = FormalSum::zero();
    let mut right = FormalSum::zero();
    for k in 0..=x.n() {
        let (a, b) = coproduct(x, x.order().prefix(k))?.unwrap();
        let sa = takeuchi_antipode_complex(&a)?;
        let sb = takeuchi_antipode_complex(&b)?;
        left.add_scaled(&product_sums(&sa, &FormalSum::single(b.clone(), 1))?, 1);
        right.add_scaled(&product_sums(&FormalSum::single(a, 1), &sb)?, 1);
    }
    let e = counit(x);
    Ok(Verdict::all([
        Verdict::from_eq(&format!("S*id on {x}"), &left, &e),
        Verdict::from_eq(&format!("id*S on {x}"), &right, &e),
    ]))
}

/// `S(S(x)) = x`.
pub fn involution(x: &OrderedComplex) -> Result<Verdict> {
    let s = takeuchi_antipode_complex(x)?;
    let ss = antipode_sum(&s)?;
    Ok(Verdict::from_eq(&format!("S∘S on {x}"), &ss, &FormalSum::single(x.clone(), 1)))
}

type Triple = (OrderedComplex, OrderedComplex, OrderedComplex);

/// `(Δ_{A,B}⊗Id)Δ_{AB,C} = (Id⊗Δ_{B,C})Δ_{A,BC}` on one basis element.
pub fn coassociativity(x: &OrderedComplex, a: Set, b: Set) -> Result<Verdict> {
    let c = x.ground() - a - b;
    let lhs: Option<Triple> = match coproduct(x, a | b)? {
        None => None,
        Some((y, z)) => coproduct(&y, a)?.map(|(y1, y2)| (y1, y2, z)),
    };
    let rhs: Option<Triple> = match coproduct(x, a)? {
        None => None,
        Some((v1, v)) => coproduct(&v, b)?.map(|(v2, v3)| (v1, v2, v3)),
    };
    Ok(if lhs == rhs {
        Verdict::Pass
    } else {
        Verdict::Fail(format!("coassociativity on {x} at {a}|{b}|{c}: {lhs:?} vs {rhs:?}"))
    })
}

/// `Δ_{AC,BD} ∘ μ = (μ⊗μ) ∘ τ ∘ (Δ_{A,B} ⊗ Δ_{C,D})`.
pub fn compatibility(x1: &OrderedComplex, x2: &OrderedComplex, a: Set, c: Set) -> Result<Verdict> {
    let mut lhs: FormalSum<Tensor> = FormalSum::zero();
    for (m, k) in product(x1, x2)?.iter() {
        if let Some(t) = coproduct(m, a | c)? {
            lhs.add_term(t, k);
        }
    }
    let mut rhs: FormalSum<Tensor> = FormalSum::zero();
    if let (Some((p1, q1)), Some((p2, q2))) = (coproduct(x1, a)?, coproduct(x2, c)?) {
        for (u, cu) in product(&p1, &p2)?.iter() {
            for (v, cv) in product(&q1, &q2)?.iter() {
                rhs.add_term((u.clone(), v.clone()), cu * cv);
            }
        }
    }
    Ok(Verdict::from_eq(&format!("compatibility on {x1}, {x2}"), &lhs, &rhs))
}

/// Facet-initial formulas against Takeuchi; cancellation-freeness
/// of the regrouped formulas for shifted primitive complexes.
pub fn facet_initial_oracle(x: &OrderedComplex) -> Result<Verdict> {
    let oracle = takeuchi_antipode_complex(x)?;
    let mut vs = vec![
        Verdict::from_eq(&format!("facet-initial on {x}"), &collect(&antipode_facet_initial_terms(x)?), &oracle),
    ];
    let cf = antipode_facet_initial_cf_terms(x)?;
    vs.push(Verdict::from_eq(&format!("regrouped on {x}"), &collect(&cf), &oracle));
    if is_shifted(x) {
        let sh = antipode_shifted_cf_terms(x)?;
        vs.push(Verdict::from_eq(&format!("shifted on {x}"), &collect(&sh), &oracle));
        if x.is_primitive() {
            if !is_cancellation_free(&cf) {
                vs.push(Verdict::Fail(format!("regrouped formula cancels on {x}")));
            }
            if !is_cancellation_free(&sh) {
                vs.push(Verdict::Fail(format!("shifted formula cancels on {x}")));
            }
        }
    }
    Ok(Verdict::all(vs))
}

/// Closed formula against the album enumeration, with `±1` and distinct keys.
pub fn ogp_oracle(w: &LinearOrder, p: &LatticePolyhedron) -> Result<Verdict> {
    let terms = ogp_antipode_terms(w, p)?;
    let sum: FormalSum<OgpTerm> = terms.iter().map(|t| ((t.order.clone(), t.face.clone()), t.coeff)).collect();
    if sum.len() != terms.len() || terms.iter().any(|t| t.coeff.abs() != 1) {
        return Ok(Verdict::Fail(format!("closed formula not cancellation-free for {w} ⊗ {p}")));
    }
    Ok(Verdict::from_eq(&format!("closed formula for {w} ⊗ {p}"), &sum, &takeuchi_antipode_ogp(w, p)?))
}

/// `Σ_{w∈ℓ_p} S(w⊗p) = (−1)^{|I|} Σ (−1)^{dim q} u⊗q`.
pub fn symmetrization_identity(p: &LatticePolyhedron) -> Result<Verdict> {
    let mut lhs = FormalSum::zero();
    for (k, _) in symmetrize(p).iter() {
        lhs.add_scaled(&ogp_antipode(&k.0, &k.1)?, 1);
    }
    Ok(Verdict::from_eq(&format!("symmetrization of {p}"), &lhs, &symmetrized_antipode(p)?))
}

/// Every closed form in a family against the oracle, for all orders.
pub fn family_oracle(family: &str, n: usize) -> Result<Verdict> {
    let orders = all_orders(Set::interval(1, n as Elem));
    let check = |w: &LinearOrder| -> Result<Verdict> {
        let mut vs = Vec::new();
        match family {
            "hypersimplex" => {
                for r in 1..n {
                    let p = hypersimplex(n, r)?;
                    vs.push(ogp_oracle(w, &p)?);
                    vs.push(Verdict::from_eq(
                        &format!("hypersimplex ({n},{r}) at {w}"),
                        &hypersimplex_antipode(w, n, r)?,
                        &takeuchi_antipode_ogp(w, &p)?,
                    ));
                }
            }
            "star" => {
                for c in 1..=n {
                    let p = star_zonotope(n, c)?;
                    vs.push(ogp_oracle(w, &p)?);
                    vs.push(Verdict::from_eq(
                        &format!("star ({n},{c}) at {w}"),
                        &star_zonotope_antipode(w, n, c)?,
                        &takeuchi_antipode_ogp(w, &p)?,
                    ));
                }
            }
            "permutohedron" => {
                let p = standard_permutohedron(n)?;
                vs.push(ogp_oracle(w, &p)?);
                vs.push(Verdict::from_eq(
                    &format!("permutohedron {n} at {w}"),
                    &permutohedron_antipode(w)?,
                    &takeuchi_antipode_ogp(w, &p)?,
                ));
            }
            other => return crate::error::invalid(format!("unknown family {other}")),
        }
        Ok(Verdict::all(vs))
    };
    let results: Vec<Result<Verdict>> = orders.par_iter().map(check).collect();
    let mut vs = Vec::new();
    for r in results {
        vs.push(r?);
    }
    Ok(Verdict::all(vs))
}

/// Oracle check over all bounded orders of one polyhedron.
pub fn polyhedron_oracle(p: &LatticePolyhedron) -> Result<Verdict> {
    let mut vs = Vec::new();
    for w in all_orders(p.ground()) {
        if is_bounded_order(p, &w) {
            vs.push(ogp_oracle(&w, p)?);
        }
    }
    Ok(Verdict::all(vs))
}

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

pub fn random_order<R: Rng>(rng: &mut R, ground: Set) -> LinearOrder {
    let mut xs: Vec<Elem> = ground.iter().collect();
    xs.shuffle(rng);
    LinearOrder::new(xs).unwrap()
}

/// A prefix-pure complex on `[n]` with a random order: rejection sampling of
/// random pure families, falling back to a random shifted complex.
pub fn random_prefix_pure<R: Rng>(rng: &mut R, n: usize) -> OrderedComplex {
    let ground = Set::interval(1, n as Elem);
    let w = random_order(rng, ground);
    // middle ranks carry the interesting complexes; the extremes are kept rare
    let r = if n >= 2 && rng.gen_bool(0.9) { rng.gen_range(1..n) } else { rng.gen_range(0..=n) };
    let subsets: Vec<Set> = ground.subsets().filter(|s| s.len() == r).collect();
    for _ in 0..200 {
        let density: f64 = rng.gen_range(0.15..0.95);
        let gens: Vec<Set> = subsets.iter().copied().filter(|_| rng.gen_bool(density)).collect();
        if gens.is_empty() {
            continue;
        }
        let c = OrderedComplex::new(w.clone(), gens).unwrap();
        if c.is_prefix_pure() {
            return c;
        }
    }
    let g = *subsets.choose(rng).unwrap();
    shifted_from_generators(&[g], &w).unwrap()
}

/// Random facet-initial complex on `[n]` with the natural order.
pub fn random_facet_initial<R: Rng>(rng: &mut R, n: usize) -> OrderedComplex {
    loop {
        let c = random_prefix_pure(rng, n);
        let c = c.with_order(LinearOrder::identity(n)).unwrap();
        if c.is_facet_initial() {
            return c;
        }
    }
}

/// Findings of the multiplicity scan over Takeuchi antipodes.
#[derive(Clone, Debug)]
pub struct MultiplicityScan {
    pub scanned: usize,
    pub max_abs: i64,
    /// `(complex, basis element, coefficient)` with `|coefficient| ≥ 2`.
    pub witnesses: Vec<(OrderedComplex, OrderedComplex, i64)>,
}

/// Scan antipodes of `samples` random prefix-pure complexes with `n ≤ max_n`
/// for coefficients of absolute value at least 2.
pub fn multiplicity_scan(samples: usize, max_n: usize, seed: u64) -> Result<MultiplicityScan> {
    let found: Vec<Result<(i64, Vec<(OrderedComplex, OrderedComplex, i64)>)>> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut g = rng(seed, i as u64);
            let n = g.gen_range(1..=max_n);
            let x = random_prefix_pure(&mut g, n);
            let s = takeuchi_antipode_complex(&x)?;
            let wit = s
                .iter()
                .filter(|(_, c)| c.abs() >= 2)
                .map(|(k, c)| (x.clone(), k.clone(), c))
                .collect();
            Ok((s.max_abs_coeff(), wit))
        })
        .collect();
    let mut scan = MultiplicityScan { scanned: samples, max_abs: 0, witnesses: Vec::new() };
    for f in found {
        let (m, w) = f?;
        scan.max_abs = scan.max_abs.max(m);
        scan.witnesses.extend(w);
    }
    Ok(scan)
}

/// Copy of `x` with every label raised by `k`.
pub fn shift_labels(x: &OrderedComplex, k: Elem) -> Result<OrderedComplex> {
    let w = LinearOrder::new(x.order().seq().iter().map(|&e| e + k).collect())?;
    let gens = x.facets().iter().map(|f| f.iter().map(|e| e + k).collect()).collect();
    OrderedComplex::new(w, gens)
}

/// Random disjoint `(A, B)` with complement `C`, each label placed uniformly.
fn random_split<R: Rng>(rng: &mut R, ground: Set) -> (Set, Set) {
    let (mut a, mut b) = (Set::EMPTY, Set::EMPTY);
    for x in ground.iter() {
        match rng.gen_range(0..3) {
            0 => a = a.with(x),
            1 => b = b.with(x),
            _ => {}
        }
    }
    (a, b)
}

/// Runs `check` on `samples` seeded instances in parallel; first failure wins.
fn sampled<F>(samples: usize, seed: u64, check: F) -> Result<Verdict>
where
    F: Fn(&mut ChaCha8Rng) -> Result<Verdict> + Sync,
{
    let results: Vec<Result<Verdict>> = (0..samples)
        .into_par_iter()
        .map(|i| check(&mut rng(seed, i as u64)))
        .collect();
    let mut vs = Vec::new();
    for r in results {
        vs.push(r?);
    }
    Ok(Verdict::all(vs))
}

pub fn suite_defining(samples: usize, max_n: usize, seed: u64) -> Result<Verdict> {
    sampled(samples, seed, |g| {
        let n = g.gen_range(1..=max_n);
        defining_property(&random_prefix_pure(g, n))
    })
}

pub fn suite_involution(samples: usize, max_n: usize, seed: u64) -> Result<Verdict> {
    sampled(samples, seed, |g| {
        let n = g.gen_range(1..=max_n);
        involution(&random_prefix_pure(g, n))
    })
}

pub fn suite_coassociativity(samples: usize, max_n: usize, seed: u64) -> Result<Verdict> {
    sampled(samples, seed, |g| {
        let n = g.gen_range(1..=max_n);
        let x = random_prefix_pure(g, n);
        let (a, b) = random_split(g, x.ground());
        coassociativity(&x, a, b)
    })
}

pub fn suite_compatibility(samples: usize, max_n: usize, seed: u64) -> Result<Verdict> {
    sampled(samples, seed, |g| {
        let n = g.gen_range(1..=max_n);
        let n1 = g.gen_range(0..=n);
        let x1 = random_prefix_pure(g, n1);
        let x2 = shift_labels(&random_prefix_pure(g, n - n1), n1 as Elem)?;
        let a: Set = x1.ground().iter().filter(|_| g.gen_bool(0.5)).collect();
        let c: Set = x2.ground().iter().filter(|_| g.gen_bool(0.5)).collect();
        compatibility(&x1, &x2, a, c)
    })
}

/// Facet-initial prefix-pure complexes on `[n]` under the natural order;
/// every ordered complex is isomorphic to one of these.
pub fn facet_initial_complexes(n: usize) -> Vec<OrderedComplex> {
    let w = LinearOrder::identity(n);
    all_complexes(Set::interval(1, n as Elem))
        .into_iter()
        .filter(|f| !f.is_empty())
        .map(|f| OrderedComplex::new(w.clone(), f).unwrap())
        .filter(|c| c.is_prefix_pure() && c.is_facet_initial())
        .collect()
}

/// The facet-initial formula against Takeuchi for every facet-initial
/// complex with at most `max_n` vertices. Returns the number checked.
pub fn exhaustive_facet_initial(max_n: usize) -> Result<(usize, Verdict)> {
    let xs: Vec<OrderedComplex> = (0..=max_n).flat_map(facet_initial_complexes).collect();
    let results: Vec<Result<Verdict>> = xs
        .par_iter()
        .map(|x| {
            Ok(Verdict::from_eq(
                &format!("facet-initial on {x}"),
                &collect(&antipode_facet_initial_terms(x)?),
                &takeuchi_antipode_complex(x)?,
            ))
        })
        .collect();
    let mut vs = Vec::new();
    for r in results {
        vs.push(r?);
    }
    Ok((xs.len(), Verdict::all(vs)))
}

/// Both regrouped formulas on every prefix-pure shifted primitive complex with at most
/// `max_n` vertices: `±1` coefficients, distinct keys, totals equal Takeuchi.
pub fn exhaustive_shifted_primitive(max_n: usize) -> Result<(usize, Verdict)> {
    let mut xs = Vec::new();
    for n in 1..=max_n {
        xs.extend(all_shifted(n)?.into_iter().filter(|c| c.is_prefix_pure() && c.is_primitive()));
    }
    let results: Vec<Result<Verdict>> = xs
        .par_iter()
        .map(|x| {
            let oracle = takeuchi_antipode_complex(x)?;
            let cf = antipode_facet_initial_cf_terms(x)?;
            let sh = antipode_shifted_cf_terms(x)?;
            let mut vs = vec![
                Verdict::from_eq(&format!("regrouped on {x}"), &collect(&cf), &oracle),
                Verdict::from_eq(&format!("shifted on {x}"), &collect(&sh), &oracle),
            ];
            if !is_cancellation_free(&cf) {
                vs.push(Verdict::Fail(format!("regrouped formula cancels on {x}")));
            }
            if !is_cancellation_free(&sh) {
                vs.push(Verdict::Fail(format!("shifted formula cancels on {x}")));
            }
            Ok(Verdict::all(vs))
        })
        .collect();
    let mut vs = Vec::new();
    for r in results {
        vs.push(r?);
    }
    Ok((xs.len(), Verdict::all(vs)))
}

fn scrope_check(s: &ScropeComplex) -> Result<Verdict> {
    let e = s.reduced_euler();
    let b = s.reduced_euler_bruteforce()?;
    Ok(if e != b {
        Verdict::Fail(format!("{s}: recursion gives {e}, faces give {b}"))
    } else if !(-1..=1).contains(&e) {
        Verdict::Fail(format!("{s}: reduced Euler characteristic {e}"))
    } else {
        Verdict::Pass
    })
}

/// Every normalized interval list with `k ≤ max_k`. Returns the number checked.
pub fn scrope_exhaustive(max_k: usize) -> Result<(usize, Verdict)> {
    let all: Vec<ScropeComplex> = (1..=max_k).flat_map(all_normalized).collect();
    let vs: Vec<Result<Verdict>> = all.par_iter().map(scrope_check).collect();
    let mut out = Vec::new();
    for v in vs {
        out.push(v?);
    }
    Ok((all.len(), Verdict::all(out)))
}

/// Random interval lists with `k ≤ max_k`.
pub fn scrope_random(samples: usize, max_k: usize, seed: u64) -> Result<Verdict> {
    sampled(samples, seed, |g| {
        let k = g.gen_range(2..=max_k);
        let m = g.gen_range(0..=k);
        let z: Vec<(usize, usize)> = (0..m)
            .map(|_| {
                let x = g.gen_range(1..k);
                (x, g.gen_range(x + 1..=k))
            })
            .collect();
        scrope_check(&ScropeComplex::new(k, z)?)
    })
}

/// Scrope complexes of spiders: `χ̃ = (−1)^{|Q|−|D|}` exactly when
/// `N^{ab} ⊴ D ◁ N`, else 0. All `u`, and all `w` when `all_w`.
pub fn spider_scrope(n: usize, all_w: bool) -> Result<(usize, Verdict)> {
    let ground = Set::interval(1, n as Elem);
    let ws = if all_w { all_orders(ground) } else { vec![LinearOrder::identity(n)] };
    let us = all_orders(ground);
    let mut cases = Vec::new();
    for w in &ws {
        for k in 0..=n {
            for l in 0..=n - k {
                cases.push((w.clone(), k, l));
            }
        }
    }
    let results: Vec<Result<(usize, Verdict)>> = cases
        .par_iter()
        .map(|(w, k, l)| {
            let q = spider(w.prefix(*k), w.suffix(*l), ground)?;
            let (nq, nab) = spider_compositions(w, *k, *l)?;
            let mut checked = 0;
            for u in &us {
                let d = descent_composition(w, u)?;
                if !nq.refines(&d)? {
                    continue;
                }
                checked += 1;
                let got = scrope_from(&q, w, u)?.reduced_euler();
                let want = if d != nq && d.refines(&nab)? { sign(nq.len() - d.len()) } else { 0 };
                if got != want {
                    return Ok((checked, Verdict::Fail(format!("spider ({k},{l}) w={w} u={u}: {got} vs {want}"))));
                }
            }
            Ok((checked, Verdict::Pass))
        })
        .collect();
    let mut total = 0;
    let mut vs = Vec::new();
    for r in results {
        let (c, v) = r?;
        total += c;
        vs.push(v);
    }
    Ok((total, Verdict::all(vs)))
}

/// `is_matroid ⟺ is_link_invariant` for every complex on at most `max_n` vertices.
pub fn matroid_link_equivalence(max_n: usize) -> Result<(usize, Verdict)> {
    let mut count = 0;
    for n in 0..=max_n {
        let w = LinearOrder::identity(n);
        for f in all_complexes(Set::interval(1, n as Elem)) {
            let c = OrderedComplex::new(w.clone(), f)?;
            count += 1;
            if c.is_matroid() != c.is_link_invariant() {
                return Ok((count, Verdict::Fail(format!("{c}: matroid and link invariance disagree"))));
            }
        }
    }
    Ok((count, Verdict::Pass))
}

pub fn random_preposet<R: Rng>(rng: &mut R, n: usize) -> Preposet {
    let ground = Set::interval(1, n as Elem);
    let density: f64 = rng.gen_range(0.0..0.5);
    let mut rels = Vec::new();
    for i in ground.iter() {
        for j in ground.iter() {
            if i != j && rng.gen_bool(density) {
                rels.push((i, j));
            }
        }
    }
    Preposet::from_relations(ground, &rels).unwrap()
}

/// `C_Q ∩ C_W = C_{N_{w,Q}}` as albums, for random `Q` and `w`.
pub fn suite_naturalization(samples: usize, max_n: usize, seed: u64) -> Result<Verdict> {
    sampled(samples, seed, |g| {
        let n = g.gen_range(1..=max_n);
        let q = random_preposet(g, n);
        let w = random_order(g, q.ground());
        let cw = Preposet::from_composition(&SetComposition::from_order(&w)?).closure_album()?;
        let lhs = q.closure_album()?.intersection(&cw);
        let nq = Preposet::from_composition(&q.naturalize(&w)?).closure_album()?;
        Ok(if lhs == nq {
            Verdict::Pass
        } else {
            Verdict::Fail(format!("naturalization of {q} at {w}"))
        })
    })
}

/// Closed-form face counts of `Δ(n,r)` against enumeration.
pub fn hypersimplex_counts(max_n: usize) -> Result<Verdict> {
    let mut vs = Vec::new();
    for n in 2..=max_n {
        for r in 1..n {
            let brute = face_counts(&hypersimplex(n, r)?)?;
            let closed = hypersimplex_face_counts(n, r)?;
            if brute != closed {
                vs.push(Verdict::Fail(format!("Δ({n},{r}): {brute:?} vs {closed:?}")));
            }
        }
    }
    Ok(Verdict::all(vs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::{example_ray, example_segment};

    #[test]
    fn axioms_on_small_examples() {
        let u23 = OrderedComplex::parse(3, &["12", "13", "23"]);
        assert_eq!(defining_property(&u23).unwrap(), Verdict::Pass);
        assert_eq!(involution(&u23).unwrap(), Verdict::Pass);
        let g = u23.ground();
        for a in g.subsets() {
            for b in (g - a).subsets() {
                assert!(coassociativity(&u23, a, b).unwrap().is_pass());
            }
        }
        let x2 = OrderedComplex::new(LinearOrder::parse("54"), vec![Set::singleton(4)]).unwrap();
        for a in g.subsets() {
            for c in x2.ground().subsets() {
                assert!(compatibility(&u23, &x2, a, c).unwrap().is_pass());
            }
        }
    }

    #[test]
    fn symmetrization_examples() {
        assert!(symmetrization_identity(&example_segment()).unwrap().is_pass());
        assert!(symmetrization_identity(&example_ray()).unwrap().is_pass());
    }

    #[test]
    fn random_generators_are_valid() {
        let mut g = rng(7, 0);
        for n in 1..=5 {
            let x = random_prefix_pure(&mut g, n);
            assert!(x.is_prefix_pure());
            let y = random_facet_initial(&mut g, n);
            assert!(y.is_facet_initial());
            assert!(facet_initial_oracle(&y).unwrap().is_pass());
        }
    }

    #[test]
    fn families_small() {
        assert!(family_oracle("hypersimplex", 3).unwrap().is_pass());
        assert!(family_oracle("star", 3).unwrap().is_pass());
        assert!(family_oracle("permutohedron", 3).unwrap().is_pass());
        assert!(family_oracle("cube", 3).is_err());
    }
}
