//! Closed antipode formulas for permutohedra, hypersimplices and star zonotopes.

use super::{FormalSum, OgpTerm};
use crate::compositions::{sign, SetComposition};
use crate::error::{invalid, Result};
use crate::orders::{all_orders, descent_composition, LinearOrder};
use crate::polyhedra::{face_at_unchecked, hypersimplex, standard_permutohedron, star_zonotope, LatticePolyhedron};
use crate::set::{Elem, Set};

fn check_order(w: &LinearOrder, n: usize) -> Result<()> {
    if w.ground() != Set::interval(1, n as Elem) {
        return invalid(format!("order must be a permutation of 1..{n}"));
    }
    Ok(())
}

/// `Σ_{Q ⊴ W} (−1)^{|Q|} Σ_{u : D(w,u) ⊴ Q} u ⊗ p_Q` for `Π_{n−1}`.
pub fn permutohedron_antipode(w: &LinearOrder) -> Result<FormalSum<OgpTerm>> {
    let n = w.len();
    check_order(w, n)?;
    let p = standard_permutohedron(n)?;
    let orders = all_orders(p.ground());
    let mut out = FormalSum::zero();
    for q in SetComposition::natural_coarsenings(w) {
        let face = face_at_unchecked(&p, &q).unwrap();
        for u in &orders {
            if q.refines(&descent_composition(w, u)?)? {
                out.add_term((u.clone(), face.clone()), sign(q.len()));
            }
        }
    }
    Ok(out)
}

/// `N_Q` and `N_Q^{ab}` for the spider with legs `w(1..k)` and the last `ℓ` of `w`.
pub fn spider_compositions(w: &LinearOrder, k: usize, l: usize) -> Result<(SetComposition, SetComposition)> {
    let n = w.len();
    if k + l > n {
        return invalid("spider legs exceed the ground");
    }
    let a: Vec<Set> = (0..k).map(|i| Set::singleton(w.at(i))).collect();
    let b: Vec<Set> = (n - l..n).map(|i| Set::singleton(w.at(i))).collect();
    let c = w.ground() - w.prefix(k) - w.suffix(l);
    let mut nq = a.clone();
    if !c.is_empty() {
        nq.push(c);
    }
    nq.extend(b.iter().copied());
    let mut nab: Vec<Set> = a[..k.saturating_sub(1)].to_vec();
    let mid = a.last().copied().unwrap_or(Set::EMPTY) | c | b.first().copied().unwrap_or(Set::EMPTY);
    if !mid.is_empty() {
        nab.push(mid);
    }
    if l > 1 {
        nab.extend(b[1..].iter().copied());
    }
    Ok((SetComposition::from_blocks(nq)?, SetComposition::from_blocks(nab)?))
}

fn spider_sum(w: &LinearOrder, p: &LatticePolyhedron, pairs: &[(usize, usize)]) -> Result<FormalSum<OgpTerm>> {
    let n = w.len();
    let orders = all_orders(p.ground());
    let ds: Vec<SetComposition> = orders.iter().map(|u| descent_composition(w, u)).collect::<Result<_>>()?;
    let mut out = FormalSum::zero();
    for &(k, l) in pairs {
        let (nq, nab) = spider_compositions(w, k, l)?;
        let face = face_at_unchecked(p, &nq).unwrap();
        let c = sign(n - face.dim());
        for (u, d) in orders.iter().zip(&ds) {
            if d.refines(&nab)? && nq.refines(d)? {
                out.add_term((u.clone(), face.clone()), c);
            }
        }
    }
    Ok(out)
}

/// Antipode of `w ⊗ Δ(n, r)` by spiders `(k, ℓ)`.
pub fn hypersimplex_antipode(w: &LinearOrder, n: usize, r: usize) -> Result<FormalSum<OgpTerm>> {
    check_order(w, n)?;
    let p = hypersimplex(n, r)?;
    let mut pairs = vec![(n - r, r)];
    for k in 0..n - r {
        for l in 0..r {
            pairs.push((k, l));
        }
    }
    spider_sum(w, &p, &pairs)
}

/// Antipode of `w ⊗ z(n, c)`: spiders with `k ≤ w⁻¹(c) − 1`, `ℓ ≤ n − w⁻¹(c)`.
pub fn star_zonotope_antipode(w: &LinearOrder, n: usize, c: usize) -> Result<FormalSum<OgpTerm>> {
    check_order(w, n)?;
    let p = star_zonotope(n, c)?;
    let pos = w.pos(c as Elem) + 1;
    let mut pairs = Vec::new();
    for k in 0..pos {
        for l in 0..=n - pos {
            pairs.push((k, l));
        }
    }
    spider_sum(w, &p, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::ogp::takeuchi_antipode_ogp;

    #[test]
    fn spider_compositions_cases() {
        let w = LinearOrder::identity(5);
        let (nq, nab) = spider_compositions(&w, 2, 1).unwrap();
        assert_eq!(nq.to_string(), "1|2|34|5");
        assert_eq!(nab.to_string(), "1|2345");
        let (nq, nab) = spider_compositions(&w, 0, 0).unwrap();
        assert_eq!(nq, nab);
        let (nq, nab) = spider_compositions(&w, 3, 2).unwrap();
        assert_eq!(nq.to_string(), "1|2|3|4|5");
        assert_eq!(nab.to_string(), "1|2|34|5");
    }

    #[test]
    fn closed_forms_match_oracle_small() {
        for w in all_orders(Set::interval(1, 3)) {
            assert_eq!(
                permutohedron_antipode(&w).unwrap(),
                takeuchi_antipode_ogp(&w, &standard_permutohedron(3).unwrap()).unwrap()
            );
            for c in 1..=3 {
                assert_eq!(
                    star_zonotope_antipode(&w, 3, c).unwrap(),
                    takeuchi_antipode_ogp(&w, &star_zonotope(3, c).unwrap()).unwrap()
                );
            }
        }
        let w = LinearOrder::identity(2);
        assert_eq!(
            permutohedron_antipode(&w).unwrap(),
            takeuchi_antipode_ogp(&w, &standard_permutohedron(2).unwrap()).unwrap()
        );
        for w in all_orders(Set::interval(1, 4)) {
            assert_eq!(
                hypersimplex_antipode(&w, 4, 2).unwrap(),
                takeuchi_antipode_ogp(&w, &hypersimplex(4, 2).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn fig4_support() {
        let w = LinearOrder::identity(4);
        let s = hypersimplex_antipode(&w, 4, 2).unwrap();
        let mut faces: Vec<_> = s.keys().map(|k| k.1.clone()).collect();
        faces.sort();
        faces.dedup();
        assert_eq!(faces.len(), 5);
    }
}
