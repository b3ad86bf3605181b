//! The monoid of ordered extended generalized permutohedra.
//!
//! A basis element `w ⊗ p` needs `p_W` to be a vertex. The coproduct at an
//! initial segment `I` takes the face at `I|J` and splits it by coordinates;
//! `μ_A Δ_A (w ⊗ p) = Σ_u u ⊗ p_A` for natural `A`.

use rayon::prelude::*;

use super::{FormalSum, OgpTerm};
use crate::compositions::{sign, SetComposition, ALBUM_CEILING};
use crate::error::{invalid, Error, Result};
use crate::orders::{all_orders, block_shuffles, descent_composition, shuffles, LinearOrder};
use crate::polyhedra::{all_faces, face_at_unchecked, is_bounded_order, product as poly_product, split, Face, LatticePolyhedron};
use crate::scrope::scrope_from;
use crate::set::Set;

fn check_basis(w: &LinearOrder, p: &LatticePolyhedron) -> Result<()> {
    if w.ground() != p.ground() {
        return Err(Error::GroundMismatch);
    }
    if !is_bounded_order(p, w) {
        return invalid(format!("{w} is not a bounded order for {p}"));
    }
    Ok(())
}

pub fn product(x: &OgpTerm, y: &OgpTerm) -> Result<FormalSum<OgpTerm>> {
    let q = poly_product(&x.1, &y.1)?;
    Ok(shuffles(&[&x.0, &y.0])?.into_iter().map(|u| ((u, q.clone()), 1)).collect())
}

pub fn coproduct(x: &OgpTerm, i: Set) -> Result<Option<(OgpTerm, OgpTerm)>> {
    check_basis(&x.0, &x.1)?;
    if !x.0.is_initial(i) {
        return Ok(None);
    }
    let (pi, pj) = split(&x.1, i)?.expect("bounded orders split at initial segments");
    Ok(Some(((x.0.restrict(i), pi), (x.0.restrict(x.1.ground() - i), pj))))
}

/// `μ_A Δ_A` by iterating the binary operations.
pub fn mu_delta_iterated(x: &OgpTerm, a: &SetComposition) -> Result<FormalSum<OgpTerm>> {
    let mut rest = x.clone();
    let mut parts = Vec::new();
    for &b in a.blocks() {
        match coproduct(&rest, b)? {
            None => return Ok(FormalSum::zero()),
            Some((l, r)) => {
                parts.push(l);
                rest = r;
            }
        }
    }
    let mut acc: FormalSum<OgpTerm> =
        FormalSum::single((LinearOrder::empty(), LatticePolyhedron::point0()), 1);
    for p in parts {
        let mut next = FormalSum::zero();
        for (k, c) in acc.iter() {
            next.add_scaled(&product(k, &p)?, c);
        }
        acc = next;
    }
    Ok(acc)
}

/// Takeuchi by direct enumeration: `Σ_{A ⊴ W} (−1)^{|A|} Σ_{u ≈_A w} u ⊗ p_A`.
pub fn takeuchi_antipode_ogp(w: &LinearOrder, p: &LatticePolyhedron) -> Result<FormalSum<OgpTerm>> {
    check_basis(w, p)?;
    if w.len() > ALBUM_CEILING {
        return Err(Error::Ceiling(format!("Takeuchi expansion needs n ≤ {ALBUM_CEILING}")));
    }
    if w.is_empty() {
        return Ok(FormalSum::single((w.clone(), p.clone()), 1));
    }
    Ok(SetComposition::natural_coarsenings(w)
        .par_iter()
        .map(|a| {
            let q = face_at_unchecked(p, a).expect("coarsenings of a bounded order are bounded");
            let s = sign(a.len());
            block_shuffles(w, a)
                .into_iter()
                .map(|u| ((u, q.clone()), s))
                .collect::<FormalSum<_>>()
        })
        .reduce(FormalSum::zero, FormalSum::merge))
}

/// Which of the three cases produced a term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Chi {
    One,
    Two,
    Three,
}

/// One term `coeff · u ⊗ q` of the closed formula, tagged by case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiTerm {
    pub chi: Chi,
    pub coeff: i64,
    pub order: LinearOrder,
    pub face: LatticePolyhedron,
}

/// Coefficient contributed by `(u, q)` and its case, or `None`.
///
/// Requires `N_{w,Q}` to collapse no strict relation of `Q`. Then:
/// `D = N` gives `(−1)^{|D|}`; `D ∈ ∂C_Q` gives `(−1)^{|D|} χ̃(Scr)`.
pub fn chi_coefficient(w: &LinearOrder, u: &LinearOrder, face: &Face) -> Result<Option<(Chi, i64)>> {
    let q = &face.normal;
    let n = q.naturalize(w)?;
    if q.collapses(&n) {
        return Ok(None);
    }
    let d = descent_composition(w, u)?;
    if d == n {
        let chi = if d.len() == 1 { Chi::One } else { Chi::Two };
        return Ok(Some((chi, sign(d.len()))));
    }
    if q.contains(&d) && q.collapses(&d) {
        let e = scrope_from(q, w, u)?.reduced_euler();
        if e != 0 {
            return Ok(Some((Chi::Three, sign(d.len()) * e)));
        }
    }
    Ok(None)
}

/// Every term of the closed formula, grouped by face and order.
pub fn ogp_antipode_terms(w: &LinearOrder, p: &LatticePolyhedron) -> Result<Vec<ChiTerm>> {
    check_basis(w, p)?;
    let faces = all_faces(p)?;
    ogp_antipode_terms_with(w, &faces)
}

/// As [`ogp_antipode_terms`] with the face list supplied.
pub fn ogp_antipode_terms_with(w: &LinearOrder, faces: &[Face]) -> Result<Vec<ChiTerm>> {
    let orders = all_orders(w.ground());
    let per_face: Vec<Result<Vec<ChiTerm>>> = faces
        .par_iter()
        .map(|f| {
            let mut out = Vec::new();
            for u in orders.iter().filter(|u| is_bounded_order(&f.poly, u)) {
                if let Some((chi, coeff)) = chi_coefficient(w, u, f)? {
                    out.push(ChiTerm { chi, coeff, order: u.clone(), face: f.poly.clone() });
                }
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for r in per_face {
        all.extend(r?);
    }
    all.sort_by(|a, b| (&a.order, &a.face).cmp(&(&b.order, &b.face)));
    Ok(all)
}

pub fn ogp_antipode(w: &LinearOrder, p: &LatticePolyhedron) -> Result<FormalSum<OgpTerm>> {
    Ok(ogp_antipode_terms(w, p)?
        .into_iter()
        .map(|t| ((t.order, t.face), t.coeff))
        .collect())
}

/// `p^# = Σ_{w ∈ ℓ_p} w ⊗ p`.
pub fn symmetrize(p: &LatticePolyhedron) -> FormalSum<OgpTerm> {
    all_orders(p.ground())
        .into_iter()
        .filter(|w| is_bounded_order(p, w))
        .map(|w| ((w, p.clone()), 1))
        .collect()
}

/// `(−1)^{|I|} Σ_{q ≤ p} Σ_{u ∈ ℓ_q} (−1)^{dim q} u ⊗ q`.
pub fn symmetrized_antipode(p: &LatticePolyhedron) -> Result<FormalSum<OgpTerm>> {
    let n = p.n();
    let mut out = FormalSum::zero();
    for f in all_faces(p)? {
        let c = sign(n) * sign(f.dim);
        for u in all_orders(p.ground()) {
            if is_bounded_order(&f.poly, &u) {
                out.add_term((u, f.poly.clone()), c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::{example_cone, example_ray, example_segment, hypersimplex, standard_permutohedron};

    fn o(s: &str) -> LinearOrder {
        LinearOrder::parse(s)
    }

    #[test]
    fn point_antipode() {
        let p = LatticePolyhedron::new(Set::singleton(1), vec![vec![3]], vec![]).unwrap();
        let w = o("1");
        let s = takeuchi_antipode_ogp(&w, &p).unwrap();
        assert_eq!(s, FormalSum::single((w.clone(), p.clone()), -1));
        assert_eq!(ogp_antipode(&w, &p).unwrap(), s);
    }

    #[test]
    fn closed_formula_matches_takeuchi_on_examples() {
        for p in [example_segment(), example_ray(), example_cone(), hypersimplex(4, 2).unwrap()] {
            for w in all_orders(p.ground()) {
                if !is_bounded_order(&p, &w) {
                    continue;
                }
                let terms = ogp_antipode_terms(&w, &p).unwrap();
                assert!(terms.iter().all(|t| t.coeff.abs() == 1));
                let sum: FormalSum<OgpTerm> =
                    terms.iter().map(|t| ((t.order.clone(), t.face.clone()), t.coeff)).collect();
                assert_eq!(sum.len(), terms.len(), "repeated key for {w}");
                assert_eq!(sum, takeuchi_antipode_ogp(&w, &p).unwrap(), "{p} at {w}");
            }
        }
    }

    #[test]
    fn cone_signs_depend_on_u() {
        let p = example_cone();
        let w = o("1234");
        let s = ogp_antipode(&w, &p).unwrap();
        let v = all_faces(&p).unwrap().into_iter().find(|f| f.dim == 0).unwrap().poly;
        assert_eq!(s.coeff(&(o("2314"), v.clone())), -1);
        assert_eq!(s.coeff(&(o("4312"), v.clone())), 1);
        assert_eq!(s.coeff(&(o("2134"), v.clone())), -1);
        assert_eq!(s.coeff(&(o("4321"), v)), 1);
    }

    #[test]
    fn iterated_coproducts_give_faces() {
        let p = hypersimplex(4, 2).unwrap();
        let w = o("2413");
        for a in SetComposition::natural_coarsenings(&w) {
            let want: FormalSum<OgpTerm> = block_shuffles(&w, &a)
                .into_iter()
                .map(|u| ((u, face_at_unchecked(&p, &a).unwrap()), 1))
                .collect();
            assert_eq!(mu_delta_iterated(&(w.clone(), p.clone()), &a).unwrap(), want);
        }
    }

    #[test]
    fn symmetrized_identity_segment_and_permutohedron() {
        for p in [example_segment(), example_ray(), standard_permutohedron(3).unwrap()] {
            let mut lhs = FormalSum::zero();
            for (k, _) in symmetrize(&p).iter() {
                lhs.add_scaled(&ogp_antipode(&k.0, &k.1).unwrap(), 1);
            }
            assert_eq!(lhs, symmetrized_antipode(&p).unwrap(), "{p}");
        }
    }

    #[test]
    fn unbounded_order_is_rejected() {
        assert!(takeuchi_antipode_ogp(&o("213"), &example_ray()).is_err());
    }
}
