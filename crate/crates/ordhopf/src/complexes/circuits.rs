//! Circuits and broken-circuit complexes.

use itertools::Itertools;

use super::{maximalize, OrderedComplex};
use crate::error::{precondition, Result};
use crate::set::Set;

/// Minimal non-faces.
pub fn circuits(c: &OrderedComplex) -> Vec<Set> {
    let mut out: Vec<Set> = c
        .ground()
        .subsets()
        .filter(|&s| !c.is_face(s) && s.iter().all(|x| c.is_face(s.without(x))))
        .collect();
    out.sort();
    out
}

fn broken(c: &OrderedComplex) -> Vec<Set> {
    let w = c.order();
    circuits(c)
        .into_iter()
        .map(|k| {
            let first = k.iter().min_by_key(|&x| w.pos(x)).unwrap();
            k.without(first)
        })
        .collect()
}

fn bc_unchecked(c: &OrderedComplex) -> OrderedComplex {
    let bs = broken(c);
    let gens: Vec<Set> = c
        .ground()
        .subsets()
        .filter(|&s| bs.iter().all(|&b| !b.is_subset(s)))
        .collect();
    OrderedComplex::new(c.order().clone(), maximalize(gens)).unwrap()
}

/// `BC_w(Γ)`: subsets containing no broken circuit `C ∖ min_w C`.
pub fn broken_circuit_complex(c: &OrderedComplex) -> Result<OrderedComplex> {
    if !c.is_matroid() {
        return precondition("broken circuits are defined for matroids");
    }
    Ok(bc_unchecked(c))
}

/// `rBC_w(Γ)`: the base of the cone `BC_w(Γ)` over `w(1)`.
pub fn reduced_bc(c: &OrderedComplex) -> Result<OrderedComplex> {
    let bc = broken_circuit_complex(c)?;
    if c.n() == 0 {
        return Ok(bc);
    }
    let apex = c.order().at(0);
    Ok(bc.link(crate::set::Set::singleton(apex)))
}

/// Result of the bounded search for a matroid with the given broken-circuit complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcVerdict {
    Yes,
    No,
    Skipped,
}

/// Search for a matroid `M` on the same ordered ground with `BC_w(M) = Γ`.
/// Bases of `M` include the facets of `Γ`, so only supersets of the facet set
/// among the `r`-subsets are tried; the search is skipped above 20 free subsets.
pub fn is_bc_representable(c: &OrderedComplex) -> BcVerdict {
    if !c.is_pure() {
        return BcVerdict::No;
    }
    let r = c.rank().unwrap();
    let free: Vec<Set> = c
        .ground()
        .iter()
        .combinations(r)
        .map(|v| v.into_iter().collect::<Set>())
        .filter(|s| !c.is_facet(*s))
        .collect();
    if free.len() > 20 {
        return BcVerdict::Skipped;
    }
    for mask in 0u32..(1u32 << free.len()) {
        let mut bases = c.facets().to_vec();
        for (i, &s) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                bases.push(s);
            }
        }
        let m = OrderedComplex::new(c.order().clone(), bases).unwrap();
        if m.is_matroid() && bc_unchecked(&m).facets() == c.facets() {
            return BcVerdict::Yes;
        }
    }
    BcVerdict::No
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::all_orders;
    use crate::set::Elem;

    fn set(s: &str) -> Set {
        s.chars().map(|c| c.to_digit(10).unwrap() as Elem).collect()
    }

    #[test]
    fn uniform_u23() {
        let u = OrderedComplex::parse(3, &["12", "13", "23"]);
        assert_eq!(circuits(&u), vec![set("123")]);
        let bc = broken_circuit_complex(&u).unwrap();
        assert_eq!(bc.facets(), &[set("12"), set("13")]);
        let rbc = reduced_bc(&u).unwrap();
        assert_eq!(rbc.facets(), &[set("2"), set("3")]);
        assert_eq!(rbc.ground(), set("23"));
        assert_eq!(is_bc_representable(&bc), BcVerdict::Yes);
    }

    #[test]
    fn free_matroid() {
        let s = OrderedComplex::parse(3, &["123"]);
        assert!(circuits(&s).is_empty());
        assert_eq!(broken_circuit_complex(&s).unwrap(), s);
    }

    #[test]
    fn bc_restricts_to_initial_segments() {
        let u = OrderedComplex::parse(4, &["12", "13", "14", "23", "24"]);
        assert!(u.is_matroid());
        for w in all_orders(u.ground()) {
            let c = u.with_order(w.clone()).unwrap();
            let bc = broken_circuit_complex(&c).unwrap();
            for k in 0..=4 {
                let a = w.prefix(k);
                assert_eq!(bc.restrict(a), broken_circuit_complex(&c.restrict(a)).unwrap());
            }
        }
    }

    #[test]
    fn non_matroid_rejected() {
        let g = OrderedComplex::parse(4, &["12", "34"]);
        assert!(broken_circuit_complex(&g).is_err());
    }
}
