//! Shelling orders and lexicographic shellability.

use super::OrderedComplex;
use crate::error::{precondition, Result};
use crate::set::Set;

/// Whether `facets`, in the given order, is a shelling: for `j < i` there is
/// `k < i` and `x ∈ φ_i ∖ φ_j` with `φ_i ∖ φ_k = {x}`.
pub fn is_shelling_order(facets: &[Set]) -> bool {
    for (i, &fi) in facets.iter().enumerate() {
        let mut shed = Set::EMPTY;
        for &fk in &facets[..i] {
            let d = fi - fk;
            if d.len() == 1 {
                shed = shed | d;
            }
        }
        if facets[..i].iter().any(|&fj| shed.is_subset(fj)) {
            return false;
        }
    }
    true
}

/// The `<_w`-lex order on facets is a shelling order.
pub fn is_lex_shellable(c: &OrderedComplex) -> Result<bool> {
    if !c.is_pure() {
        return precondition("shellability is checked on pure complexes");
    }
    Ok(is_shelling_order(&c.lex_sorted_facets()))
}

/// Prefix-pure and every initial restriction is lex-shellable.
pub fn is_strongly_lex_shellable(c: &OrderedComplex) -> Result<bool> {
    if !c.is_pure() {
        return precondition("shellability is checked on pure complexes");
    }
    if !c.is_prefix_pure() {
        return Ok(false);
    }
    for k in 0..=c.n() {
        if !is_lex_shellable(&c.restrict(c.order().prefix(k)))? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::all_orders;

    #[test]
    fn path_graph() {
        let g = OrderedComplex::parse(4, &["12", "14", "34"]);
        assert!(is_lex_shellable(&g).unwrap());
        assert!(!is_strongly_lex_shellable(&g).unwrap());
    }

    #[test]
    fn single_facet_and_matroids() {
        let s = OrderedComplex::parse(3, &["123"]);
        assert!(is_strongly_lex_shellable(&s).unwrap());
        let u = OrderedComplex::parse(4, &["12", "13", "14", "23", "24", "34"]);
        for w in all_orders(u.ground()) {
            assert!(is_strongly_lex_shellable(&u.with_order(w).unwrap()).unwrap());
        }
    }

    #[test]
    fn disconnected_edges_do_not_shell() {
        let g = OrderedComplex::parse(4, &["12", "34"]);
        assert!(!is_lex_shellable(&g).unwrap());
        assert!(is_lex_shellable(&OrderedComplex::parse(3, &["1", "2", "3"])).unwrap());
    }
}
