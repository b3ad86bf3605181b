//! Formal sums and the two Hopf monoids: ordered prefix-pure complexes and
//! ordered extended generalized permutohedra.

pub mod ogp;
pub mod pre;
pub mod special;
pub mod verify;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::complexes::OrderedComplex;
use crate::orders::LinearOrder;
use crate::polyhedra::LatticePolyhedron;

/// Integer combination of basis elements. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalSum<K: Ord> {
    terms: BTreeMap<K, i64>,
}

impl<K: Ord> Default for FormalSum<K> {
    fn default() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> FormalSum<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: i64) -> Self {
        let mut s = Self::zero();
        s.add_term(k, c);
        s
    }

    pub fn add_term(&mut self, k: K, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(k) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: i64) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    /// Merge for parallel reductions.
    pub fn merge(mut self, other: Self) -> Self {
        if self.terms.len() < other.terms.len() {
            return other.merge(self);
        }
        for (k, v) in other.terms {
            self.add_term(k, v);
        }
        self
    }

    pub fn scaled(&self, c: i64) -> Self {
        let mut s = Self::zero();
        s.add_scaled(self, c);
        s
    }

    pub fn coeff(&self, k: &K) -> i64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn max_abs_coeff(&self) -> i64 {
        self.terms.values().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// The first key where two sums disagree, with both coefficients.
    pub fn first_difference<'a>(&'a self, other: &'a Self) -> Option<(&'a K, i64, i64)> {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .find(|k| self.coeff(k) != other.coeff(k))
            .map(|k| (k, self.coeff(k), other.coeff(k)))
    }
}

impl<K: Ord + Clone> FromIterator<(K, i64)> for FormalSum<K> {
    fn from_iter<T: IntoIterator<Item = (K, i64)>>(iter: T) -> Self {
        let mut s = Self::zero();
        for (k, c) in iter {
            s.add_term(k, c);
        }
        s
    }
}

/// A basis element `u ⊗ x`: an order and an object on the same ground.
pub trait BasisElement {
    fn order(&self) -> &LinearOrder;
    fn object_key(&self) -> String;
}

impl BasisElement for OrderedComplex {
    fn order(&self) -> &LinearOrder {
        OrderedComplex::order(self)
    }

    fn object_key(&self) -> String {
        self.facet_string()
    }
}

/// `u ⊗ q` in the polyhedral monoid.
pub type OgpTerm = (LinearOrder, LatticePolyhedron);

impl BasisElement for OgpTerm {
    fn order(&self) -> &LinearOrder {
        &self.0
    }

    fn object_key(&self) -> String {
        self.1.key()
    }
}

impl<K: Ord + Clone + BasisElement> FormalSum<K> {
    /// Lines `coeff  order  object-key`, sorted by basis key.
    pub fn table(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.iter() {
            out.push_str(&format!("{c:+}  {}  {}\n", k.order(), k.object_key()));
        }
        out
    }
}

impl<K: Ord + Clone + fmt::Debug> fmt::Debug for FormalSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.iter().map(|(k, c)| format!("{c:+}·{k:?}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_keys() {
        let mut s = FormalSum::single("a".to_string(), 2);
        s.add_term("b".into(), 1);
        s.add_term("a".into(), -2);
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff(&"a".into()), 0);
        let t = s.clone().merge(s.scaled(-1));
        assert!(t.is_empty());
        assert_eq!(format!("{t:?}"), "0");
    }

    #[test]
    fn first_difference_reports_both_sides() {
        let a: FormalSum<u8> = [(1, 1), (2, 3)].into_iter().collect();
        let b: FormalSum<u8> = [(1, 1), (2, 2)].into_iter().collect();
        assert_eq!(a.first_difference(&b), Some((&2, 3, 2)));
        assert_eq!(a.first_difference(&a), None);
    }
}
