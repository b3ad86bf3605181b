//! Finite sets of labels as 32-bit masks.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

/// An element label. Labels must be `< 32`.
pub type Elem = u8;

pub const MAX_LABEL: Elem = 31;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Set(pub u32);

impl Set {
    pub const EMPTY: Set = Set(0);

    pub fn singleton(x: Elem) -> Set {
        Set(1 << x)
    }

    /// `{lo, lo+1, ..., hi}`; empty when `lo > hi`.
    pub fn interval(lo: Elem, hi: Elem) -> Set {
        if lo > hi {
            return Set::EMPTY;
        }
        let top = if hi >= 31 { u32::MAX } else { (1u32 << (hi + 1)) - 1 };
        Set(top & !((1u32 << lo) - 1))
    }

    pub fn contains(self, x: Elem) -> bool {
        x < 32 && self.0 >> x & 1 == 1
    }

    pub fn with(self, x: Elem) -> Set {
        Set(self.0 | 1 << x)
    }

    pub fn without(self, x: Elem) -> Set {
        Set(self.0 & !(1 << x))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Set) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Set) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<Elem> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as Elem)
    }

    pub fn max(self) -> Option<Elem> {
        (!self.is_empty()).then(|| 31 - self.0.leading_zeros() as Elem)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> SetIter {
        SetIter(self.0)
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(0) }
    }
}

impl FromIterator<Elem> for Set {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = Set::EMPTY;
        for x in iter {
            s = s.with(x);
        }
        s
    }
}

impl<'a> FromIterator<&'a Elem> for Set {
    fn from_iter<I: IntoIterator<Item = &'a Elem>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

pub struct SetIter(u32);

impl Iterator for SetIter {
    type Item = Elem;
    fn next(&mut self) -> Option<Elem> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(x as Elem)
    }
}

pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Set;
    fn next(&mut self) -> Option<Set> {
        let cur = self.next?;
        // Standard submask walk in increasing order.
        let nxt = (cur.wrapping_sub(self.mask)) & self.mask;
        self.next = (nxt != 0).then_some(nxt);
        Some(Set(cur))
    }
}

impl BitOr for Set {
    type Output = Set;
    fn bitor(self, o: Set) -> Set {
        Set(self.0 | o.0)
    }
}

impl BitAnd for Set {
    type Output = Set;
    fn bitand(self, o: Set) -> Set {
        Set(self.0 & o.0)
    }
}

impl BitXor for Set {
    type Output = Set;
    fn bitxor(self, o: Set) -> Set {
        Set(self.0 ^ o.0)
    }
}

impl Sub for Set {
    type Output = Set;
    fn sub(self, o: Set) -> Set {
        Set(self.0 & !o.0)
    }
}

impl Not for Set {
    type Output = Set;
    fn not(self) -> Set {
        Set(!self.0)
    }
}

impl fmt::Debug for Set {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Concatenates single-digit labels, otherwise separates with commas.
pub fn render_labels(xs: impl IntoIterator<Item = Elem>) -> String {
    let xs: Vec<Elem> = xs.into_iter().collect();
    if xs.iter().all(|&x| x < 10) {
        xs.iter().map(|x| x.to_string()).collect()
    } else {
        xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Set {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{}", render_labels(self.iter()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_cover_powerset() {
        let s: Set = [1, 3, 4].iter().collect();
        let all: Vec<Set> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|t| t.is_subset(s)));
        assert_eq!(Set::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn interval_bounds() {
        assert_eq!(Set::interval(2, 4), [2, 3, 4].iter().collect());
        assert!(Set::interval(3, 2).is_empty());
        assert_eq!(Set::interval(0, 31).len(), 32);
    }
}
