//! Linear orders, shuffles, initial segments, descent compositions.

use std::fmt;

use itertools::Itertools;

use crate::compositions::SetComposition;
use crate::error::{invalid, Error, Result};
use crate::set::{render_labels, Elem, Set, MAX_LABEL};

const NO_POS: u8 = u8::MAX;

/// A linear order on a finite set of labels, stored as its sequence.
#[derive(Clone)]
pub struct LinearOrder {
    seq: Vec<Elem>,
    pos: [u8; 32],
}

impl LinearOrder {
    pub fn new(seq: Vec<Elem>) -> Result<Self> {
        let mut pos = [NO_POS; 32];
        for (i, &x) in seq.iter().enumerate() {
            if x > MAX_LABEL {
                return invalid(format!("label {x} out of range"));
            }
            if pos[x as usize] != NO_POS {
                return invalid(format!("label {x} repeated"));
            }
            pos[x as usize] = i as u8;
        }
        Ok(LinearOrder { seq, pos })
    }

    /// Panicking constructor for literals like `"312"`.
    pub fn parse(digits: &str) -> Self {
        let seq = digits
            .chars()
            .map(|c| c.to_digit(10).expect("digit") as Elem)
            .collect();
        LinearOrder::new(seq).expect("valid order")
    }

    /// `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        LinearOrder::new((1..=n as Elem).collect()).unwrap()
    }

    /// Labels of `s` in increasing order.
    pub fn natural(s: Set) -> Self {
        LinearOrder::new(s.iter().collect()).unwrap()
    }

    pub fn empty() -> Self {
        LinearOrder::new(Vec::new()).unwrap()
    }

    pub fn seq(&self) -> &[Elem] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn ground(&self) -> Set {
        self.seq.iter().collect()
    }

    /// Zero-based position of `x`. Panics if `x` is absent.
    pub fn pos(&self, x: Elem) -> usize {
        let p = self.pos[x as usize];
        assert!(p != NO_POS, "label {x} not in order");
        p as usize
    }

    pub fn at(&self, i: usize) -> Elem {
        self.seq[i]
    }

    /// `x` strictly before `y`.
    pub fn before(&self, x: Elem, y: Elem) -> bool {
        self.pos(x) < self.pos(y)
    }

    pub fn reversed(&self) -> Self {
        LinearOrder::new(self.seq.iter().rev().copied().collect()).unwrap()
    }

    /// Restriction `w|_A`.
    pub fn restrict(&self, a: Set) -> Self {
        LinearOrder::new(self.seq.iter().copied().filter(|&x| a.contains(x)).collect()).unwrap()
    }

    /// Concatenation `uv`.
    pub fn concat(&self, other: &LinearOrder) -> Result<Self> {
        LinearOrder::new(self.seq.iter().chain(other.seq.iter()).copied().collect())
    }

    /// The first `k` elements as a set.
    pub fn prefix(&self, k: usize) -> Set {
        self.seq[..k].iter().collect()
    }

    /// The last `k` elements as a set.
    pub fn suffix(&self, k: usize) -> Set {
        self.seq[self.len() - k..].iter().collect()
    }

    pub fn is_initial(&self, a: Set) -> bool {
        a.is_subset(self.ground()) && self.prefix(a.len()) == a
    }

    /// Number of descents of `u⁻¹w`, i.e. adjacent pairs of `self` that `u` reverses.
    pub fn descents_against(&self, u: &LinearOrder) -> usize {
        self.seq.windows(2).filter(|p| u.pos(p[0]) > u.pos(p[1])).count()
    }

    /// Labels of the ground `[n]` as `u⁻¹(1..n)`, one-based.
    pub fn inverse_positions(&self) -> Vec<usize> {
        let n = self.len();
        (1..=n as Elem).map(|v| self.pos(v) + 1).collect()
    }
}

impl PartialEq for LinearOrder {
    fn eq(&self, other: &Self) -> bool {
        self.seq == other.seq
    }
}

impl Eq for LinearOrder {}

impl std::hash::Hash for LinearOrder {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.seq.hash(state);
    }
}

impl PartialOrd for LinearOrder {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LinearOrder {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.seq.cmp(&other.seq)
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_labels(self.seq.iter().copied()))
    }
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// All linear orders on `s`, lexicographically.
pub fn all_orders(s: Set) -> Vec<LinearOrder> {
    let xs: Vec<Elem> = s.iter().collect();
    let k = xs.len();
    xs.into_iter()
        .permutations(k)
        .map(|p| LinearOrder::new(p).unwrap())
        .collect()
}

/// Every order on the union restricting to each of `ws`.
pub fn shuffles(ws: &[&LinearOrder]) -> Result<Vec<LinearOrder>> {
    let mut seen = Set::EMPTY;
    for w in ws {
        if !seen.is_disjoint(w.ground()) {
            return invalid("shuffle of overlapping grounds");
        }
        seen = seen | w.ground();
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; ws.len()];
    let mut cur = Vec::with_capacity(seen.len());
    shuffle_rec(ws, &mut idx, &mut cur, &mut out);
    out.sort();
    Ok(out)
}

fn shuffle_rec(
    ws: &[&LinearOrder],
    idx: &mut [usize],
    cur: &mut Vec<Elem>,
    out: &mut Vec<LinearOrder>,
) {
    let mut done = true;
    for j in 0..ws.len() {
        if idx[j] < ws[j].len() {
            done = false;
            cur.push(ws[j].at(idx[j]));
            idx[j] += 1;
            shuffle_rec(ws, idx, cur, out);
            idx[j] -= 1;
            cur.pop();
        }
    }
    if done {
        out.push(LinearOrder::new(cur.clone()).unwrap());
    }
}

/// Shuffles of the restrictions of `w` to the blocks of a composition.
pub fn block_shuffles(w: &LinearOrder, a: &SetComposition) -> Vec<LinearOrder> {
    let parts: Vec<LinearOrder> = a.blocks().iter().map(|&b| w.restrict(b)).collect();
    let refs: Vec<&LinearOrder> = parts.iter().collect();
    shuffles(&refs).expect("blocks are disjoint")
}

/// `∅, {w(1)}, {w(1),w(2)}, ..., ground`.
pub fn initial_segments(w: &LinearOrder) -> Vec<Set> {
    (0..=w.len()).map(|k| w.prefix(k)).collect()
}

/// `D(w, u)`: cut `w` wherever `u` reverses an adjacent pair.
pub fn descent_composition(w: &LinearOrder, u: &LinearOrder) -> Result<SetComposition> {
    if w.ground() != u.ground() {
        return Err(Error::GroundMismatch);
    }
    let mut blocks = Vec::new();
    let mut cur = Set::EMPTY;
    for (i, &x) in w.seq().iter().enumerate() {
        if i > 0 && u.pos(w.at(i - 1)) > u.pos(x) {
            blocks.push(cur);
            cur = Set::EMPTY;
        }
        cur = cur.with(x);
    }
    if !cur.is_empty() {
        blocks.push(cur);
    }
    Ok(SetComposition::from_blocks_unchecked(blocks))
}

/// `u ≈_A w`: pairs sharing an `A`-block appear in the same relative order.
pub fn is_consistent(u: &LinearOrder, w: &LinearOrder, a: &SetComposition) -> bool {
    a.blocks().iter().all(|&b| u.restrict(b) == w.restrict(b))
}

/// The DUD decomposition of `u` on `[n]` at rank `r`.
///
/// Returns `(S, T)` where `S..=T` is the maximal run of values containing `r`
/// on which `u⁻¹` increases, provided `u⁻¹` decreases on `1..=S` and on `T..=n`.
pub fn dud_decompose(u: &LinearOrder, r: usize) -> Option<(usize, usize)> {
    let n = u.len();
    if r < 1 || r > n {
        return None;
    }
    let inv = u.inverse_positions();
    let p = |v: usize| inv[v - 1];
    let mut s = r;
    while s > 1 && p(s - 1) < p(s) {
        s -= 1;
    }
    let mut t = r;
    while t < n && p(t) < p(t + 1) {
        t += 1;
    }
    let down_left = (1..s).all(|v| p(v) > p(v + 1));
    let down_right = (t..n).all(|v| p(v) > p(v + 1));
    (down_left && down_right).then_some((s, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> LinearOrder {
        LinearOrder::parse(s)
    }

    #[test]
    fn shuffle_examples() {
        let got = shuffles(&[&o("12"), &o("3")]).unwrap();
        assert_eq!(got, vec![o("123"), o("132"), o("312")]);
        let got = shuffles(&[&o("12"), &o("34")]).unwrap();
        let want: Vec<_> = ["1234", "1324", "1342", "3124", "3142", "3412"]
            .iter()
            .map(|s| o(s))
            .collect();
        assert_eq!(got, want);
        assert_eq!(shuffles(&[&o("312")]).unwrap(), vec![o("312")]);
        assert!(shuffles(&[&o("12"), &o("23")]).is_err());
    }

    #[test]
    fn shuffle_counts_are_multinomial() {
        let got = shuffles(&[&o("12"), &o("345"), &o("67")]).unwrap();
        assert_eq!(got.len(), 210);
        let swapped = shuffles(&[&o("67"), &o("12"), &o("345")]).unwrap();
        assert_eq!(got, swapped);
    }

    #[test]
    fn initial_segment_list() {
        let segs = initial_segments(&o("312"));
        let want: Vec<Set> = vec![
            Set::EMPTY,
            [3].iter().collect(),
            [1, 3].iter().collect(),
            [1, 2, 3].iter().collect(),
        ];
        assert_eq!(segs, want);
        assert!(!initial_segments(&o("14325")).contains(&[1, 2, 3].iter().collect()));
        assert_eq!(initial_segments(&LinearOrder::empty()), vec![Set::EMPTY]);
    }

    #[test]
    fn descent_composition_letters() {
        // a..h as 1..8
        let w = LinearOrder::new(vec![1, 5, 2, 6, 3, 4, 8, 7]).unwrap();
        let u = LinearOrder::new(vec![2, 4, 1, 8, 6, 7, 3, 5]).unwrap();
        let d = descent_composition(&w, &u).unwrap();
        assert_eq!(d.to_string(), "15|236|478");
        assert_eq!(descent_composition(&w, &w).unwrap().len(), 1);
        assert_eq!(descent_composition(&w, &w.reversed()).unwrap().len(), 8);
    }

    #[test]
    fn consistency_class() {
        let w = o("312");
        let a = SetComposition::parse("13|2");
        let class: Vec<_> = all_orders(w.ground())
            .into_iter()
            .filter(|u| is_consistent(u, &w, &a))
            .collect();
        assert_eq!(class, vec![o("231"), o("312"), o("321")]);
    }

    #[test]
    fn dud_extremes() {
        for n in 1..6 {
            for r in 1..=n {
                assert_eq!(dud_decompose(&LinearOrder::identity(n), r), Some((1, n)));
                assert_eq!(dud_decompose(&LinearOrder::identity(n).reversed(), r), Some((r, r)));
            }
        }
    }

    #[test]
    fn consistency_matches_descent_refinement() {
        for n in 1..=5 {
            let w = LinearOrder::identity(n);
            let nat = SetComposition::natural_coarsenings(&w);
            for u in all_orders(w.ground()) {
                let d = descent_composition(&w, &u).unwrap();
                assert_eq!(d.len(), 1 + w.descents_against(&u));
                assert!(d.is_natural(&w));
                for a in &nat {
                    assert_eq!(is_consistent(&u, &w, a), a.refines(&d).unwrap());
                }
            }
        }
    }
}
