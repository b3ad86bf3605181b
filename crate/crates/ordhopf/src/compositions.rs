//! Set compositions, preposets and albums.
//!
//! A set composition `A = A_1|...|A_k` stands for the open braid cone `σ_A`;
//! an album is a set of compositions standing for a subfan. Refinement is
//! written `A ⊵ B` when `B` is obtained from `A` by removing separators.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::orders::LinearOrder;
use crate::set::{render_labels, Elem, Set};

/// Largest ground set for which whole albums are enumerated.
pub const ALBUM_CEILING: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetComposition {
    blocks: Vec<Set>,
}

impl SetComposition {
    pub fn from_blocks(blocks: Vec<Set>) -> Result<Self> {
        let mut seen = Set::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return invalid("empty block");
            }
            if !seen.is_disjoint(b) {
                return invalid("blocks overlap");
            }
            seen = seen | b;
        }
        Ok(SetComposition { blocks })
    }

    pub(crate) fn from_blocks_unchecked(blocks: Vec<Set>) -> Self {
        debug_assert!(SetComposition::from_blocks(blocks.clone()).is_ok());
        SetComposition { blocks }
    }

    /// Parses `"14|25|367"`; a block containing commas is read as `"10,11"`.
    pub fn try_parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(SetComposition { blocks: Vec::new() });
        }
        let mut blocks = Vec::new();
        for part in text.split('|') {
            let labels: Vec<Elem> = if part.contains(',') {
                part.split(',')
                    .map(|s| s.trim().parse::<Elem>().map_err(|e| Error::InvalidInput(e.to_string())))
                    .collect::<Result<_>>()?
            } else {
                part.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as Elem)
                            .ok_or_else(|| Error::InvalidInput(format!("bad label {c:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            if labels.iter().any(|&x| x > crate::set::MAX_LABEL) {
                return invalid("label out of range");
            }
            blocks.push(labels.iter().collect());
        }
        SetComposition::from_blocks(blocks)
    }

    pub fn parse(text: &str) -> Self {
        SetComposition::try_parse(text).expect("valid composition")
    }

    pub fn one_block(ground: Set) -> Self {
        if ground.is_empty() {
            SetComposition { blocks: Vec::new() }
        } else {
            SetComposition { blocks: vec![ground] }
        }
    }

    /// `W = w(1)|w(2)|...|w(n)`.
    pub fn from_order(w: &LinearOrder) -> Result<Self> {
        if w.is_empty() {
            return invalid("empty ground has no singleton composition");
        }
        Ok(SetComposition {
            blocks: w.seq().iter().map(|&x| Set::singleton(x)).collect(),
        })
    }

    pub fn blocks(&self) -> &[Set] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground(&self) -> Set {
        self.blocks.iter().fold(Set::EMPTY, |acc, &b| acc | b)
    }

    pub fn block_of(&self, x: Elem) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(x))
    }

    /// Block index of every label, indexed by label.
    pub fn block_index(&self) -> [u8; 32] {
        let mut idx = [u8::MAX; 32];
        for (i, b) in self.blocks.iter().enumerate() {
            for x in b.iter() {
                idx[x as usize] = i as u8;
            }
        }
        idx
    }

    /// `i ⪯_A j`.
    pub fn leq(&self, i: Elem, j: Elem) -> bool {
        self.block_of(i) <= self.block_of(j)
    }

    /// Unions of the last `k` blocks, for `k = 1..len`.
    pub fn suffix_unions(&self) -> Vec<Set> {
        let mut acc = Set::EMPTY;
        self.blocks
            .iter()
            .rev()
            .map(|&b| {
                acc = acc | b;
                acc
            })
            .collect()
    }

    /// `self ⊵ other`: `other` arises from `self` by merging consecutive blocks.
    pub fn refines(&self, other: &SetComposition) -> Result<bool> {
        if self.ground() != other.ground() {
            return Err(Error::GroundMismatch);
        }
        let mut i = 0;
        for &ob in &other.blocks {
            let mut acc = Set::EMPTY;
            while acc != ob {
                if i >= self.blocks.len() || !self.blocks[i].is_subset(ob) {
                    return Ok(false);
                }
                acc = acc | self.blocks[i];
                i += 1;
            }
        }
        Ok(true)
    }

    /// `A ⊴ W`: the blocks are consecutive intervals of `w`, in order.
    pub fn is_natural(&self, w: &LinearOrder) -> bool {
        if self.ground() != w.ground() {
            return false;
        }
        let mut k = 0;
        for b in &self.blocks {
            if w.prefix(k + b.len()) - w.prefix(k) != *b {
                return false;
            }
            k += b.len();
        }
        true
    }

    /// Cut positions `i` (cut after the `i`-th element of `w`, `1 ≤ i < n`).
    pub fn separators(&self, w: &LinearOrder) -> Result<Set> {
        if !self.is_natural(w) {
            return invalid("composition is not natural for the order");
        }
        let mut seps = Set::EMPTY;
        let mut k = 0;
        for b in &self.blocks[..self.blocks.len().saturating_sub(1)] {
            k += b.len();
            seps = seps.with(k as Elem);
        }
        Ok(seps)
    }

    pub fn from_separators(w: &LinearOrder, seps: Set) -> Self {
        let mut blocks = Vec::new();
        let mut cur = Set::EMPTY;
        for (i, &x) in w.seq().iter().enumerate() {
            if i > 0 && seps.contains(i as Elem) {
                blocks.push(cur);
                cur = Set::EMPTY;
            }
            cur = cur.with(x);
        }
        if !cur.is_empty() {
            blocks.push(cur);
        }
        SetComposition { blocks }
    }

    /// All `2^{n-1}` coarsenings of `W`.
    pub fn natural_coarsenings(w: &LinearOrder) -> Vec<SetComposition> {
        if w.is_empty() {
            return vec![SetComposition { blocks: Vec::new() }];
        }
        let all = Set::interval(1, w.len() as Elem - 1);
        all.subsets().map(|s| SetComposition::from_separators(w, s)).collect()
    }

    /// Union of separator sets of two `w`-natural compositions.
    pub fn natural_join(&self, other: &SetComposition, w: &LinearOrder) -> Result<Self> {
        let s = self.separators(w)? | other.separators(w)?;
        Ok(SetComposition::from_separators(w, s))
    }

    /// Intersection of separator sets of two `w`-natural compositions.
    pub fn natural_meet(&self, other: &SetComposition, w: &LinearOrder) -> Result<Self> {
        let s = self.separators(w)? & other.separators(w)?;
        Ok(SetComposition::from_separators(w, s))
    }

    /// Merge blocks `i..=j` into one.
    pub fn merge(&self, i: usize, j: usize) -> Self {
        let mut blocks = self.blocks[..i].to_vec();
        blocks.push(self.blocks[i..=j].iter().fold(Set::EMPTY, |a, &b| a | b));
        blocks.extend_from_slice(&self.blocks[j + 1..]);
        SetComposition { blocks }
    }
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| render_labels(b.iter())).collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl fmt::Debug for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Every set composition of `ground` (ordered set partitions).
pub fn all_compositions(ground: Set) -> Result<Vec<SetComposition>> {
    Ok(Preposet::antichain(ground).closure_album()?.into_vec())
}

/// A reflexive transitive relation, stored as its up-sets and down-sets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Preposet {
    ground: Set,
    up: [Set; 32],
    down: [Set; 32],
}

impl Preposet {
    /// Transitive closure of the given relations `a ⪯ b`.
    pub fn from_relations(ground: Set, rels: &[(Elem, Elem)]) -> Result<Self> {
        let mut up = [Set::EMPTY; 32];
        for x in ground.iter() {
            up[x as usize] = Set::singleton(x);
        }
        for &(a, b) in rels {
            if !ground.contains(a) || !ground.contains(b) {
                return invalid(format!("relation ({a},{b}) outside ground"));
            }
            up[a as usize] = up[a as usize].with(b);
        }
        // Warshall on bit rows.
        for k in ground.iter() {
            for i in ground.iter() {
                if up[i as usize].contains(k) {
                    up[i as usize] = up[i as usize] | up[k as usize];
                }
            }
        }
        Ok(Preposet::from_up(ground, up))
    }

    fn from_up(ground: Set, up: [Set; 32]) -> Self {
        let mut down = [Set::EMPTY; 32];
        for i in ground.iter() {
            for j in up[i as usize].iter() {
                down[j as usize] = down[j as usize].with(i);
            }
        }
        Preposet { ground, up, down }
    }

    /// Only the reflexive relations.
    pub fn antichain(ground: Set) -> Self {
        Preposet::from_relations(ground, &[]).unwrap()
    }

    /// Every pair related both ways.
    pub fn one_block(ground: Set) -> Self {
        let mut up = [Set::EMPTY; 32];
        for x in ground.iter() {
            up[x as usize] = ground;
        }
        Preposet::from_up(ground, up)
    }

    /// `i ⪯ j` iff `i`'s block is not after `j`'s.
    pub fn from_composition(a: &SetComposition) -> Self {
        let mut up = [Set::EMPTY; 32];
        let suffixes = a.suffix_unions();
        let k = a.len();
        for (i, b) in a.blocks().iter().enumerate() {
            for x in b.iter() {
                up[x as usize] = suffixes[k - 1 - i];
            }
        }
        Preposet::from_up(a.ground(), up)
    }

    pub fn ground(&self) -> Set {
        self.ground
    }

    pub fn up(&self, x: Elem) -> Set {
        self.up[x as usize]
    }

    pub fn down(&self, x: Elem) -> Set {
        self.down[x as usize]
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.up[a as usize].contains(b)
    }

    pub fn equiv(&self, a: Elem, b: Elem) -> bool {
        self.leq(a, b) && self.leq(b, a)
    }

    /// `a ≺ b`: `a ⪯ b` but not `b ⪯ a`.
    pub fn strict(&self, a: Elem, b: Elem) -> bool {
        self.leq(a, b) && !self.leq(b, a)
    }

    /// Equivalence classes, ordered by least element.
    pub fn blocks(&self) -> Vec<Set> {
        let mut out = Vec::new();
        let mut left = self.ground;
        while let Some(x) = left.min() {
            let b = self.up(x) & self.down(x);
            out.push(b);
            left = left - b;
        }
        out
    }

    pub fn strict_pairs(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in self.ground.iter() {
            for b in self.up(a).iter() {
                if !self.leq(b, a) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn has_strict(&self) -> bool {
        self.ground.iter().any(|a| self.up(a) != self.up(a) & self.down(a))
    }

    /// Induced relation on `s`.
    pub fn restrict(&self, s: Set) -> Self {
        let mut up = [Set::EMPTY; 32];
        for x in s.iter() {
            up[x as usize] = self.up[x as usize] & s;
        }
        Preposet::from_up(s, up)
    }

    /// `s` is closed downward.
    pub fn is_down_set(&self, s: Set) -> bool {
        s.iter().all(|x| self.down(x).is_subset(s))
    }

    /// `A ∈ C_Q`: every relation `i ⪯ j` has `i ⪯_A j`.
    pub fn contains(&self, a: &SetComposition) -> bool {
        if a.ground() != self.ground {
            return false;
        }
        let idx = a.block_index();
        self.ground
            .iter()
            .all(|i| self.up(i).iter().all(|j| idx[i as usize] <= idx[j as usize]))
    }

    /// Some block of `a` contains `x ≺ y`.
    pub fn collapses(&self, a: &SetComposition) -> bool {
        a.blocks().iter().any(|&b| {
            b.iter().any(|x| {
                let strict_up = self.up(x) - self.down(x);
                !strict_up.is_disjoint(b)
            })
        })
    }

    /// `A ∈ C°_Q`.
    pub fn interior_contains(&self, a: &SetComposition) -> bool {
        self.contains(a) && !self.collapses(a)
    }

    /// `C_Q`, generated block by block as successive down-sets.
    pub fn closure_album(&self) -> Result<Album> {
        if self.ground.len() > ALBUM_CEILING {
            return Err(Error::Ceiling(format!(
                "album enumeration limited to {ALBUM_CEILING} elements"
            )));
        }
        let mut out = BTreeSet::new();
        let mut cur = Vec::new();
        self.closure_rec(self.ground, &mut cur, &mut out);
        Ok(Album { comps: out })
    }

    fn closure_rec(&self, left: Set, cur: &mut Vec<Set>, out: &mut BTreeSet<SetComposition>) {
        if left.is_empty() {
            out.insert(SetComposition { blocks: cur.clone() });
            return;
        }
        for s in left.subsets() {
            if s.is_empty() {
                continue;
            }
            if s.iter().all(|x| (self.down(x) & left).is_subset(s)) {
                cur.push(s);
                self.closure_rec(left - s, cur, out);
                cur.pop();
            }
        }
    }

    /// Maximal members of `C_Q`: the linear extensions.
    pub fn linear_extensions(&self) -> Result<Vec<SetComposition>> {
        let album = self.closure_album()?;
        Ok(album
            .iter()
            .filter(|a| a.len() == self.ground.len())
            .cloned()
            .collect())
    }

    /// No strict relation goes against `w`.
    pub fn is_natural(&self, w: &LinearOrder) -> bool {
        self.strict_pairs().iter().all(|&(a, b)| w.before(a, b))
    }

    /// `N_{w,Q}`: merge `[y, x]_w` for every relation `x ⪯ y` with `y` before `x`.
    pub fn naturalize(&self, w: &LinearOrder) -> Result<SetComposition> {
        if w.ground() != self.ground {
            return Err(Error::GroundMismatch);
        }
        if w.is_empty() {
            return Ok(SetComposition::one_block(Set::EMPTY));
        }
        let mut seps = Set::interval(1, w.len() as Elem - 1);
        for x in self.ground.iter() {
            for y in self.up(x).iter() {
                let (px, py) = (w.pos(x), w.pos(y));
                if py < px {
                    seps = seps - Set::interval(py as Elem + 1, px as Elem);
                }
            }
        }
        Ok(SetComposition::from_separators(w, seps))
    }
}

impl fmt::Display for Preposet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.blocks();
        let names: Vec<String> = blocks.iter().map(|b| render_labels(b.iter())).collect();
        write!(f, "{{{}}}", names.join(","))?;
        let mut covers = Vec::new();
        for (i, &a) in blocks.iter().enumerate() {
            for (j, &b) in blocks.iter().enumerate() {
                let (x, y) = (a.min().unwrap(), b.min().unwrap());
                if i == j || !self.strict(x, y) {
                    continue;
                }
                let between = blocks.iter().any(|c| {
                    let z = (*c).min().unwrap();
                    self.strict(x, z) && self.strict(z, y)
                });
                if !between {
                    covers.push(format!("{}<{}", names[i], names[j]));
                }
            }
        }
        if !covers.is_empty() {
            write!(f, " {}", covers.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Preposet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A set of compositions of a common ground set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Album {
    comps: BTreeSet<SetComposition>,
}

impl Album {
    pub fn new(comps: impl IntoIterator<Item = SetComposition>) -> Self {
        Album { comps: comps.into_iter().collect() }
    }

    pub fn contains(&self, a: &SetComposition) -> bool {
        self.comps.contains(a)
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &SetComposition> {
        self.comps.iter()
    }

    pub fn into_vec(self) -> Vec<SetComposition> {
        self.comps.into_iter().collect()
    }

    pub fn intersection(&self, other: &Album) -> Album {
        Album { comps: self.comps.intersection(&other.comps).cloned().collect() }
    }

    pub fn filter(&self, keep: impl Fn(&SetComposition) -> bool) -> Album {
        Album { comps: self.comps.iter().filter(|a| keep(a)).cloned().collect() }
    }

    /// `Σ (−1)^{|A|}`.
    pub fn euler(&self) -> i64 {
        self.comps.iter().map(|a| sign(a.len())).sum()
    }
}

/// `(−1)^k`.
pub fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn album_euler(a: &Album) -> i64 {
    a.euler()
}

/// `E_{w,u} = {A : D(w,u) ⊴ A ⊴ W}`.
pub fn e_album(w: &LinearOrder, u: &LinearOrder) -> Result<Album> {
    let d = crate::orders::descent_composition(w, u)?;
    Ok(Album::new(
        SetComposition::natural_coarsenings(w)
            .into_iter()
            .filter(|a| a.refines(&d).unwrap()),
    ))
}

/// `F_{w,u} = {A ⊴ W : D(w,u) ⋬ A}`.
pub fn f_album(w: &LinearOrder, u: &LinearOrder) -> Result<Album> {
    let d = crate::orders::descent_composition(w, u)?;
    Ok(Album::new(
        SetComposition::natural_coarsenings(w)
            .into_iter()
            .filter(|a| !a.refines(&d).unwrap()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::all_orders;

    fn c(s: &str) -> SetComposition {
        SetComposition::parse(s)
    }

    fn set(xs: &[Elem]) -> Set {
        xs.iter().collect()
    }

    #[test]
    fn refinement_examples() {
        assert!(c("14|2|5|67|3").refines(&c("14|25|367")).unwrap());
        assert!(c("14|25|367").refines(&c("14|25|367")).unwrap());
        assert!(!c("1234567").refines(&c("14|25|367")).unwrap());
        assert!(c("1|2|3").refines(&c("12|3")).is_ok());
        assert!(c("12").refines(&c("13")).is_err());
    }

    #[test]
    fn natural_join_examples() {
        let w = LinearOrder::identity(3);
        assert_eq!(c("1|23").natural_join(&c("12|3"), &w).unwrap(), c("1|2|3"));
        assert_eq!(c("1|23").natural_join(&c("123"), &w).unwrap(), c("1|23"));
        assert_eq!(c("12|3").natural_join(&c("12|3"), &w).unwrap(), c("12|3"));
        assert!(c("2|13").natural_join(&c("12|3"), &w).is_err());
    }

    #[test]
    fn natural_coarsening_count() {
        for n in 1..=8 {
            let w = LinearOrder::identity(n);
            let all = SetComposition::natural_coarsenings(&w);
            assert_eq!(all.len(), 1 << (n - 1));
            assert!(all.iter().all(|a| a.is_natural(&w)));
        }
        let w = LinearOrder::parse("312");
        assert_eq!(SetComposition::from_order(&w).unwrap(), c("3|1|2"));
        assert!(SetComposition::from_order(&LinearOrder::empty()).is_err());
    }

    #[test]
    fn fubini_counts() {
        let fubini = [1usize, 1, 3, 13, 75, 541, 4683];
        for (n, &f) in fubini.iter().enumerate() {
            assert_eq!(all_compositions(Set::interval(1, n as Elem)).unwrap().len(), f);
        }
    }

    #[test]
    fn closure_of_composition_is_boolean() {
        let q = Preposet::from_composition(&c("12|3"));
        let album = q.closure_album().unwrap();
        assert_eq!(album, Album::new([c("123"), c("12|3")]));
        let q = Preposet::from_composition(&c("1|2|34|5"));
        assert_eq!(q.closure_album().unwrap().euler(), 0);
    }

    #[test]
    fn closure_of_hasse_example() {
        // a=1, b=2345, c=67, d=8 with a<b, a<c<d.
        let mut rels = vec![(1, 2), (1, 6), (6, 8)];
        for (x, y) in [(2, 3), (3, 4), (4, 5), (5, 2), (6, 7), (7, 6)] {
            rels.push((x, y));
        }
        let q = Preposet::from_relations(Set::interval(1, 8), &rels).unwrap();
        let blocks = q.blocks();
        let mut maximal: Vec<String> = q
            .closure_album()
            .unwrap()
            .iter()
            .filter(|a| a.len() == blocks.len())
            .map(|a| a.to_string())
            .collect();
        maximal.sort();
        assert_eq!(maximal, vec!["1|2345|67|8", "1|67|2345|8", "1|67|8|2345"]);
    }

    #[test]
    fn antichain_closure_is_everything() {
        let g = Set::interval(1, 4);
        assert_eq!(Preposet::antichain(g).closure_album().unwrap().len(), 75);
        assert!(!Preposet::antichain(g).collapses(&c("1234")));
    }

    #[test]
    fn naturalization_examples() {
        let w = LinearOrder::identity(3);
        let q = Preposet::from_relations(set(&[1, 2, 3]), &[(1, 3), (3, 1)]).unwrap();
        assert_eq!(q.naturalize(&w).unwrap(), c("123"));
        let q = Preposet::from_relations(set(&[1, 2, 3]), &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(q.naturalize(&w).unwrap(), c("1|2|3"));
        let w = LinearOrder::identity(6);
        let q = Preposet::from_relations(
            Set::interval(1, 6),
            &[(1, 4), (4, 1), (3, 6), (6, 3)],
        )
        .unwrap();
        assert_eq!(q.naturalize(&w).unwrap(), c("123456"));
    }

    #[test]
    fn album_euler_trivia() {
        assert_eq!(Album::default().euler(), 0);
        assert_eq!(Album::new([c("123")]).euler(), -1);
    }

    #[test]
    fn e_and_f_albums_partition_natural() {
        for n in 1..=5 {
            let w = LinearOrder::identity(n);
            for u in all_orders(w.ground()) {
                let e = e_album(&w, &u).unwrap();
                let f = f_album(&w, &u).unwrap();
                let d = crate::orders::descent_composition(&w, &u).unwrap();
                assert_eq!(e.len(), 1 << (n - d.len()));
                assert_eq!(e.len() + f.len(), 1 << (n - 1));
                assert!(e.intersection(&f).is_empty());
                if u == w.reversed() {
                    assert_eq!(e.len(), 1);
                }
                if u == w {
                    assert!(f.is_empty());
                }
            }
        }
    }

    #[test]
    fn closure_is_order_ideal_and_split() {
        let q = Preposet::from_relations(set(&[1, 2, 3, 4]), &[(1, 2), (3, 4), (4, 3)]).unwrap();
        let album = q.closure_album().unwrap();
        for a in album.iter() {
            for b in all_compositions(q.ground()).unwrap() {
                if a.refines(&b).unwrap() {
                    assert!(album.contains(&b));
                }
            }
        }
        let boundary = album.filter(|a| q.collapses(a));
        let interior = album.filter(|a| q.interior_contains(a));
        assert_eq!(boundary.len() + interior.len(), album.len());
    }
}
