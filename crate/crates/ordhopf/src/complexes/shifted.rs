//! Gale order, shifted complexes and their relatives.

use itertools::Itertools;

use super::OrderedComplex;
use crate::error::{invalid, precondition, Result};
use crate::orders::LinearOrder;
use crate::set::{Elem, Set};

fn positions(s: Set, w: &LinearOrder) -> Vec<usize> {
    let mut v: Vec<usize> = s.iter().map(|x| w.pos(x)).collect();
    v.sort_unstable();
    v
}

fn from_positions(ps: &[usize], w: &LinearOrder) -> Set {
    ps.iter().map(|&p| w.at(p)).collect()
}

fn same_size(phi: Set, psi: Set) -> Result<()> {
    if phi.len() != psi.len() {
        return invalid("Gale order compares sets of equal size");
    }
    Ok(())
}

/// `φ ≤ ψ` in Gale order induced by `w`.
pub fn gale_leq(phi: Set, psi: Set, w: &LinearOrder) -> Result<bool> {
    same_size(phi, psi)?;
    let (a, b) = (positions(phi, w), positions(psi, w));
    Ok(a.iter().zip(&b).all(|(x, y)| x <= y))
}

pub fn gale_join(phi: Set, psi: Set, w: &LinearOrder) -> Result<Set> {
    same_size(phi, psi)?;
    let (a, b) = (positions(phi, w), positions(psi, w));
    let m: Vec<usize> = a.iter().zip(&b).map(|(&x, &y)| x.max(y)).collect();
    Ok(from_positions(&m, w))
}

pub fn gale_meet(phi: Set, psi: Set, w: &LinearOrder) -> Result<Set> {
    same_size(phi, psi)?;
    let (a, b) = (positions(phi, w), positions(psi, w));
    let m: Vec<usize> = a.iter().zip(&b).map(|(&x, &y)| x.min(y)).collect();
    Ok(from_positions(&m, w))
}

/// Replacing any vertex of a face by an earlier one gives a face.
pub fn is_shifted(c: &OrderedComplex) -> bool {
    if c.is_void() {
        return false;
    }
    let w = c.order();
    c.facets().iter().all(|&f| {
        f.iter().all(|x| {
            (c.ground() - f)
                .iter()
                .filter(|&y| w.before(y, x))
                .all(|y| c.is_face(f.without(x).with(y)))
        })
    })
}

/// `⟨⟨φ_1, ..., φ_m⟩⟩`: the Gale order ideal generated by the `φ_i`.
pub fn shifted_from_generators(gens: &[Set], w: &LinearOrder) -> Result<OrderedComplex> {
    let g = w.ground();
    let mut facets = Vec::new();
    for &phi in gens {
        if !phi.is_subset(g) {
            return invalid("generator outside ground");
        }
        for combo in g.iter().combinations(phi.len()) {
            let s: Set = combo.into_iter().collect();
            if gale_leq(s, phi, w)? {
                facets.push(s);
            }
        }
    }
    OrderedComplex::new(w.clone(), facets)
}

/// Subcomplex of a pure `c` generated by its facets in the Gale ideal of `gens`.
pub fn gale_truncation(c: &OrderedComplex, gens: &[Set]) -> Result<OrderedComplex> {
    if !c.is_pure() {
        return precondition("Gale truncation needs a pure complex");
    }
    let w = c.order();
    let mut keep = Vec::new();
    for &f in c.facets() {
        let mut inside = false;
        for &g in gens {
            if gale_leq(f, g, w)? {
                inside = true;
                break;
            }
        }
        if inside {
            keep.push(f);
        }
    }
    OrderedComplex::new(w.clone(), keep)
}

/// Smallest shifted matroid containing a pure `c`.
pub fn matroid_hull(c: &OrderedComplex) -> Result<OrderedComplex> {
    if !c.is_pure() {
        return precondition("matroid hull needs a pure complex");
    }
    let w = c.order();
    let mut top = c.facets()[0];
    for &f in &c.facets()[1..] {
        top = gale_join(top, f, w)?;
    }
    shifted_from_generators(&[top], w)
}

/// Interval minor of the Schubert matroid `⟨⟨φ⟩⟩_{[n]}` by the closed form
/// `⟨⟨φ' ∧ [t−r+s, t]⟩⟩_{[s,t]}` with `φ' = {a_s, ..., a_r}`, valid for `s ≤ r < t`.
pub fn schubert_interval_minor(phi: Set, n: usize, s: usize, t: usize) -> Result<OrderedComplex> {
    let r = phi.len();
    if !(1 <= s && s <= r && r < t && t <= n) {
        return precondition("closed form needs s ≤ r < t ≤ n");
    }
    let a: Vec<Elem> = phi.iter().collect();
    let tail: Set = a[s - 1..].iter().collect();
    let block = Set::interval((t - r + s) as Elem, t as Elem);
    let w = LinearOrder::natural(Set::interval(s as Elem, t as Elem));
    let e = LinearOrder::identity(n);
    let gen = gale_meet(tail, block, &e)?;
    shifted_from_generators(&[gen], &w)
}

/// Matroid threshold complex: facets of `c` with weight at most `bound`,
/// ordered by increasing weight. Weights are indexed by label.
pub fn threshold_complex(c: &OrderedComplex, weights: &[(Elem, i64)], bound: i64) -> Result<OrderedComplex> {
    if !c.is_matroid() {
        return precondition("threshold complexes start from a matroid");
    }
    let g = c.ground();
    let mut wt = [None; 32];
    for &(x, v) in weights {
        if !g.contains(x) {
            return invalid(format!("weight for label {x} outside ground"));
        }
        wt[x as usize] = Some(v);
    }
    if g.iter().any(|x| wt[x as usize].is_none()) {
        return invalid("every label needs a weight");
    }
    let weight = |s: Set| -> i64 { s.iter().map(|x| wt[x as usize].unwrap()).sum() };
    let mut sums: Vec<i64> = c.facets().iter().map(|&f| weight(f)).collect();
    sums.sort_unstable();
    if sums.windows(2).any(|p| p[0] == p[1]) {
        return invalid("weights are not generic: two facets tie");
    }
    let mut labels: Vec<Elem> = g.iter().collect();
    labels.sort_by_key(|&x| wt[x as usize].unwrap());
    if labels.windows(2).any(|p| wt[p[0] as usize] == wt[p[1] as usize]) {
        return invalid("weights are not generic: two labels tie");
    }
    let order = LinearOrder::new(labels)?;
    let keep = c.facets().iter().copied().filter(|&f| weight(f) <= bound).collect();
    OrderedComplex::new(order, keep)
}

/// Color-shifted with the given color classes, each carrying its own order.
pub fn is_color_shifted_given(c: &OrderedComplex, classes: &[LinearOrder]) -> Result<bool> {
    let mut seen = Set::EMPTY;
    for w in classes {
        if !seen.is_disjoint(w.ground()) {
            return invalid("color classes overlap");
        }
        seen = seen | w.ground();
    }
    if seen != c.ground() {
        return invalid("color classes must cover the ground set");
    }
    if c.is_void() {
        return Ok(false);
    }
    // w must shuffle the class orders
    if classes.iter().any(|w| c.order().restrict(w.ground()) != *w) {
        return Ok(false);
    }
    let palette: Vec<usize> = classes.iter().map(|w| (c.facets()[0] & w.ground()).len()).collect();
    for &f in c.facets() {
        for (w, &k) in classes.iter().zip(&palette) {
            if (f & w.ground()).len() != k {
                return Ok(false);
            }
        }
    }
    for &f in c.facets() {
        for w in classes {
            for y in (f & w.ground()).iter() {
                for x in (w.ground() - f).iter() {
                    if w.before(x, y) && !c.is_face(f.without(y).with(x)) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Every non-void shifted complex on `[n]` under the natural order.
pub fn all_shifted(n: usize) -> Result<Vec<OrderedComplex>> {
    if n > 6 {
        return invalid("shifted enumeration needs n ≤ 6");
    }
    // subsets of positions as masks, listed so that lower covers come first
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|&m| (m.count_ones(), (0..n).filter(|&i| m >> i & 1 == 1).sum::<usize>(), m));
    let covers: Vec<Vec<u32>> = (0..1u32 << n)
        .map(|m| {
            let mut c = Vec::new();
            for i in 0..n {
                if m >> i & 1 == 1 {
                    c.push(m & !(1 << i));
                    if i > 0 && m >> (i - 1) & 1 == 0 {
                        c.push(m & !(1 << i) | 1 << (i - 1));
                    }
                }
            }
            c
        })
        .collect();
    fn rec(masks: &[u32], covers: &[Vec<u32>], idx: usize, ideal: u64, out: &mut Vec<u64>) {
        if idx == masks.len() {
            out.push(ideal);
            return;
        }
        let m = masks[idx];
        rec(masks, covers, idx + 1, ideal, out);
        if covers[m as usize].iter().all(|&c| ideal >> c & 1 == 1) {
            rec(masks, covers, idx + 1, ideal | 1 << m, out);
        }
    }
    let mut ideals = Vec::new();
    rec(&masks, &covers, 1, 1, &mut ideals);
    let w = LinearOrder::identity(n);
    let to_set = |m: u32| -> Set { (0..n).filter(|&i| m >> i & 1 == 1).map(|i| (i + 1) as Elem).collect() };
    ideals
        .into_iter()
        .map(|ideal| {
            let faces: Vec<Set> = (0..1u32 << n).filter(|&m| ideal >> m & 1 == 1).map(to_set).collect();
            OrderedComplex::new(w.clone(), faces)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> Set {
        s.chars().map(|c| c.to_digit(16).unwrap() as Elem).collect()
    }

    #[test]
    fn shifted_ideal_example() {
        let e = LinearOrder::identity(4);
        let c = shifted_from_generators(&[set("14"), set("23")], &e).unwrap();
        assert_eq!(c, OrderedComplex::parse(4, &["12", "13", "14", "23"]));
        assert!(is_shifted(&c));
        assert!(!is_shifted(&OrderedComplex::parse(4, &["12", "34"])));
    }

    #[test]
    fn ferrers_partition() {
        // 2,3,5,8,9 in [11] <-> (4,4,2,1,1) read from the top
        let phi: Vec<usize> = vec![2, 3, 5, 8, 9];
        let part: Vec<usize> = phi.iter().enumerate().map(|(i, a)| a - (i + 1)).rev().collect();
        assert_eq!(part, vec![4, 4, 2, 1, 1]);
        let e = LinearOrder::identity(11);
        let c = shifted_from_generators(&[set("23589")], &e).unwrap();
        assert!(c.is_matroid());
        assert!(is_shifted(&c));
        // Gale ideal size equals Ferrers subdiagram count of (4,4,2,1,1) in a 5x6 box
        assert!(c.facets().len() > 1);
    }

    #[test]
    fn schubert_minor_closed_form() {
        let e = LinearOrder::identity(11);
        let c = shifted_from_generators(&[set("23589")], &e).unwrap();
        let general = c.interval_minor(2, 8).unwrap();
        let closed = schubert_interval_minor(set("23589"), 11, 2, 8).unwrap();
        assert_eq!(general, closed);
        assert_eq!(closed.facets().iter().max_by_key(|f| positions(**f, &e)).copied(), Some(set("3578")));
    }

    #[test]
    fn schubert_minor_sweep() {
        for n in 2..=7 {
            let e = LinearOrder::identity(n);
            for r in 1..n {
                for combo in (1..=n as Elem).combinations(r) {
                    let phi: Set = combo.into_iter().collect();
                    let c = shifted_from_generators(&[phi], &e).unwrap();
                    for s in 1..=r {
                        for t in r + 1..=n {
                            assert_eq!(
                                c.interval_minor(s, t).unwrap(),
                                schubert_interval_minor(phi, n, s, t).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hull_of_shifted_matroid_is_itself() {
        let e = LinearOrder::identity(6);
        let c = shifted_from_generators(&[set("245")], &e).unwrap();
        assert_eq!(matroid_hull(&c).unwrap(), c);
        let d = shifted_from_generators(&[set("14"), set("23")], &LinearOrder::identity(4)).unwrap();
        assert_eq!(matroid_hull(&d).unwrap().facets().len(), 5);
    }

    #[test]
    fn threshold_example() {
        let u24 = OrderedComplex::parse(4, &["12", "13", "14", "23", "24", "34"]);
        let t = threshold_complex(&u24, &[(1, 1), (2, 2), (3, 4), (4, 8)], 6).unwrap();
        assert_eq!(t.facets(), &[set("12"), set("13"), set("23")]);
        assert!(threshold_complex(&u24, &[(1, 1), (2, 2), (3, 3), (4, 4)], 6).is_err());
    }

    #[test]
    fn color_shifted_example() {
        // x1=1, y1=2, x2=3, y2=4
        let c = OrderedComplex::parse(4, &["13", "14", "23"]);
        let classes = [LinearOrder::parse("12"), LinearOrder::parse("34")];
        assert!(is_color_shifted_given(&c, &classes).unwrap());
        let single = [LinearOrder::identity(4)];
        for w in crate::orders::all_orders(c.ground()) {
            let cw = c.with_order(w.clone()).unwrap();
            assert!(!is_shifted(&cw));
            let one = [w];
            assert_eq!(is_color_shifted_given(&cw, &one).unwrap(), is_shifted(&cw));
        }
        let s = OrderedComplex::parse(4, &["12", "13", "14", "23"]);
        assert!(is_color_shifted_given(&s, &single).unwrap());
        // the complex is not the join of its colour pieces
        let a = c.restrict(set("12"));
        let b = c.restrict(set("34"));
        let j = super::super::join(&a, &b, c.order()).unwrap();
        assert_ne!(j, c);
    }

    #[test]
    fn coloop_loop_segments() {
        let e = LinearOrder::identity(6);
        for gens in [vec![set("125")], vec![set("134"), set("235")], vec![set("1234")]] {
            let c = shifted_from_generators(&gens, &e).unwrap();
            let (loops, coloops) = c.loops_coloops().unwrap();
            let a = coloops.len();
            assert_eq!(coloops, Set::interval(1, a as Elem));
            let z = 7 - loops.len();
            assert_eq!(loops, Set::interval(z as Elem, 6));
            let r = c.rank().unwrap();
            let prim = c.is_primitive();
            let twist = Set::interval(1, r as Elem - 1).with(6);
            assert_eq!(prim, c.is_facet(Set::interval(2, r as Elem + 1)) && c.is_facet(twist));
        }
    }

    #[test]
    fn shifted_enumeration_matches_filter() {
        for n in 1..=4 {
            let w = LinearOrder::identity(n);
            let mut want: Vec<OrderedComplex> = crate::complexes::all_complexes(Set::interval(1, n as Elem))
                .into_iter()
                .filter(|f| !f.is_empty())
                .map(|f| OrderedComplex::new(w.clone(), f).unwrap())
                .filter(is_shifted)
                .collect();
            let mut got = all_shifted(n).unwrap();
            want.sort();
            got.sort();
            assert_eq!(got, want, "n={n}");
        }
    }
}
