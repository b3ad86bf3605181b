//! Counting the orders under which a fixed complex is prefix-pure.

use itertools::Itertools;
use rayon::prelude::*;

use crate::complexes::OrderedComplex;
use crate::set::{Elem, Set};

pub const ZIEGLER_BALL: &str = include_str!("../../fixtures/ziegler_ball.json");

/// `Γ|_A` is pure: every trace `F ∩ A` lies in a trace of maximum size.
fn restriction_is_pure(facets: &[Set], a: Set) -> bool {
    let traces: Vec<Set> = facets.iter().map(|&f| f & a).collect();
    let top = traces.iter().map(|t| t.len()).max().unwrap_or(0);
    traces
        .iter()
        .all(|t| t.len() == top || traces.iter().any(|m| m.len() == top && t.is_subset(*m)))
}

fn order_is_prefix_pure(facets: &[Set], seq: &[Elem]) -> bool {
    let mut a = Set::EMPTY;
    seq.iter().all(|&x| {
        a = a.with(x);
        restriction_is_pure(facets, a)
    })
}

/// Every order tested in full, bucketed by its first two labels.
pub fn count_exhaustive(c: &OrderedComplex) -> u64 {
    let ground: Vec<Elem> = c.ground().iter().collect();
    let facets = c.facets().to_vec();
    let heads: Vec<(Elem, Elem)> = ground.iter().copied().tuple_combinations().flat_map(|(x, y)| [(x, y), (y, x)]).collect();
    if ground.len() < 2 {
        return u64::from(order_is_prefix_pure(&facets, &ground));
    }
    heads
        .par_iter()
        .map(|&(x, y)| {
            let rest: Vec<Elem> = ground.iter().copied().filter(|&z| z != x && z != y).collect();
            let k = rest.len();
            rest.into_iter()
                .permutations(k)
                .filter(|tail| {
                    let mut seq = vec![x, y];
                    seq.extend(tail);
                    order_is_prefix_pure(&facets, &seq)
                })
                .count() as u64
        })
        .sum()
}

fn extend(facets: &[Set], ground: Set, prefix: Set, remaining: usize) -> u64 {
    if remaining == 0 {
        return 1;
    }
    (ground - prefix)
        .iter()
        .filter(|&x| restriction_is_pure(facets, prefix.with(x)))
        .map(|x| extend(facets, ground, prefix.with(x), remaining - 1))
        .sum()
}

/// Depth-first over prefixes, dropping every extension of an impure prefix;
/// one parallel bucket per first label.
pub fn count_pruned(c: &OrderedComplex) -> u64 {
    let ground = c.ground();
    let facets = c.facets().to_vec();
    let n = ground.len();
    if n == 0 {
        return 1;
    }
    ground
        .iter()
        .collect::<Vec<_>>()
        .par_iter()
        .filter(|&&x| restriction_is_pure(&facets, Set::singleton(x)))
        .map(|&x| extend(&facets, ground, Set::singleton(x), n - 1))
        .sum()
}
