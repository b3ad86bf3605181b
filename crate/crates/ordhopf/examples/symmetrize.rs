//! Antipode of the sum over all orders of a polytope.

use ordhopf::hopf::ogp::{symmetrize, symmetrized_antipode};
use ordhopf::hopf::verify::symmetrization_identity;
use ordhopf::polyhedra::hypersimplex;

fn main() -> ordhopf::Result<()> {
    let p = hypersimplex(4, 2)?;
    println!("{} orders in the symmetrization of {p}", symmetrize(&p).len());
    let s = symmetrized_antipode(&p)?;
    println!("antipode has {} terms", s.len());
    for ((u, q), c) in s.iter().take(12) {
        println!("  {c:+} {u} x {q}");
    }
    println!("identity holds: {}", symmetrization_identity(&p)?.is_pass());
    Ok(())
}
