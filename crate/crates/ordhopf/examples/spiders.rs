//! Hypersimplex and star zonotope antipodes from spider compositions.

use ordhopf::hopf::ogp::ogp_antipode;
use ordhopf::hopf::special::{hypersimplex_antipode, permutohedron_antipode, spider_compositions, star_zonotope_antipode};
use ordhopf::polyhedra::{hypersimplex, standard_permutohedron, star_zonotope};
use ordhopf::LinearOrder;

fn main() -> ordhopf::Result<()> {
    let w = LinearOrder::parse("1234");
    let (d, b) = spider_compositions(&w, 1, 2)?;
    println!("spider (1,2) on {w}: D={d} B={b}");

    let s = hypersimplex_antipode(&w, 4, 2)?;
    assert_eq!(s, ogp_antipode(&w, &hypersimplex(4, 2)?)?);
    println!("S({w} x D(4,2)) has {} terms", s.len());
    for ((u, q), c) in s.iter() {
        println!("  {c:+} {u} x {q}");
    }

    let z = star_zonotope_antipode(&w, 4, 2)?;
    assert_eq!(z, ogp_antipode(&w, &star_zonotope(4, 2)?)?);
    println!("S({w} x star(4,2)) has {} terms", z.len());

    let p = permutohedron_antipode(&w)?;
    assert_eq!(p, ogp_antipode(&w, &standard_permutohedron(4)?)?);
    println!("S({w} x Pi(4)) has {} terms", p.len());
    Ok(())
}
