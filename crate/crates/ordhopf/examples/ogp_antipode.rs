//! Closed antipode formula on ordered polyhedra, term by term.

use ordhopf::hopf::ogp::{ogp_antipode, ogp_antipode_terms, takeuchi_antipode_ogp};
use ordhopf::polyhedra::{example_cone, example_segment};
use ordhopf::LinearOrder;

fn main() -> ordhopf::Result<()> {
    for (w, p) in [("132", example_segment()), ("1234", example_cone())] {
        let w = LinearOrder::parse(w);
        println!("S({w} x {p})");
        for t in ogp_antipode_terms(&w, &p)? {
            println!("  {:?} {:+} {} x {}", t.chi, t.coeff, t.order, t.face);
        }
        assert_eq!(ogp_antipode(&w, &p)?, takeuchi_antipode_ogp(&w, &p)?);
    }
    Ok(())
}
