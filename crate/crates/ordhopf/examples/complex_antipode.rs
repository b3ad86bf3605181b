//! Antipode of a facet-initial complex three ways: Takeuchi's alternating sum,
//! the facet-initial formula and its cancellation-free regrouping.

use ordhopf::hopf::pre::{
    antipode_facet_initial, antipode_facet_initial_cf, antipode_facet_initial_cf_terms, is_cancellation_free,
    takeuchi_antipode_complex,
};
use ordhopf::OrderedComplex;

fn main() -> ordhopf::Result<()> {
    let x = OrderedComplex::parse(4, &["12", "13", "23", "14"]);
    let s = takeuchi_antipode_complex(&x)?;
    println!("S({x}) has {} terms", s.len());
    for (k, c) in s.iter() {
        println!("  {c:+} {k}");
    }
    assert_eq!(s, antipode_facet_initial(&x)?);
    assert_eq!(s, antipode_facet_initial_cf(&x)?);
    let raw = antipode_facet_initial_cf_terms(&x)?;
    println!("regrouped formula: {} raw terms, cancellation-free = {}", raw.len(), is_cancellation_free(&raw));
    Ok(())
}
