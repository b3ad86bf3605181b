//! Shifted complexes from Gale generators and their antipodes.

use ordhopf::complexes::{all_shifted, shifted_from_generators};
use ordhopf::hopf::pre::{antipode_shifted_cf, antipode_shifted_cf_terms, is_cancellation_free, takeuchi_antipode_complex};
use ordhopf::{LinearOrder, Set};

fn main() -> ordhopf::Result<()> {
    let w = LinearOrder::parse("12345");
    let gen: Set = [2, 4, 5].into_iter().collect();
    let x = shifted_from_generators(&[gen], &w)?;
    println!("generated by 245: {x}");
    let s = antipode_shifted_cf(&x)?;
    assert_eq!(s, takeuchi_antipode_complex(&x)?);
    for (k, c) in s.iter() {
        println!("  {c:+} {k}");
    }
    println!("cancellation-free: {}", is_cancellation_free(&antipode_shifted_cf_terms(&x)?));

    for n in 1..=6 {
        let all = all_shifted(n)?;
        let pp = all.iter().filter(|c| c.is_prefix_pure()).count();
        println!("n={n}: {} shifted complexes, {pp} prefix-pure", all.len());
    }
    Ok(())
}
