//! Random search for antipode coefficients of absolute value at least 2.

use ordhopf::hopf::verify::multiplicity_scan;

fn main() -> ordhopf::Result<()> {
    let scan = multiplicity_scan(2000, 6, 7)?;
    println!("scanned {} prefix-pure complexes, max |coeff| = {}", scan.scanned, scan.max_abs);
    for (x, k, c) in scan.witnesses.iter().take(5) {
        println!("  {x}: {c:+} at {k}");
    }
    Ok(())
}
