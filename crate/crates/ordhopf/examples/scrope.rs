//! Scrope complexes: homotopy type and reduced Euler characteristic.

use ordhopf::ScropeComplex;

fn main() -> ordhopf::Result<()> {
    let cases = [
        (4, vec![(1, 2), (3, 4)]),
        (5, vec![(1, 3), (2, 4), (3, 5)]),
        (7, vec![(1, 3), (2, 4), (3, 6), (4, 7)]),
    ];
    for (k, z) in cases {
        let s = ScropeComplex::new(k, z)?;
        println!("{s}");
        for row in s.diagram() {
            println!("  {row}");
        }
        println!("  {:?}, reduced Euler characteristic {}", s.homotopy(), s.reduced_euler());
        assert_eq!(s.reduced_euler(), s.reduced_euler_bruteforce()?);
    }
    Ok(())
}
