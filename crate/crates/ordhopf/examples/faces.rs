//! Face lattice of a hypersimplex with normal preposets.

use ordhopf::polyhedra::{all_faces, face_counts, hypersimplex, hypersimplex_face_counts};

fn main() -> ordhopf::Result<()> {
    let p = hypersimplex(4, 2)?;
    println!("D(4,2) = {p}");
    for f in all_faces(&p)? {
        println!("  dim {} {}  normal {}", f.dim, f.poly, f.normal);
    }
    let counts = face_counts(&p)?;
    assert_eq!(counts, hypersimplex_face_counts(4, 2)?);
    println!("f-vector {counts:?}");
    Ok(())
}
