//! Structural predicates of a few small ordered complexes.

use ordhopf::complexes::is_shifted;
use ordhopf::OrderedComplex;

fn main() {
    let samples = [
        ("upsilon", OrderedComplex::parse(4, &["12", "13", "23", "14"])),
        ("uniform U(2,4)", OrderedComplex::parse(4, &["12", "13", "14", "23", "24", "34"])),
        ("two triangles", OrderedComplex::parse(5, &["123", "145"])),
        ("edge + point", OrderedComplex::parse(3, &["12", "3"])),
    ];
    for (name, c) in samples {
        println!("{name}: {c}");
        println!(
            "  pure={} prefix-pure={} facet-initial={} matroid={} shifted={} primitive={}",
            c.is_pure(),
            c.is_prefix_pure(),
            c.is_facet_initial(),
            c.is_matroid(),
            is_shifted(&c),
            c.is_primitive()
        );
        println!("  reduced Euler characteristic {}", c.reduced_euler());
    }
}
