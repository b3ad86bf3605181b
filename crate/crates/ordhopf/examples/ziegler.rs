//! Orders under which Ziegler's non-shellable ball is prefix-pure.
//!
//! `cargo run --release --example ziegler`

use ordhopf::cli::io::{parse_text, Input};
use ordhopf::cli::ziegler::{count_pruned, ZIEGLER_BALL};

fn main() {
    let Ok(Input::Complex(z)) = parse_text(ZIEGLER_BALL) else {
        panic!("bundled fixture is a complex");
    };
    println!("{} facets on {} vertices", z.facets().len(), z.n());
    println!("prefix-pure orders: {}", count_pruned(&z));
}
