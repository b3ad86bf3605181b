//! One status line per acceptance criterion.
//!
//! `cargo test --test acceptance` runs criteria 1-9 and 11;
//! `cargo test --release --test acceptance -- --long` adds the Ziegler count.

use std::process::ExitCode;
use std::time::Instant;

use ordhopf::cli::{golden, symmetrization_cases, ziegler};
use ordhopf::hopf::ogp::{ogp_antipode, takeuchi_antipode_ogp};
use ordhopf::hopf::verify::{self, Verdict};
use ordhopf::polyhedra::{example_cone, example_ray, example_segment, face_counts, hypersimplex};
use ordhopf::LinearOrder;

const SEED: u64 = 2024;

enum Status {
    Pass(String),
    Fail(String),
    /// Everything computable agrees with the brute force, but a stated value differs.
    Deviation(String),
    Skipped(String),
}

type Outcome = Result<Status, String>;

fn from(v: Verdict, detail: String) -> Status {
    match v {
        Verdict::Pass => Status::Pass(detail),
        Verdict::Fail(m) => Status::Fail(m),
    }
}

fn all(vs: Vec<Verdict>) -> Verdict {
    Verdict::all(vs)
}

fn c1() -> Outcome {
    let (n, v) = verify::exhaustive_facet_initial(5).map_err(|e| e.to_string())?;
    Ok(from(v, format!("{n} facet-initial complexes on at most 5 vertices")))
}

fn c2() -> Outcome {
    let (n, v) = verify::exhaustive_shifted_primitive(6).map_err(|e| e.to_string())?;
    Ok(from(v, format!("{n} shifted primitive complexes on at most 6 vertices")))
}

fn c3() -> Outcome {
    let mut vs = Vec::new();
    for n in 2..=5 {
        vs.push(verify::family_oracle("hypersimplex", n).map_err(|e| e.to_string())?);
        vs.push(verify::family_oracle("star", n).map_err(|e| e.to_string())?);
    }
    for p in [example_segment(), example_ray(), example_cone()] {
        vs.push(verify::polyhedron_oracle(&p).map_err(|e| e.to_string())?);
    }
    Ok(from(all(vs), "hypersimplices and star zonotopes n <= 5, segment, ray, cone".into()))
}

fn c4() -> Outcome {
    let table = golden::segment_table().map_err(|e| e.to_string())?;
    if table != golden::SEGMENT_TABLE {
        return Ok(Status::Fail(format!("segment table differs from fixture:\n{table}")));
    }
    let support = golden::hypersimplex_support().map_err(|e| e.to_string())?.len();
    if support != 5 {
        return Ok(Status::Fail(format!("support of S(1234 x D(4,2)) has {support} faces")));
    }
    let p = example_cone();
    let w = LinearOrder::parse("1234");
    let closed = ogp_antipode(&w, &p).map_err(|e| e.to_string())?;
    let brute = takeuchi_antipode_ogp(&w, &p).map_err(|e| e.to_string())?;
    let vertex = closed.keys().map(|k| k.1.clone()).find(|q| q.is_point()).unwrap();
    let coeff = |u: &str| {
        let key = (LinearOrder::parse(u), vertex.clone());
        (closed.coeff(&key), brute.coeff(&key))
    };
    let (a, b) = (coeff("2314"), coeff("4312"));
    if a.0 != a.1 || b.0 != b.1 || a.0.abs() != 1 || a.0 != -b.0 {
        return Ok(Status::Fail(format!("cone coefficients closed/brute: 2314 {a:?}, 4312 {b:?}")));
    }
    let detail = format!(
        "segment table exact, support 5 faces; cone 2314 -> {:+}, 4312 -> {:+} (stated +1, -1)",
        a.0, b.0
    );
    Ok(if (a.0, b.0) == (1, -1) { Status::Pass(detail) } else { Status::Deviation(detail) })
}

fn c5() -> Outcome {
    let cases = symmetrization_cases().map_err(|e| e.to_string())?;
    let mut vs = Vec::new();
    for (_, p) in &cases {
        vs.push(verify::symmetrization_identity(p).map_err(|e| e.to_string())?);
    }
    let names: Vec<&str> = cases.iter().map(|c| c.0).collect();
    Ok(from(all(vs), names.join(", ")))
}

fn c6() -> Outcome {
    let e = |r: ordhopf::Result<Verdict>| r.map_err(|e| e.to_string());
    let vs = vec![
        e(verify::suite_defining(200, 5, SEED))?,
        e(verify::suite_involution(200, 5, SEED))?,
        e(verify::suite_coassociativity(200, 6, SEED))?,
        e(verify::suite_compatibility(200, 6, SEED))?,
    ];
    Ok(from(all(vs), "200 samples each: defining, involution, coassociativity, compatibility".into()))
}

fn c7() -> Outcome {
    let (k, v1) = verify::scrope_exhaustive(8).map_err(|e| e.to_string())?;
    let v2 = verify::scrope_random(1000, 14, SEED).map_err(|e| e.to_string())?;
    let (s6, v3) = verify::spider_scrope(6, false).map_err(|e| e.to_string())?;
    let (s4, v4) = verify::spider_scrope(4, true).map_err(|e| e.to_string())?;
    Ok(from(
        all(vec![v1, v2, v3, v4]),
        format!("{k} interval lists k <= 8, 1000 random k <= 14, {} spider cases", s6 + s4),
    ))
}

fn c8() -> Outcome {
    let (n, v) = verify::matroid_link_equivalence(5).map_err(|e| e.to_string())?;
    Ok(from(v, format!("{n} complexes on at most 5 vertices")))
}

fn c9() -> Outcome {
    let v1 = verify::suite_naturalization(500, 6, SEED).map_err(|e| e.to_string())?;
    let v2 = verify::hypersimplex_counts(6).map_err(|e| e.to_string())?;
    let d42 = face_counts(&hypersimplex(4, 2).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    if d42 != [6, 12, 8, 1] {
        return Ok(Status::Fail(format!("face counts of D(4,2): {d42:?}")));
    }
    Ok(from(all(vec![v1, v2]), "500 random preposets; f-vectors for 2 <= n <= 6".into()))
}

fn c10(long: bool) -> Outcome {
    if !long {
        return Ok(Status::Skipped("pass --long".into()));
    }
    let text = ordhopf::cli::io::parse_text(ziegler::ZIEGLER_BALL).map_err(|e| e.to_string())?;
    let ordhopf::cli::io::Input::Complex(z) = text else {
        return Err("fixture is not a complex".into());
    };
    let pruned = ziegler::count_pruned(&z);
    let full = ziegler::count_exhaustive(&z);
    let detail = format!("pruned {pruned}, exhaustive {full}");
    Ok(if pruned == 6528 && full == 6528 { Status::Pass(detail) } else { Status::Fail(detail) })
}

fn c11() -> Outcome {
    let scan = verify::multiplicity_scan(10_000, 6, SEED).map_err(|e| e.to_string())?;
    let mut detail = format!(
        "{} complexes scanned, max |coeff| = {}, {} coefficients with |coeff| >= 2",
        scan.scanned,
        scan.max_abs,
        scan.witnesses.len()
    );
    if let Some((x, k, c)) = scan.witnesses.first() {
        detail.push_str(&format!("; first: {} has {c:+} at {}", x.key(), k.key()));
    }
    Ok(Status::Pass(detail))
}

fn main() -> ExitCode {
    let long = std::env::args().any(|a| a == "--long") || std::env::var_os("ORDHOPF_LONG").is_some();
    let criteria: Vec<(usize, &str, Box<dyn Fn() -> Outcome>)> = vec![
        (1, "facet-initial formula equals Takeuchi", Box::new(c1)),
        (2, "regrouped formulas are cancellation-free", Box::new(c2)),
        (3, "closed OGP formula equals album brute force", Box::new(c3)),
        (4, "worked tables", Box::new(c4)),
        (5, "symmetrized antipode", Box::new(c5)),
        (6, "Hopf axioms", Box::new(c6)),
        (7, "Scrope Euler characteristics", Box::new(c7)),
        (8, "matroids are the link-invariant complexes", Box::new(c8)),
        (9, "naturalization albums and hypersimplex f-vectors", Box::new(c9)),
        (10, "Ziegler ball prefix-pure orders", Box::new(move || c10(long))),
        (11, "multiplicity scan", Box::new(c11)),
    ];
    let mut failed = 0;
    for (i, name, f) in criteria {
        let t = Instant::now();
        let outcome = f();
        let secs = t.elapsed().as_secs_f64();
        let (tag, detail) = match outcome {
            Ok(Status::Pass(d)) => ("PASS", d),
            Ok(Status::Deviation(d)) => ("DEVIATION", d),
            Ok(Status::Skipped(d)) => ("SKIPPED", d),
            Ok(Status::Fail(d)) => {
                failed += 1;
                ("FAIL", d)
            }
            Err(e) => {
                failed += 1;
                ("ERROR", e)
            }
        };
        println!("criterion {i:>2} {tag:<9} {name}: {detail} [{secs:.1}s]");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
