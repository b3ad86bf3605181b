//! The `ordhopf` command line: argument parsing, dispatch and rendering.
//!
//! Exit codes: 0 success, 1 a verification found a counterexample, 2 bad input.

pub mod golden;
pub mod io;
pub mod ziegler;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::complexes::{is_bc_representable, is_shifted, is_strongly_lex_shellable, BcVerdict, OrderedComplex};
use crate::hopf::ogp::{ogp_antipode, takeuchi_antipode_ogp};
use crate::hopf::pre::{
    antipode_facet_initial, antipode_facet_initial_cf, antipode_shifted_cf, takeuchi_antipode_complex,
};
use crate::hopf::special::{hypersimplex_antipode, permutohedron_antipode, star_zonotope_antipode};
use crate::hopf::verify::{self, Verdict};
use crate::orders::LinearOrder;
use crate::polyhedra::{
    all_faces, bounded_orders, example_cone, example_ray, example_segment, hypersimplex,
    hypersimplex_face_counts, indicator_complex, indicator_polytope, reverse_bounded_orders, standard_permutohedron,
    LatticePolyhedron,
};
use crate::scrope::ScropeComplex;
use io::Input;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Compute(#[from] crate::error::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Takeuchi,
    FacetInitial,
    FacetInitialCf,
    Shifted,
    Ogp,
    Hypersimplex,
    Permutohedron,
    Star,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Defining,
    Involution,
    Coassociativity,
    Compatibility,
    Symmetrize,
    Oracle,
    Scrope,
    Naturalization,
    Multiplicity,
    Ziegler,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Hypersimplex,
    Star,
    Permutohedron,
    Complexes,
    Shifted,
    Examples,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Golden {
    SegmentTable,
    Cone,
    Support,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Exhaustive,
    Pruned,
}

#[derive(Debug, Parser)]
#[command(name = "ordhopf", version, about = "Antipodes of ordered complexes and ordered generalized permutohedra")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Worker threads; output does not depend on it.
    #[arg(long, global = true)]
    pub parallel: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Predicate table for an ordered complex.
    Classify {
        #[arg(long)]
        input: String,
        #[arg(long)]
        order: Option<String>,
    },
    /// Antipode of a basis element.
    Antipode {
        #[arg(long)]
        input: Option<String>,
        #[arg(long)]
        order: Option<String>,
        #[arg(long, value_enum, default_value = "takeuchi")]
        method: Method,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
    },
    /// Faces of a polyhedron with their normal preposets.
    Faces {
        #[arg(long)]
        input: String,
    },
    /// Incidence table and reduced Euler characteristic of a Scrope complex.
    Scrope {
        #[arg(long)]
        k: usize,
        /// Comma-separated `x:y` pairs.
        #[arg(long, default_value = "")]
        intervals: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, value_enum)]
        family: Option<Family>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long)]
        long: bool,
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum, default_value = "pruned")]
        strategy: Strategy,
    },
    /// Reproduce a worked example and compare with its fixture.
    Golden {
        #[arg(value_enum)]
        name: Golden,
        /// Compare against this file instead of the built-in fixture.
        #[arg(long)]
        fixture: Option<String>,
    },
    /// Vertices and face counts of `Δ(n, r)`.
    Hypersimplex { n: usize, r: usize },
    /// Orders `w` for which the polyhedron has a vertex at `W`.
    BoundedOrders {
        #[arg(long)]
        input: String,
        /// Use the reversed convention.
        #[arg(long)]
        reverse: bool,
    },
    /// Indicator polytope of a complex, or indicator complex of a 0/1 polyhedron.
    Indicator {
        #[arg(long)]
        input: String,
        #[arg(long)]
        order: Option<String>,
    },
}

/// Text (or JSON) to print, and whether every check passed.
pub struct Report {
    pub text: String,
    pub passed: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, passed: true }
    }
}

/// Parse, run, print; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(r) => {
            print!("{}", r.text);
            if r.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match cli.parallel {
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| CliError::Input(format!("--parallel: {e}")))?;
            pool.install(|| dispatch(cli))
        }
        None => dispatch(cli),
    }
}

fn render(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value).unwrap() + "\n",
    }
}

fn need_complex(input: Input) -> Result<OrderedComplex, CliError> {
    match input {
        Input::Complex(c) => Ok(c),
        Input::Polyhedron(..) => Err(CliError::Input("expected a complex (`facets`)".into())),
    }
}

fn need_polyhedron(input: Input) -> Result<(LatticePolyhedron, Option<LinearOrder>), CliError> {
    match input {
        Input::Polyhedron(p, w) => Ok((p, w)),
        Input::Complex(_) => Err(CliError::Input("expected a polyhedron (`vertices`)".into())),
    }
}

fn with_flag_order(c: OrderedComplex, order: &Option<String>) -> Result<OrderedComplex, CliError> {
    match order {
        Some(o) => Ok(c.with_order(io::order_from_flag(o)?)?),
        None => Ok(c),
    }
}

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Classify { input, order } => classify(f, with_flag_order(need_complex(io::read_input(input)?)?, order)?),
        Command::Antipode { input, order, method, n, r, c } => antipode(f, input, order, *method, *n, *r, *c),
        Command::Faces { input } => {
            let (p, _) = need_polyhedron(io::read_input(input)?)?;
            let faces = all_faces(&p)?;
            let text: String =
                faces.iter().map(|q| format!("dim {}  {}  normal {}\n", q.dim, q.poly.key(), q.normal)).collect();
            let value = json!({ "faces": faces.iter().map(io::face_json).collect::<Vec<_>>() });
            Ok(Report::ok(render(f, text, value)))
        }
        Command::Scrope { k, intervals } => scrope(f, *k, intervals),
        Command::Verify { suite, family, n, samples, seed, long, input, strategy } => {
            verify_suite(f, *suite, *family, *n, *samples, *seed, *long, input, *strategy)
        }
        Command::Golden { name, fixture } => golden_cmd(*name, fixture),
        Command::Hypersimplex { n, r } => {
            let p = hypersimplex(*n, *r)?;
            let counts = hypersimplex_face_counts(*n, *r)?;
            let text = format!(
                "{} vertices\nface counts {:?}\n{}\n",
                p.vertices().len(),
                counts,
                p.key()
            );
            let value = json!({ "polyhedron": io::polyhedron_json(&p), "face_counts": counts });
            Ok(Report::ok(render(f, text, value)))
        }
        Command::BoundedOrders { input, reverse } => {
            let (p, _) = need_polyhedron(io::read_input(input)?)?;
            let ws = if *reverse { reverse_bounded_orders(&p) } else { bounded_orders(&p) };
            let text: String = ws.iter().map(|w| format!("{w}\n")).collect();
            let value = json!({ "orders": ws.iter().map(io::order_json).collect::<Vec<_>>() });
            Ok(Report::ok(render(f, text, value)))
        }
        Command::Indicator { input, order } => match io::read_input(input)? {
            Input::Complex(c) => {
                let p = indicator_polytope(&with_flag_order(c, order)?)?;
                Ok(Report::ok(render(f, format!("{}\n", p.key()), io::polyhedron_json(&p))))
            }
            Input::Polyhedron(p, w) => {
                let w = match (order, w) {
                    (Some(o), _) => io::order_from_flag(o)?,
                    (None, Some(w)) => w,
                    (None, None) => LinearOrder::natural(p.ground()),
                };
                let c = indicator_complex(&p, &w)?;
                Ok(Report::ok(render(f, format!("{}\n", c.key()), io::complex_json(&c))))
            }
        },
    }
}

fn classify(f: Format, c: OrderedComplex) -> Result<Report, CliError> {
    let w = c.order().to_string();
    let bc = match is_bc_representable(&c) {
        BcVerdict::Yes => "true",
        BcVerdict::No => "false",
        BcVerdict::Skipped => "skipped",
    };
    let sls = is_strongly_lex_shellable(&c).unwrap_or(false);
    let rows: Vec<(String, String)> = vec![
        ("pure".into(), c.is_pure().to_string()),
        (format!("prefix-pure({w})"), c.is_prefix_pure().to_string()),
        (format!("shifted({w})"), is_shifted(&c).to_string()),
        ("matroid".into(), c.is_matroid().to_string()),
        (format!("SLS({w})"), sls.to_string()),
        (format!("facet-initial({w})"), c.is_facet_initial().to_string()),
        (format!("BC-representable({w})"), bc.to_string()),
    ];
    let text: String = rows.iter().map(|(k, v)| format!("{k}={v}\n")).collect();
    let value = json!({
        "order": io::order_json(c.order()),
        "pure": c.is_pure(),
        "prefix_pure": c.is_prefix_pure(),
        "shifted": is_shifted(&c),
        "matroid": c.is_matroid(),
        "sls": sls,
        "facet_initial": c.is_facet_initial(),
        "bc_representable": bc,
    });
    Ok(Report::ok(render(f, text, value)))
}

fn antipode(
    f: Format,
    input: &Option<String>,
    order: &Option<String>,
    method: Method,
    n: Option<usize>,
    r: Option<usize>,
    c: Option<usize>,
) -> Result<Report, CliError> {
    let need = |x: Option<usize>, name: &str| x.ok_or_else(|| CliError::Input(format!("--{name} is required")));
    let family_order = |n: usize| -> Result<LinearOrder, CliError> {
        match order {
            Some(o) => io::order_from_flag(o),
            None => Ok(LinearOrder::identity(n)),
        }
    };
    let complex_sum = |s: crate::hopf::FormalSum<OrderedComplex>| {
        Report::ok(render(f, s.table(), io::complex_sum_json(&s)))
    };
    let ogp_sum = |s: crate::hopf::FormalSum<crate::hopf::OgpTerm>| {
        Report::ok(render(f, s.table(), io::ogp_sum_json(&s)))
    };
    match method {
        Method::Hypersimplex => {
            let n = need(n, "n")?;
            Ok(ogp_sum(hypersimplex_antipode(&family_order(n)?, n, need(r, "r")?)?))
        }
        Method::Permutohedron => {
            let n = need(n, "n")?;
            Ok(ogp_sum(permutohedron_antipode(&family_order(n)?)?))
        }
        Method::Star => {
            let n = need(n, "n")?;
            Ok(ogp_sum(star_zonotope_antipode(&family_order(n)?, n, need(c, "c")?)?))
        }
        _ => {
            let path = input.as_ref().ok_or_else(|| CliError::Input("--input is required".into()))?;
            match io::read_input(path)? {
                Input::Complex(x) => {
                    let x = with_flag_order(x, order)?;
                    let s = match method {
                        Method::Takeuchi => takeuchi_antipode_complex(&x)?,
                        Method::FacetInitial => antipode_facet_initial(&x)?,
                        Method::FacetInitialCf => antipode_facet_initial_cf(&x)?,
                        Method::Shifted => antipode_shifted_cf(&x)?,
                        _ => return Err(CliError::Input("this method needs a polyhedron".into())),
                    };
                    Ok(complex_sum(s))
                }
                Input::Polyhedron(p, w) => {
                    let w = match (order, w) {
                        (Some(o), _) => io::order_from_flag(o)?,
                        (None, Some(w)) => w,
                        (None, None) => return Err(CliError::Input("a polyhedron needs an order".into())),
                    };
                    let s = match method {
                        Method::Takeuchi => takeuchi_antipode_ogp(&w, &p)?,
                        Method::Ogp => ogp_antipode(&w, &p)?,
                        _ => return Err(CliError::Input("this method needs a complex".into())),
                    };
                    Ok(ogp_sum(s))
                }
            }
        }
    }
}

fn parse_intervals(text: &str) -> Result<Vec<(usize, usize)>, CliError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            let (x, y) = s
                .split_once(':')
                .ok_or_else(|| CliError::Input(format!("interval {s:?} is not `x:y`")))?;
            let p = |t: &str| t.trim().parse::<usize>().map_err(|_| CliError::Input(format!("bad interval {s:?}")));
            Ok((p(x)?, p(y)?))
        })
        .collect()
}

fn scrope(f: Format, k: usize, intervals: &str) -> Result<Report, CliError> {
    let s = ScropeComplex::new(k, parse_intervals(intervals)?)?;
    let header: String = (1..k).map(|j| j.to_string()).collect::<Vec<_>>().join(" ");
    let mut text = format!("{s}\n{header}\n");
    for row in s.diagram() {
        text.push_str(&row);
        text.push('\n');
    }
    let e = s.reduced_euler();
    text.push_str(&format!("reduced Euler characteristic {e}\n"));
    let value = json!({ "k": k, "intervals": s.pairs(), "diagram": s.diagram(), "reduced_euler": e });
    Ok(Report::ok(render(f, text, value)))
}

fn verdict_report(f: Format, name: &str, checked: Option<usize>, v: Verdict) -> Report {
    let (passed, detail) = match &v {
        Verdict::Pass => (true, String::new()),
        Verdict::Fail(m) => (false, m.clone()),
    };
    let mut text = format!("{name}: {}", if passed { "pass" } else { "FAIL" });
    if let Some(c) = checked {
        text.push_str(&format!(" ({c} cases)"));
    }
    text.push('\n');
    if !passed {
        text.push_str(&format!("counterexample: {detail}\n"));
    }
    let value = json!({ "suite": name, "passed": passed, "cases": checked, "counterexample": detail });
    Report { text: render(f, text, value), passed }
}

#[allow(clippy::too_many_arguments)]
fn verify_suite(
    f: Format,
    suite: Suite,
    family: Option<Family>,
    n: Option<usize>,
    samples: Option<usize>,
    seed: u64,
    long: bool,
    input: &Option<String>,
    strategy: Strategy,
) -> Result<Report, CliError> {
    let samples_or = |d: usize| samples.unwrap_or(d);
    Ok(match suite {
        Suite::Defining => {
            verdict_report(f, "defining", Some(samples_or(200)), verify::suite_defining(samples_or(200), n.unwrap_or(5), seed)?)
        }
        Suite::Involution => verdict_report(
            f,
            "involution",
            Some(samples_or(200)),
            verify::suite_involution(samples_or(200), n.unwrap_or(5), seed)?,
        ),
        Suite::Coassociativity => verdict_report(
            f,
            "coassociativity",
            Some(samples_or(200)),
            verify::suite_coassociativity(samples_or(200), n.unwrap_or(6), seed)?,
        ),
        Suite::Compatibility => verdict_report(
            f,
            "compatibility",
            Some(samples_or(200)),
            verify::suite_compatibility(samples_or(200), n.unwrap_or(6), seed)?,
        ),
        Suite::Symmetrize => {
            let polys = symmetrization_cases()?;
            let mut vs = Vec::new();
            for (_, p) in &polys {
                vs.push(verify::symmetrization_identity(p)?);
            }
            verdict_report(f, "symmetrize", Some(polys.len()), Verdict::all(vs))
        }
        Suite::Oracle => {
            let family = family.ok_or_else(|| CliError::Input("--family is required".into()))?;
            let n = n.unwrap_or(4);
            match family {
                Family::Hypersimplex => verdict_report(f, "oracle hypersimplex", None, verify::family_oracle("hypersimplex", n)?),
                Family::Star => verdict_report(f, "oracle star", None, verify::family_oracle("star", n)?),
                Family::Permutohedron => {
                    verdict_report(f, "oracle permutohedron", None, verify::family_oracle("permutohedron", n)?)
                }
                Family::Complexes => {
                    let (c, v) = verify::exhaustive_facet_initial(n)?;
                    verdict_report(f, "oracle complexes", Some(c), v)
                }
                Family::Shifted => {
                    let (c, v) = verify::exhaustive_shifted_primitive(n)?;
                    verdict_report(f, "oracle shifted", Some(c), v)
                }
                Family::Examples => {
                    let mut vs = Vec::new();
                    for p in [example_segment(), example_ray(), example_cone()] {
                        vs.push(verify::polyhedron_oracle(&p)?);
                    }
                    verdict_report(f, "oracle examples", Some(3), Verdict::all(vs))
                }
            }
        }
        Suite::Scrope => {
            let (c, v) = verify::scrope_exhaustive(n.unwrap_or(8))?;
            let r = verify::scrope_random(samples_or(1000), 14, seed)?;
            let (sc, sv) = verify::spider_scrope(6, false)?;
            verdict_report(f, "scrope", Some(c + samples_or(1000) + sc), Verdict::all([v, r, sv]))
        }
        Suite::Naturalization => verdict_report(
            f,
            "naturalization",
            Some(samples_or(500)),
            verify::suite_naturalization(samples_or(500), n.unwrap_or(6), seed)?,
        ),
        Suite::Multiplicity => {
            let scan = verify::multiplicity_scan(samples_or(10_000), n.unwrap_or(6), seed)?;
            let mut text = format!(
                "multiplicity: scanned {} complexes, max |coeff| = {}, {} coefficients with |coeff| >= 2\n",
                scan.scanned,
                scan.max_abs,
                scan.witnesses.len()
            );
            for (x, k, c) in scan.witnesses.iter().take(5) {
                text.push_str(&format!("witness: {} has {c:+} at {}\n", x.key(), k.key()));
            }
            let value = json!({
                "scanned": scan.scanned,
                "max_abs": scan.max_abs,
                "witnesses": scan.witnesses.iter().map(|(x, k, c)| json!({"complex": x.key(), "term": k.key(), "coeff": c})).collect::<Vec<_>>(),
            });
            Report::ok(render(f, text, value))
        }
        Suite::Ziegler => {
            if !long {
                return Err(CliError::Input("the Ziegler count runs over 10! orders; pass --long".into()));
            }
            let c = match input {
                Some(path) => need_complex(io::read_input(path)?)?,
                None => need_complex(io::parse_text(ziegler::ZIEGLER_BALL)?)?,
            };
            let count = match strategy {
                Strategy::Exhaustive => ziegler::count_exhaustive(&c),
                Strategy::Pruned => ziegler::count_pruned(&c),
            };
            let text = format!("prefix-pure orders: {count}\n");
            Report::ok(render(f, text, json!({ "count": count })))
        }
    })
}

/// Polyhedra for which the symmetrized identity is checked.
pub fn symmetrization_cases() -> Result<Vec<(&'static str, LatticePolyhedron)>, CliError> {
    Ok(vec![
        ("hypersimplex(4,2)", hypersimplex(4, 2)?),
        ("permutohedron(3)", standard_permutohedron(3)?),
        ("permutohedron(4)", standard_permutohedron(4)?),
        ("segment", example_segment()),
        ("ray", example_ray()),
    ])
}

fn golden_cmd(name: Golden, fixture: &Option<String>) -> Result<Report, CliError> {
    match name {
        Golden::SegmentTable => {
            let got = golden::segment_table()?;
            let want = match fixture {
                Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?,
                None => golden::SEGMENT_TABLE.to_string(),
            };
            if got == want {
                Ok(Report::ok(got))
            } else {
                Ok(Report { text: format!("{got}mismatch against fixture:\n{want}"), passed: false })
            }
        }
        Golden::Cone => Ok(Report::ok(golden::cone_coefficients()?)),
        Golden::Support => {
            let text = golden::hypersimplex_support_report()?;
            let passed = golden::hypersimplex_support()?.len() == 5;
            Ok(Report { text, passed })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Report, CliError> {
        let cli = Cli::try_parse_from(std::iter::once("ordhopf").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn golden_segment_table_passes() {
        let r = run_args(&["golden", "segment-table"]).unwrap();
        assert!(r.passed);
        assert_eq!(r.text.lines().count(), 7);
    }

    #[test]
    fn ziegler_requires_long() {
        assert!(matches!(run_args(&["verify", "--suite", "ziegler"]), Err(CliError::Input(_))));
    }

    #[test]
    fn parallel_does_not_change_output() {
        let a = run_args(&["antipode", "--method", "hypersimplex", "--n", "4", "--r", "2"]).unwrap().text;
        let b = run_args(&["--parallel", "1", "antipode", "--method", "hypersimplex", "--n", "4", "--r", "2"])
            .unwrap()
            .text;
        assert_eq!(a, b);
    }

    #[test]
    fn scrope_report() {
        let r = run_args(&["scrope", "--k", "7", "--intervals", "1:3,2:4,3:6,4:7"]).unwrap();
        assert!(r.text.contains("reduced Euler characteristic"));
        assert!(run_args(&["scrope", "--k", "4", "--intervals", "3-1"]).is_err());
    }
}
