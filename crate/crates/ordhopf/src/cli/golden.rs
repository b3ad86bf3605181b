//! Renderers for the worked examples with fixed expected output.

use itertools::Itertools;

use crate::error::Result;
use crate::hopf::ogp::{ogp_antipode, ogp_antipode_terms, takeuchi_antipode_ogp, Chi, ChiTerm};
use crate::orders::{descent_composition, LinearOrder};
use crate::polyhedra::{example_cone, example_ray, example_segment, hypersimplex, is_bounded_order, LatticePolyhedron};
use crate::set::Set;

pub const SEGMENT_TABLE: &str = include_str!("../../fixtures/segment_table.txt");

const SEGMENT_ROWS: [&str; 6] = ["123", "132", "312", "321", "231", "213"];

fn segment_face_name(q: &LatticePolyhedron) -> &'static str {
    if q.vertices().len() == 2 {
        "p"
    } else if q.vertices()[0] == [1, 0, 0] {
        "a"
    } else {
        "b"
    }
}

/// One column: groups per face in the order `p, a, b`, orders sorted within.
fn render_column(terms: &[&ChiTerm]) -> String {
    let mut groups = Vec::new();
    for face in ["p", "a", "b"] {
        let mut g: Vec<(String, i64)> = terms
            .iter()
            .filter(|t| segment_face_name(&t.face) == face)
            .map(|t| (t.order.to_string(), t.coeff))
            .collect();
        g.sort();
        if !g.is_empty() {
            groups.push((face, g));
        }
    }
    if groups.is_empty() {
        return "0".into();
    }
    let sign = |c: i64| if c < 0 { "-" } else { "+" };
    let mut out = String::new();
    for (i, (face, g)) in groups.iter().enumerate() {
        if g.len() == 1 {
            let (u, c) = &g[0];
            if i == 0 {
                out.push_str(&format!("{}{u}⊗{face}", sign(*c)));
            } else {
                out.push_str(&format!(" {} {u}⊗{face}", sign(*c)));
            }
        } else {
            let inner = g
                .iter()
                .enumerate()
                .map(|(j, (u, c))| if j == 0 && *c > 0 { u.clone() } else { format!("{}{u}", sign(*c)) })
                .join("");
            if i > 0 {
                out.push_str(" + ");
            }
            out.push_str(&format!("({inner})⊗{face}"));
        }
    }
    out
}

/// Antipodes of `w ⊗ segment` split by case, and boundedness of the ray.
pub fn segment_table() -> Result<String> {
    let p = example_segment();
    let ray = example_ray();
    let mut out = String::from("w | chi1 | chi2 | chi3 | bounded\n");
    for w in SEGMENT_ROWS {
        let w = LinearOrder::parse(w);
        let terms = ogp_antipode_terms(&w, &p)?;
        let cols: Vec<String> = [Chi::One, Chi::Two, Chi::Three]
            .iter()
            .map(|chi| render_column(&terms.iter().filter(|t| t.chi == *chi).collect::<Vec<_>>()))
            .collect();
        let bounded = if is_bounded_order(&ray, &w) { "Yes" } else { "No" };
        out.push_str(&format!("{w} | {} | {bounded}\n", cols.join(" | ")));
    }
    Ok(out)
}

/// Coefficients on the vertex of the cone for `w = 1234`, from the closed
/// formula and from the Takeuchi expansion.
pub fn cone_coefficients() -> Result<String> {
    let p = example_cone();
    let w = LinearOrder::parse("1234");
    let closed = ogp_antipode(&w, &p)?;
    let brute = takeuchi_antipode_ogp(&w, &p)?;
    let vertex = closed.keys().map(|k| k.1.clone()).find(|q| q.is_point()).unwrap();
    let mut out = String::from("u | D(w,u) | closed | takeuchi\n");
    for u in ["2314", "4312"] {
        let u = LinearOrder::parse(u);
        let key = (u.clone(), vertex.clone());
        out.push_str(&format!(
            "{u} | {} | {:+} | {:+}\n",
            descent_composition(&w, &u)?,
            closed.coeff(&key),
            brute.coeff(&key)
        ));
    }
    Ok(out)
}

/// Faces in the support of `S(1234 ⊗ Δ(4,2))`.
pub fn hypersimplex_support() -> Result<Vec<LatticePolyhedron>> {
    let s = ogp_antipode(&LinearOrder::identity(4), &hypersimplex(4, 2)?)?;
    let faces: Vec<LatticePolyhedron> = s.keys().map(|k| k.1.clone()).sorted().dedup().collect();
    Ok(faces)
}

pub fn hypersimplex_support_report() -> Result<String> {
    let faces = hypersimplex_support()?;
    let mut out = format!("{} faces\n", faces.len());
    for f in faces {
        out.push_str(&format!("dim {}  {}\n", f.dim(), f.key()));
    }
    Ok(out)
}

/// Bounded orders of the ray, as listed in the table.
pub fn ray_bounded_orders() -> Vec<String> {
    let ray = example_ray();
    crate::orders::all_orders(Set::interval(1, 3))
        .into_iter()
        .filter(|w| is_bounded_order(&ray, w))
        .map(|w| w.to_string())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_table_matches_fixture() {
        assert_eq!(segment_table().unwrap(), SEGMENT_TABLE);
    }

    #[test]
    fn support_has_five_faces() {
        assert_eq!(hypersimplex_support().unwrap().len(), 5);
        assert_eq!(ray_bounded_orders(), ["123", "132", "312"]);
    }
}
