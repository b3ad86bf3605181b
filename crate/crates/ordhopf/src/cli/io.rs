//! JSON schemas. Labels are strings naming small integers (`"0"`..`"31"`).

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::CliError;
use crate::complexes::OrderedComplex;
use crate::hopf::{FormalSum, OgpTerm};
use crate::orders::LinearOrder;
use crate::polyhedra::{Face, LatticePolyhedron};
use crate::set::{Elem, Set};

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub ground: Vec<String>,
    #[serde(default)]
    pub order: Option<Vec<String>>,
    pub facets: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct PolyhedronJson {
    pub ground: Vec<String>,
    #[serde(default)]
    pub order: Option<Vec<String>>,
    pub vertices: Vec<Vec<i64>>,
    #[serde(default)]
    pub rays: Vec<(String, String)>,
}

/// Either input shape, told apart by its fields.
pub enum Input {
    Complex(OrderedComplex),
    Polyhedron(LatticePolyhedron, Option<LinearOrder>),
}

pub fn label(s: &str) -> Result<Elem, CliError> {
    match s.parse::<Elem>() {
        Ok(x) if x < 32 => Ok(x),
        _ => Err(CliError::Input(format!("label {s:?} is not an integer in 0..32"))),
    }
}

fn labels(xs: &[String], field: &str) -> Result<Vec<Elem>, CliError> {
    xs.iter()
        .map(|s| label(s).map_err(|e| CliError::Input(format!("field `{field}`: {e}"))))
        .collect()
}

fn ground_of(xs: &[String]) -> Result<Set, CliError> {
    let v = labels(xs, "ground")?;
    let s: Set = v.iter().copied().collect();
    if s.len() != v.len() {
        return Err(CliError::Input("field `ground`: repeated label".into()));
    }
    Ok(s)
}

pub fn order_from_labels(xs: &[String], ground: Set) -> Result<LinearOrder, CliError> {
    let w = LinearOrder::new(labels(xs, "order")?)?;
    if w.ground() != ground {
        return Err(CliError::Input("field `order`: not an ordering of `ground`".into()));
    }
    Ok(w)
}

/// `--order 3142`: one character per label.
pub fn order_from_flag(text: &str) -> Result<LinearOrder, CliError> {
    let xs: Vec<Elem> = text
        .chars()
        .map(|c| label(&c.to_string()))
        .collect::<Result<_, _>>()?;
    Ok(LinearOrder::new(xs)?)
}

pub fn parse_text(text: &str) -> Result<Input, CliError> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("malformed JSON at line {} column {}: {e}", e.line(), e.column())))?;
    if v.get("facets").is_some() {
        let c: ComplexJson = serde_json::from_value(v).map_err(|e| CliError::Input(format!("complex: {e}")))?;
        Ok(Input::Complex(complex_from_json(&c)?))
    } else if v.get("vertices").is_some() {
        let p: PolyhedronJson =
            serde_json::from_value(v).map_err(|e| CliError::Input(format!("polyhedron: {e}")))?;
        let (poly, w) = polyhedron_from_json(&p)?;
        Ok(Input::Polyhedron(poly, w))
    } else {
        Err(CliError::Input("input needs a `facets` or a `vertices` field".into()))
    }
}

pub fn read_input(path: &str) -> Result<Input, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    parse_text(&text)
}

pub fn complex_from_json(c: &ComplexJson) -> Result<OrderedComplex, CliError> {
    let ground = ground_of(&c.ground)?;
    let w = match &c.order {
        Some(o) => order_from_labels(o, ground)?,
        None => LinearOrder::natural(ground),
    };
    let mut gens = Vec::new();
    for (i, f) in c.facets.iter().enumerate() {
        let s: Set = labels(f, &format!("facets[{i}]"))?.into_iter().collect();
        if !s.is_subset(ground) {
            return Err(CliError::Input(format!("field `facets[{i}]`: label outside `ground`")));
        }
        gens.push(s);
    }
    Ok(OrderedComplex::new(w, gens)?)
}

pub fn polyhedron_from_json(p: &PolyhedronJson) -> Result<(LatticePolyhedron, Option<LinearOrder>), CliError> {
    let ground = ground_of(&p.ground)?;
    // Coordinates are listed in the order of `ground`; stored by increasing label.
    let pos: Vec<usize> = {
        let g = labels(&p.ground, "ground")?;
        let sorted: Vec<Elem> = ground.iter().collect();
        sorted.iter().map(|x| g.iter().position(|y| y == x).unwrap()).collect()
    };
    let mut vertices = Vec::new();
    for (i, v) in p.vertices.iter().enumerate() {
        if v.len() != pos.len() {
            return Err(CliError::Input(format!("field `vertices[{i}]`: expected {} coordinates", pos.len())));
        }
        vertices.push(pos.iter().map(|&j| v[j]).collect());
    }
    let mut rays = Vec::new();
    for (i, (a, b)) in p.rays.iter().enumerate() {
        let (a, b) = (label(a)?, label(b)?);
        if !ground.contains(a) || !ground.contains(b) {
            return Err(CliError::Input(format!("field `rays[{i}]`: label outside `ground`")));
        }
        rays.push((a, b));
    }
    let poly = LatticePolyhedron::new(ground, vertices, rays)?;
    let w = match &p.order {
        Some(o) => Some(order_from_labels(o, ground)?),
        None => None,
    };
    Ok((poly, w))
}

fn names(xs: impl IntoIterator<Item = Elem>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

pub fn order_json(w: &LinearOrder) -> Value {
    json!(names(w.seq().iter().copied()))
}

pub fn complex_json(c: &OrderedComplex) -> Value {
    let facets: Vec<Vec<String>> = c.lex_sorted_facets().into_iter().map(|f| names(f.iter())).collect();
    json!({ "ground": names(c.ground().iter()), "order": order_json(c.order()), "facets": facets })
}

pub fn polyhedron_json(p: &LatticePolyhedron) -> Value {
    let rays: Vec<[String; 2]> = p.rays().iter().map(|&(i, j)| [i.to_string(), j.to_string()]).collect();
    json!({ "ground": names(p.ground().iter()), "vertices": p.vertices(), "rays": rays })
}

pub fn face_json(f: &Face) -> Value {
    json!({
        "dim": f.dim,
        "normal": f.normal.to_string(),
        "polyhedron": polyhedron_json(&f.poly),
    })
}

pub fn complex_sum_json(s: &FormalSum<OrderedComplex>) -> Value {
    let terms: Vec<Value> = s
        .iter()
        .map(|(k, c)| json!({ "coeff": c, "order": order_json(k.order()), "object": complex_json(k) }))
        .collect();
    json!({ "terms": terms })
}

pub fn ogp_sum_json(s: &FormalSum<OgpTerm>) -> Value {
    let terms: Vec<Value> = s
        .iter()
        .map(|(k, c)| json!({ "coeff": c, "order": order_json(&k.0), "object": polyhedron_json(&k.1) }))
        .collect();
    json!({ "terms": terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_round_trip() {
        let text = r#"{"ground":["1","2","3","4"],"order":["1","2","3","4"],"facets":[["1","2"],["1","3"],["2","3"],["1","4"]]}"#;
        let Input::Complex(c) = parse_text(text).unwrap() else { panic!() };
        assert_eq!(c.facets().len(), 4);
        let back: ComplexJson = serde_json::from_value(complex_json(&c)).unwrap();
        assert_eq!(complex_from_json(&back).unwrap(), c);
    }

    #[test]
    fn polyhedron_coordinates_follow_ground() {
        let text = r#"{"ground":["2","1"],"vertices":[[1,0]],"rays":[["1","2"]]}"#;
        let Input::Polyhedron(p, w) = parse_text(text).unwrap() else { panic!() };
        assert!(w.is_none());
        assert_eq!(p.vertices(), &[vec![0, 1]]);
        assert_eq!(p.rays(), &[(1, 2)]);
    }

    #[test]
    fn diagnostics() {
        let e = parse_text("{\n \"ground\": [\"1\",}").err().unwrap();
        assert!(e.to_string().contains("line 2"), "{e}");
        let e = parse_text(r#"{"ground":["x"],"facets":[]}"#).err().unwrap();
        assert!(e.to_string().contains("ground"), "{e}");
        let e = parse_text(r#"{"ground":["1"],"facets":[["2"]]}"#).err().unwrap();
        assert!(e.to_string().contains("facets[0]"), "{e}");
        assert!(parse_text(r#"{"ground":["1"]}"#).is_err());
    }
}
