//! Browser bindings for three interactive views over `specmin`.
//!
//! Each view is a plain function returning a JSON string so it can be
//! tested natively; the `#[wasm_bindgen]` wrappers only convert errors.
//! Vertex coordinates are included in every result so the page can draw
//! the graph without its own layout code.

use std::f64::consts::PI;

use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use specmin::canonical::{blowup, quotient, BlowupSpec};
use specmin::classify::classify_minus_one;
use specmin::constructors::{diamond, AdmissibleSet, DiamondSpec};
use specmin::graph::{canonical_form, diameter, parse_graph6, write_graph6, CANONICAL_LIMIT};
use specmin::linalg::{parse_rational, rational_from_i64};
use specmin::spectra::{distinct_eigenvalue_count, multiplicity};
use specmin::star::find_star_sets;
use specmin::Graph;

/// Largest graph the page will draw.
pub const DEMO_VERTEX_LIMIT: usize = 40;

/// Star sets are searched exhaustively, so only for small graphs.
pub const STAR_SEARCH_LIMIT: usize = 16;

#[derive(Serialize)]
struct Drawing {
    points: Vec<[f64; 2]>,
    edges: Vec<[usize; 2]>,
}

fn drawing(g: &Graph, points: Vec<[f64; 2]>) -> Drawing {
    Drawing {
        points,
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
    }
}

fn circle(n: usize) -> Vec<[f64; 2]> {
    if n == 1 {
        return vec![[0.5, 0.5]];
    }
    (0..n)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / n as f64 - PI / 2.0;
            [0.5 + 0.42 * t.cos(), 0.5 + 0.42 * t.sin()]
        })
        .collect()
}

fn limit(g: &Graph) -> Result<(), String> {
    if g.order() > DEMO_VERTEX_LIMIT {
        return Err(format!(
            "the demo draws at most {DEMO_VERTEX_LIMIT} vertices, got {}",
            g.order()
        ));
    }
    Ok(())
}

/// Invariants common to every view: order, diameter, `m(-1)` and the
/// structural classification when it applies.
fn minus_one_facts(g: &Graph) -> Value {
    let n = g.order();
    let d = diameter(g);
    let m = multiplicity(g, &rational_from_i64(-1));
    let class = if n >= 2 && d.finite().is_some() {
        classify_minus_one(g).ok()
    } else {
        None
    };
    json!({
        "graph6": write_graph6(g),
        "n": n,
        "d": d,
        "m_minus_one": m,
        "extremal": d.finite().map(|d| m + d == n),
        "classification": class,
    })
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(a), Value::Object(b)) = (&mut base, extra) {
        a.extend(b);
    }
    base
}

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| format!("bad {what} entry {s:?}"))
        })
        .collect()
}

/// `P_{d+1} ◇ W` with the path drawn left to right and each attached
/// vertex above its edge.
pub fn diamond_view(d: usize, w: &str) -> Result<String, String> {
    let spec = DiamondSpec::new(d, parse_list(w, "W")?).map_err(|e| e.to_string())?;
    let g = diamond(&spec).map_err(|e| e.to_string())?;
    limit(&g)?;
    let step = 1.0 / (d as f64 + 2.0);
    let mut points: Vec<[f64; 2]> = (0..=d).map(|i| [step * (i as f64 + 1.0), 0.6]).collect();
    for &j in spec.attachments() {
        points.push([step * (j as f64 + 1.5), 0.35]);
    }
    let admissible = AdmissibleSet::new(d).map(|u| u.indices()).ok();
    let extra = json!({
        "spec": spec,
        "admissible_indices": admissible,
        "is_admissible": spec.is_admissible(),
        "drawing": drawing(&g, points),
    });
    Ok(merge(minus_one_facts(&g), extra).to_string())
}

/// Spectral summary and star sets of an arbitrary graph at `mu`.
pub fn analyze_view(graph6: &str, mu: &str) -> Result<String, String> {
    let g = parse_graph6(graph6.trim()).map_err(|e| e.to_string())?;
    limit(&g)?;
    let mu = parse_rational(mu.trim()).map_err(|e| e.to_string())?;
    let m = multiplicity(&g, &mu);
    let d = diameter(&g);
    let stars = if m > 0 && g.order() <= STAR_SEARCH_LIMIT {
        find_star_sets(&g, &mu, 5)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|s| s.star_set)
            .collect()
    } else {
        Vec::new()
    };
    let canonical = if g.order() <= CANONICAL_LIMIT {
        canonical_form(&g).ok()
    } else {
        None
    };
    let extra = json!({
        "mu": mu.to_string(),
        "multiplicity": m,
        "attains_bound": d.finite().map(|d| m + d == g.order()),
        "distinct": distinct_eigenvalue_count(&g),
        "canonical": canonical,
        "star_sets": stars,
        "drawing": drawing(&g, circle(g.order())),
    });
    Ok(merge(minus_one_facts(&g), extra).to_string())
}

/// Blow a base graph up by clique sizes and compare `m(-1)` before and
/// after; each clique is drawn as a small ring around its base position.
pub fn blowup_view(graph6: &str, sizes: &str) -> Result<String, String> {
    let base = parse_graph6(graph6.trim()).map_err(|e| e.to_string())?;
    let sizes = parse_list(sizes, "size")?;
    let spec = BlowupSpec::new(base.clone(), sizes.clone()).map_err(|e| e.to_string())?;
    let g = blowup(&spec).map_err(|e| e.to_string())?;
    limit(&g)?;
    let centres = circle(base.order());
    let mut points = Vec::with_capacity(g.order());
    for (v, &k) in sizes.iter().enumerate() {
        for i in 0..k {
            let [cx, cy] = centres[v];
            let r = if k == 1 { 0.0 } else { 0.05 };
            let t = 2.0 * PI * i as f64 / k as f64;
            points.push([cx + r * t.cos(), cy + r * t.sin()]);
        }
    }
    let (gc, part) = quotient(&g);
    let m_base = multiplicity(&base, &rational_from_i64(-1));
    let m_big = multiplicity(&g, &rational_from_i64(-1));
    let (quotient_m, quotient_n) = (multiplicity(&gc, &rational_from_i64(-1)), gc.order());
    let extra = json!({
        "base": minus_one_facts(&base),
        "sizes": sizes,
        "quotient": write_graph6(&gc),
        "quotient_sizes": part.sizes(),
        "ledger_holds": m_big == quotient_m + (g.order() - quotient_n),
        "m_minus_one_base": m_base,
        "drawing": drawing(&g, points),
    });
    Ok(merge(minus_one_facts(&g), extra).to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn diamond_explorer(d: usize, w: &str) -> Result<String, JsValue> {
    js(diamond_view(d, w))
}

#[wasm_bindgen]
pub fn analyze_graph(graph6: &str, mu: &str) -> Result<String, JsValue> {
    js(analyze_view(graph6, mu))
}

#[wasm_bindgen]
pub fn blowup_explorer(graph6: &str, sizes: &str) -> Result<String, JsValue> {
    js(blowup_view(graph6, sizes))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn diamond_member() {
        let v = parse(&diamond_view(7, "3").unwrap());
        assert_eq!(v["n"], 9);
        assert_eq!(v["d"], 7);
        assert_eq!(v["m_minus_one"], 2);
        assert_eq!(v["extremal"], true);
        assert_eq!(v["is_admissible"], true);
        assert_eq!(v["classification"]["class"], "diamond-family");
        assert_eq!(v["drawing"]["points"].as_array().unwrap().len(), 9);
        assert_eq!(v["drawing"]["edges"].as_array().unwrap().len(), 9);
    }

    #[test]
    fn spacing_violation() {
        let v = parse(&diamond_view(7, "2, 3 5").unwrap());
        assert_eq!(v["n"], 11);
        assert_eq!(v["is_admissible"], false);
        assert_eq!(v["classification"]["class"], "not-extremal");
        assert_eq!(v["classification"]["reason"], "spacing-violation");
        assert!(diamond_view(7, "7").is_err());
        assert!(diamond_view(7, "x").is_err());
    }

    #[test]
    fn analyze_triangle() {
        let v = parse(&analyze_view("Bw", "-1").unwrap());
        assert_eq!(v["multiplicity"], 2);
        assert_eq!(v["attains_bound"], true);
        assert_eq!(v["canonical"], "Bw");
        assert_eq!(v["star_sets"].as_array().unwrap().len(), 3);
        assert_eq!(v["classification"]["class"], "complete");
    }

    #[test]
    fn analyze_disconnected_and_fractions() {
        let v = parse(&analyze_view("D??", "1/2").unwrap());
        assert!(v["d"].is_null() && v["classification"].is_null());
        assert_eq!(v["multiplicity"], 0);
        assert!(analyze_view("bad!", "0").is_err());
        assert!(analyze_view("Bw", "one").is_err());
    }

    #[test]
    fn blowup_of_p5() {
        let p5 = write_graph6(&specmin::constructors::path(5).unwrap());
        let v = parse(&blowup_view(&p5, "2,1,1,1,3").unwrap());
        assert_eq!(v["n"], 8);
        assert_eq!(v["m_minus_one"], 4);
        assert_eq!(v["extremal"], true);
        assert_eq!(v["ledger_holds"], true);
        assert_eq!(v["quotient"], p5);
        assert_eq!(v["classification"]["class"], "quotient-p5");
        assert_eq!(v["base"]["m_minus_one"], 1);
        assert!(blowup_view(&p5, "1,1").is_err());
        assert!(blowup_view(&p5, "20,20,1,1,1").is_err());
    }
}
