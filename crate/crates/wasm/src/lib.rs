//! wasm-bindgen bindings for the browser demo in `www/`. Each export takes an
//! ideal expression (or segment endpoints) plus `n` and returns a JSON string;
//! errors come back as a thrown string.

use lexideal::complexes::{complex_of_ideal, decompose_via_facets};
use lexideal::expr::parse;
use lexideal::homology;
use lexideal::lexseg::{closed_form_decomposition, invariants_closed_form, LexSpec};
use lexideal::monomials::{is_lexsegment_set, shadow, stratum};
use lexideal::{Homology, MonomialIdeal, Ring, SqfMonomial};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest ring the page accepts; keeps every call interactive.
pub const MAX_VARS: usize = 10;

fn load(text: &str, n: usize) -> Result<(Ring, lexideal::expr::IdealExpr, MonomialIdeal), String> {
    if n > MAX_VARS {
        return Err(format!("the demo is limited to n ≤ {MAX_VARS}"));
    }
    let ring = Ring::new(n).map_err(|e| e.to_string())?;
    let expr = parse(text, n).map_err(|e| e.to_string())?;
    let ideal = expr.eval(ring).map_err(|e| e.to_string())?;
    Ok((ring, expr, ideal))
}

fn names(ms: &[SqfMonomial]) -> Vec<String> {
    ms.iter().map(|m| m.to_string()).collect()
}

fn primes(d: &lexideal::Decomposition) -> Vec<String> {
    d.components()
        .iter()
        .map(|p| format!("({})", p.vars().iter().map(|i| format!("x{i}")).collect::<Vec<_>>().join(",")))
        .collect()
}

pub fn decompose_json(text: &str, n: usize) -> Result<String, String> {
    let (ring, expr, ideal) = load(text, n)?;
    let oracle = decompose_via_facets(&ideal).map_err(|e| e.to_string())?;
    let closed = match expr.as_segment(ring) {
        Some(spec) => closed_form_decomposition(&spec).map_err(|e| e.to_string())?,
        None => None,
    };
    let doc = json!({
        "expr": expr.to_string(),
        "gens": names(ideal.gens()),
        "oracle": primes(&oracle),
        "closed_form": closed.as_ref().map(|(d, src)| json!({ "source": format!("{src:?}").to_lowercase(), "components": primes(d) })),
        "agrees": closed.as_ref().map(|(d, _)| *d == oracle),
    });
    Ok(doc.to_string())
}

pub fn invariants_json(text: &str, n: usize) -> Result<String, String> {
    let (ring, expr, ideal) = load(text, n)?;
    let h = Homology::default();
    let err = |e: lexideal::Error| e.to_string();
    let betti = h.betti(&ideal).map_err(err)?;
    let dim = homology::dim(&ideal).map_err(err)?;
    let depth = h.depth(&ideal).map_err(err)?;
    let e = complex_of_ideal(&ideal).map_err(err)?.multiplicity().map_err(err)?;
    let formula = expr.as_segment(ring).and_then(|s| invariants_closed_form(&s).ok());
    let doc = json!({
        "expr": expr.to_string(),
        "dim": dim,
        "depth": depth,
        "pd": betti.pd().unwrap_or(0),
        "reg": h.regularity(&ideal).map_err(err)?,
        "multiplicity": e,
        "cm": depth == dim,
        "scm": h.is_scm_definition(&ideal).map_err(err)?,
        "formula": formula.map(|f| json!({ "dim": f.dim, "depth": f.depth, "multiplicity": f.multiplicity })),
        "betti": betti.to_string(),
    });
    Ok(doc.to_string())
}

pub fn explore_json(u: &str, v: &str, n: usize) -> Result<String, String> {
    let (ring, expr, ideal) = load(&format!("L({u}, {v})"), n)?;
    let spec: LexSpec = expr.as_segment(ring).ok_or("not a segment")?;
    let members = spec.monomials();
    let st = stratum(ring, spec.q()).map_err(|e| e.to_string())?;
    let cells: Vec<Value> =
        st.iter().map(|m| json!({ "m": m.to_string(), "in": members.contains(m) })).collect();
    let mut current = members.clone();
    let mut shadows = Vec::new();
    for d in spec.q() + 1..=n {
        current = shadow(&current).map_err(|e| e.to_string())?.into_iter().collect();
        let lex = is_lexsegment_set(&current).map_err(|e| e.to_string())?;
        shadows.push(json!({ "degree": d, "size": current.len(), "lexsegment": lex }));
    }
    let doc = json!({
        "segment": spec.to_string(),
        "q": spec.q(),
        "kind": format!("{:?}", spec.kind()).to_lowercase(),
        "completely": spec.is_completely_lexsegment(),
        "gens": names(ideal.gens()),
        "stratum": cells,
        "shadows": shadows,
    });
    Ok(doc.to_string())
}

#[wasm_bindgen]
pub fn decompose(expr: &str, n: usize) -> Result<String, JsValue> {
    decompose_json(expr, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn invariants(expr: &str, n: usize) -> Result<String, JsValue> {
    invariants_json(expr, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn explore(u: &str, v: &str, n: usize) -> Result<String, JsValue> {
    explore_json(u, v, n).map_err(|e| JsValue::from_str(&e))
}
