use lexideal::complexes::{complex_of_ideal, decompose_via_facets};
use lexideal::expr::{parse, IdealExpr};
use lexideal::homology::{self, face_guard};
use lexideal::lexseg::{
    closed_form_decomposition, depth_bound, depth_gt_qminus1, dual_component_n_minus_q, invariants_closed_form,
    scm_characterization, LexSpec,
};
use lexideal::monomials::{is_lexsegment_set, shadow as shad};
use lexideal::verify::{sweep as run_sweep, SweepConfig};
use lexideal::{Error, Homology, MonomialIdeal, Result, Ring, SqfMonomial};
use serde_json::{json, Value};

use crate::{Property, Report};

struct Loaded {
    expr: IdealExpr,
    ring: Ring,
    ideal: MonomialIdeal,
}

fn load(text: &str, n: usize) -> Result<Loaded> {
    let ring = Ring::new(n)?;
    let expr = parse(text, n)?;
    let ideal = expr.eval(ring)?;
    Ok(Loaded { expr, ring, ideal })
}

fn names(ms: impl IntoIterator<Item = SqfMonomial>) -> Value {
    json!(ms.into_iter().map(|m| m.to_string()).collect::<Vec<_>>())
}

fn head(l: &Loaded) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("n".into(), json!(l.ring.n()));
    m.insert("expr".into(), json!(l.expr.to_string()));
    m.insert("gens".into(), names(l.ideal.gens().iter().copied()));
    m
}

fn segment(l: &Loaded) -> Result<LexSpec> {
    l.expr.as_segment(l.ring).ok_or(Error::HypothesisNotMet("the expression must be a single segment"))
}

pub fn decompose(text: &str, n: usize) -> Result<Report> {
    let l = load(text, n)?;
    let oracle = decompose_via_facets(&l.ideal)?;
    let closed = match l.expr.as_segment(l.ring) {
        Some(spec) => closed_form_decomposition(&spec)?,
        None => None,
    };
    let mut doc = head(&l);
    doc.insert("oracle".into(), json!(oracle.to_json()));
    match closed {
        Some((d, source)) => {
            doc.insert("closed_form".into(), json!({ "source": format!("{source:?}").to_lowercase(), "components": d.to_json().components }));
            doc.insert("agrees".into(), json!(d == oracle));
        }
        None => {
            doc.insert("closed_form".into(), Value::Null);
            doc.insert("agrees".into(), Value::Null);
        }
    }
    Ok(Report::new(Value::Object(doc)))
}

fn sourced<T: PartialEq + Into<Value>>(formula: Option<T>, computed: T) -> Value {
    match formula {
        Some(f) => {
            let verified = f == computed;
            json!({ "value": f.into(), "source": "formula", "verified": verified })
        }
        None => json!({ "value": computed.into(), "source": "computed" }),
    }
}

pub fn invariants(text: &str, n: usize, h: &Homology, pretty: bool) -> Result<Report> {
    let l = load(text, n)?;
    let betti = h.betti(&l.ideal)?;
    let dim = homology::dim(&l.ideal)?;
    let depth = h.depth(&l.ideal)?;
    let e = complex_of_ideal(&l.ideal)?.multiplicity()?;
    let formula = l.expr.as_segment(l.ring).and_then(|s| invariants_closed_form(&s).ok());
    let mut doc = head(&l);
    doc.insert("dim".into(), sourced(formula.as_ref().map(|f| f.dim), dim));
    doc.insert("depth".into(), sourced(formula.as_ref().and_then(|f| f.depth), depth));
    doc.insert("multiplicity".into(), sourced(formula.as_ref().map(|f| f.multiplicity), e));
    doc.insert("pd".into(), json!(betti.pd().unwrap_or(0)));
    doc.insert("reg".into(), json!(h.regularity(&l.ideal)?));
    doc.insert("betti".into(), json!(betti.to_json()));
    if pretty {
        let rows: Vec<String> = betti.to_string().lines().map(str::to_string).collect();
        doc.insert("betti_display".into(), json!(rows));
    }
    doc.insert("cm".into(), json!(depth == dim));
    doc.insert("scm".into(), json!(h.is_scm_definition(&l.ideal)?));
    doc.insert("field".into(), json!(h.field.to_string()));
    Ok(Report::new(Value::Object(doc)))
}

pub fn check(property: Property, text: &str, n: usize, h: &Homology) -> Result<Report> {
    let l = load(text, n)?;
    let ideal = &l.ideal;
    let (verdict, evidence) = match property {
        Property::Complete => {
            let spec = segment(&l)?;
            let mut current: Vec<SqfMonomial> = spec.monomials();
            let mut steps = vec![json!({ "degree": spec.q(), "size": current.len(), "lexsegment": true })];
            let mut all = true;
            for d in spec.q() + 1..=n {
                current = shad(&current)?.into_iter().collect();
                let ok = is_lexsegment_set(&current)?;
                all &= ok;
                steps.push(json!({ "degree": d, "size": current.len(), "lexsegment": ok }));
            }
            debug_assert_eq!(all, spec.is_completely_lexsegment());
            (all, json!({ "shadows": steps }))
        }
        Property::Linres => {
            let v = h.has_linear_resolution(ideal)?;
            let betti = h.betti_hochster(ideal, lexideal::Subject::Ideal)?;
            (v, json!({ "generated_in_degree": ideal.equigenerated_degree(), "betti_ideal": betti.to_json() }))
        }
        Property::Cwl => {
            let (lo, hi) = (ideal.min_degree().unwrap_or(0), ideal.max_degree().unwrap_or(0));
            let mut comps = Vec::new();
            for j in lo.max(1)..=hi {
                let c = ideal.graded_component(j)?;
                comps.push(json!({ "degree": j, "linear": h.has_d_linear_resolution(&c, j)? }));
            }
            (h.is_componentwise_linear(ideal)?, json!({ "squarefree_components": comps }))
        }
        Property::Cm => {
            let (depth, dim) = (h.depth(ideal)?, homology::dim(ideal)?);
            (depth == dim, json!({ "depth": depth, "dim": dim }))
        }
        Property::Scm => {
            let def = h.is_scm_definition(ideal)?;
            let dual = h.is_scm_dual(ideal)?;
            let criterion = match l.expr.as_segment(l.ring) {
                Some(spec) => match scm_characterization(&spec, h) {
                    Ok(c) => json!({ "linear": c.linear, "degree": c.degree, "intersection": names(c.intersection.gens().iter().copied()) }),
                    Err(e) => json!({ "not_applicable": e.to_string() }),
                },
                None => json!({ "not_applicable": "not a segment" }),
            };
            let agree = criterion.get("linear").map_or(def == dual, |c| c.as_bool() == Some(def) && def == dual);
            (def, json!({ "pure_skeletons_cm": def, "dual_componentwise_linear": dual, "segment_criterion": criterion, "agree": agree }))
        }
        Property::DepthGt => {
            let spec = segment(&l)?;
            let depth = h.depth(ideal)?;
            let actual = depth + 1 > spec.q();
            let criterion = match depth_gt_qminus1(&spec, h) {
                Ok(p) => json!({
                    "top": p.top.to_string(), "bottom": p.bottom.to_string(),
                    "ordered": p.ordered, "linear": p.linear, "holds": p.holds(), "agrees": p.holds() == actual,
                }),
                Err(e) => json!({ "not_applicable": e.to_string() }),
            };
            (actual, json!({ "depth": depth, "q": spec.q(), "criterion": criterion }))
        }
        Property::Bounds => {
            let spec = segment(&l)?;
            let b = depth_bound(&spec, h)?;
            let evidence = json!({
                "depth": b.depth, "dim": b.dim, "cm": b.cm, "bound": n.saturating_sub(2),
                "within": b.within(n), "equality_iff_cm_of_dim_n_minus_2": b.equality_matches(n),
            });
            (b.within(n) && b.equality_matches(n), evidence)
        }
    };
    let mut doc = head(&l);
    doc.insert("property".into(), json!(property_name(property)));
    doc.insert("verdict".into(), json!(verdict));
    doc.insert("evidence".into(), evidence);
    Ok(Report { doc: Value::Object(doc), negative: !verdict, body: None })
}

fn property_name(p: Property) -> &'static str {
    match p {
        Property::Complete => "complete",
        Property::Linres => "linres",
        Property::Cwl => "cwl",
        Property::Cm => "cm",
        Property::Scm => "scm",
        Property::DepthGt => "depth-gt",
        Property::Bounds => "bounds",
    }
}

pub fn dual(text: &str, n: usize) -> Result<Report> {
    let l = load(text, n)?;
    let dual = l.ideal.alexander_dual()?;
    let mut doc = head(&l);
    doc.insert("dual".into(), names(dual.gens().iter().copied()));
    let formula = l.expr.as_segment(l.ring).and_then(|spec| {
        let part = dual_component_n_minus_q(&spec).ok()?;
        let degree = n - spec.q();
        let direct = dual.graded_component(degree).ok()?;
        Some(json!({ "degree": degree, "gens": names(part.gens().iter().copied()), "agrees": part == direct }))
    });
    doc.insert("component_formula".into(), formula.unwrap_or(Value::Null));
    Ok(Report::new(Value::Object(doc)))
}

pub fn shadow(text: &str, n: usize) -> Result<Report> {
    let l = load(text, n)?;
    if l.ideal.is_zero() {
        return Err(Error::EmptyInput);
    }
    let limit = face_guard();
    let mut current: Vec<SqfMonomial> = l.ideal.gens().to_vec();
    let mut total = current.len();
    let mut steps = Vec::new();
    loop {
        current = shad(&current)?.into_iter().collect();
        if current.is_empty() {
            break;
        }
        total += current.len();
        if total > limit {
            return Err(Error::GuardExceeded { what: "shadow monomials", value: total, limit });
        }
        let degrees: Vec<usize> = current.iter().map(|m| m.degree()).collect();
        let equi = degrees.windows(2).all(|w| w[0] == w[1]);
        // mixed degrees have no lexsegment reading
        let lex = if equi { json!(is_lexsegment_set(&current)?) } else { Value::Null };
        current.sort_by_key(|m| m.degree());
        steps.push(json!({ "size": current.len(), "lexsegment": lex, "monomials": names(current.iter().copied()) }));
    }
    let mut doc = head(&l);
    doc.insert("shadows".into(), json!(steps));
    Ok(Report::new(Value::Object(doc)))
}

pub fn sweep(cfg: &SweepConfig, pretty: bool) -> Report {
    let report = run_sweep(cfg);
    let total = report.total();
    let doc = json!({ "passed": report.passed(), "total": total, "summary": report.summary });
    Report { doc, negative: !report.passed(), body: Some(report.to_json(pretty)) }
}
