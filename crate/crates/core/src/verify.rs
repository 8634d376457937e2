//! Cross-verification sweeps: each closed form or structural law is run over
//! an enumerated or seeded-random family of instances and compared against an
//! independent oracle. Reports are deterministic: instances are generated
//! sequentially and results are collected in generation order, whatever the
//! number of worker threads.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::complexes::{complex_of_ideal, decompose_via_facets};
use crate::error::{Error, Result};
use crate::expr::{parse, Atom, IdealExpr};
use crate::homology::{self, Homology, Subject};
use crate::ideals::{Decomposition, MonomialIdeal};
use crate::lexseg::{
    closed_form_decomposition, complement_segment, decompose_completely, decompose_final, decompose_initial,
    depth_bound, depth_gt_qminus1, dual_component_n_minus_q, dual_lower_components_linear, invariants_closed_form,
    normalize, scm_characterization, sum_linear_iff_intersection, ClosedForm, CriticalRecipe, LexSpec,
};
use crate::linalg::Field;
use crate::monomials::{stratum, Ring, SqfMonomial};

/// Random instances drawn by each seeded suite.
pub const RANDOM_CASES: usize = 500;
/// Random critical recipes per sweep.
pub const CRITICAL_CASES: usize = 200;
/// Largest ring for exhaustive antichain enumeration.
pub const EXHAUSTIVE_ANTICHAIN_VARS: usize = 5;
const RANDOM_IDEAL_MAX_VARS: usize = 8;
const RANDOM_IDEAL_MAX_GENS: usize = 10;
const CRITICAL_MAX_VARS: usize = 10;
const CRITICAL_MAX_GENS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Initial,
    Final,
    Completely,
    Bridge,
    Invariants,
    Betti,
    Scm,
    Dual,
    Intersection,
    DepthGt,
    Complement,
    DepthBound,
    Critical,
    Duality,
    RoundTrip,
    Antichain,
    Parser,
}

impl Check {
    pub const ALL: [Check; 17] = [
        Check::Initial,
        Check::Final,
        Check::Completely,
        Check::Bridge,
        Check::Invariants,
        Check::Betti,
        Check::Scm,
        Check::Dual,
        Check::Intersection,
        Check::DepthGt,
        Check::Complement,
        Check::DepthBound,
        Check::Critical,
        Check::Duality,
        Check::RoundTrip,
        Check::Antichain,
        Check::Parser,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Initial => "initial",
            Check::Final => "final",
            Check::Completely => "completely",
            Check::Bridge => "bridge",
            Check::Invariants => "invariants",
            Check::Betti => "betti",
            Check::Scm => "scm",
            Check::Dual => "dual",
            Check::Intersection => "intersection",
            Check::DepthGt => "depth-gt",
            Check::Complement => "complement",
            Check::DepthBound => "depth-bound",
            Check::Critical => "critical",
            Check::Duality => "duality",
            Check::RoundTrip => "round-trip",
            Check::Antichain => "antichain",
            Check::Parser => "parser",
        }
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(text: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item == "all" {
                out.extend(Check::ALL);
            } else {
                out.push(item.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::EmptyInput);
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Syntax { offset: 0, message: format!("unknown check '{s}'") })
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub check: Check,
    pub instance: String,
    pub expected_source: String,
    pub computed: Value,
    pub oracle: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A closed form whose literal family union differs from the antichain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub check: Check,
    pub instance: String,
    pub duplicates: usize,
    pub non_minimal: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub min_n: usize,
    pub max_n: usize,
    pub degrees: RangeInclusive<usize>,
    pub checks: Vec<Check>,
    pub seed: u64,
    /// Worker threads; `0` lets the pool decide. Never affects the report.
    pub jobs: usize,
    pub field: Field,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            min_n: 2,
            max_n: 6,
            degrees: 1..=usize::MAX,
            checks: Check::ALL.to_vec(),
            seed: 0,
            jobs: 0,
            field: Field::Rational,
        }
    }
}

impl SweepConfig {
    fn ns(&self, lo: usize, hi: usize) -> RangeInclusive<usize> {
        self.min_n.max(lo)..=self.max_n.min(hi)
    }

    fn degree_ok(&self, q: usize) -> bool {
        self.degrees.contains(&q)
    }

    fn rng(&self, check: Check) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ ((check as u64 + 1) << 40))
    }
}

#[derive(Clone, Debug, Serialize)]
struct ConfigEcho {
    min_n: usize,
    max_n: usize,
    degrees: String,
    checks: Vec<Check>,
    seed: u64,
    field: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    config: ConfigEcho,
    pub summary: BTreeMap<Check, Counts>,
    pub records: Vec<Record>,
    pub discrepancies: Vec<Discrepancy>,
}

impl SweepReport {
    pub fn counts(&self, check: Check) -> Counts {
        self.summary.get(&check).copied().unwrap_or_default()
    }

    pub fn total(&self) -> Counts {
        self.summary.values().fold(Counts::default(), |a, c| Counts {
            pass: a.pass + c.pass,
            fail: a.fail + c.fail,
            skipped: a.skipped + c.skipped,
        })
    }

    /// No failing record. Skipped records are not passes; they are counted
    /// separately in the summary.
    pub fn passed(&self) -> bool {
        self.total().fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn to_json(&self, pretty: bool) -> String {
        let mut s = if pretty {
            serde_json::to_string_pretty(self).expect("serializable")
        } else {
            serde_json::to_string(self).expect("serializable")
        };
        s.push('\n');
        s
    }
}

type Outcome = (Record, Option<Discrepancy>);

struct Ctx {
    h: Homology,
}

fn outcome(check: Check, instance: String, source: &str, result: Result<(Value, Value, bool)>) -> Record {
    let (computed, oracle, status, note) = match result {
        Ok((c, o, pass)) => (c, o, if pass { Status::Pass } else { Status::Fail }, None),
        Err(e) if e.is_guard() => (Value::Null, Value::Null, Status::Skipped, Some(e.to_string())),
        Err(e) => (Value::Null, Value::Null, Status::Fail, Some(format!("error: {e}"))),
    };
    Record { check, instance, expected_source: source.to_string(), computed, oracle, status, note }
}

fn components(d: &Decomposition) -> Value {
    json!(d.components().iter().map(|p| p.vars()).collect::<Vec<_>>())
}

fn gens(i: &MonomialIdeal) -> Value {
    json!(i.gens().iter().map(|g| g.support()).collect::<Vec<_>>())
}

fn seg_name(spec: &LexSpec) -> String {
    format!("n={} {}", spec.n(), spec)
}

fn ideal_name(i: &MonomialIdeal) -> String {
    let g: Vec<String> = i.gens().iter().map(|g| g.to_string()).collect();
    format!("n={} {{{}}}", i.n(), g.join(","))
}

fn discrepancy(check: Check, instance: &str, cf: &ClosedForm) -> Option<Discrepancy> {
    (!cf.literal_is_minimal()).then(|| Discrepancy {
        check,
        instance: instance.to_string(),
        duplicates: cf.duplicates(),
        non_minimal: cf.non_minimal().into_iter().map(|p| p.vars()).collect(),
    })
}

/// All segments `L(u, v)` with `u ≥ v` of degree `q`.
fn segments(ring: Ring, q: usize) -> Vec<LexSpec> {
    let st = stratum(ring, q).expect("degree in range");
    let mut out = Vec::new();
    for (a, &u) in st.iter().enumerate() {
        for &v in &st[a..] {
            out.push(LexSpec::new(u, v).expect("ordered"));
        }
    }
    out
}

fn all_segments(cfg: &SweepConfig, lo_n: usize, hi_n: usize, q_range: impl Fn(usize) -> RangeInclusive<usize>) -> Vec<LexSpec> {
    let mut out = Vec::new();
    for n in cfg.ns(lo_n, hi_n) {
        let ring = Ring::new(n).expect("n in range");
        for q in q_range(n).filter(|&q| cfg.degree_ok(q)) {
            out.extend(segments(ring, q));
        }
    }
    out
}

fn is_normalized_general(spec: &LexSpec) -> bool {
    spec.u().contains_var(1) && !spec.v().contains_var(1)
}

fn random_ideal(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> MonomialIdeal {
    let n = rng.gen_range(lo..=hi);
    let ring = Ring::new(n).expect("n in range");
    let k = rng.gen_range(1..=RANDOM_IDEAL_MAX_GENS);
    let gens = (0..k).map(|_| {
        let bits: u64 = rng.gen_range(1..(1u64 << n));
        SqfMonomial::new(ring, (1..=n).filter(|i| bits >> (i - 1) & 1 == 1)).expect("in range")
    });
    MonomialIdeal::minimalize(ring, gens).expect("nonempty generators")
}

fn random_ideals(cfg: &SweepConfig, check: Check, count: usize) -> Vec<MonomialIdeal> {
    let (lo, hi) = (cfg.min_n.max(2), cfg.max_n.min(RANDOM_IDEAL_MAX_VARS));
    if lo > hi {
        return Vec::new();
    }
    let mut rng = cfg.rng(check);
    (0..count).map(|_| random_ideal(&mut rng, lo, hi)).collect()
}

/// Every nonempty antichain of nonempty subsets of `[n]`, as generator masks.
fn antichains(n: usize) -> Vec<Vec<u64>> {
    fn grow(subsets: &[u64], start: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        for k in start..subsets.len() {
            let s = subsets[k];
            if current.iter().any(|&c| c & s == c || c & s == s) {
                continue;
            }
            current.push(s);
            out.push(current.clone());
            grow(subsets, k + 1, current, out);
            current.pop();
        }
    }
    let subsets: Vec<u64> = (1..(1u64 << n)).collect();
    let mut out = Vec::new();
    grow(&subsets, 0, &mut Vec::new(), &mut out);
    out
}

fn from_masks(ring: Ring, masks: &[u64]) -> MonomialIdeal {
    let n = ring.n();
    let gens = masks
        .iter()
        .map(|&m| SqfMonomial::new(ring, (1..=n).filter(|i| m >> (i - 1) & 1 == 1)).expect("in range"));
    MonomialIdeal::minimalize(ring, gens).expect("nonempty")
}

fn random_monomial(rng: &mut ChaCha8Rng, ring: Ring, degree: usize) -> SqfMonomial {
    let st = stratum(ring, degree).expect("degree in range");
    st[rng.gen_range(0..st.len())]
}

fn random_atom(rng: &mut ChaCha8Rng, ring: Ring) -> Atom {
    let n = ring.n();
    match rng.gen_range(0..5) {
        0 => {
            let d = rng.gen_range(1..=n);
            Atom::Initial(random_monomial(rng, ring, d))
        }
        1 => {
            let d = rng.gen_range(1..=n);
            Atom::Final(random_monomial(rng, ring, d))
        }
        2 => {
            let q = rng.gen_range(1..=n);
            let (a, b) = (random_monomial(rng, ring, q), random_monomial(rng, ring, q));
            if a.lex_cmp(b).expect("same degree").is_ge() {
                Atom::Segment(a, b)
            } else {
                Atom::Segment(b, a)
            }
        }
        3 => Atom::Stratum(rng.gen_range(1..=n)),
        _ => {
            let k = rng.gen_range(1..=3);
            Atom::Set(
                (0..k)
                    .map(|_| {
                        let d = rng.gen_range(1..=n);
                        random_monomial(rng, ring, d)
                    })
                    .collect(),
            )
        }
    }
}

/// A random expression tree, not restricted to shapes the flat grammar
/// produces; parentheses make every tree printable.
pub fn random_expr(rng: &mut ChaCha8Rng, ring: Ring, depth: usize) -> IdealExpr {
    if depth == 0 || rng.gen_bool(0.4) {
        return IdealExpr::Atom(random_atom(rng, ring));
    }
    let (a, b) = (random_expr(rng, ring, depth - 1), random_expr(rng, ring, depth - 1));
    if rng.gen_bool(0.5) {
        IdealExpr::Sum(Box::new(a), Box::new(b))
    } else {
        IdealExpr::Intersection(Box::new(a), Box::new(b))
    }
}

fn is_antichain(masks: &[u64]) -> bool {
    masks.iter().enumerate().all(|(a, &x)| masks.iter().enumerate().all(|(b, &y)| a == b || x & y != x))
}

fn mask_of(vars: &[usize]) -> u64 {
    vars.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

#[cfg(feature = "parallel")]
fn par_map<T: Sync, F: Fn(&T) -> Outcome + Sync + Send>(jobs: usize, items: &[T], f: F) -> Vec<Outcome> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(|| items.par_iter().map(&f).collect())
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, F: Fn(&T) -> Outcome>(_jobs: usize, items: &[T], f: F) -> Vec<Outcome> {
    items.iter().map(f).collect()
}

fn plain(r: Record) -> Outcome {
    (r, None)
}

fn run_check(check: Check, cfg: &SweepConfig, ctx: &Ctx) -> Vec<Outcome> {
    let h = &ctx.h;
    let jobs = cfg.jobs;
    match check {
        Check::Initial => {
            let specs: Vec<LexSpec> = all_segments(cfg, 3, usize::MAX, |n| 2..=n - 1)
                .into_iter()
                .filter(|s| s.touches_top() && !s.v().contains_var(1))
                .collect();
            par_map(jobs, &specs, |spec| {
                let name = seg_name(spec);
                let mut disc = None;
                let res = decompose_initial(spec).and_then(|cf| {
                    disc = discrepancy(check, &name, &cf);
                    let oracle = decompose_via_facets(&spec.build())?;
                    Ok((components(&cf.decomposition), components(&oracle), cf.decomposition == oracle))
                });
                (outcome(check, name, "initial closed form", res), disc)
            })
        }
        Check::Final => {
            let specs: Vec<LexSpec> = all_segments(cfg, 3, usize::MAX, |n| 2..=n - 1)
                .into_iter()
                .filter(|s| s.touches_bottom() && !s.touches_top() && s.u().contains_var(1))
                .collect();
            par_map(jobs, &specs, |spec| {
                let name = seg_name(spec);
                let mut disc = None;
                let res = decompose_final(spec).and_then(|cf| {
                    disc = discrepancy(check, &name, &cf);
                    let oracle = decompose_via_facets(&spec.build())?;
                    Ok((components(&cf.decomposition), components(&oracle), cf.decomposition == oracle))
                });
                (outcome(check, name, "final closed form", res), disc)
            })
        }
        Check::Completely => {
            let specs = completely_specs(cfg);
            par_map(jobs, &specs, |spec| {
                let name = seg_name(spec);
                let direct = is_normalized_general(spec) && !spec.touches_top() && !spec.touches_bottom();
                let mut disc = None;
                let (source, res) = if direct {
                    let res = decompose_completely(spec).and_then(|cf| {
                        disc = discrepancy(check, &name, &cf);
                        let oracle = decompose_via_facets(&spec.build())?;
                        Ok((components(&cf.decomposition), components(&oracle), cf.decomposition == oracle))
                    });
                    ("completely closed form".to_string(), res)
                } else {
                    let norm = normalize(spec);
                    let found = closed_form_decomposition(spec);
                    let source = match &found {
                        Ok(Some((_, src))) => format!("{src:?} closed form after normalization (shift {})", norm.shift),
                        _ => "closed form after normalization".to_string(),
                    };
                    let res = found.and_then(|found| {
                        let oracle = decompose_via_facets(&spec.build())?;
                        Ok(match found {
                            Some((d, _)) => (components(&d), components(&oracle), d == oracle),
                            None => (Value::Null, components(&oracle), false),
                        })
                    });
                    (source, res)
                };
                (outcome(check, name, &source, res), disc)
            })
        }
        Check::Bridge => {
            let specs = completely_specs(cfg);
            // The identity needs x_1 | u and x_1 ∤ v; it fails for segments such
            // as L(x1x4, x1x4), so it is evaluated on the normalized core.
            par_map(jobs, &specs, |spec| {
                let source = "L(u,v) = L^i(v) ∩ L^f(u) on the normalized core";
                let Some(core) = normalize(spec).core else {
                    let mut r = outcome(check, seg_name(spec), source, Ok((Value::Null, Value::Null, true)));
                    r.status = Status::Skipped;
                    r.note = Some("normalizes to a single monomial".into());
                    return plain(r);
                };
                let res = (|| {
                    let direct = core.build();
                    let bridge = LexSpec::initial(core.v())?.build().intersect(&LexSpec::final_(core.u())?.build())?;
                    Ok((gens(&direct), gens(&bridge), direct == bridge))
                })();
                let name = format!("{} core {}", seg_name(spec), seg_name(&core));
                plain(outcome(check, name, source, res))
            })
        }
        Check::Invariants => {
            let specs: Vec<LexSpec> = all_segments(cfg, 3, usize::MAX, |n| 2..=n - 1)
                .into_iter()
                .filter(|s| invariants_closed_form(s).is_ok())
                .collect();
            par_map(jobs, &specs, |spec| {
                let inv = invariants_closed_form(spec).expect("filtered");
                let res = (|| {
                    let ideal = spec.build();
                    let delta = complex_of_ideal(&ideal)?;
                    let betti = h.betti_hochster(&ideal, Subject::Quotient)?;
                    let (codim, e_betti) = betti.codim_and_multiplicity();
                    let n = spec.n();
                    let dim_decomp = homology::dim(&ideal)?;
                    let dim_facets = delta.dim().map_or(0, |d| (d + 1) as usize);
                    let depth_pd = n - betti.pd().unwrap_or(0);
                    let depth_skel = h.depth_via_skeletons(&ideal)?;
                    let e_f = delta.multiplicity()?;
                    let oracle = json!({
                        "dim_decomposition": dim_decomp, "dim_facets": dim_facets, "dim_betti": n - codim,
                        "depth_hochster": depth_pd, "depth_skeletons": depth_skel,
                        "multiplicity_fvector": e_f, "multiplicity_betti": e_betti,
                    });
                    let computed = json!({ "dim": inv.dim, "depth": inv.depth, "multiplicity": inv.multiplicity });
                    let dims = [dim_decomp, dim_facets, n - codim].iter().all(|&d| d == inv.dim);
                    let depths = depth_pd == depth_skel && inv.depth.is_none_or(|d| d == depth_pd);
                    let mults = e_f == inv.multiplicity && e_betti == inv.multiplicity as i128;
                    Ok((computed, oracle, dims && depths && mults))
                })();
                let source = format!("{:?} closed-form invariants; depth {}", inv.source, if inv.depth.is_some() { "formula" } else { "computed" });
                plain(outcome(check, seg_name(spec), &source, res))
            })
        }
        Check::Betti => {
            let mut ideals = Vec::new();
            for n in cfg.min_n.max(1)..=cfg.max_n.min(EXHAUSTIVE_ANTICHAIN_VARS) {
                let ring = Ring::new(n).expect("n in range");
                ideals.extend(antichains(n).iter().map(|a| from_masks(ring, a)));
            }
            ideals.extend(random_ideals(cfg, check, RANDOM_CASES));
            par_map(jobs, &ideals, |ideal| {
                let res = (|| {
                    let a = h.betti_hochster(ideal, Subject::Ideal)?;
                    let b = h.betti_taylor(ideal, Subject::Ideal)?;
                    Ok((json!(a.to_json()), json!(b.to_json()), a == b))
                })();
                plain(outcome(check, ideal_name(ideal), "Hochster formula vs Taylor complex", res))
            })
        }
        Check::Scm => {
            let specs: Vec<LexSpec> = all_segments(cfg, 3, usize::MAX, |n| 2..=n - 1)
                .into_iter()
                .filter(|s| {
                    s.touches_top()
                        || s.touches_bottom()
                        || (is_normalized_general(s) && s.is_completely_lexsegment())
                })
                .collect();
            par_map(jobs, &specs, |spec| {
                let ideal = spec.build();
                let special = spec.touches_top() || spec.touches_bottom();
                let res = (|| {
                    let def = h.is_scm_definition(&ideal)?;
                    let dual = h.is_scm_dual(&ideal)?;
                    if special {
                        return Ok((json!(true), json!({ "definition": def, "dual": dual }), def && dual));
                    }
                    let crit = scm_characterization(spec, h)?;
                    let oracle = json!({ "definition": def, "dual": dual });
                    Ok((json!(crit.linear), oracle, crit.linear == def && def == dual))
                })();
                let source = match (spec.touches_top(), spec.touches_bottom()) {
                    (true, _) => "initial segments are SCM",
                    (_, true) => "final segments are SCM",
                    _ => "SCM criterion via (n-q+1)-linear intersection",
                };
                plain(outcome(check, seg_name(spec), source, res))
            })
        }
        Check::Dual => {
            let specs: Vec<LexSpec> = all_segments(cfg, 3, usize::MAX, |n| 2..=n - 1)
                .into_iter()
                .filter(|s| is_normalized_general(s) && s.is_completely_lexsegment())
                .collect();
            par_map(jobs, &specs, |spec| {
                let res = (|| {
                    let (n, q) = (spec.n(), spec.q());
                    let dual = spec.build().alexander_dual()?;
                    let formula = dual_component_n_minus_q(spec)?;
                    let direct = dual.graded_component(n - q)?;
                    let lower = dual_lower_components_linear(spec, h)?;
                    let mut degrees_ok = true;
                    if spec.touches_bottom() {
                        degrees_ok = dual.gens().iter().all(|g| g.degree() == n - q || g.degree() == n - q + 1);
                    }
                    let computed = json!({ "component": gens(&formula), "lower_identity": lower.identity, "lower_linear": lower.linear });
                    let oracle = json!({ "component": gens(&direct), "final_dual_degrees_ok": degrees_ok });
                    Ok((computed, oracle, formula == direct && lower.holds() && degrees_ok))
                })();
                plain(outcome(check, seg_name(spec), "dual components: degree n-q as segment sum, lower degrees critical", res))
            })
        }
        Check::Intersection => {
            let mut pairs = Vec::new();
            for n in cfg.ns(2, usize::MAX) {
                let ring = Ring::new(n).expect("n in range");
                for d in (1..n).filter(|&d| cfg.degree_ok(d)) {
                    let st = stratum(ring, d).expect("degree in range");
                    for &w in st.iter().filter(|w| w.contains_var(1)) {
                        for &m in st.iter().filter(|m| !m.contains_var(1)) {
                            pairs.push((w, m));
                        }
                    }
                }
            }
            par_map(jobs, &pairs, |&(w, m)| {
                let res = sum_linear_iff_intersection(w, m, h).map(|c| {
                    let computed = json!({ "sum_linear": c.sum_linear, "generated_in_d1": c.generated_in_d1 });
                    let oracle = json!({ "intersection_d1_linear": c.intersection_d1_linear, "equals_segment": c.equals_segment });
                    (computed, oracle, c.agrees())
                });
                let name = format!("n={} J=Li({w}) K=Lf({m})", w.ring().n());
                plain(outcome(check, name, "J+K d-linear iff J∩K (d+1)-linear", res))
            })
        }
        Check::DepthGt => {
            let specs: Vec<LexSpec> = all_segments(cfg, 2, usize::MAX, |n| 2..=n)
                .into_iter()
                .filter(is_normalized_general)
                .collect();
            par_map(jobs, &specs, |spec| {
                let name = seg_name(spec);
                let source = "depth > q-1 criterion via succ(v), pred(u)";
                let depth = h.depth(&spec.build());
                match depth_gt_qminus1(spec, h) {
                    Err(e @ (Error::NoSuccessor(_) | Error::NoPredecessor(_))) => {
                        let mut r = outcome(check, name, source, Ok((Value::Null, Value::Null, true)));
                        r.status = Status::Skipped;
                        r.oracle = depth.map_or(Value::Null, |d| json!({ "depth": d, "depth_gt_qminus1": d + 1 > spec.q() }));
                        r.note = Some(format!("criterion undefined: {e}"));
                        plain(r)
                    }
                    p => {
                        let res = p.and_then(|p| {
                            let d = depth?;
                            let computed = json!({ "holds": p.holds(), "top": p.top.support(), "bottom": p.bottom.support() });
                            Ok((computed, json!({ "depth": d, "depth_gt_qminus1": d + 1 > spec.q() }), p.holds() == (d + 1 > spec.q())))
                        });
                        plain(outcome(check, name, source, res))
                    }
                }
            })
        }
        Check::Complement => {
            let specs = all_segments(cfg, 2, usize::MAX, |n| 1..=n - 1);
            par_map(jobs, &specs, |spec| {
                let res = (|| {
                    let c = complement_segment(spec)?;
                    let a = h.has_linear_resolution(&spec.build())?;
                    let b = h.has_linear_resolution(&c.build())?;
                    Ok((json!({ "segment": spec.to_string(), "linear": a }), json!({ "complement": c.to_string(), "linear": b }), a == b))
                })();
                plain(outcome(check, seg_name(spec), "L(x_G,x_H) linear iff L(x_[n]\\H, x_[n]\\G) linear", res))
            })
        }
        Check::DepthBound => {
            let specs: Vec<LexSpec> =
                all_segments(cfg, 2, usize::MAX, |n| 1..=n).into_iter().filter(|s| s.u() != s.v()).collect();
            par_map(jobs, &specs, |spec| {
                let res = depth_bound(spec, h).map(|b| {
                    let n = spec.n();
                    let computed = json!({ "depth": b.depth, "bound": n - 2 });
                    let oracle = json!({ "dim": b.dim, "cm": b.cm, "within": b.within(n), "equality_iff_cm_dim_n_minus_2": b.equality_matches(n) });
                    (computed, oracle, b.within(n) && b.equality_matches(n))
                });
                plain(outcome(check, seg_name(spec), "depth <= n-2, equality iff CM of dim n-2", res))
            })
        }
        Check::Critical => {
            let hi = cfg.max_n.min(CRITICAL_MAX_VARS);
            let lo = cfg.min_n.max(2);
            let recipes: Vec<CriticalRecipe> = if lo > hi {
                Vec::new()
            } else {
                let mut rng = cfg.rng(check);
                (0..CRITICAL_CASES)
                    .map(|_| {
                        let n = rng.gen_range(lo..=hi);
                        CriticalRecipe::random(&mut rng, n, CRITICAL_MAX_GENS).expect("valid parameters")
                    })
                    .collect()
            };
            par_map(jobs, &recipes, |recipe| {
                let res = recipe.build().and_then(|c| {
                    let lq = c.ideal.has_linear_quotients(&c.order)?;
                    let cwl = h.is_componentwise_linear(&c.ideal)?;
                    let order: Vec<String> = c.order.iter().map(|g| g.to_string()).collect();
                    Ok((json!({ "order": order }), json!({ "linear_quotients": lq, "componentwise_linear": cwl }), lq && cwl))
                });
                let name = match recipe.build() {
                    Ok(c) => ideal_name(&c.ideal),
                    Err(_) => format!("{recipe:?}"),
                };
                plain(outcome(check, name, "critical ideals have linear quotients", res))
            })
        }
        Check::Duality => {
            let ideals = random_ideals(cfg, check, RANDOM_CASES);
            par_map(jobs, &ideals, |ideal| {
                let res = (|| {
                    let dual = ideal.alexander_dual()?;
                    let back = dual.alexander_dual()?;
                    let via_facets = decompose_via_facets(ideal)?.dual_ideal();
                    Ok((gens(&back), gens(ideal), &back == ideal && via_facets == dual))
                })();
                plain(outcome(check, ideal_name(ideal), "(I^∨)^∨ = I", res))
            })
        }
        Check::RoundTrip => {
            let ideals = random_ideals(cfg, check, RANDOM_CASES);
            par_map(jobs, &ideals, |ideal| {
                let res = (|| {
                    let delta = complex_of_ideal(ideal)?;
                    let back = delta.ideal();
                    let delta_again = complex_of_ideal(&back)?;
                    Ok((gens(&back), gens(ideal), &back == ideal && delta_again == delta))
                })();
                plain(outcome(check, ideal_name(ideal), "I = I_Δ(I) and Δ = Δ(I_Δ)", res))
            })
        }
        Check::Antichain => {
            let ideals = random_ideals(cfg, check, RANDOM_CASES);
            par_map(jobs, &ideals, |ideal| {
                let res = (|| {
                    let d = ideal.decompose()?;
                    let masks: Vec<u64> = d.components().iter().map(|p| mask_of(&p.vars())).collect();
                    let gen_masks: Vec<u64> = ideal.gens().iter().map(|g| mask_of(&g.support())).collect();
                    let ok = is_antichain(&masks) && is_antichain(&gen_masks) && &d.to_ideal() == ideal;
                    Ok((components(&d), gens(ideal), ok && d == decompose_via_facets(ideal)?))
                })();
                plain(outcome(check, ideal_name(ideal), "minimal primes form an antichain intersecting to I", res))
            })
        }
        Check::Parser => {
            let (lo, hi) = (cfg.min_n.max(1), cfg.max_n.min(8));
            let exprs: Vec<(usize, IdealExpr)> = if lo > hi {
                Vec::new()
            } else {
                let mut rng = cfg.rng(check);
                (0..RANDOM_CASES)
                    .map(|_| {
                        let n = rng.gen_range(lo..=hi);
                        (n, random_expr(&mut rng, Ring::new(n).expect("n in range"), 3))
                    })
                    .collect()
            };
            par_map(jobs, &exprs, |(n, e)| {
                let text = e.to_string();
                let res = parse(&text, *n).map(|back| (json!(back.to_string()), json!(text.clone()), &back == e));
                plain(outcome(check, format!("n={n} {text}"), "parse(print(e)) = e", res))
            })
        }
    }
}

fn completely_specs(cfg: &SweepConfig) -> Vec<LexSpec> {
    all_segments(cfg, 3, usize::MAX, |n| 2..=n - 1)
        .into_iter()
        .filter(|s| s.is_completely_lexsegment())
        .collect()
}

/// Runs the selected checks and assembles the report.
pub fn sweep(cfg: &SweepConfig) -> SweepReport {
    let ctx = Ctx { h: Homology::over(cfg.field) };
    let mut checks = cfg.checks.clone();
    checks.sort();
    checks.dedup();
    let mut records = Vec::new();
    let mut discrepancies = Vec::new();
    let mut summary = BTreeMap::new();
    for &check in &checks {
        let mut counts = Counts::default();
        for (record, disc) in run_check(check, cfg, &ctx) {
            match record.status {
                Status::Pass => counts.pass += 1,
                Status::Fail => counts.fail += 1,
                Status::Skipped => counts.skipped += 1,
            }
            records.push(record);
            discrepancies.extend(disc);
        }
        summary.insert(check, counts);
    }
    let degrees = match (cfg.degrees.start(), cfg.degrees.end()) {
        (lo, &usize::MAX) => format!("{lo}.."),
        (lo, hi) => format!("{lo}..{hi}"),
    };
    SweepReport {
        config: ConfigEcho {
            min_n: cfg.min_n,
            max_n: cfg.max_n,
            degrees,
            checks,
            seed: cfg.seed,
            field: cfg.field.to_string(),
        },
        summary,
        records,
        discrepancies,
    }
}

/// Parses `LO..HI` (inclusive), `LO..` or a single degree.
pub fn parse_degrees(text: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Syntax { offset: 0, message: format!("expected LO..HI, got '{text}'") };
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match text.split_once("..") {
        Some((lo, hi)) if hi.trim().is_empty() => Ok(num(lo)?..=usize::MAX),
        Some((lo, hi)) => {
            let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
            if lo > hi {
                return Err(bad());
            }
            Ok(lo..=hi)
        }
        None => {
            let d = num(text)?;
            Ok(d..=d)
        }
    }
}
