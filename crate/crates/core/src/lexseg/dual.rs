use super::LexSpec;
use crate::error::{Error, Result};
use crate::homology::Homology;
use crate::ideals::MonomialIdeal;
use crate::monomials::{Ring, SqfMonomial};

fn require_completely_normalized(spec: &LexSpec) -> Result<()> {
    if !spec.u().contains_var(1) || spec.v().contains_var(1) {
        return Err(Error::NormalizationViolated("need x_1 | u and x_1 ∤ v"));
    }
    if !spec.is_completely_lexsegment() {
        return Err(Error::NotCompletelyLexsegment);
    }
    Ok(())
}

/// `L^i(x_{A_s} x_{q+j_s-s+2} ... x_n)` with `s` the last index having
/// `|A_s| ≤ n - q`; zero when there is none.
pub(crate) fn dual_initial_part(spec: &LexSpec) -> Result<MonomialIdeal> {
    let ring = spec.ring();
    let a = spec.a_sets();
    let s = a.dual_split();
    if s == 0 {
        return Ok(MonomialIdeal::zero(ring));
    }
    let start = spec.q() + a.j(s) - s + 2;
    let bottom = SqfMonomial::new(ring, a.get(s).support().into_iter().chain(start..=spec.n()))?;
    Ok(LexSpec::initial(bottom)?.build())
}

/// `L^f(succ(x_{F^c \ {1}}))`; zero when `x_{F^c \ {1}}` is the stratum minimum.
pub(crate) fn dual_final_part(spec: &LexSpec) -> Result<MonomialIdeal> {
    match spec.f_complement_tail()?.succ() {
        Ok(top) => Ok(LexSpec::final_(top)?.build()),
        Err(Error::NoSuccessor(_)) => Ok(MonomialIdeal::zero(spec.ring())),
        Err(e) => Err(e),
    }
}

/// The degree-`(n - q)` squarefree component of `I^∨` as a sum of an initial
/// and a final segment.
pub fn dual_component_n_minus_q(spec: &LexSpec) -> Result<MonomialIdeal> {
    require_completely_normalized(spec)?;
    dual_initial_part(spec)?.sum(&dual_final_part(spec)?)
}

fn linear_or_zero(h: &Homology, ideal: &MonomialIdeal, d: usize) -> Result<bool> {
    if ideal.is_zero() {
        return Ok(true);
    }
    h.has_d_linear_resolution(ideal, d)
}

/// The ideal whose linearity decides sequential Cohen-Macaulayness.
#[derive(Clone, Debug)]
pub struct ScmCriterion {
    pub intersection: MonomialIdeal,
    pub degree: usize,
    pub linear: bool,
}

/// `I` is sequentially Cohen-Macaulay iff
/// `L^i(x_{A_s} x_{q+j_s-s+2} ... x_n) ∩ L^f(succ(x_{F^c \ {1}}))` has an
/// `(n - q + 1)`-linear resolution. A zero intersection counts as linear.
pub fn scm_characterization(spec: &LexSpec, h: &Homology) -> Result<ScmCriterion> {
    require_completely_normalized(spec)?;
    if spec.touches_top() || spec.touches_bottom() {
        return Err(Error::HypothesisNotMet("segment must be neither initial nor final"));
    }
    let intersection = dual_initial_part(spec)?.intersect(&dual_final_part(spec)?)?;
    let degree = spec.n() - spec.q() + 1;
    let linear = linear_or_zero(h, &intersection, degree)?;
    Ok(ScmCriterion { intersection, degree, linear })
}

/// Both sides of the sum/intersection equivalence for `J = L^i(w)`,
/// `K = L^f(m)`, plus the paired check of the segment description of `J ∩ K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionCheck {
    pub degree: usize,
    pub sum_linear: bool,
    pub intersection_d1_linear: bool,
    /// `J ∩ K` is generated in degree `d + 1`.
    pub generated_in_d1: bool,
    /// `J ∩ K = L(x_1 m, w x_{max([n] \ supp w)})`.
    pub equals_segment: bool,
}

impl IntersectionCheck {
    pub fn agrees(&self) -> bool {
        self.sum_linear == self.intersection_d1_linear && self.generated_in_d1 == self.equals_segment
    }
}

/// Computes both linearity verdicts independently; nothing is assumed.
pub fn sum_linear_iff_intersection(w: SqfMonomial, m: SqfMonomial, h: &Homology) -> Result<IntersectionCheck> {
    if w.ring() != m.ring() {
        return Err(Error::AmbientMismatch(w.ring().n(), m.ring().n()));
    }
    if w.degree() != m.degree() {
        return Err(Error::DegreeMismatch(w.degree(), m.degree()));
    }
    if !w.contains_var(1) || m.contains_var(1) {
        return Err(Error::HypothesisNotMet("need x_1 | w and x_1 ∤ m"));
    }
    let d = w.degree();
    let j = LexSpec::initial(w)?.build();
    let k = LexSpec::final_(m)?.build();
    let sum = j.sum(&k)?;
    let inter = j.intersect(&k)?;
    let sum_linear = h.has_d_linear_resolution(&sum, d)?;
    let intersection_d1_linear = h.has_d_linear_resolution(&inter, d + 1)?;
    let generated_in_d1 = inter.equigenerated_degree() == Some(d + 1);
    Ok(IntersectionCheck {
        degree: d,
        sum_linear,
        intersection_d1_linear,
        generated_in_d1,
        equals_segment: segment_description(w, m)?.is_some_and(|seg| seg == inter),
    })
}

/// `L(x_1 m, w x_{max([n] \ supp w)})`, or `None` when it is empty or undefined.
fn segment_description(w: SqfMonomial, m: SqfMonomial) -> Result<Option<MonomialIdeal>> {
    let Some(k) = w.complement().max_var() else { return Ok(None) };
    let top = m.with_var(1)?;
    let bottom = w.with_var(k)?;
    match LexSpec::new(top, bottom) {
        Ok(spec) => Ok(Some(spec.build())),
        Err(Error::EmptySegment(..)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Evidence for the structure of `I^∨` below degree `n - q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerComponents {
    /// `I^∨_{<j>} = (x_{A_t} : |A_t| ≤ n - q)_{<j>}` for every `j < n - q`.
    pub identity: bool,
    /// Each `I^∨_{<j>}`, `j < n - q`, is zero or has a `j`-linear resolution.
    pub linear: bool,
}

impl LowerComponents {
    pub fn holds(&self) -> bool {
        self.identity && self.linear
    }
}

pub fn dual_lower_components_linear(spec: &LexSpec, h: &Homology) -> Result<LowerComponents> {
    require_completely_normalized(spec)?;
    let ring: Ring = spec.ring();
    let bound = spec.n() - spec.q();
    let dual = spec.build().alexander_dual()?;
    let small = spec.a_sets().sets().iter().copied().filter(|a| a.degree() <= bound).collect::<Vec<_>>();
    let small = MonomialIdeal::minimalize(ring, small)?;
    let (mut identity, mut linear) = (true, true);
    for j in 1..bound {
        let component = dual.graded_component(j)?;
        identity &= component == small.graded_component(j)?;
        linear &= linear_or_zero(h, &component, j)?;
    }
    Ok(LowerComponents { identity, linear })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomials::stratum;

    fn m(n: usize, s: &[usize]) -> SqfMonomial {
        SqfMonomial::new(Ring::new(n).unwrap(), s.iter().copied()).unwrap()
    }

    fn completely_specs(n: usize) -> Vec<LexSpec> {
        let ring = Ring::new(n).unwrap();
        let mut out = Vec::new();
        for q in 2..n {
            let st = stratum(ring, q).unwrap();
            for (a, &u) in st.iter().enumerate() {
                for &v in &st[a..] {
                    let spec = LexSpec::new(u, v).unwrap();
                    if u.contains_var(1) && !v.contains_var(1) && spec.is_completely_lexsegment() {
                        out.push(spec);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn dual_component_matches_direct_dual() {
        for n in 3..=6 {
            for spec in completely_specs(n) {
                let direct = spec.build().alexander_dual().unwrap().graded_component(n - spec.q()).unwrap();
                assert_eq!(dual_component_n_minus_q(&spec).unwrap(), direct, "{spec:?}");
            }
        }
    }

    #[test]
    fn scm_criterion_agrees_with_definition() {
        let h = Homology::default();
        for n in 4..=6 {
            for spec in completely_specs(n) {
                let Ok(c) = scm_characterization(&spec, &h) else { continue };
                let ideal = spec.build();
                assert_eq!(c.linear, h.is_scm_definition(&ideal).unwrap(), "{spec:?}");
                assert_eq!(c.linear, h.is_scm_dual(&ideal).unwrap(), "{spec:?}");
            }
        }
        let initial = LexSpec::initial(m(5, &[2, 4])).unwrap();
        assert!(matches!(scm_characterization(&initial, &h), Err(Error::HypothesisNotMet(_))));
    }

    #[test]
    fn lower_components() {
        let h = Homology::default();
        for n in 3..=6 {
            for spec in completely_specs(n) {
                assert!(dual_lower_components_linear(&spec, &h).unwrap().holds(), "{spec:?}");
            }
        }
    }

    #[test]
    fn sum_and_intersection() {
        let h = Homology::default();
        for n in 3..=6 {
            let ring = Ring::new(n).unwrap();
            for d in 1..n {
                for w in stratum(ring, d).unwrap().into_iter().filter(|w| w.contains_var(1)) {
                    for mm in stratum(ring, d).unwrap().into_iter().filter(|x| !x.contains_var(1)) {
                        let c = sum_linear_iff_intersection(w, mm, &h).unwrap();
                        assert!(c.agrees(), "w={w} m={mm}: {c:?}");
                    }
                }
            }
        }
        assert!(sum_linear_iff_intersection(m(4, &[2]), m(4, &[3]), &h).is_err());
    }
}
