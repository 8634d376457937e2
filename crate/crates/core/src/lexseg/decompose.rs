use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::{normalize, LexSpec};
use crate::error::{Error, Result};
use crate::ideals::{Decomposition, PrimeSupport};
use crate::monomials::{stratum, SqfMonomial};

/// Which family of a closed-form decomposition produced a component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `P_{A_t}`.
    Staircase,
    /// `P_{A_t}` with `|A_t| = n - q + 1`, kept when `u/x_1 ≥ v/x_{j_t}`.
    StaircaseBoundary,
    /// `P_{G^c}` for `|G| = q - 1` meeting every `A_t`.
    Transversal,
    /// `P_G`, `|G| = n - q + 1`, `x_G ≥ x_{F^c}`.
    FinalUpper,
    /// `P_G`, `1 ∉ G`, `|G| = n - q + 1`, `x_{G \ min G} ≥ x_{F^c \ {1}}`.
    FinalShifted,
    /// `P_G`, `|G| = n - q`, `x_{F^c \ {1}} > x_G`.
    FinalLower,
}

/// A decomposition produced by a closed formula, with its literal families.
#[derive(Clone, Debug)]
pub struct ClosedForm {
    pub decomposition: Decomposition,
    pub families: Vec<(Family, PrimeSupport)>,
}

impl ClosedForm {
    fn from_families(spec: &LexSpec, families: Vec<(Family, PrimeSupport)>) -> Self {
        let decomposition = Decomposition::minimal(spec.ring(), families.iter().map(|&(_, p)| p))
            .expect("families built in the spec's ring");
        ClosedForm { decomposition, families }
    }

    /// Members listed more than once across the families.
    pub fn duplicates(&self) -> usize {
        let distinct: BTreeSet<PrimeSupport> = self.families.iter().map(|&(_, p)| p).collect();
        self.families.len() - distinct.len()
    }

    /// Distinct members that are not minimal, hence absent from the antichain.
    pub fn non_minimal(&self) -> Vec<PrimeSupport> {
        let kept: BTreeSet<PrimeSupport> = self.decomposition.components().iter().copied().collect();
        let distinct: BTreeSet<PrimeSupport> = self.families.iter().map(|&(_, p)| p).collect();
        distinct.difference(&kept).copied().collect()
    }

    /// True when the literal union already is the antichain.
    pub fn literal_is_minimal(&self) -> bool {
        self.duplicates() == 0 && self.non_minimal().is_empty()
    }
}

fn prime(m: SqfMonomial) -> PrimeSupport {
    PrimeSupport::from_monomial(m).expect("closed-form components are nonempty")
}

fn meets_all(g: SqfMonomial, sets: &[SqfMonomial]) -> bool {
    sets.iter().all(|a| !a.is_coprime(g))
}

fn lex(a: SqfMonomial, b: SqfMonomial) -> Ordering {
    a.lex_cmp(b).expect("same ring and degree")
}

/// Minimal primary decomposition of an initial segment `L^i(v)`, `j_1 ≥ 2`:
/// the primes `P_{A_t}` and `P_{F^c}` for `|F| = q - 1` meeting every `A_t`.
pub fn decompose_initial(spec: &LexSpec) -> Result<ClosedForm> {
    if !spec.touches_top() {
        return Err(Error::HypothesisNotMet("segment must be initial"));
    }
    if spec.v().contains_var(1) {
        return Err(Error::NormalizationViolated("j_1 = 1: split off x_1 first"));
    }
    let a = spec.a_sets();
    let mut families: Vec<(Family, PrimeSupport)> =
        a.sets().iter().map(|&s| (Family::Staircase, prime(s))).collect();
    for f in stratum(spec.ring(), spec.q() - 1)? {
        if meets_all(f, a.sets()) {
            families.push((Family::Transversal, prime(f.complement())));
        }
    }
    Ok(ClosedForm::from_families(spec, families))
}

/// The three families of the final-segment decomposition for `u = x_1 x_F`.
fn final_families(spec: &LexSpec) -> Result<Vec<(Family, PrimeSupport)>> {
    let ring = spec.ring();
    let (n, q) = (spec.n(), spec.q());
    let fc = spec.u_tail()?.complement();
    let fc_tail = spec.f_complement_tail()?;
    let mut families = Vec::new();
    for g in stratum(ring, n - q + 1)? {
        if lex(g, fc) != Ordering::Less {
            families.push((Family::FinalUpper, prime(g)));
        }
    }
    for g in shifted_candidates(spec)? {
        families.push((Family::FinalShifted, prime(g)));
    }
    for g in stratum(ring, n - q)? {
        if lex(fc_tail, g) == Ordering::Greater {
            families.push((Family::FinalLower, prime(g)));
        }
    }
    Ok(families)
}

/// `G ⊆ [n] \ {1}`, `|G| = n - q + 1`, `x_{G \ min G} ≥ x_{F^c \ {1}}`.
fn shifted_candidates(spec: &LexSpec) -> Result<Vec<SqfMonomial>> {
    let fc_tail = spec.f_complement_tail()?;
    Ok(stratum(spec.ring(), spec.n() - spec.q() + 1)?
        .into_iter()
        .filter(|g| !g.contains_var(1))
        .filter(|g| {
            let rest = g.without_var(g.min_var().expect("nonempty"));
            lex(rest, fc_tail) != Ordering::Less
        })
        .collect())
}

/// Minimal primary decomposition of a final segment `L^f(u)` with `x_1 | u`
/// and `L^f(u) ≠ I_{n,q}`.
pub fn decompose_final(spec: &LexSpec) -> Result<ClosedForm> {
    if !spec.touches_bottom() {
        return Err(Error::HypothesisNotMet("segment must be final"));
    }
    if !spec.u().contains_var(1) {
        return Err(Error::NormalizationViolated("x_1 must divide u: restrict to variables ≥ min(u)"));
    }
    if spec.touches_top() {
        return Err(Error::HypothesisNotMet("final segment must differ from I_{n,q}"));
    }
    Ok(ClosedForm::from_families(spec, final_families(spec)?))
}

/// Minimal primary decomposition of a completely lexsegment `L(u, v)` with
/// `x_1 | u`, `x_1 ∤ v`, neither initial nor final.
pub fn decompose_completely(spec: &LexSpec) -> Result<ClosedForm> {
    if !spec.u().contains_var(1) || spec.v().contains_var(1) {
        return Err(Error::NormalizationViolated("need x_1 | u and x_1 ∤ v"));
    }
    if spec.touches_top() || spec.touches_bottom() {
        return Err(Error::HypothesisNotMet("segment must be neither initial nor final"));
    }
    if !spec.is_completely_lexsegment() {
        return Err(Error::NotCompletelyLexsegment);
    }
    let ring = spec.ring();
    let (n, q) = (spec.n(), spec.q());
    let a = spec.a_sets();
    let u_tail = spec.u_tail()?;
    let x2_divides_u = spec.u().contains_var(2);
    let mut families = Vec::new();
    for t in 1..=q {
        let at = a.get(t);
        if at.degree() <= n - q {
            families.push((Family::Staircase, prime(at)));
        } else if at.degree() == n - q + 1 {
            let v_rest = spec.v().without_var(a.j(t));
            if lex(u_tail, v_rest) != Ordering::Less {
                families.push((Family::StaircaseBoundary, prime(at)));
            }
        }
    }
    for g in stratum(ring, q - 1)? {
        if x2_divides_u && g.contains_var(1) {
            continue;
        }
        if meets_all(g, a.sets()) && lex(u_tail, g) != Ordering::Less {
            families.push((Family::Transversal, prime(g.complement())));
        }
    }
    if x2_divides_u {
        for g in shifted_candidates(spec)? {
            families.push((Family::FinalShifted, prime(g)));
        }
    }
    let final_part = LexSpec::final_(spec.u())?;
    for p in decompose_final(&final_part)?.decomposition.components() {
        if p.height() == n - q {
            families.push((Family::FinalLower, *p));
        }
    }
    Ok(ClosedForm::from_families(spec, families))
}

/// Which formula produced a closed-form decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormSource {
    /// Segment of a single monomial times variables split off.
    Monomial,
    /// Degree-one segment: a prime generated by consecutive variables.
    LinearPrime,
    Initial,
    Final,
    /// `I_{n,q} = ∩_{|F| = q-1} P_{F^c}`.
    FullStratum,
    Completely,
}

/// Closed-form decomposition of any segment that has one, after
/// normalization. `Ok(None)` means the segment is general and not completely
/// lexsegment, where no formula applies.
pub fn closed_form_decomposition(spec: &LexSpec) -> Result<Option<(Decomposition, ClosedFormSource)>> {
    let norm = normalize(spec);
    let Some(core) = norm.core else {
        return Ok(Some((norm.reinflate(None), ClosedFormSource::Monomial)));
    };
    let (decomposition, source) = if core.q() == 1 {
        let last = core.v().max_var().expect("degree one");
        let interval = crate::monomials::SqfMonomial::new(core.ring(), 1..=last)?;
        let d = Decomposition::minimal(core.ring(), [prime(interval)])?;
        (d, ClosedFormSource::LinearPrime)
    } else if core.is_full_stratum() {
        let comps = stratum(core.ring(), core.q() - 1)?.into_iter().map(|f| prime(f.complement()));
        (Decomposition::minimal(core.ring(), comps)?, ClosedFormSource::FullStratum)
    } else if core.touches_top() {
        (decompose_initial(&core)?.decomposition, ClosedFormSource::Initial)
    } else if core.touches_bottom() {
        (decompose_final(&core)?.decomposition, ClosedFormSource::Final)
    } else if core.is_completely_lexsegment() {
        (decompose_completely(&core)?.decomposition, ClosedFormSource::Completely)
    } else {
        return Ok(None);
    };
    Ok(Some((norm.reinflate(Some(&decomposition)), source)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::decompose_via_facets;
    use crate::monomials::Ring;

    fn r(n: usize) -> Ring {
        Ring::new(n).unwrap()
    }

    fn m(n: usize, s: &[usize]) -> SqfMonomial {
        SqfMonomial::new(r(n), s.iter().copied()).unwrap()
    }

    fn comps(d: &Decomposition) -> Vec<Vec<usize>> {
        d.components().iter().map(|p| p.vars()).collect()
    }

    #[test]
    fn initial_examples() {
        let spec = LexSpec::initial(m(4, &[2, 3])).unwrap();
        let cf = decompose_initial(&spec).unwrap();
        assert_eq!(comps(&cf.decomposition), vec![vec![1, 2], vec![1, 3], vec![2, 3, 4]]);
        assert!(cf.literal_is_minimal());

        let spec = LexSpec::initial(m(5, &[2, 4])).unwrap();
        let cf = decompose_initial(&spec).unwrap();
        assert_eq!(cf.decomposition, decompose_via_facets(&spec.build()).unwrap());

        // v = x_{n-q+1} ... x_n: pure, every component of height n - q + 1
        let spec = LexSpec::initial(m(6, &[4, 5, 6])).unwrap();
        let cf = decompose_initial(&spec).unwrap();
        assert!(cf.decomposition.components().iter().all(|p| p.height() == 4));
        assert_eq!(cf.decomposition.len(), 15);

        let bad = LexSpec::initial(m(4, &[1, 3])).unwrap();
        assert!(matches!(decompose_initial(&bad), Err(Error::NormalizationViolated(_))));
    }

    #[test]
    fn final_examples() {
        let spec = LexSpec::final_(m(4, &[1, 3])).unwrap();
        let cf = decompose_final(&spec).unwrap();
        assert_eq!(comps(&cf.decomposition), vec![vec![3, 4], vec![1, 2, 3], vec![1, 2, 4]]);

        let spec = LexSpec::final_(m(6, &[1, 6])).unwrap();
        let cf = decompose_final(&spec).unwrap();
        assert_eq!(cf.decomposition, decompose_via_facets(&spec.build()).unwrap());

        let full = LexSpec::final_(m(5, &[1, 2])).unwrap();
        assert!(matches!(decompose_final(&full), Err(Error::HypothesisNotMet(_))));
        let shifted = LexSpec::final_(m(5, &[2, 4])).unwrap();
        assert!(matches!(decompose_final(&shifted), Err(Error::NormalizationViolated(_))));
    }

    #[test]
    fn final_edge_ideal_covers() {
        // u = x1 x_{i2}, i2 > 2: covers [n] \ {s} for s ≥ i2, [n] \ {1, s} for 2 ≤ s < i2
        for n in 4..=7 {
            for i2 in 3..=n {
                let spec = LexSpec::final_(m(n, &[1, i2])).unwrap();
                let cf = decompose_final(&spec).unwrap();
                let full: Vec<usize> = (1..=n).collect();
                let mut expected: Vec<Vec<usize>> = Vec::new();
                for s in i2..=n {
                    expected.push(full.iter().copied().filter(|&x| x != s).collect());
                }
                for s in 2..i2 {
                    expected.push(full.iter().copied().filter(|&x| x != 1 && x != s).collect());
                }
                let mut got = comps(&cf.decomposition);
                got.sort();
                expected.sort();
                assert_eq!(got, expected, "n={n} i2={i2}");
            }
        }
    }

    #[test]
    fn completely_examples() {
        let spec = LexSpec::new(m(4, &[1, 3]), m(4, &[2, 3])).unwrap();
        let cf = decompose_completely(&spec).unwrap();
        let li = LexSpec::initial(spec.v()).unwrap().build();
        let lf = LexSpec::final_(spec.u()).unwrap().build();
        let bridge = li.intersect(&lf).unwrap();
        assert_eq!(bridge, spec.build());
        assert_eq!(cf.decomposition, decompose_via_facets(&bridge).unwrap());

        let not_complete = LexSpec::new(m(5, &[1, 5]), m(5, &[2, 4])).unwrap();
        if !not_complete.is_completely_lexsegment() {
            assert!(matches!(decompose_completely(&not_complete), Err(Error::NotCompletelyLexsegment)));
        }
        let initial = LexSpec::new(m(4, &[1, 2]), m(4, &[2, 3])).unwrap();
        assert!(matches!(decompose_completely(&initial), Err(Error::HypothesisNotMet(_))));
    }

    #[test]
    fn completely_edge_ideal_shape() {
        // q = 2, u = x1 x_{i2} (i2 > 2), v = x_{j1} x_{j2}: P_{A_1}, P_{A_2} (if j2 < n),
        // P_{[n]\{s}} for i2 ≤ s < j1 (≤ j1 when j2 = n), P_{[n]\{1,s}} for 2 ≤ s < i2
        for n in 4..=7 {
            let ring = r(n);
            for u in stratum(ring, 2).unwrap() {
                for v in stratum(ring, 2).unwrap() {
                    let Ok(spec) = LexSpec::new(u, v) else { continue };
                    if !u.contains_var(1) || u.contains_var(2) || v.contains_var(1) || spec.touches_bottom() {
                        continue;
                    }
                    if !spec.is_completely_lexsegment() {
                        continue;
                    }
                    let i2 = u.max_var().unwrap();
                    let (j1, j2) = (v.min_var().unwrap(), v.max_var().unwrap());
                    let full: Vec<usize> = (1..=n).collect();
                    let mut expected: Vec<Vec<usize>> = vec![(1..=j1).collect()];
                    if j2 < n {
                        expected.push((1..=j2).filter(|&x| x != j1).collect());
                    }
                    let top = if j2 == n { j1 } else { j1 - 1 };
                    for s in i2..=top {
                        expected.push(full.iter().copied().filter(|&x| x != s).collect());
                    }
                    for s in 2..i2 {
                        expected.push(full.iter().copied().filter(|&x| x != 1 && x != s).collect());
                    }
                    let mut got = comps(&decompose_completely(&spec).unwrap().decomposition);
                    got.sort();
                    expected.sort();
                    assert_eq!(got, expected, "{spec:?}");
                }
            }
        }
    }

    #[test]
    fn closed_form_for_unnormalized_segments() {
        for n in 3..=6 {
            let ring = r(n);
            for q in 1..=n {
                let st = stratum(ring, q).unwrap();
                for (a, &u) in st.iter().enumerate() {
                    for &v in &st[a..] {
                        let spec = LexSpec::new(u, v).unwrap();
                        let oracle = decompose_via_facets(&spec.build()).unwrap();
                        match closed_form_decomposition(&spec).unwrap() {
                            Some((d, _)) => assert_eq!(d, oracle, "{spec:?}"),
                            None => assert!(!spec.is_completely_lexsegment()),
                        }
                    }
                }
            }
        }
    }
}
