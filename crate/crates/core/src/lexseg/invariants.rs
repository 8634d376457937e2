use std::cmp::Ordering;

use serde::Serialize;

use super::{ClosedFormSource, LexSpec};
use crate::error::{Error, Result};
use crate::monomials::stratum;

/// Where a reported depth came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DepthSource {
    Formula,
    Computed,
}

/// Dimension, depth and multiplicity of `S/I` read off the closed forms.
///
/// `depth` is `None` for the general completely lexsegment case, which has
/// no formula; callers fill it from homology and mark it computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedFormInvariants {
    pub source: ClosedFormSource,
    pub dim: usize,
    pub depth: Option<usize>,
    pub multiplicity: u64,
}

/// `#{x_G : |G| = n - q, x_{F^c \ {1}} >_lex x_G}`.
fn lower_count(spec: &LexSpec) -> Result<u64> {
    let fc_tail = spec.f_complement_tail()?;
    let below = stratum(spec.ring(), spec.n() - spec.q())?
        .into_iter()
        .filter(|g| fc_tail.lex_cmp(*g).expect("same degree") == Ordering::Greater)
        .count();
    Ok(below as u64)
}

/// Closed-form invariants of a normalized initial, final or completely
/// lexsegment ideal of degree `q ≥ 2`.
///
/// Initial (`j_1 ≥ 2`, `v` not the stratum minimum): `dim = n - j_1`,
/// `depth = q - 1`, `e = s - 1`. Final (`x_1 | u`, not `I_{n,q}`): `dim = q`,
/// `depth = q - 1`, `e = t`. Completely (`x_1 | u`, `x_1 ∤ v`):
/// `dim = n - j_1`, `e = s - 1` if `j_1 < n - q` and `s + t - 1` if
/// `j_1 = n - q`.
pub fn invariants_closed_form(spec: &LexSpec) -> Result<ClosedFormInvariants> {
    let (n, q) = (spec.n(), spec.q());
    if q < 2 {
        return Err(Error::HypothesisNotMet("formulas need q ≥ 2"));
    }
    if spec.is_full_stratum() {
        return Err(Error::HypothesisNotMet("v = x_{n-q+1}...x_n: I = I_{n,q} is excluded"));
    }
    let a = spec.a_sets();
    let j1 = a.j(1);
    let s = a.multiplicity_split() as u64;
    if spec.touches_top() {
        if j1 == 1 {
            return Err(Error::NormalizationViolated("j_1 = 1: split off x_1 first"));
        }
        if spec.touches_bottom() {
            return Err(Error::HypothesisNotMet("initial multiplicity needs v ≠ x_{n-q+1}...x_n"));
        }
        return Ok(ClosedFormInvariants {
            source: ClosedFormSource::Initial,
            dim: n - j1,
            depth: Some(q - 1),
            multiplicity: s - 1,
        });
    }
    if !spec.u().contains_var(1) {
        return Err(Error::NormalizationViolated("x_1 must divide u"));
    }
    let t = lower_count(spec)?;
    if spec.touches_bottom() {
        return Ok(ClosedFormInvariants {
            source: ClosedFormSource::Final,
            dim: q,
            depth: Some(q - 1),
            multiplicity: t,
        });
    }
    if spec.v().contains_var(1) {
        return Err(Error::NormalizationViolated("x_1 must not divide v"));
    }
    if !spec.is_completely_lexsegment() {
        return Err(Error::NotCompletelyLexsegment);
    }
    // v is not the stratum minimum, so j_1 ≤ n - q
    let multiplicity = if j1 < n - q { s - 1 } else { s + t - 1 };
    Ok(ClosedFormInvariants { source: ClosedFormSource::Completely, dim: n - j1, depth: None, multiplicity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::complex_of_ideal;
    use crate::homology;
    use crate::monomials::{Ring, SqfMonomial};

    fn m(n: usize, s: &[usize]) -> SqfMonomial {
        SqfMonomial::new(Ring::new(n).unwrap(), s.iter().copied()).unwrap()
    }

    #[test]
    fn examples() {
        let inv = invariants_closed_form(&LexSpec::initial(m(4, &[2, 3])).unwrap()).unwrap();
        assert_eq!((inv.dim, inv.depth, inv.multiplicity), (2, Some(1), 2));
        let inv = invariants_closed_form(&LexSpec::final_(m(4, &[1, 3])).unwrap()).unwrap();
        assert_eq!((inv.dim, inv.depth, inv.multiplicity), (2, Some(1), 1));
        let full = LexSpec::initial(m(4, &[3, 4])).unwrap();
        assert!(matches!(invariants_closed_form(&full), Err(Error::HypothesisNotMet(_))));
    }

    #[test]
    fn matches_oracles_small() {
        for n in 3..=6 {
            let ring = Ring::new(n).unwrap();
            for q in 2..n {
                let st = stratum(ring, q).unwrap();
                for (a, &u) in st.iter().enumerate() {
                    for &v in &st[a..] {
                        let spec = LexSpec::new(u, v).unwrap();
                        let Ok(inv) = invariants_closed_form(&spec) else { continue };
                        let ideal = spec.build();
                        let delta = complex_of_ideal(&ideal).unwrap();
                        assert_eq!(inv.dim, homology::dim(&ideal).unwrap(), "{spec:?}");
                        assert_eq!(inv.multiplicity, delta.multiplicity().unwrap(), "{spec:?}");
                        if let Some(d) = inv.depth {
                            assert_eq!(d, homology::depth(&ideal).unwrap(), "{spec:?}");
                        }
                    }
                }
            }
        }
    }
}
