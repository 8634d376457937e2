use std::cmp::Ordering;

use super::LexSpec;
use crate::error::{Error, Result};
use crate::homology::{self, Homology};

/// The data behind the `depth(S/I) > q - 1` test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthPredicate {
    /// `succ(v) / x_{max(succ(v))}`.
    pub top: crate::SqfMonomial,
    /// `pred(u) / x_1`.
    pub bottom: crate::SqfMonomial,
    /// `top ≥_lex bottom`.
    pub ordered: bool,
    /// `L(top, bottom)` has a linear resolution (false when not ordered).
    pub linear: bool,
}

impl DepthPredicate {
    pub fn holds(&self) -> bool {
        self.ordered && self.linear
    }
}

/// For `x_1 | u`, `x_1 ∤ v`, evaluates the proposed criterion for
/// `depth(S/I) > q - 1`: `succ(v)/x_{max(succ(v))} ≥ pred(u)/x_1` and the
/// segment between them has a linear resolution. Errors when `succ(v)` or
/// `pred(u)` does not exist.
///
/// The criterion is only evaluated, not trusted: it matches the actual depth
/// for `n ≤ 4` but not beyond (`L(x1x2x4, x2x3x4)` in five variables
/// satisfies it with depth exactly `q - 1`).
pub fn depth_gt_qminus1(spec: &LexSpec, h: &Homology) -> Result<DepthPredicate> {
    if !spec.u().contains_var(1) || spec.v().contains_var(1) {
        return Err(Error::NormalizationViolated("need x_1 | u and x_1 ∤ v"));
    }
    if spec.q() < 2 {
        return Err(Error::HypothesisNotMet("need q ≥ 2"));
    }
    let next = spec.v().succ()?;
    let top = next.without_var(next.max_var().expect("q ≥ 2"));
    let bottom = spec.u().pred()?.without_var(1);
    let ordered = top.lex_cmp(bottom)? != Ordering::Less;
    let linear = ordered && h.has_linear_resolution(&LexSpec::new(top, bottom)?.build())?;
    Ok(DepthPredicate { top, bottom, ordered, linear })
}

/// `L(x_{[n] \ H}, x_{[n] \ G})` for `L(x_G, x_H)`: complementation reverses
/// lex order, so the endpoints swap.
///
/// Linearity of the two segments is claimed to be equivalent; that holds for
/// `n ≤ 4` but fails from `n = 5` on, e.g. `L(x1x4, x2x4)` is not linear while
/// `L(x1x3x5, x2x3x5)` is.
pub fn complement_segment(spec: &LexSpec) -> Result<LexSpec> {
    if spec.q() == spec.n() {
        return Err(Error::DegreeOutOfRange { degree: 0, n: spec.n() });
    }
    LexSpec::new(spec.v().complement(), spec.u().complement())
}

/// The bound `depth(S/I) ≤ n - 2` for `u ≠ v`, with the equality case.
/// The bound holds; equality without Cohen-Macaulayness does occur
/// (`x_3(x_1, x_2)` in three variables).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DepthBound {
    pub depth: usize,
    pub dim: usize,
    pub cm: bool,
}

impl DepthBound {
    pub fn within(&self, n: usize) -> bool {
        self.depth + 2 <= n
    }

    /// Whether "equality iff Cohen-Macaulay of dimension `n - 2`" holds here.
    pub fn equality_matches(&self, n: usize) -> bool {
        (self.depth + 2 == n) == (self.cm && self.dim + 2 == n)
    }
}

pub fn depth_bound(spec: &LexSpec, h: &Homology) -> Result<DepthBound> {
    if spec.u() == spec.v() {
        return Err(Error::HypothesisNotMet("need u ≠ v"));
    }
    let ideal = spec.build();
    Ok(DepthBound { depth: h.depth(&ideal)?, dim: homology::dim(&ideal)?, cm: h.is_cm(&ideal)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomials::{stratum, Ring};

    fn all_specs(n: usize) -> Vec<LexSpec> {
        let ring = Ring::new(n).unwrap();
        let mut out = Vec::new();
        for q in 1..=n {
            let st = stratum(ring, q).unwrap();
            for (a, &u) in st.iter().enumerate() {
                for &v in &st[a..] {
                    out.push(LexSpec::new(u, v).unwrap());
                }
            }
        }
        out
    }

    fn seg(n: usize, u: &[usize], v: &[usize]) -> LexSpec {
        let ring = Ring::new(n).unwrap();
        let m = |s: &[usize]| crate::SqfMonomial::new(ring, s.iter().copied()).unwrap();
        LexSpec::new(m(u), m(v)).unwrap()
    }

    #[test]
    fn predicate_matches_homology_depth_up_to_four() {
        let h = Homology::default();
        for n in 3..=4 {
            for spec in all_specs(n) {
                let Ok(p) = depth_gt_qminus1(&spec, &h) else { continue };
                let depth = h.depth(&spec.build()).unwrap();
                assert_eq!(p.holds(), depth + 1 > spec.q(), "{spec:?}: {p:?} depth {depth}");
            }
        }
    }

    #[test]
    fn predicate_counterexample() {
        // Δ^(2) has vertex 1 with a disconnected link, so depth stays at q - 1
        let h = Homology::default();
        let spec = seg(5, &[1, 2, 4], &[2, 3, 4]);
        let p = depth_gt_qminus1(&spec, &h).unwrap();
        assert!(p.holds());
        assert_eq!(h.depth(&spec.build()).unwrap(), 2);
        assert_eq!(h.depth_via_skeletons(&spec.build()).unwrap(), 2);
    }

    #[test]
    fn boundaries_error() {
        let h = Homology::default();
        let ring = Ring::new(5).unwrap();
        let top = ring.stratum_max(2).unwrap();
        let bottom = ring.stratum_min(2).unwrap();
        let mid = seg(5, &[2, 4], &[2, 4]).u();
        assert!(matches!(depth_gt_qminus1(&LexSpec::new(top, mid).unwrap(), &h), Err(Error::NoPredecessor(_))));
        let low = seg(5, &[1, 3], &[1, 3]).u();
        assert!(matches!(depth_gt_qminus1(&LexSpec::new(low, bottom).unwrap(), &h), Err(Error::NoSuccessor(_))));
    }

    #[test]
    fn complement_equivalence_up_to_four() {
        let h = Homology::default();
        for n in 3..=4 {
            for spec in all_specs(n).into_iter().filter(|s| s.q() < n) {
                let c = complement_segment(&spec).unwrap();
                let a = h.has_linear_resolution(&spec.build()).unwrap();
                let b = h.has_linear_resolution(&c.build()).unwrap();
                assert_eq!(a, b, "{spec:?} vs {c:?}");
            }
        }
    }

    #[test]
    fn complement_counterexample() {
        // edge ideal of the path 5-1-4-2-3: its complement graph is not chordal
        let h = Homology::default();
        let spec = seg(5, &[1, 4], &[2, 4]);
        let c = complement_segment(&spec).unwrap();
        assert_eq!(c, seg(5, &[1, 3, 5], &[2, 3, 5]));
        assert!(!h.has_linear_resolution(&spec.build()).unwrap());
        assert!(h.has_linear_resolution(&c.build()).unwrap());
    }

    #[test]
    fn bound_n_minus_2() {
        let h = Homology::default();
        for n in 3..=6 {
            for spec in all_specs(n).into_iter().filter(|s| s.u() != s.v()) {
                assert!(depth_bound(&spec, &h).unwrap().within(n), "{spec:?}");
            }
        }
        // equality without Cohen-Macaulayness: x3 (x1, x2)
        let b = depth_bound(&seg(3, &[1, 3], &[2, 3]), &h).unwrap();
        assert_eq!(b, DepthBound { depth: 1, dim: 2, cm: false });
        assert!(!b.equality_matches(3));
    }
}
