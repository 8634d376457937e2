//! Squarefree lexsegment ideals `(L(u, v))` and the closed forms attached to
//! them: minimal primary decompositions, dimension, depth and multiplicity
//! formulas, the structure of the Alexander dual, the sequentially
//! Cohen-Macaulay criterion and the depth bounds.
//!
//! Throughout, `u = x_1 x_F` with `F = {i_2, ..., i_q}` and
//! `v = x_{j_1} ... x_{j_q}`. The closed forms expect normalized input
//! (`x_1 | u`, and `x_1 ∤ v` where relevant); [`normalize`] reduces any
//! segment to that shape.

mod critical;
mod decompose;
mod depth;
mod dual;
mod invariants;

use std::cmp::Ordering;
use std::fmt;

pub use critical::{CriticalIdeal, CriticalRecipe, CriticalStep};
pub use decompose::{
    closed_form_decomposition, decompose_completely, decompose_final, decompose_initial,
    ClosedForm, ClosedFormSource, Family,
};
pub use depth::{complement_segment, depth_bound, depth_gt_qminus1, DepthBound, DepthPredicate};
pub use dual::{
    dual_component_n_minus_q, dual_lower_components_linear, scm_characterization,
    sum_linear_iff_intersection, IntersectionCheck, LowerComponents, ScmCriterion,
};
pub use invariants::{invariants_closed_form, ClosedFormInvariants, DepthSource};

use crate::error::{Error, Result};
use crate::ideals::MonomialIdeal;
use crate::monomials::{is_lexsegment_set, lexsegment, shadow, Ring, SqfMonomial};

/// Which end of the degree stratum the segment touches.
///
/// Classification is by the literal endpoints: `u = x_1 ... x_q` is initial
/// (even when `v` is interior), otherwise `v = x_{n-q+1} ... x_n` is final.
/// The full stratum `I_{n,q}` therefore counts as initial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SegmentKind {
    Initial,
    Final,
    General,
}

/// A squarefree lexsegment `L(u, v)` of degree `q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LexSpec {
    u: SqfMonomial,
    v: SqfMonomial,
}

impl LexSpec {
    pub fn new(u: SqfMonomial, v: SqfMonomial) -> Result<Self> {
        if u.lex_cmp(v)? == Ordering::Less {
            return Err(Error::EmptySegment(u.to_string(), v.to_string()));
        }
        if u.degree() == 0 {
            return Err(Error::DegreeOutOfRange { degree: 0, n: u.ring().n() });
        }
        Ok(LexSpec { u, v })
    }

    /// `L^i(v)`.
    pub fn initial(v: SqfMonomial) -> Result<Self> {
        Self::new(v.ring().stratum_max(v.degree())?, v)
    }

    /// `L^f(u)`.
    pub fn final_(u: SqfMonomial) -> Result<Self> {
        Self::new(u, u.ring().stratum_min(u.degree())?)
    }

    pub fn ring(&self) -> Ring {
        self.u.ring()
    }

    pub fn n(&self) -> usize {
        self.ring().n()
    }

    pub fn q(&self) -> usize {
        self.u.degree()
    }

    pub fn u(&self) -> SqfMonomial {
        self.u
    }

    pub fn v(&self) -> SqfMonomial {
        self.v
    }

    pub fn kind(&self) -> SegmentKind {
        if self.touches_top() {
            SegmentKind::Initial
        } else if self.touches_bottom() {
            SegmentKind::Final
        } else {
            SegmentKind::General
        }
    }

    pub fn touches_top(&self) -> bool {
        self.u.lex_rank() == 0
    }

    pub fn touches_bottom(&self) -> bool {
        self.v.succ().is_err()
    }

    /// The whole stratum, i.e. `I_{n,q}`.
    pub fn is_full_stratum(&self) -> bool {
        self.touches_top() && self.touches_bottom()
    }

    pub fn monomials(&self) -> Vec<SqfMonomial> {
        lexsegment(self.u, self.v).expect("validated at construction")
    }

    pub fn build(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.ring(), self.monomials()).expect("single ring")
    }

    /// Every iterated shadow of the segment is again a lexsegment.
    pub fn is_completely_lexsegment(&self) -> bool {
        let mut level: Vec<SqfMonomial> = self.monomials();
        loop {
            if !is_lexsegment_set(&level).expect("equigenerated, nonempty") {
                return false;
            }
            if level[0].degree() == self.n() {
                return true;
            }
            level = shadow(&level).expect("single ring").into_iter().collect();
        }
    }

    /// The sets `A_t = [j_t] \ {j_1, ..., j_{t-1}}` built from `v`.
    pub fn a_sets(&self) -> ASets {
        ASets::from_bottom(self.v)
    }

    /// `u / x_1`, i.e. `x_F`; requires `x_1 | u`.
    pub(crate) fn u_tail(&self) -> Result<SqfMonomial> {
        if !self.u.contains_var(1) {
            return Err(Error::NormalizationViolated("x_1 must divide u"));
        }
        Ok(self.u.without_var(1))
    }

    /// `x_{F^c \ {1}}`, of degree `n - q`; requires `x_1 | u`.
    pub(crate) fn f_complement_tail(&self) -> Result<SqfMonomial> {
        Ok(self.u_tail()?.complement().without_var(1))
    }
}

impl fmt::Debug for LexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({}, {}) in n={}", self.u, self.v, self.n())
    }
}

impl fmt::Display for LexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.u, self.v)
    }
}

/// The sets `A_1, ..., A_q` attached to `v = x_{j_1} ... x_{j_q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASets {
    ring: Ring,
    bottom: Vec<usize>,
    sets: Vec<SqfMonomial>,
}

impl ASets {
    fn from_bottom(v: SqfMonomial) -> Self {
        let ring = v.ring();
        let js = v.support();
        let sets = (0..js.len())
            .map(|t| {
                let span = 1..=js[t];
                SqfMonomial::new(ring, span.filter(|i| !js[..t].contains(i))).expect("indices in range")
            })
            .collect();
        ASets { ring, bottom: js, sets }
    }

    /// `A_t` for `t = 1..=q`.
    pub fn get(&self, t: usize) -> SqfMonomial {
        self.sets[t - 1]
    }

    pub fn sets(&self) -> &[SqfMonomial] {
        &self.sets
    }

    /// `j_t`.
    pub fn j(&self, t: usize) -> usize {
        self.bottom[t - 1]
    }

    pub fn q(&self) -> usize {
        self.bottom.len()
    }

    /// Number of `t` with `|A_t| ≤ n - q`.
    ///
    /// The sizes `|A_t| = j_t - t + 1` never decrease and never exceed
    /// `n - q + 1`, so these `t` form a prefix `1..=s` and this count is the
    /// index `s` with `|A_s| ≤ n - q < |A_{s+1}|` (zero when no such `t` exists).
    pub fn dual_split(&self) -> usize {
        let bound = self.ring.n() - self.q();
        self.sets.iter().take_while(|a| a.degree() <= bound).count()
    }

    /// The `s` of the multiplicity formulas: least `s` with `j_s ≥ j_1 + s`,
    /// or `q + 1` when `v`'s indices run consecutively from `j_1` to the end.
    pub fn multiplicity_split(&self) -> usize {
        let j1 = self.bottom[0];
        (1..=self.q()).find(|&s| self.j(s) >= j1 + s).unwrap_or(self.q() + 1)
    }
}

/// A segment reduced to the normalized shape, plus what was split off.
///
/// The original ideal equals `x_factor · J`, where `J` is `core` read in the
/// variables `shift + 1, ..., n`, and `free` lists variables that occur in
/// no generator (they sit below `min(u)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub ring: Ring,
    pub core: Option<LexSpec>,
    pub shift: usize,
    pub free: Vec<usize>,
    pub factor: Vec<usize>,
}

/// Moves a segment into normalized position: drops variables below `min(u)`
/// and splits off variables dividing every generator, until `x_1 | u` and
/// `x_1 ∤ v` hold in the remaining ring.
///
/// `core` is `None` when the segment is a single monomial that splits off
/// entirely.
pub fn normalize(spec: &LexSpec) -> Normalized {
    let ring = spec.ring();
    let (mut u, mut v) = (spec.u.support(), spec.v.support());
    let mut shift = 0usize;
    let (mut free, mut factor) = (Vec::new(), Vec::new());
    loop {
        if u.is_empty() {
            return Normalized { ring, core: None, shift, free, factor };
        }
        let lead = u[0];
        if lead > shift + 1 {
            free.extend(shift + 1..lead);
            shift = lead - 1;
            continue;
        }
        if v[0] == lead {
            factor.push(lead);
            shift = lead;
            u.remove(0);
            v.remove(0);
            continue;
        }
        break;
    }
    let sub = Ring::new(ring.n() - shift).expect("at least one variable remains");
    let rebase = |s: &[usize]| SqfMonomial::new(sub, s.iter().map(|i| i - shift)).expect("in range");
    let core = LexSpec::new(rebase(&u), rebase(&v)).expect("order preserved by shifting");
    Normalized { ring, core: Some(core), shift, free, factor }
}

impl Normalized {
    pub fn is_identity(&self) -> bool {
        self.shift == 0
    }

    /// Reads a decomposition of the core back in the original ring.
    pub fn reinflate(&self, core: Option<&crate::ideals::Decomposition>) -> crate::ideals::Decomposition {
        let mut masks: Vec<u64> = self.factor.iter().map(|&i| 1u64 << (i - 1)).collect();
        if let Some(d) = core {
            for p in d.components() {
                let mut m = 0u64;
                for i in p.vars() {
                    m |= 1 << (i + self.shift - 1);
                }
                masks.push(m);
            }
        }
        crate::ideals::Decomposition::from_masks(self.ring, masks)
    }
}
