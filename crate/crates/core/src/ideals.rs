//! Squarefree monomial ideals, monomial primes and decompositions.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomials::{bit_indices, stratum, Ring, SqfMonomial};

/// A squarefree monomial ideal, stored by its minimal generating set `G(I)`.
///
/// Generators are kept in canonical order (degree, then lex-descending), so
/// structural equality is ideal equality. The zero ideal has no generators;
/// the unit ideal is generated by the monomial `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<SqfMonomial>,
}

impl MonomialIdeal {
    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Ring) -> Self {
        MonomialIdeal { ring, gens: vec![ring.one()] }
    }

    /// `I_{n,q}`: all squarefree monomials of degree `q`.
    pub fn all_of_degree(ring: Ring, q: usize) -> Result<Self> {
        Ok(MonomialIdeal { ring, gens: stratum(ring, q)? })
    }

    /// `(x_i : i in vars)`.
    pub fn prime(ring: Ring, vars: &[usize]) -> Result<Self> {
        let gens = vars.iter().map(|&i| ring.var(i)).collect::<Result<Vec<_>>>()?;
        Self::minimalize(ring, gens)
    }

    /// Divisibility-minimal generating set of the ideal generated by `gens`.
    pub fn minimalize<I>(ring: Ring, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = SqfMonomial>,
    {
        let mut all = Vec::new();
        for g in gens {
            ring.check(g.ring())?;
            all.push(g);
        }
        Ok(Self::from_masks(ring, all.into_iter().map(|g| g.bits())))
    }

    pub(crate) fn from_masks<I: IntoIterator<Item = u64>>(ring: Ring, masks: I) -> Self {
        let mut masks: Vec<u64> = masks.into_iter().collect();
        masks.sort_unstable_by_key(|m| m.count_ones());
        masks.dedup();
        let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
        for m in masks {
            if !kept.iter().any(|&k| k & !m == 0) {
                kept.push(m);
            }
        }
        let mut gens: Vec<SqfMonomial> =
            kept.into_iter().map(|b| SqfMonomial::from_bits(ring, b)).collect();
        gens.sort();
        MonomialIdeal { ring, gens }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn gens(&self) -> &[SqfMonomial] {
        &self.gens
    }

    pub(crate) fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.gens.iter().map(|g| g.bits())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_one())
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.gens.first().map(|g| g.degree())
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.gens.last().map(|g| g.degree())
    }

    /// The common generator degree, if `I` is nonzero and equigenerated.
    pub fn equigenerated_degree(&self) -> Option<usize> {
        match (self.min_degree(), self.max_degree()) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        }
    }

    pub fn contains(&self, m: SqfMonomial) -> Result<bool> {
        self.ring.check(m.ring())?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.ring.check(other.ring)?;
        Ok(Self::from_masks(self.ring, self.masks().chain(other.masks())))
    }

    /// `I ∩ J`, generated by the pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        self.ring.check(other.ring)?;
        let lcms = self
            .masks()
            .flat_map(|a| other.masks().map(move |b| a | b))
            .collect::<Vec<_>>();
        Ok(Self::from_masks(self.ring, lcms))
    }

    /// `I : m`, generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: SqfMonomial) -> Result<Self> {
        self.ring.check(m.ring())?;
        Ok(Self::from_masks(self.ring, self.masks().map(|g| g & !m.bits())))
    }

    /// `m · I`. Requires `m` coprime to every generator so the result stays squarefree.
    pub fn scale(&self, m: SqfMonomial) -> Result<Self> {
        self.ring.check(m.ring())?;
        if self.gens.iter().any(|g| !g.is_coprime(m)) {
            return Err(Error::HypothesisNotMet("multiplier shares a variable with a generator"));
        }
        Ok(Self::from_masks(self.ring, self.masks().map(|g| g | m.bits())))
    }

    /// Squarefree degree-`j` component: the ideal generated by all squarefree
    /// monomials of degree `j` lying in `I`.
    pub fn graded_component(&self, j: usize) -> Result<Self> {
        if j > self.n() {
            return Ok(Self::zero(self.ring));
        }
        let gens = stratum(self.ring, j)?
            .into_iter()
            .filter(|m| self.gens.iter().any(|g| g.divides(*m)));
        Ok(MonomialIdeal { ring: self.ring, gens: sorted(gens) })
    }

    /// The Alexander dual: generators `x_A` over the minimal primes `P_A` of `I`.
    pub fn alexander_dual(&self) -> Result<Self> {
        if !self.is_proper_nonzero() {
            return Err(Error::ZeroOrUnitIdeal);
        }
        let covers = minimal_transversals(self.masks().collect::<Vec<_>>());
        Ok(Self::from_masks(self.ring, covers))
    }

    /// Minimal primes of `I`, as a decomposition `I = ∩ P_A`.
    pub fn decompose(&self) -> Result<Decomposition> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let covers = minimal_transversals(self.masks().collect::<Vec<_>>());
        Ok(Decomposition::from_masks(self.ring, covers))
    }

    /// Checks that each colon `(m_1, ..., m_{t-1}) : m_t` is generated by variables.
    pub fn has_linear_quotients(&self, order: &[SqfMonomial]) -> Result<bool> {
        let mut given: Vec<SqfMonomial> = order.to_vec();
        given.sort();
        if given != self.gens {
            return Err(Error::NotAPermutation);
        }
        for t in 1..order.len() {
            let prefix = Self::from_masks(self.ring, order[..t].iter().map(|g| g.bits()));
            let quotient = prefix.colon(order[t])?;
            if quotient.gens.iter().any(|g| g.degree() != 1) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Reads the ideal in a ring with more variables, shifting indices by `offset`.
    pub fn embed(&self, ring: Ring, offset: usize) -> Result<Self> {
        let gens = self
            .gens
            .iter()
            .map(|g| SqfMonomial::new(ring, g.support().into_iter().map(|i| i + offset)))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(ring, gens)
    }
}

fn sorted<I: IntoIterator<Item = SqfMonomial>>(it: I) -> Vec<SqfMonomial> {
    let mut v: Vec<_> = it.into_iter().collect();
    v.sort();
    v
}

/// Inclusion-minimal sets meeting every given set (Berge's incremental method).
///
/// With no input sets the empty set is the unique transversal; if some input
/// set is empty there is none.
pub(crate) fn minimal_transversals(sets: Vec<u64>) -> Vec<u64> {
    let mut sets = sets;
    sets.sort_unstable_by_key(|s| s.count_ones());
    let mut covers: Vec<u64> = vec![0];
    for s in sets {
        let mut next: Vec<u64> = Vec::with_capacity(covers.len() * 2);
        for &c in &covers {
            if c & s != 0 {
                next.push(c);
            } else {
                for i in bit_indices(s) {
                    next.push(c | 1 << (i - 1));
                }
            }
        }
        next.sort_unstable_by_key(|c| (c.count_ones(), *c));
        next.dedup();
        let mut kept: Vec<u64> = Vec::with_capacity(next.len());
        for c in next {
            if !kept.iter().any(|&k| k & !c == 0) {
                kept.push(c);
            }
        }
        covers = kept;
    }
    covers
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// A monomial prime `P_A = (x_i : i ∈ A)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeSupport {
    vars: SqfMonomial,
}

impl PrimeSupport {
    pub fn new(ring: Ring, vars: &[usize]) -> Result<Self> {
        let vars = SqfMonomial::new(ring, vars.iter().copied())?;
        if vars.is_one() {
            return Err(Error::EmptyInput);
        }
        Ok(PrimeSupport { vars })
    }

    pub fn from_monomial(vars: SqfMonomial) -> Result<Self> {
        if vars.is_one() {
            return Err(Error::EmptyInput);
        }
        Ok(PrimeSupport { vars })
    }

    pub fn vars(self) -> Vec<usize> {
        self.vars.support()
    }

    /// `x_A`, the dual generator of this prime.
    pub fn as_monomial(self) -> SqfMonomial {
        self.vars
    }

    pub fn height(self) -> usize {
        self.vars.degree()
    }
}

impl fmt::Debug for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{:?}", self.vars.support())
    }
}

/// A minimal decomposition `I = ∩ P_A`: an antichain of primes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    ring: Ring,
    components: Vec<PrimeSupport>,
}

impl Decomposition {
    /// Antichain of the given primes: duplicates dropped, non-minimal members removed.
    pub fn minimal<I: IntoIterator<Item = PrimeSupport>>(ring: Ring, primes: I) -> Result<Self> {
        let mut masks = Vec::new();
        for p in primes {
            ring.check(p.vars.ring())?;
            masks.push(p.vars.bits());
        }
        Ok(Self::from_masks(ring, masks))
    }

    pub(crate) fn from_masks<I: IntoIterator<Item = u64>>(ring: Ring, masks: I) -> Self {
        let mut masks: Vec<u64> = masks.into_iter().filter(|&m| m != 0).collect();
        masks.sort_unstable_by_key(|m| m.count_ones());
        masks.dedup();
        let mut kept: Vec<u64> = Vec::new();
        for m in masks {
            if !kept.iter().any(|&k| k & !m == 0) {
                kept.push(m);
            }
        }
        let mut components: Vec<PrimeSupport> = kept
            .into_iter()
            .map(|b| PrimeSupport { vars: SqfMonomial::from_bits(ring, b) })
            .collect();
        components.sort_by_key(|p| component_key(*p));
        Decomposition { ring, components }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn components(&self) -> &[PrimeSupport] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn min_height(&self) -> Option<usize> {
        self.components.iter().map(|p| p.height()).min()
    }

    pub fn is_unmixed(&self) -> bool {
        self.components.iter().map(|p| p.height()).collect::<BTreeSet<_>>().len() <= 1
    }

    /// Intersection of the components, as an ideal.
    pub fn to_ideal(&self) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.ring);
        for p in &self.components {
            let prime = MonomialIdeal::from_masks(
                self.ring,
                bit_indices(p.vars.bits()).map(|i| 1u64 << (i - 1)),
            );
            acc = acc.intersect(&prime).expect("same ring");
        }
        if self.components.is_empty() {
            MonomialIdeal::zero(self.ring)
        } else {
            acc
        }
    }

    /// Alexander dual generators `x_A`.
    pub fn dual_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_masks(self.ring, self.components.iter().map(|p| p.vars.bits()))
    }

    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson { components: self.components.iter().map(|p| p.vars()).collect() }
    }
}

fn component_key(p: PrimeSupport) -> (usize, Vec<usize>) {
    (p.height(), p.vars())
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.components.iter()).finish()
    }
}

/// `{ "components": [[int]] }`, sorted by (size, lex).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub components: Vec<Vec<usize>>,
}

/// `{ "n": int, "gens": [[int]] }` in canonical generator order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<Vec<usize>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(ideal: &MonomialIdeal) -> Self {
        IdealJson { n: ideal.n(), gens: ideal.gens.iter().map(|g| g.support()).collect() }
    }
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(json: IdealJson) -> Result<Self> {
        let ring = Ring::new(json.n)?;
        let gens = json
            .gens
            .into_iter()
            .map(|s| SqfMonomial::new(ring, s))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(ring, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomials::{final_segment, initial_segment};

    fn r(n: usize) -> Ring {
        Ring::new(n).unwrap()
    }

    fn m(n: usize, s: &[usize]) -> SqfMonomial {
        SqfMonomial::new(r(n), s.iter().copied()).unwrap()
    }

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(r(n), gens.iter().map(|s| m(n, s))).unwrap()
    }

    fn gens(i: &MonomialIdeal) -> Vec<Vec<usize>> {
        i.gens().iter().map(|g| g.support()).collect()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(gens(&ideal(3, &[&[1], &[1, 2]])), vec![vec![1]]);
        assert_eq!(gens(&ideal(3, &[&[1, 2], &[2, 3]])), vec![vec![1, 2], vec![2, 3]]);
        let zero = ideal(3, &[]);
        assert!(zero.is_zero() && !zero.is_unit());
        assert!(ideal(3, &[&[]]).is_unit());
    }

    #[test]
    fn contains_examples() {
        let i = ideal(3, &[&[1, 2]]);
        assert!(i.contains(m(3, &[1, 2, 3])).unwrap());
        assert!(!i.contains(m(3, &[1, 3])).unwrap());
        let i42 = MonomialIdeal::all_of_degree(r(4), 2).unwrap();
        assert!(i42.contains(m(4, &[3, 4])).unwrap());
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(gens(&ideal(2, &[&[1]]).intersect(&ideal(2, &[&[2]])).unwrap()), vec![vec![1, 2]]);
        let li = MonomialIdeal::minimalize(r(4), initial_segment(m(4, &[2, 3])).unwrap()).unwrap();
        let lf = MonomialIdeal::minimalize(r(4), final_segment(m(4, &[1, 3])).unwrap()).unwrap();
        let both = li.intersect(&lf).unwrap();
        assert_eq!(gens(&both), vec![vec![1, 3], vec![1, 4], vec![2, 3]]);
        assert_eq!(li.intersect(&li).unwrap(), li);
    }

    #[test]
    fn sum_and_colon_examples() {
        assert_eq!(gens(&ideal(3, &[&[1]]).colon(m(3, &[2, 3])).unwrap()), vec![vec![1]]);
        assert_eq!(gens(&ideal(3, &[&[1, 2]]).colon(m(3, &[2])).unwrap()), vec![vec![1]]);
        assert_eq!(gens(&ideal(3, &[&[1]]).sum(&ideal(3, &[&[2]])).unwrap()), vec![vec![1], vec![2]]);
        assert!(matches!(
            ideal(3, &[&[1]]).sum(&ideal(4, &[&[1]])),
            Err(Error::AmbientMismatch(3, 4))
        ));
    }

    #[test]
    fn graded_component_examples() {
        assert_eq!(gens(&ideal(3, &[&[1, 2]]).graded_component(3).unwrap()), vec![vec![1, 2, 3]]);
        let i52 = MonomialIdeal::all_of_degree(r(5), 2).unwrap();
        assert_eq!(i52.graded_component(2).unwrap(), i52);
        assert!(ideal(3, &[&[1, 2]]).graded_component(1).unwrap().is_zero());
    }

    #[test]
    fn alexander_dual_examples() {
        let i32 = MonomialIdeal::all_of_degree(r(3), 2).unwrap();
        assert_eq!(i32.alexander_dual().unwrap(), i32);
        assert_eq!(gens(&ideal(2, &[&[1, 2]]).alexander_dual().unwrap()), vec![vec![1], vec![2]]);
        assert_eq!(gens(&ideal(2, &[&[1], &[2]]).alexander_dual().unwrap()), vec![vec![1, 2]]);
        assert_eq!(ideal(3, &[]).alexander_dual(), Err(Error::ZeroOrUnitIdeal));
        assert_eq!(ideal(3, &[&[]]).alexander_dual(), Err(Error::ZeroOrUnitIdeal));
    }

    #[test]
    fn linear_quotient_examples() {
        let i = ideal(3, &[&[1], &[2, 3]]);
        assert!(i.has_linear_quotients(&[m(3, &[1]), m(3, &[2, 3])]).unwrap());
        let j = ideal(4, &[&[1, 2], &[3, 4]]);
        assert!(!j.has_linear_quotients(&[m(4, &[1, 2]), m(4, &[3, 4])]).unwrap());
        assert!(!j.has_linear_quotients(&[m(4, &[3, 4]), m(4, &[1, 2])]).unwrap());
        let p = ideal(4, &[&[1, 3, 4]]);
        assert!(p.has_linear_quotients(&[m(4, &[1, 3, 4])]).unwrap());
        assert_eq!(j.has_linear_quotients(&[m(4, &[1, 2])]), Err(Error::NotAPermutation));
    }

    #[test]
    fn decomposition_of_initial_segment() {
        let li = MonomialIdeal::minimalize(r(4), initial_segment(m(4, &[2, 3])).unwrap()).unwrap();
        let d = li.decompose().unwrap();
        let comps: Vec<_> = d.components().iter().map(|p| p.vars()).collect();
        assert_eq!(comps, vec![vec![1, 2], vec![1, 3], vec![2, 3, 4]]);
        assert_eq!(d.to_ideal(), li);
        assert_eq!(d.dual_ideal(), li.alexander_dual().unwrap());
    }

    #[test]
    fn json_round_trip() {
        let i = ideal(5, &[&[2, 5], &[1, 3], &[4]]);
        let json = serde_json::to_string(&IdealJson::from(&i)).unwrap();
        assert_eq!(json, r#"{"n":5,"gens":[[4],[1,3],[2,5]]}"#);
        let back: IdealJson = serde_json::from_str(&json).unwrap();
        assert_eq!(MonomialIdeal::try_from(back).unwrap(), i);
    }
}
