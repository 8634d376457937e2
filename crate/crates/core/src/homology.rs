//! Reduced simplicial homology, graded Betti numbers and the homological
//! predicates built on them.
//!
//! Betti tables come from two independent routes: Hochster's formula
//! (homology of induced subcomplexes of the Stanley-Reisner complex) and the
//! multigraded strands of the Taylor complex on the minimal generators. The
//! Taylor route is the arbiter for the conventions on degenerate complexes.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complexes::{complex_of_ideal, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ideals::MonomialIdeal;
use crate::linalg::Field;

pub const HOCHSTER_MAX_VARS: usize = 14;
pub const TAYLOR_MAX_GENS: usize = 12;
pub const DEFAULT_FACE_GUARD: usize = 1 << 20;
pub const FACE_GUARD_ENV: &str = "LEXIDEAL_GUARD_FACES";

/// Face-count limit for homology, overridable through `LEXIDEAL_GUARD_FACES`.
pub fn face_guard() -> usize {
    std::env::var(FACE_GUARD_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_FACE_GUARD)
}

/// Ranks of reduced homology `~H_i` for `i = -1, ..., dim`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct HomologyProfile {
    /// `ranks[k]` is the rank of `~H_{k-1}`.
    pub ranks: Vec<u64>,
}

impl HomologyProfile {
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1).ok().and_then(|k| self.ranks.get(k).copied()).unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Reduced homology ranks of a complex over ℚ.
pub fn reduced_homology(complex: &SimplicialComplex) -> Result<HomologyProfile> {
    Homology::default().reduced_homology(complex)
}

fn homology_of_faces(faces: &[u64], field: Field) -> HomologyProfile {
    if faces.is_empty() {
        return HomologyProfile::default();
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap();
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    for layer in &mut by_size {
        layer.sort_unstable();
    }
    // boundary_rank[k]: rank of the map from size-k faces to size-(k-1) faces
    let mut boundary_rank = vec![0usize; top + 2];
    for k in 1..=top {
        let index: HashMap<u64, usize> =
            by_size[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let rows: Vec<Vec<i64>> = by_size[k]
            .iter()
            .map(|&face| {
                let mut row = vec![0i64; by_size[k - 1].len()];
                let mut sign = 1i64;
                let mut rest = face;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    row[index[&(face & !bit)]] = sign;
                    sign = -sign;
                    rest &= rest - 1;
                }
                row
            })
            .collect();
        boundary_rank[k] = field.rank(rows);
    }
    let ranks = (0..=top)
        .map(|k| (by_size[k].len() - boundary_rank[k] - boundary_rank[k + 1]) as u64)
        .collect();
    HomologyProfile { ranks }
}

/// Whether a table describes the ideal `I` or the quotient `S/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    Ideal,
    Quotient,
}

/// Graded Betti numbers `β_{i,j}`; only nonzero entries are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct BettiTable {
    subject: Subject,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn subject(&self) -> Subject {
        self.subject
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &r)| (i, j, r))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Projective dimension: the largest homological index present.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Castelnuovo-Mumford regularity: `max (j - i)`.
    pub fn reg(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    /// The same resolution seen from the other subject:
    /// `β_{i,j}(I) = β_{i+1,j}(S/I)`.
    pub fn as_subject(&self, subject: Subject) -> BettiTable {
        if subject == self.subject {
            return self.clone();
        }
        let entries = match subject {
            Subject::Ideal => self
                .entries
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), &r)| ((i - 1, j), r))
                .collect(),
            Subject::Quotient => std::iter::once(((0, 0), 1))
                .chain(self.entries.iter().map(|(&(i, j), &r)| ((i + 1, j), r)))
                .collect(),
        };
        BettiTable { subject, entries }
    }

    /// All entries on the diagonal `j = i + d` (meaningful for subject `Ideal`).
    pub fn is_d_linear(&self, d: usize) -> bool {
        let table = self.as_subject(Subject::Ideal);
        !table.entries.is_empty() && table.entries.keys().all(|&(i, j)| j == i + d)
    }

    /// Codimension and multiplicity of `S/I` from the K-polynomial
    /// `K(t) = Σ (-1)^i β_{i,j}(S/I) t^j`: writing `K = (1 - t)^c Q` with
    /// `Q(1) ≠ 0` gives `codim = c` and `e = Q(1)`.
    pub fn codim_and_multiplicity(&self) -> (usize, i128) {
        let table = self.as_subject(Subject::Quotient);
        let top = table.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut k = vec![0i128; top + 1];
        for (&(i, j), &r) in &table.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            k[j] += sign * r as i128;
        }
        let mut codim = 0;
        while k.len() > 1 && k.iter().sum::<i128>() == 0 {
            // K = (1 - t) P: p_0 = k_0, p_j = p_{j-1} + k_j
            let mut p = Vec::with_capacity(k.len() - 1);
            let mut acc = 0i128;
            for &c in &k[..k.len() - 1] {
                acc += c;
                p.push(acc);
            }
            k = p;
            codim += 1;
        }
        (codim, k.iter().sum())
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            subject: self.subject,
            entries: self.entries().map(|(i, j, rank)| BettiEntry { i, j, rank }).collect(),
        }
    }

    fn from_ideal_entries(entries: BTreeMap<(usize, usize), u64>, subject: Subject) -> Self {
        BettiTable { subject: Subject::Ideal, entries }.as_subject(subject)
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.subject, self.entries)
    }
}

/// Text rendering in the usual layout: rows `j - i`, columns `i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (Some(pd), Some(reg)) = (self.pd(), self.reg()) else {
            return f.write_str("(empty)");
        };
        let low = self.entries.keys().map(|&(i, j)| j - i).min().unwrap();
        write!(f, "     ")?;
        for i in 0..=pd {
            write!(f, "{i:>5}")?;
        }
        writeln!(f)?;
        for row in low..=reg {
            write!(f, "{row:>3}: ")?;
            for i in 0..=pd {
                match self.get(i, i + row) {
                    0 => write!(f, "{:>5}", "-")?,
                    r => write!(f, "{r:>5}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub rank: u64,
}

/// `{ "subject": "ideal"|"quotient", "entries": [{"i","j","rank"}] }`, sorted by `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub subject: Subject,
    pub entries: Vec<BettiEntry>,
}

/// Homological engine over a chosen coefficient field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Homology {
    pub field: Field,
}

impl Homology {
    pub fn over(field: Field) -> Self {
        Homology { field }
    }

    pub fn reduced_homology(&self, complex: &SimplicialComplex) -> Result<HomologyProfile> {
        let faces = complex.all_faces();
        let limit = face_guard();
        if faces.len() > limit {
            return Err(Error::GuardExceeded { what: "faces", value: faces.len(), limit });
        }
        Ok(homology_of_faces(&faces, self.field))
    }

    /// Betti table by Hochster's formula:
    /// `β_{i,σ}(I) = dim ~H_{|σ|-i-2}(Δ|_σ)`, summed over `|σ| = j`.
    pub fn betti_hochster(&self, ideal: &MonomialIdeal, subject: Subject) -> Result<BettiTable> {
        require_proper(ideal)?;
        let n = ideal.n();
        if n > HOCHSTER_MAX_VARS {
            return Err(Error::GuardExceeded { what: "variables", value: n, limit: HOCHSTER_MAX_VARS });
        }
        let complex = complex_of_ideal(ideal)?;
        let faces = complex.all_faces();
        let limit = face_guard();
        if faces.len() > limit {
            return Err(Error::GuardExceeded { what: "faces", value: faces.len(), limit });
        }
        let field = self.field;
        let per_subset = |sigma: u64| -> Vec<((usize, usize), u64)> {
            let restricted: Vec<u64> = faces.iter().copied().filter(|f| f & !sigma == 0).collect();
            let profile = homology_of_faces(&restricted, field);
            let size = sigma.count_ones() as usize;
            let mut out = Vec::new();
            for (k, &rank) in profile.ranks.iter().enumerate() {
                // ~H_{k-1} contributes to i = |σ| - (k-1) - 2
                if rank > 0 && size > k {
                    out.push(((size - k - 1, size), rank));
                }
            }
            out
        };
        let subsets = 1u64..(1u64 << n);
        let contributions: Vec<Vec<((usize, usize), u64)>> = map_subsets(subsets, per_subset);
        let mut entries = BTreeMap::new();
        for (key, rank) in contributions.into_iter().flatten() {
            *entries.entry(key).or_insert(0) += rank;
        }
        Ok(BettiTable::from_ideal_entries(entries, subject))
    }

    /// Betti table from the Taylor complex, strand by strand.
    ///
    /// In the squarefree multidegree `b`, `Tor_i(S/I, k)_b` is the homology of
    /// the complex spanned by generator subsets `T` with `lcm(T) = b`, whose
    /// differential keeps only the faces `T \ {t}` with the same lcm.
    pub fn betti_taylor(&self, ideal: &MonomialIdeal, subject: Subject) -> Result<BettiTable> {
        require_proper(ideal)?;
        let gens: Vec<u64> = ideal.masks().collect();
        let r = gens.len();
        if r > TAYLOR_MAX_GENS {
            return Err(Error::GuardExceeded { what: "generators", value: r, limit: TAYLOR_MAX_GENS });
        }
        let mut lcm = vec![0u64; 1 << r];
        let mut strands: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for t in 0u32..(1 << r) {
            if t != 0 {
                let low = t.trailing_zeros() as usize;
                lcm[t as usize] = lcm[(t & (t - 1)) as usize] | gens[low];
            }
            strands.entry(lcm[t as usize]).or_default().push(t);
        }
        let mut entries = BTreeMap::new();
        for (b, members) in strands {
            let degree = b.count_ones() as usize;
            let max_size = members.iter().map(|t| t.count_ones() as usize).max().unwrap();
            let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); max_size + 1];
            for &t in &members {
                by_size[t.count_ones() as usize].push(t);
            }
            let mut d_rank = vec![0usize; max_size + 2];
            for k in 1..=max_size {
                let index: HashMap<u32, usize> =
                    by_size[k - 1].iter().enumerate().map(|(i, &t)| (t, i)).collect();
                let rows: Vec<Vec<i64>> = by_size[k]
                    .iter()
                    .map(|&t| {
                        let mut row = vec![0i64; by_size[k - 1].len()];
                        let mut sign = 1i64;
                        let mut rest = t;
                        while rest != 0 {
                            let bit = rest & rest.wrapping_neg();
                            if let Some(&col) = index.get(&(t & !bit)) {
                                row[col] = sign;
                            }
                            sign = -sign;
                            rest &= rest - 1;
                        }
                        row
                    })
                    .collect();
                d_rank[k] = self.field.rank(rows);
            }
            for k in 0..=max_size {
                let h = by_size[k].len() - d_rank[k] - d_rank[k + 1];
                if h > 0 {
                    *entries.entry((k, degree)).or_insert(0) += h as u64;
                }
            }
        }
        let table = BettiTable { subject: Subject::Quotient, entries };
        Ok(table.as_subject(subject))
    }

    /// Quotient Betti table via Hochster; the default route for invariants.
    pub fn betti(&self, ideal: &MonomialIdeal) -> Result<BettiTable> {
        self.betti_hochster(ideal, Subject::Quotient)
    }

    /// `pd(S/I)`.
    pub fn pd(&self, ideal: &MonomialIdeal) -> Result<usize> {
        Ok(self.betti(ideal)?.pd().unwrap_or(0))
    }

    /// `depth(S/I) = n - pd(S/I)` (Auslander-Buchsbaum).
    pub fn depth(&self, ideal: &MonomialIdeal) -> Result<usize> {
        Ok(ideal.n() - self.pd(ideal)?)
    }

    /// `reg(I) = reg(S/I) + 1`.
    pub fn regularity(&self, ideal: &MonomialIdeal) -> Result<usize> {
        let table = self.betti_hochster(ideal, Subject::Ideal)?;
        Ok(table.reg().unwrap_or(0))
    }

    pub fn is_cm(&self, ideal: &MonomialIdeal) -> Result<bool> {
        Ok(self.depth(ideal)? == dim(ideal)?)
    }

    /// Largest `i + 1` such that `k[Δ^{(i)}]` is Cohen-Macaulay.
    pub fn depth_via_skeletons(&self, ideal: &MonomialIdeal) -> Result<usize> {
        require_proper(ideal)?;
        let complex = complex_of_ideal(ideal)?;
        let top = complex.dim().unwrap_or(-1);
        let mut best = 0usize;
        for i in 0..=top {
            let skeleton_ideal = complex.skeleton(i).ideal();
            if self.is_cm(&skeleton_ideal)? {
                best = best.max(i as usize + 1);
            }
        }
        Ok(best)
    }

    /// Every Betti entry of `I` on the diagonal `j = i + d`.
    pub fn has_d_linear_resolution(&self, ideal: &MonomialIdeal, d: usize) -> Result<bool> {
        if ideal.equigenerated_degree() != Some(d) {
            require_proper(ideal)?;
            return Ok(false);
        }
        Ok(self.betti_hochster(ideal, Subject::Ideal)?.is_d_linear(d))
    }

    /// Equigenerated with a linear resolution; false for mixed degrees.
    pub fn has_linear_resolution(&self, ideal: &MonomialIdeal) -> Result<bool> {
        require_proper(ideal)?;
        match ideal.equigenerated_degree() {
            Some(d) => self.has_d_linear_resolution(ideal, d),
            None => Ok(false),
        }
    }

    /// Every nonzero squarefree component `I_[j]`, for `j` from the least to
    /// the largest generator degree, has a `j`-linear resolution.
    ///
    /// Components above the largest generator degree are components of an
    /// equigenerated ideal and inherit linearity, so they are not checked.
    pub fn is_componentwise_linear(&self, ideal: &MonomialIdeal) -> Result<bool> {
        require_proper(ideal)?;
        let (lo, hi) = (ideal.min_degree().unwrap(), ideal.max_degree().unwrap());
        for j in lo..=hi {
            let component = ideal.graded_component(j)?;
            if !component.is_zero() && !self.has_d_linear_resolution(&component, j)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Sequential Cohen-Macaulayness straight from the definition: every pure
    /// skeleton of `Δ(I)` is Cohen-Macaulay.
    pub fn is_scm_definition(&self, ideal: &MonomialIdeal) -> Result<bool> {
        require_proper(ideal)?;
        let complex = complex_of_ideal(ideal)?;
        let top = complex.dim().unwrap_or(-1);
        for i in 0..=top {
            let pure = complex.pure_skeleton(i)?;
            if !self.is_cm(&pure.ideal())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Sequential Cohen-Macaulayness through duality: `I^∨` componentwise linear.
    pub fn is_scm_dual(&self, ideal: &MonomialIdeal) -> Result<bool> {
        self.is_componentwise_linear(&ideal.alexander_dual()?)
    }
}

#[cfg(feature = "parallel")]
fn map_subsets<F, T>(subsets: std::ops::Range<u64>, f: F) -> Vec<T>
where
    F: Fn(u64) -> T + Sync + Send,
    T: Send,
{
    use rayon::prelude::*;
    subsets.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_subsets<F, T>(subsets: std::ops::Range<u64>, f: F) -> Vec<T>
where
    F: Fn(u64) -> T,
{
    subsets.map(f).collect()
}

fn require_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_proper_nonzero() {
        Ok(())
    } else {
        Err(Error::ZeroOrUnitIdeal)
    }
}

/// `dim(S/I) = n - min height` over the minimal primes.
pub fn dim(ideal: &MonomialIdeal) -> Result<usize> {
    require_proper(ideal)?;
    let decomposition = ideal.decompose()?;
    Ok(ideal.n() - decomposition.min_height().unwrap_or(0))
}

pub fn betti_hochster(ideal: &MonomialIdeal, subject: Subject) -> Result<BettiTable> {
    Homology::default().betti_hochster(ideal, subject)
}

pub fn betti_taylor(ideal: &MonomialIdeal, subject: Subject) -> Result<BettiTable> {
    Homology::default().betti_taylor(ideal, subject)
}

pub fn pd(ideal: &MonomialIdeal) -> Result<usize> {
    Homology::default().pd(ideal)
}

pub fn depth(ideal: &MonomialIdeal) -> Result<usize> {
    Homology::default().depth(ideal)
}

pub fn regularity(ideal: &MonomialIdeal) -> Result<usize> {
    Homology::default().regularity(ideal)
}

pub fn is_cm(ideal: &MonomialIdeal) -> Result<bool> {
    Homology::default().is_cm(ideal)
}

pub fn depth_via_skeletons(ideal: &MonomialIdeal) -> Result<usize> {
    Homology::default().depth_via_skeletons(ideal)
}

pub fn has_linear_resolution(ideal: &MonomialIdeal) -> Result<bool> {
    Homology::default().has_linear_resolution(ideal)
}

pub fn has_d_linear_resolution(ideal: &MonomialIdeal, d: usize) -> Result<bool> {
    Homology::default().has_d_linear_resolution(ideal, d)
}

pub fn is_componentwise_linear(ideal: &MonomialIdeal) -> Result<bool> {
    Homology::default().is_componentwise_linear(ideal)
}

pub fn is_scm_definition(ideal: &MonomialIdeal) -> Result<bool> {
    Homology::default().is_scm_definition(ideal)
}

pub fn is_scm_dual(ideal: &MonomialIdeal) -> Result<bool> {
    Homology::default().is_scm_dual(ideal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_polynomial_reads_codim_and_degree() {
        let r = Ring::new(4).unwrap();
        // L^i(x2x3): dim 2, e 2
        let i = MonomialIdeal::minimalize(r, [[1, 2], [1, 3], [1, 4], [2, 3]].map(|s| SqfMonomial::new(r, s).unwrap())).unwrap();
        let t = betti_hochster(&i, Subject::Ideal).unwrap();
        assert_eq!(t.codim_and_multiplicity(), (2, 2));
        // hypersurface x1x2: codim 1, degree 2
        let h = MonomialIdeal::minimalize(r, [SqfMonomial::new(r, [1, 2]).unwrap()]).unwrap();
        assert_eq!(betti_hochster(&h, Subject::Quotient).unwrap().codim_and_multiplicity(), (1, 2));
    }
    use crate::monomials::{final_segment, initial_segment, Ring, SqfMonomial};

    fn r(n: usize) -> Ring {
        Ring::new(n).unwrap()
    }

    fn m(n: usize, s: &[usize]) -> SqfMonomial {
        SqfMonomial::new(r(n), s.iter().copied()).unwrap()
    }

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(r(n), gens.iter().map(|s| m(n, s))).unwrap()
    }

    fn entries(t: &BettiTable) -> Vec<(usize, usize, u64)> {
        t.entries().collect()
    }

    fn cx(n: usize, faces: &[&[usize]]) -> SimplicialComplex {
        let faces: Vec<Vec<usize>> = faces.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_faces(r(n), &faces).unwrap()
    }

    #[test]
    fn reduced_homology_examples() {
        let circle = reduced_homology(&cx(3, &[&[1, 2], &[1, 3], &[2, 3]])).unwrap();
        assert_eq!((circle.get(0), circle.get(1)), (0, 1));
        let two_points = reduced_homology(&cx(2, &[&[1], &[2]])).unwrap();
        assert_eq!(two_points.get(0), 1);
        let empty_face = reduced_homology(&SimplicialComplex::irrelevant(r(3))).unwrap();
        assert_eq!(empty_face.get(-1), 1);
        assert!(reduced_homology(&SimplicialComplex::void(r(3))).unwrap().is_acyclic());
        assert!(reduced_homology(&SimplicialComplex::simplex(r(4))).unwrap().is_acyclic());
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex RP^2: ~H_1 = Z/2, so rank 0 over ℚ and 1 over F_2
        let faces: &[&[usize]] = &[
            &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
            &[2, 3, 5], &[3, 4, 6], &[2, 4, 5], &[3, 5, 6], &[2, 4, 6],
        ];
        let rp2 = cx(6, faces);
        let q = reduced_homology(&rp2).unwrap();
        assert!(q.is_acyclic());
        let f2 = Homology::over(Field::Prime(2)).reduced_homology(&rp2).unwrap();
        assert_eq!((f2.get(1), f2.get(2)), (1, 1));
    }

    #[test]
    fn betti_examples() {
        let p = ideal(2, &[&[1, 2]]);
        for t in [betti_hochster(&p, Subject::Quotient).unwrap(), betti_taylor(&p, Subject::Quotient).unwrap()] {
            assert_eq!(entries(&t), vec![(0, 0, 1), (1, 2, 1)]);
        }
        let i32 = MonomialIdeal::all_of_degree(r(3), 2).unwrap();
        for t in [betti_hochster(&i32, Subject::Quotient).unwrap(), betti_taylor(&i32, Subject::Quotient).unwrap()] {
            assert_eq!(entries(&t), vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
        }
        let as_ideal = betti_hochster(&i32, Subject::Ideal).unwrap();
        assert_eq!(entries(&as_ideal), vec![(0, 2, 3), (1, 3, 2)]);
        assert_eq!(as_ideal.as_subject(Subject::Quotient), betti_taylor(&i32, Subject::Quotient).unwrap());
    }

    #[test]
    fn betti_guards() {
        assert_eq!(betti_hochster(&MonomialIdeal::zero(r(3)), Subject::Ideal), Err(Error::ZeroOrUnitIdeal));
        let big = MonomialIdeal::all_of_degree(r(15), 14).unwrap();
        assert!(matches!(betti_hochster(&big, Subject::Ideal), Err(Error::GuardExceeded { .. })));
        let many = MonomialIdeal::all_of_degree(r(6), 3).unwrap();
        assert!(matches!(betti_taylor(&many, Subject::Ideal), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn invariants_of_initial_segment() {
        let li = MonomialIdeal::minimalize(r(4), initial_segment(m(4, &[2, 3])).unwrap()).unwrap();
        assert_eq!(dim(&li).unwrap(), 2);
        assert_eq!(depth(&li).unwrap(), 1);
        assert!(!is_cm(&li).unwrap());
        assert_eq!(depth_via_skeletons(&li).unwrap(), 1);
        assert!(has_linear_resolution(&li).unwrap());
        assert!(is_scm_definition(&li).unwrap());
        assert!(is_scm_dual(&li).unwrap());
    }

    #[test]
    fn squarefree_veronese_is_cm_with_linear_resolution() {
        for n in 3..=7 {
            for q in 1..n {
                let i = MonomialIdeal::all_of_degree(r(n), q).unwrap();
                assert!(is_cm(&i).unwrap(), "I_{n},{q}");
                assert!(has_linear_resolution(&i).unwrap());
                assert_eq!(regularity(&i).unwrap(), q);
            }
        }
    }

    #[test]
    fn hypersurface() {
        let p = ideal(5, &[&[1, 2]]);
        assert_eq!(depth(&p).unwrap(), 4);
        assert_eq!(dim(&p).unwrap(), 4);
        assert!(is_cm(&p).unwrap());
    }

    #[test]
    fn two_disjoint_edges() {
        let i = ideal(4, &[&[1, 2], &[3, 4]]);
        let t = betti_taylor(&i, Subject::Ideal).unwrap();
        assert_eq!(t.get(1, 4), 1);
        assert!(!has_linear_resolution(&i).unwrap());
        assert!(!is_componentwise_linear(&i).unwrap());
        // Δ is a 4-cycle: CM of dimension 2
        assert!(is_cm(&i).unwrap());
        assert!(is_scm_definition(&i).unwrap());
        assert!(is_scm_dual(&i).unwrap());
    }

    #[test]
    fn final_segment_depth_by_skeletons() {
        let lf = MonomialIdeal::minimalize(r(4), final_segment(m(4, &[1, 3])).unwrap()).unwrap();
        assert_eq!(depth_via_skeletons(&lf).unwrap(), 1);
        assert_eq!(depth(&lf).unwrap(), 1);
    }

    #[test]
    fn table_rendering() {
        let i32 = MonomialIdeal::all_of_degree(r(3), 2).unwrap();
        let t = betti_hochster(&i32, Subject::Quotient).unwrap();
        let text = t.to_string();
        assert!(text.contains("  0:     1    -    -"), "{text}");
        assert!(text.contains("  1:     -    3    2"), "{text}");
        let json = serde_json::to_string(&t.to_json()).unwrap();
        assert_eq!(
            json,
            r#"{"subject":"quotient","entries":[{"i":0,"j":0,"rank":1},{"i":1,"j":2,"rank":3},{"i":2,"j":3,"rank":2}]}"#
        );
    }
}
