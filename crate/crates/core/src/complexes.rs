//! Simplicial complexes on `[n]` and the Stanley-Reisner dictionary.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{minimal_transversals, Decomposition, MonomialIdeal};
use crate::monomials::{bit_indices, Ring, SqfMonomial};

/// Largest `n` for which `complex_of_ideal` runs its generic facet search.
pub const FACET_SEARCH_MAX_VARS: usize = 25;

/// A simplicial complex on the vertex set `[n]`, stored by its facets.
///
/// The void complex has no facets (no faces at all); the irrelevant complex
/// `{∅}` has the single facet `∅`. Both occur: the first for the unit ideal,
/// the second for the maximal ideal `(x_1, ..., x_n)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ring: Ring,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Complex generated by the given faces (1-based vertex lists).
    pub fn from_faces(ring: Ring, faces: &[Vec<usize>]) -> Result<Self> {
        let masks = faces
            .iter()
            .map(|f| SqfMonomial::new(ring, f.iter().copied()).map(|m| m.bits()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_masks(ring, masks))
    }

    pub(crate) fn from_masks<I: IntoIterator<Item = u64>>(ring: Ring, faces: I) -> Self {
        let mut faces: Vec<u64> = faces.into_iter().collect();
        faces.sort_unstable_by_key(|f| std::cmp::Reverse(f.count_ones()));
        faces.dedup();
        let mut facets: Vec<u64> = Vec::new();
        for f in faces {
            if !facets.iter().any(|&g| f & !g == 0) {
                facets.push(f);
            }
        }
        facets.sort_by_key(|&f| facet_key(f));
        SimplicialComplex { ring, facets }
    }

    pub fn void(ring: Ring) -> Self {
        SimplicialComplex { ring, facets: Vec::new() }
    }

    pub fn irrelevant(ring: Ring) -> Self {
        SimplicialComplex { ring, facets: vec![0] }
    }

    pub fn simplex(ring: Ring) -> Self {
        SimplicialComplex { ring, facets: vec![ring.full_mask()] }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| bit_indices(f).collect()).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `max |F| - 1`, or `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.count_ones() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn contains_face(&self, face: &[usize]) -> Result<bool> {
        let m = SqfMonomial::new(self.ring, face.iter().copied())?.bits();
        Ok(self.has_face(m))
    }

    pub(crate) fn has_face(&self, face: u64) -> bool {
        self.facets.iter().any(|&g| face & !g == 0)
    }

    /// Every face, each exactly once, in no particular order.
    pub(crate) fn all_faces(&self) -> Vec<u64> {
        let mut faces: Vec<u64> = Vec::new();
        for &f in &self.facets {
            // subsets of f not contained in an earlier facet
            let earlier = &self.facets[..self.facets.iter().position(|&g| g == f).unwrap()];
            let mut sub = f;
            loop {
                if !earlier.iter().any(|&g| sub & !g == 0) {
                    faces.push(sub);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        faces
    }

    /// `Δ^{(i)}`: faces of dimension at most `i`.
    pub fn skeleton(&self, i: isize) -> Self {
        if i < -1 {
            return Self::void(self.ring);
        }
        let size = (i + 1) as u32;
        let mut faces = Vec::new();
        for &f in &self.facets {
            if f.count_ones() <= size {
                faces.push(f);
            } else {
                faces.extend(subsets_of_size(f, size));
            }
        }
        Self::from_masks(self.ring, faces)
    }

    /// Pure `i`-skeleton: generated by the faces of dimension exactly `i`.
    pub fn pure_skeleton(&self, i: isize) -> Result<Self> {
        if i < -1 {
            return Err(Error::NoFacesOfThatDimension(i));
        }
        let size = (i + 1) as u32;
        let faces: Vec<u64> = self
            .facets
            .iter()
            .filter(|f| f.count_ones() >= size)
            .flat_map(|&f| subsets_of_size(f, size))
            .collect();
        if faces.is_empty() {
            return Err(Error::NoFacesOfThatDimension(i));
        }
        Ok(Self::from_masks(self.ring, faces))
    }

    /// `lk(σ) = { F : F ∪ σ ∈ Δ, F ∩ σ = ∅ }`; void if `σ` is not a face.
    pub fn link(&self, sigma: &[usize]) -> Result<Self> {
        let s = SqfMonomial::new(self.ring, sigma.iter().copied())?.bits();
        let faces = self.facets.iter().filter(|&&f| s & !f == 0).map(|&f| f & !s);
        Ok(Self::from_masks(self.ring, faces))
    }

    /// `Δ|_σ = { F ∈ Δ : F ⊆ σ }`.
    pub fn induced(&self, sigma: &[usize]) -> Result<Self> {
        let s = SqfMonomial::new(self.ring, sigma.iter().copied())?.bits();
        Ok(self.induced_mask(s))
    }

    pub(crate) fn induced_mask(&self, s: u64) -> Self {
        if self.facets.is_empty() {
            return Self::void(self.ring);
        }
        Self::from_masks(self.ring, self.facets.iter().map(|&f| f & s))
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts: Vec<u64> = Vec::new();
        for face in self.all_faces() {
            let k = face.count_ones() as usize;
            if counts.len() <= k {
                counts.resize(k + 1, 0);
            }
            counts[k] += 1;
        }
        FVector { counts }
    }

    /// `e(k[Δ])`: the number of faces of top dimension.
    pub fn multiplicity(&self) -> Result<u64> {
        let f = self.f_vector();
        f.counts.last().copied().ok_or(Error::UnitIdeal)
    }

    /// Stanley-Reisner ideal: generated by the minimal non-faces.
    pub fn ideal(&self) -> MonomialIdeal {
        let complements: Vec<u64> = self.facets.iter().map(|&f| !f & self.ring.full_mask()).collect();
        MonomialIdeal::from_masks(self.ring, minimal_transversals(complements))
    }

    /// `{ P_{[n] \ F} : F facet }`.
    pub fn facet_decomposition(&self) -> Decomposition {
        Decomposition::from_masks(self.ring, self.facets.iter().map(|&f| !f & self.ring.full_mask()))
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson { n: self.n(), facets: self.facets() }
    }
}

fn facet_key(f: u64) -> (u32, Vec<usize>) {
    (f.count_ones(), bit_indices(f).collect())
}

fn subsets_of_size(set: u64, size: u32) -> Vec<u64> {
    let mut out = Vec::new();
    let mut sub = set;
    loop {
        if sub.count_ones() == size {
            out.push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & set;
    }
    out
}

/// The Stanley-Reisner complex of a squarefree ideal.
///
/// Faces are the supports containing no generator. Facets are found by a
/// depth-first search over vertices in order, pruning any branch that leaves
/// out a vertex which could never become blocked.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.n();
    if n > FACET_SEARCH_MAX_VARS {
        return Err(Error::GuardExceeded {
            what: "variables for facet search",
            value: n,
            limit: FACET_SEARCH_MAX_VARS,
        });
    }
    let gens: Vec<u64> = ideal.masks().collect();
    let mut facets = Vec::new();
    facet_search(&gens, n, 0, 0, 0, &mut facets);
    Ok(SimplicialComplex::from_masks(ideal.ring(), facets))
}

fn facet_search(gens: &[u64], n: usize, next: usize, face: u64, excluded: u64, out: &mut Vec<u64>) {
    let is_face = |s: u64| !gens.iter().any(|&g| g & !s == 0);
    if next == n {
        // every excluded vertex must be blocked by the final face
        if bit_indices(excluded).all(|i| !is_face(face | 1 << (i - 1))) {
            out.push(face);
        }
        return;
    }
    let bit = 1u64 << next;
    let later = !((bit << 1) - 1) & ((1u64 << n) - 1);
    if is_face(face | bit) {
        facet_search(gens, n, next + 1, face | bit, excluded, out);
    }
    // excluding `next` only makes sense if some generator through it can still be completed
    let blockable = gens
        .iter()
        .any(|&g| g & bit != 0 && (g & !bit) & !(face | later) == 0);
    if blockable {
        facet_search(gens, n, next + 1, face, excluded | bit, out);
    }
}

/// Decomposition read off the facets; the oracle for every closed form.
pub fn decompose_via_facets(ideal: &MonomialIdeal) -> Result<Decomposition> {
    Ok(complex_of_ideal(ideal)?.facet_decomposition())
}

/// Face counts `f_{-1}, f_0, ..., f_{dim}`; `counts[k]` holds `f_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector {
    pub counts: Vec<u64>,
}

impl FVector {
    /// `f_i` for `i >= -1`.
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1).ok().and_then(|k| self.counts.get(k).copied()).unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// All inclusion-minimal vertex covers of the graph whose edge ideal is given.
///
/// Enumerates subsets directly rather than going through prime decomposition.
pub fn minimal_vertex_covers(edges: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    if edges.gens().iter().any(|g| g.degree() != 2) {
        return Err(Error::HypothesisNotMet("edge ideal must be generated in degree 2"));
    }
    let n = edges.n();
    if n > 20 {
        return Err(Error::GuardExceeded { what: "vertices for cover enumeration", value: n, limit: 20 });
    }
    let e: Vec<u64> = edges.masks().collect();
    let covers_all = |s: u64| e.iter().all(|&g| g & s != 0);
    let mut out: Vec<u64> = (0..1u64 << n)
        .filter(|&s| covers_all(s) && bit_indices(s).all(|i| !covers_all(s & !(1 << (i - 1)))))
        .collect();
    out.sort_by_key(|&s| facet_key(s));
    Ok(out.into_iter().map(|s| bit_indices(s).collect()).collect())
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ{:?}", self.facets())
    }
}

/// `{ "n": int, "facets": [[int]] }`, facets sorted by (size, lex).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;

    fn try_from(json: ComplexJson) -> Result<Self> {
        SimplicialComplex::from_faces(Ring::new(json.n)?, &json.facets)
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

    fn cx(n: usize, faces: &[&[usize]]) -> SimplicialComplex {
        let faces: Vec<Vec<usize>> = faces.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_faces(r(n), &faces).unwrap()
    }

    fn triangle_boundary() -> SimplicialComplex {
        cx(3, &[&[1, 2], &[1, 3], &[2, 3]])
    }

    fn init(n: usize, v: &[usize]) -> MonomialIdeal {
        MonomialIdeal::minimalize(r(n), initial_segment(m(n, v)).unwrap()).unwrap()
    }

    fn comps(d: &Decomposition) -> Vec<Vec<usize>> {
        d.components().iter().map(|p| p.vars()).collect()
    }

    #[test]
    fn complex_of_ideal_examples() {
        let i42 = MonomialIdeal::all_of_degree(r(4), 2).unwrap();
        assert_eq!(complex_of_ideal(&i42).unwrap().facets(), vec![vec![1], vec![2], vec![3], vec![4]]);
        let p = MonomialIdeal::minimalize(r(2), [m(2, &[1, 2])]).unwrap();
        assert_eq!(complex_of_ideal(&p).unwrap().facets(), vec![vec![1], vec![2]]);
        let d = complex_of_ideal(&init(4, &[2, 3])).unwrap();
        assert_eq!(d.facets(), vec![vec![1], vec![2, 4], vec![3, 4]]);
        assert_eq!(complex_of_ideal(&MonomialIdeal::unit(r(3))), Err(Error::UnitIdeal));
        let maximal = MonomialIdeal::prime(r(3), &[1, 2, 3]).unwrap();
        assert_eq!(complex_of_ideal(&maximal).unwrap(), SimplicialComplex::irrelevant(r(3)));
        assert_eq!(complex_of_ideal(&MonomialIdeal::zero(r(3))).unwrap(), SimplicialComplex::simplex(r(3)));
    }

    #[test]
    fn facet_decomposition_examples() {
        let d = cx(4, &[&[3, 4], &[2, 4], &[1]]).facet_decomposition();
        assert_eq!(comps(&d), vec![vec![1, 2], vec![1, 3], vec![2, 3, 4]]);
        assert_eq!(d.to_ideal(), init(4, &[2, 3]));
        assert!(SimplicialComplex::simplex(r(4)).facet_decomposition().is_empty());
        assert!(SimplicialComplex::simplex(r(4)).ideal().is_zero());
        let i52 = MonomialIdeal::all_of_degree(r(5), 2).unwrap();
        let d = decompose_via_facets(&i52).unwrap();
        assert_eq!(d.len(), 5);
        assert!(d.components().iter().all(|p| p.height() == 4));
    }

    #[test]
    fn skeleton_examples() {
        let simplex = SimplicialComplex::simplex(r(3));
        assert_eq!(simplex.skeleton(1), triangle_boundary());
        let d = complex_of_ideal(&init(4, &[2, 3])).unwrap();
        assert_eq!(d.skeleton(1), d);
        let fin = MonomialIdeal::minimalize(r(4), final_segment(m(4, &[1, 3])).unwrap()).unwrap();
        let d = complex_of_ideal(&fin).unwrap();
        assert_eq!(d.facets(), vec![vec![3], vec![4], vec![1, 2]]);
        assert_eq!(d.skeleton(0).facets(), vec![vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(d.skeleton(1), d);
    }

    #[test]
    fn pure_skeleton_examples() {
        let b = triangle_boundary();
        assert_eq!(b.pure_skeleton(0).unwrap().facets(), vec![vec![1], vec![2], vec![3]]);
        let nonpure = cx(3, &[&[1, 2], &[3]]);
        assert_eq!(nonpure.pure_skeleton(1).unwrap().facets(), vec![vec![1, 2]]);
        assert_eq!(nonpure.pure_skeleton(2), Err(Error::NoFacesOfThatDimension(2)));
    }

    #[test]
    fn link_and_induced_examples() {
        let b = triangle_boundary();
        assert_eq!(b.link(&[1]).unwrap().facets(), vec![vec![2], vec![3]]);
        assert_eq!(b.induced(&[1, 2]).unwrap().facets(), vec![vec![1, 2]]);
        assert_eq!(b.link(&[1, 2]).unwrap(), SimplicialComplex::irrelevant(r(3)));
        assert_eq!(b.link(&[]).unwrap(), b);
    }

    #[test]
    fn f_vector_examples() {
        let b = triangle_boundary();
        assert_eq!(b.f_vector().counts, vec![1, 3, 3]);
        assert_eq!(b.multiplicity().unwrap(), 3);
        let d = complex_of_ideal(&init(4, &[2, 3])).unwrap();
        assert_eq!(d.f_vector().get(1), 2);
        assert_eq!(d.multiplicity().unwrap(), 2);
        assert_eq!(SimplicialComplex::simplex(r(5)).multiplicity().unwrap(), 1);
    }

    #[test]
    fn vertex_cover_examples() {
        let path = MonomialIdeal::minimalize(r(3), [m(3, &[1, 2]), m(3, &[2, 3])]).unwrap();
        assert_eq!(minimal_vertex_covers(&path).unwrap(), vec![vec![2], vec![1, 3]]);
        let fin = MonomialIdeal::minimalize(r(4), final_segment(m(4, &[1, 3])).unwrap()).unwrap();
        assert_eq!(minimal_vertex_covers(&fin).unwrap(), vec![vec![3, 4], vec![1, 2, 3], vec![1, 2, 4]]);
        let tri = MonomialIdeal::all_of_degree(r(3), 2).unwrap();
        assert_eq!(minimal_vertex_covers(&tri).unwrap(), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn json_shape() {
        let b = triangle_boundary();
        assert_eq!(
            serde_json::to_string(&b.to_json()).unwrap(),
            r#"{"n":3,"facets":[[1,2],[1,3],[2,3]]}"#
        );
    }
}
