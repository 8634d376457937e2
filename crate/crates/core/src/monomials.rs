//! Squarefree monomials in `k[x_1, ..., x_n]` and their lex combinatorics.
//!
//! A squarefree monomial is identified with its support, a subset of
//! `{1, ..., n}`. Variables are 1-based everywhere in the public surface; the
//! bitmask below (bit `i - 1` for `x_i`) never leaks out.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 63;

/// The ambient polynomial ring, identified with its number of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ring {
    n: u8,
}

impl Ring {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::InvalidRing(n));
        }
        Ok(Ring { n: n as u8 })
    }

    pub fn n(self) -> usize {
        self.n as usize
    }

    /// Mask with one bit per variable.
    pub(crate) fn full_mask(self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn one(self) -> SqfMonomial {
        SqfMonomial { ring: self, bits: 0 }
    }

    pub fn var(self, i: usize) -> Result<SqfMonomial> {
        SqfMonomial::new(self, [i])
    }

    /// `x_1 x_2 ... x_n`.
    pub fn top(self) -> SqfMonomial {
        SqfMonomial { ring: self, bits: self.full_mask() }
    }

    pub(crate) fn check(self, other: Ring) -> Result<()> {
        if self != other {
            Err(Error::AmbientMismatch(self.n(), other.n()))
        } else {
            Ok(())
        }
    }

    /// Lex-greatest monomial of degree `d`: `x_1 ... x_d`.
    pub fn stratum_max(self, d: usize) -> Result<SqfMonomial> {
        self.check_degree(d)?;
        Ok(SqfMonomial { ring: self, bits: low_bits(d) })
    }

    /// Lex-least monomial of degree `d`: `x_{n-d+1} ... x_n`.
    pub fn stratum_min(self, d: usize) -> Result<SqfMonomial> {
        self.check_degree(d)?;
        let bits = low_bits(d) << (self.n() - d);
        Ok(SqfMonomial { ring: self, bits })
    }

    fn check_degree(self, d: usize) -> Result<()> {
        if d > self.n() {
            Err(Error::DegreeOutOfRange { degree: d, n: self.n() })
        } else {
            Ok(())
        }
    }
}

fn low_bits(d: usize) -> u64 {
    if d >= 64 {
        u64::MAX
    } else {
        (1u64 << d) - 1
    }
}

/// A squarefree monomial `x_A`, stored by its support `A`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SqfMonomial {
    ring: Ring,
    bits: u64,
}

impl SqfMonomial {
    /// Builds `x_A` from 1-based indices; repeated indices collapse.
    pub fn new<I: IntoIterator<Item = usize>>(ring: Ring, support: I) -> Result<Self> {
        let mut bits = 0u64;
        for i in support {
            if i == 0 || i > ring.n() {
                return Err(Error::IndexOutOfRange { index: i, n: ring.n() });
            }
            bits |= 1 << (i - 1);
        }
        Ok(SqfMonomial { ring, bits })
    }

    pub(crate) fn from_bits(ring: Ring, bits: u64) -> Self {
        debug_assert_eq!(bits & !ring.full_mask(), 0);
        SqfMonomial { ring, bits }
    }

    pub(crate) fn bits(self) -> u64 {
        self.bits
    }

    pub fn ring(self) -> Ring {
        self.ring
    }

    pub fn degree(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_one(self) -> bool {
        self.bits == 0
    }

    /// Sorted 1-based support.
    pub fn support(self) -> Vec<usize> {
        bit_indices(self.bits).collect()
    }

    pub fn contains_var(self, i: usize) -> bool {
        i >= 1 && i <= self.ring.n() && self.bits & (1 << (i - 1)) != 0
    }

    pub fn min_var(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize + 1)
    }

    pub fn max_var(self) -> Option<usize> {
        (self.bits != 0).then(|| 64 - self.bits.leading_zeros() as usize)
    }

    pub fn complement(self) -> Self {
        SqfMonomial { ring: self.ring, bits: !self.bits & self.ring.full_mask() }
    }

    pub fn divides(self, other: SqfMonomial) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_coprime(self, other: SqfMonomial) -> bool {
        self.bits & other.bits == 0
    }

    pub fn lcm(self, other: SqfMonomial) -> Self {
        SqfMonomial { ring: self.ring, bits: self.bits | other.bits }
    }

    pub fn gcd(self, other: SqfMonomial) -> Self {
        SqfMonomial { ring: self.ring, bits: self.bits & other.bits }
    }

    /// `self / gcd(self, other)`.
    pub fn strip(self, other: SqfMonomial) -> Self {
        SqfMonomial { ring: self.ring, bits: self.bits & !other.bits }
    }

    /// Product of coprime monomials; `None` if they share a variable.
    pub fn mul(self, other: SqfMonomial) -> Option<Self> {
        self.is_coprime(other).then(|| self.lcm(other))
    }

    pub fn without_var(self, i: usize) -> Self {
        if self.contains_var(i) {
            SqfMonomial { ring: self.ring, bits: self.bits & !(1 << (i - 1)) }
        } else {
            self
        }
    }

    pub fn with_var(self, i: usize) -> Result<Self> {
        if i == 0 || i > self.ring.n() {
            return Err(Error::IndexOutOfRange { index: i, n: self.ring.n() });
        }
        Ok(SqfMonomial { ring: self.ring, bits: self.bits | (1 << (i - 1)) })
    }

    /// Lex comparison within one degree stratum, `x_1 > x_2 > ... > x_n`.
    pub fn lex_cmp(self, other: SqfMonomial) -> Result<Ordering> {
        self.ring.check(other.ring)?;
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(lex_cmp_bits(self.bits, other.bits))
    }

    /// Position in the stratum, counting from the lex-maximum (rank 0).
    pub fn lex_rank(self) -> u64 {
        let n = self.ring.n();
        let d = self.degree();
        let mut rank = 0u64;
        let mut prev = 0usize;
        for (k, a) in bit_indices(self.bits).enumerate() {
            for c in prev + 1..a {
                rank += binomial(n - c, d - k - 1);
            }
            prev = a;
        }
        rank
    }

    /// `succ(m)`: the lex-greatest monomial of the same degree below `m`.
    pub fn succ(self) -> Result<Self> {
        let n = self.ring.n();
        let mut a = self.support();
        let d = a.len();
        // rightmost position that can still move right
        let k = (0..d).rev().find(|&k| a[k] < n - d + k + 1);
        match k {
            None => Err(Error::NoSuccessor(self.to_string())),
            Some(k) => {
                a[k] += 1;
                for t in k + 1..d {
                    a[t] = a[t - 1] + 1;
                }
                SqfMonomial::new(self.ring, a)
            }
        }
    }

    /// `pred(m)`: the lex-least monomial of the same degree above `m`.
    pub fn pred(self) -> Result<Self> {
        let n = self.ring.n();
        let mut a = self.support();
        let d = a.len();
        let k = (0..d).rev().find(|&k| {
            let floor = if k == 0 { 0 } else { a[k - 1] };
            a[k] > floor + 1
        });
        match k {
            None => Err(Error::NoPredecessor(self.to_string())),
            Some(k) => {
                a[k] -= 1;
                for t in k + 1..d {
                    a[t] = n - d + t + 1;
                }
                SqfMonomial::new(self.ring, a)
            }
        }
    }

    /// Token form, e.g. `x1x3x4`; the unit monomial prints as `1`.
    pub fn to_tokens(self) -> String {
        self.to_string()
    }
}

pub(crate) fn lex_cmp_bits(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let lowest = diff & diff.wrapping_neg();
    if a & lowest != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

pub(crate) fn bit_indices(bits: u64) -> impl Iterator<Item = usize> {
    let mut rest = bits;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i + 1)
        }
    })
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

impl fmt::Display for SqfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return f.write_str("1");
        }
        for i in bit_indices(self.bits) {
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SqfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Canonical total order: degree ascending, then lex descending.
impl Ord for SqfMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ring
            .cmp(&other.ring)
            .then(self.degree().cmp(&other.degree()))
            .then(lex_cmp_bits(other.bits, self.bits))
    }
}

impl PartialOrd for SqfMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All squarefree monomials of degree `d`, lex-descending.
pub fn stratum(ring: Ring, d: usize) -> Result<Vec<SqfMonomial>> {
    ring.check_degree(d)?;
    let mut out = Vec::with_capacity(binomial(ring.n(), d) as usize);
    let mut cur = Some(ring.stratum_max(d)?);
    while let Some(m) = cur {
        out.push(m);
        cur = m.succ().ok();
    }
    Ok(out)
}

/// `L(u, v)`: the stratum slice from `u` down to `v`, inclusive.
pub fn lexsegment(u: SqfMonomial, v: SqfMonomial) -> Result<Vec<SqfMonomial>> {
    if u.lex_cmp(v)? == Ordering::Less {
        return Err(Error::EmptySegment(u.to_string(), v.to_string()));
    }
    let mut out = vec![u];
    let mut cur = u;
    while cur != v {
        cur = cur.succ()?;
        out.push(cur);
    }
    Ok(out)
}

/// `L^i(v)`: everything of degree `deg v` that is lex-at-least `v`.
pub fn initial_segment(v: SqfMonomial) -> Result<Vec<SqfMonomial>> {
    lexsegment(v.ring().stratum_max(v.degree())?, v)
}

/// `L^f(u)`: everything of degree `deg u` that is lex-at-most `u`.
pub fn final_segment(u: SqfMonomial) -> Result<Vec<SqfMonomial>> {
    lexsegment(u, u.ring().stratum_min(u.degree())?)
}

/// Squarefree shadow: all `w x_i` with `w` in the set and `x_i` not dividing `w`.
pub fn shadow<'a, I>(set: I) -> Result<BTreeSet<SqfMonomial>>
where
    I: IntoIterator<Item = &'a SqfMonomial>,
{
    let mut out = BTreeSet::new();
    let mut ring: Option<Ring> = None;
    for &w in set {
        match ring {
            None => ring = Some(w.ring()),
            Some(r) => r.check(w.ring())?,
        }
        let free = !w.bits & w.ring().full_mask();
        for i in bit_indices(free) {
            out.insert(SqfMonomial::from_bits(w.ring(), w.bits | 1 << (i - 1)));
        }
    }
    Ok(out)
}

/// True iff the (equigenerated, nonempty) set is lex-contiguous in its stratum.
pub fn is_lexsegment_set<'a, I>(set: I) -> Result<bool>
where
    I: IntoIterator<Item = &'a SqfMonomial>,
{
    let mut ranks = Vec::new();
    let mut first: Option<SqfMonomial> = None;
    for &w in set {
        match first {
            None => first = Some(w),
            Some(f) => {
                f.ring().check(w.ring())?;
                if f.degree() != w.degree() {
                    return Err(Error::MixedDegrees);
                }
            }
        }
        ranks.push(w.lex_rank());
    }
    if ranks.is_empty() {
        return Err(Error::EmptyInput);
    }
    ranks.sort_unstable();
    ranks.dedup();
    Ok(ranks[ranks.len() - 1] - ranks[0] + 1 == ranks.len() as u64)
}
