#![allow(dead_code)]

use lexideal::{MonomialIdeal, Ring, SqfMonomial};
use proptest::prelude::*;

pub fn mono(ring: Ring, bits: u64) -> SqfMonomial {
    let n = ring.n();
    SqfMonomial::new(ring, (1..=n).filter(|i| bits >> (i - 1) & 1 == 1)).unwrap()
}

/// A proper nonzero squarefree ideal on `lo..=hi` variables.
pub fn ideal(lo: usize, hi: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (lo..=hi).prop_flat_map(move |n| {
        prop::collection::vec(1u64..(1u64 << n), 1..=max_gens).prop_map(move |masks| {
            let ring = Ring::new(n).unwrap();
            MonomialIdeal::minimalize(ring, masks.into_iter().map(|m| mono(ring, m))).unwrap()
        })
    })
}

/// Two ideals in the same ring.
pub fn ideal_pair(lo: usize, hi: usize, max_gens: usize) -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (lo..=hi).prop_flat_map(move |n| {
        let side = move || prop::collection::vec(1u64..(1u64 << n), 1..=max_gens);
        (side(), side()).prop_map(move |(a, b)| {
            let ring = Ring::new(n).unwrap();
            let build = |ms: Vec<u64>| MonomialIdeal::minimalize(ring, ms.into_iter().map(|m| mono(ring, m))).unwrap();
            (build(a), build(b))
        })
    })
}

/// A monomial of degree `d` in `n` variables, `1 ≤ d ≤ n`.
pub fn monomial(lo: usize, hi: usize) -> impl Strategy<Value = SqfMonomial> {
    (lo..=hi).prop_flat_map(|n| (Just(n), 1u64..(1u64 << n))).prop_map(|(n, bits)| mono(Ring::new(n).unwrap(), bits))
}
