//! Exact matrix rank over ℚ and over prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, Error> {
        if !(2..1 << 62).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a usable prime")));
        }
        Ok(Field::Prime(p))
    }

    /// Rank of an integer matrix given as rows.
    pub fn rank(self, rows: Vec<Vec<i64>>) -> usize {
        match self {
            Field::Rational => rank_rational(rows),
            Field::Prime(p) => rank_mod_p(rows, p),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("rational"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "rational" => Ok(Field::Rational),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidField(s.to_string()))?;
                Field::prime(p)
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Rank over ℚ by fraction-free elimination. Rows are divided by their
/// content after every update, which keeps boundary-matrix entries tiny;
/// on overflow the remaining work restarts in arbitrary precision.
pub fn rank_rational(rows: Vec<Vec<i64>>) -> usize {
    match rank_i64(rows.clone()) {
        Some(r) => r,
        None => rank_bigint(rows),
    }
}

fn rank_i64(mut rows: Vec<Vec<i64>>) -> Option<usize> {
    rows.retain(|r| r.iter().any(|&x| x != 0));
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        let pv = pivot_row[c];
        for r in rank + 1..rows.len() {
            let f = rows[r][c];
            if f == 0 {
                continue;
            }
            let g = gcd(pv, f);
            let (a, b) = (pv / g, f / g);
            let row = &mut rows[r];
            let mut content = 0i64;
            for k in c..cols {
                let v = row[k].checked_mul(a)?.checked_sub(pivot_row[k].checked_mul(b)?)?;
                row[k] = v;
                content = gcd(content, v);
            }
            if content > 1 {
                for v in &mut row[c..] {
                    *v /= content;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_bigint(rows: Vec<Vec<i64>>) -> usize {
    let mut rows: Vec<Vec<BigInt>> = rows
        .into_iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let f = rows[r][c].clone();
            let row = &mut rows[r];
            let mut content = BigInt::zero();
            for k in c..cols {
                let v = &row[k] * &pivot_row[c] - &pivot_row[k] * &f;
                content = num_integer_gcd(&content, &v);
                row[k] = v;
            }
            if content > BigInt::from(1) {
                for v in &mut row[c..] {
                    *v = &*v / &content;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn rank_mod_p(rows: Vec<Vec<i64>>, p: u64) -> usize {
    let reduce = |x: i64| x.rem_euclid(p as i64) as u64;
    let mut rows: Vec<Vec<u64>> = rows.into_iter().map(|r| r.into_iter().map(reduce).collect()).collect();
    let cols = rows.first().map_or(0, |r| r.len());
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        let pivot_row: Vec<u64> = rows[rank].iter().map(|&x| mulmod(x, inv)).collect();
        for r in rank + 1..rows.len() {
            let f = rows[r][c];
            if f == 0 {
                continue;
            }
            for k in c..cols {
                let sub = mulmod(f, pivot_row[k]);
                rows[r][k] = (rows[r][k] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}
