//! Stanley's inequalities for h-vectors of Cohen–Macaulay homogeneous
//! domains, and the Gorenstein symmetry test.
//!
//! For a truncated h-vector `(h_0, …, h_s)` with `h_s ≠ 0` the inequalities
//! read `h_0 + ⋯ + h_j ≤ h_s + ⋯ + h_{s-j}` for `1 ≤ j ≤ ⌊s/2⌋`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub j: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    pub s: usize,
    /// Indices of entries that are `≤ 0`. Advisory only: Cohen–Macaulay
    /// rings have positive h-vectors, but the checker does not reject these.
    pub nonpositive: Vec<usize>,
}

impl StanleyReport {
    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

fn validate(h: &[BigInt]) -> Result<()> {
    match h.last() {
        None => Err(Error::EmptyVector),
        Some(last) if last.is_zero() => Err(Error::TrailingZero),
        Some(_) => Ok(()),
    }
}

pub fn stanley_check(h: &[BigInt]) -> Result<StanleyReport> {
    validate(h)?;
    let s = h.len() - 1;
    let mut violations = Vec::new();
    let mut lhs = h[0].clone();
    let mut rhs = h[s].clone();
    for j in 1..=s / 2 {
        lhs += &h[j];
        rhs += &h[s - j];
        if lhs > rhs {
            violations.push(Violation {
                j,
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            });
        }
    }
    let nonpositive = h
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_positive())
        .map(|(i, _)| i)
        .collect();
    Ok(StanleyReport {
        passed: violations.is_empty(),
        violations,
        s,
        nonpositive,
    })
}

/// `h_i = h_{s-i}` for every `i`.
pub fn gorenstein_symmetry_check(h: &[BigInt]) -> Result<bool> {
    validate(h)?;
    Ok(h.iter().eq(h.iter().rev()))
}
