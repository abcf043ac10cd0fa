//! Chain statistics of the order complex.
//!
//! Conventions: `f[i]` counts chains with exactly `i` elements, so `f[0] = 1`
//! for the empty chain and `f[1] = |P|`. `d` is the number of elements in a
//! largest chain, which makes the order complex `(d - 1)`-dimensional. The
//! h-vector is the unique integer sequence with
//!
//! ```text
//! sum_{i=0}^{d} f_i (x - 1)^(d - i) = sum_{i=0}^{d} h_i x^(d - i)
//! ```
//!
//! All arithmetic is exact.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::poset::{Poset, DEFAULT_CHAIN_LIMIT};

/// Chain counts by cardinality, `counts[i]` = number of `i`-element chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<BigInt>,
}

impl FVector {
    pub fn new(counts: Vec<BigInt>) -> Self {
        FVector { counts }
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// Cardinality of a largest chain.
    pub fn d(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }
}

/// `(h_0, …, h_d)`, possibly with trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector {
    entries: Vec<BigInt>,
}

impl HVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        HVector { entries }
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        HVector::new(entries.iter().map(|&h| BigInt::from(h)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn d(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }

    /// Index of the last nonzero entry; `None` when every entry is zero.
    pub fn s(&self) -> Option<usize> {
        self.entries.iter().rposition(|h| !h.is_zero())
    }

    /// The prefix `(h_0, …, h_s)` ending at the last nonzero entry.
    pub fn truncate(&self) -> Result<Vec<BigInt>> {
        let s = self.s().ok_or(Error::AllZero)?;
        Ok(self.entries[..=s].to_vec())
    }

    pub fn sum(&self) -> BigInt {
        self.entries.iter().sum()
    }
}

pub fn f_vector(p: &Poset) -> Result<FVector> {
    f_vector_bounded(p, DEFAULT_CHAIN_LIMIT)
}

/// Counts chains by cardinality.
///
/// `ending[v][k]` is the number of `k`-element chains whose largest element
/// is `v`; it is the sum of `ending[u][k - 1]` over all `u < v`.
pub fn f_vector_bounded(p: &Poset, limit: usize) -> Result<FVector> {
    p.check_chain_limit("f_vector", limit)?;
    let n = p.len();
    let d = p.height();
    let mut ending: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); d + 1]; n];
    let mut counts = vec![BigInt::zero(); d + 1];
    counts[0] = BigInt::one();
    for &v in p.linear_extension() {
        let mut row = vec![BigInt::zero(); d + 1];
        if d > 0 {
            row[1] = BigInt::one();
        }
        for &u in p.linear_extension() {
            if u == v {
                break;
            }
            if p.lt_idx(u, v) {
                for k in 2..=d {
                    row[k] += &ending[u][k - 1];
                }
            }
        }
        for (total, c) in counts.iter_mut().zip(&row) {
            *total += c;
        }
        ending[v] = row;
    }
    Ok(FVector { counts })
}

/// Transforms an f-vector into the h-vector through the defining identity.
pub fn h_from_f(f: &FVector) -> HVector {
    let d = f.d();
    let mut lhs = IntPoly::zero();
    for (i, fi) in f.counts().iter().enumerate() {
        let term = &IntPoly::constant(fi.clone()) * &IntPoly::binomial_power(-1, d - i);
        lhs = &lhs + &term;
    }
    // h_i is the coefficient of x^(d - i)
    HVector::new((0..=d).map(|i| lhs.coeff(d - i)).collect())
}

/// Inverse transform: substitute `x = y + 1` into `sum h_i x^(d-i)`.
pub fn f_from_h(h: &HVector) -> FVector {
    let d = h.d();
    let mut rhs = IntPoly::zero();
    for (i, hi) in h.entries().iter().enumerate() {
        let term = &IntPoly::constant(hi.clone()) * &IntPoly::binomial_power(1, d - i);
        rhs = &rhs + &term;
    }
    FVector::new((0..=d).map(|i| rhs.coeff(d - i)).collect())
}

pub fn h_vector(p: &Poset) -> Result<HVector> {
    Ok(h_from_f(&f_vector(p)?))
}

pub fn h_vector_bounded(p: &Poset, limit: usize) -> Result<HVector> {
    Ok(h_from_f(&f_vector_bounded(p, limit)?))
}

/// Number of multichains `γ_1 ≤ ⋯ ≤ γ_n`, i.e. degree-`n` standard
/// monomials. Counted as order-preserving maps from an `n`-chain.
pub fn hilbert_function(p: &Poset, n: usize) -> BigInt {
    hilbert_function_prefix(p, n).pop().expect("n + 1 values")
}

/// `H(0), …, H(n)` in one pass.
pub fn hilbert_function_prefix(p: &Poset, n: usize) -> Vec<BigInt> {
    let size = p.len();
    let mut out = vec![BigInt::one()];
    if n == 0 {
        return out;
    }
    // ending[v] = number of multichains of the current length with last element v
    let mut ending = vec![BigInt::one(); size];
    out.push(BigInt::from(size));
    for _ in 2..=n {
        let mut next = vec![BigInt::zero(); size];
        for (v, slot) in next.iter_mut().enumerate() {
            for (u, count) in ending.iter().enumerate() {
                if p.leq_idx(u, v) {
                    *slot += count;
                }
            }
        }
        ending = next;
        out.push(ending.iter().sum());
    }
    out
}

pub fn hilbert_series_check(p: &Poset, terms: usize) -> Result<bool> {
    hilbert_series_check_bounded(p, terms, DEFAULT_CHAIN_LIMIT)
}

/// Compares `(sum_{n ≤ N} H(n) λ^n)(1 - λ)^d`, truncated to degree `N`,
/// against the h-vector padded with zeros.
pub fn hilbert_series_check_bounded(p: &Poset, terms: usize, limit: usize) -> Result<bool> {
    let h = h_vector_bounded(p, limit)?;
    let d = h.d();
    let series = IntPoly::new(hilbert_function_prefix(p, terms));
    // (1 - λ)^d = (-1)^d (λ - 1)^d
    let mut denom = IntPoly::binomial_power(-1, d);
    if d % 2 == 1 {
        denom = &denom * &IntPoly::constant(BigInt::from(-1));
    }
    let numerator = (&series * &denom).truncated(terms);
    Ok((0..=terms).all(|k| {
        let expected = h.entries().get(k).cloned().unwrap_or_default();
        numerator.coeff(k) == expected
    }))
}

/// Number of `i`-element chains through `x`, for every `i` in `0..=d`.
pub fn chains_through_by_size(p: &Poset, x: usize) -> Result<Vec<BigInt>> {
    let d = p.height();
    let mut counts = vec![BigInt::zero(); d + 1];
    for c in p.chains()? {
        if c.contains(x) {
            counts[c.len()] += 1;
        }
    }
    Ok(counts)
}
