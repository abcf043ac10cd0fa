//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients in ascending degree; trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly::new(coeffs)
    }

    /// `(x + shift)^k`, expanded with binomial coefficients.
    pub fn binomial_power(shift: i64, k: usize) -> Self {
        let shift = BigInt::from(shift);
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut binom = BigInt::one();
        for i in 0..=k {
            // coefficient of x^i is C(k, i) * shift^(k - i)
            coeffs.push(&binom * num_traits::pow(shift.clone(), k - i));
            binom = binom * BigInt::from(k - i) / BigInt::from(i + 1);
        }
        IntPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Drops every term of degree `> k`.
    pub fn truncated(&self, k: usize) -> Self {
        IntPoly::new(self.coeffs.iter().take(k + 1).cloned().collect())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn binomial_powers() {
        assert_eq!(IntPoly::binomial_power(-1, 0), p(&[1]));
        assert_eq!(IntPoly::binomial_power(-1, 3), p(&[-1, 3, -3, 1]));
        assert_eq!(IntPoly::binomial_power(1, 4), p(&[1, 4, 6, 4, 1]));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[1, -1]);
        assert_eq!(&a * &b, p(&[1, 0, -1]));
        assert_eq!(&a + &b, p(&[2]));
        assert_eq!(&p(&[1, 2]) + &p(&[0, -2]), p(&[1]));
        assert_eq!(p(&[0, 0, 0]).degree(), None);
        assert_eq!(p(&[3, 0, 2]).eval(&BigInt::from(2)), BigInt::from(11));
        assert_eq!(p(&[1, 2, 3]).truncated(1), p(&[1, 2]));
    }

    #[test]
    fn x_cubed_from_shifted_chain_counts() {
        // (x-1)^3 + 3(x-1)^2 + 3(x-1) + 1 = x^3
        let mut acc = IntPoly::zero();
        for (i, f) in [1i64, 3, 3, 1].into_iter().enumerate() {
            let term = &IntPoly::constant(f.into()) * &IntPoly::binomial_power(-1, 3 - i);
            acc = &acc + &term;
        }
        assert_eq!(acc, IntPoly::monomial(1.into(), 3));
    }
}
