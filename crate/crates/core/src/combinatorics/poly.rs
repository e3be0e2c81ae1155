//! Dense univariate polynomials, ascending coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T> Poly<T>
where
    T: Clone + Zero + One + PartialEq + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    /// Trailing zeros are dropped; the zero polynomial has no coefficients.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(d: usize) -> Self {
        let mut c = vec![T::zero(); d + 1];
        c[d] = T::one();
        Poly { coeffs: c }
    }

    /// `a + b x`
    pub fn linear(a: T, b: T) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k`; zero outside the support, including negative `k`.
    pub fn coeff(&self, k: i64) -> T {
        usize::try_from(k).ok().and_then(|k| self.coeffs.get(k).cloned()).unwrap_or_else(T::zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k as i64) + other.coeff(k as i64)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k as i64) - other.coeff(k as i64)).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(T::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `p(x + 1)`.
    pub fn shift_one(&self) -> Self {
        // repeated synthetic steps: Horner in the shifted variable
        let mut out = Self::zero();
        let xp1 = Self::linear(T::one(), T::one());
        for c in self.coeffs.iter().rev() {
            out = out.mul(&xp1).add(&Self::constant(c.clone()));
        }
        out
    }

    /// Forward difference `p(x + 1) - p(x)`.
    pub fn forward_difference(&self) -> Self {
        self.shift_one().sub(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> Poly<BigInt> {
        Poly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn trims_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(a.mul(&p(&[1, -1])), p(&[1, 0, -1]));
        assert_eq!(a.sub(&a), Poly::zero());
        assert_eq!(p(&[0, 0, 1]).eval(&BigInt::from(7)), BigInt::from(49));
        assert_eq!(a.coeff(-1), BigInt::from(0));
        assert_eq!(a.coeff(9), BigInt::from(0));
    }

    #[test]
    fn difference_of_square() {
        assert_eq!(p(&[0, 0, 1]).forward_difference(), p(&[1, 2]));
        assert_eq!(p(&[5]).forward_difference(), Poly::zero());
        assert_eq!(p(&[0, 0, 0, 1]).shift_one(), p(&[1, 3, 3, 1]));
    }
}
