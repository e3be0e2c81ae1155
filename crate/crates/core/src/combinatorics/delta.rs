//! Truncated power series in the forward difference `Δ p(x) = p(x+1) - p(x)`.
//!
//! `Δ^j` kills every polynomial of degree below `j`, so on inputs of degree
//! `< m` a series only needs its first `m` terms. Each operator carries that
//! truncation and refuses inputs it cannot apply exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::krawtchouk::binomial;
use super::poly::Poly;
use super::CombError;

pub type RatPoly = Poly<BigRational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaOperator {
    // coeffs[k] multiplies Δ^k; always exactly `trunc` long
    coeffs: Vec<BigRational>,
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl DeltaOperator {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, trunc: usize) -> Self {
        coeffs.resize(trunc, BigRational::zero());
        DeltaOperator { coeffs }
    }

    pub fn identity(trunc: usize) -> Self {
        Self::from_coeffs(vec![rat(1)], trunc)
    }

    /// `Δ^k`
    pub fn delta_pow(k: usize, trunc: usize) -> Self {
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = rat(1);
        Self::from_coeffs(c, trunc)
    }

    /// `a I + b Δ`
    pub fn linear(a: i64, b: i64, trunc: usize) -> Self {
        Self::from_coeffs(vec![rat(a), rat(b)], trunc)
    }

    /// `(2I + Δ)^{-1} = (1/2) Σ_j (-Δ/2)^j`, truncated.
    pub fn inverse_2i_plus_delta(trunc: usize) -> Self {
        let coeffs = (0..trunc)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                BigRational::new(BigInt::from(sign), BigInt::one() << (j + 1))
            })
            .collect();
        DeltaOperator { coeffs }
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Product of two series; the result keeps the smaller truncation.
    pub fn compose(&self, other: &Self) -> Self {
        let t = self.trunc().min(other.trunc());
        let mut c = vec![BigRational::zero(); t];
        for (i, a) in self.coeffs.iter().enumerate().take(t) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(t - i) {
                c[i + j] += a * b;
            }
        }
        DeltaOperator { coeffs: c }
    }

    /// Series inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self, CombError> {
        let t = self.trunc();
        let Some(c0) = self.coeffs.first().filter(|c| !c.is_zero()) else {
            return Err(CombError::Domain("series has no inverse".into()));
        };
        let mut r = vec![BigRational::zero(); t];
        r[0] = c0.recip();
        for k in 1..t {
            let mut s = BigRational::zero();
            for i in 1..=k {
                s += &self.coeffs[i] * &r[k - i];
            }
            r[k] = -s / c0;
        }
        Ok(DeltaOperator { coeffs: r })
    }

    /// Integer powers, negative ones through [`inverse`](Self::inverse).
    pub fn pow(&self, e: i64) -> Result<Self, CombError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::identity(self.trunc());
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose(&base);
        }
        Ok(acc)
    }

    fn check_degree(&self, deg: Option<usize>) -> Result<(), CombError> {
        match deg {
            Some(d) if d >= self.trunc() => Err(CombError::Truncation { degree: d, trunc: self.trunc() }),
            _ => Ok(()),
        }
    }

    pub fn apply(&self, p: &RatPoly) -> Result<RatPoly, CombError> {
        self.check_degree(p.degree())?;
        let mut out = RatPoly::zero();
        let mut dk = p.clone();
        for c in &self.coeffs {
            if dk.is_zero() {
                break;
            }
            if !c.is_zero() {
                out = out.add(&dk.scale(c));
            }
            dk = dk.forward_difference();
        }
        Ok(out)
    }

    /// `(self)(x^d)` evaluated at `x = 1`, using
    /// `Δ^k(x^d)(1) = Σ_i (-1)^{k-i} C(k,i) (1+i)^d`.
    pub fn eval_monomial_at_one(&self, d: usize) -> Result<BigRational, CombError> {
        self.check_degree(Some(d))?;
        let mut total = BigRational::zero();
        for (k, c) in self.coeffs.iter().enumerate().take(d + 1) {
            if c.is_zero() {
                continue;
            }
            let mut s = BigInt::zero();
            for i in 0..=k as i64 {
                let t = binomial(k as i64, i) * BigInt::from(1 + i).pow(d as u32);
                if (k as i64 - i) % 2 == 0 {
                    s += t;
                } else {
                    s -= t;
                }
            }
            total += c * BigRational::from_integer(s);
        }
        Ok(total)
    }
}

/// `(I+Δ)^a (2I+Δ)^b Δ^c` truncated at `trunc`.
pub fn product_operator(a: i64, b: i64, c: usize, trunc: usize) -> Result<DeltaOperator, CombError> {
    let i_plus = DeltaOperator::linear(1, 1, trunc).pow(a)?;
    let two_plus = if b < 0 {
        DeltaOperator::inverse_2i_plus_delta(trunc).pow(-b)?
    } else {
        DeltaOperator::linear(2, 1, trunc).pow(b)?
    };
    Ok(i_plus.compose(&two_plus).compose(&DeltaOperator::delta_pow(c, trunc)))
}
