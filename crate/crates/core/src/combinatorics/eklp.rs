//! Matching counts of dented and toothed Aztec rectangles.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::CombError;

/// `1! · 2! ⋯ k!`
pub fn superfactorial(k: i64) -> Result<BigInt, CombError> {
    if k < 0 {
        return Err(CombError::Domain(format!("superfactorial of {k}")));
    }
    Ok(superfactorial_or_one(k))
}

/// As [`superfactorial`] but with the empty product for every `k < 1`.
pub(crate) fn superfactorial_or_one(k: i64) -> BigInt {
    let mut f = BigInt::one();
    let mut acc = BigInt::one();
    for i in 1..=k {
        f *= i;
        acc *= &f;
    }
    acc
}

/// `Π_{i<j} (x_j - x_i)`, the determinant `|x_i^{j-1}|`.
pub fn vandermonde(xs: &[i64]) -> BigInt {
    let mut p = BigInt::one();
    for j in 0..xs.len() {
        for i in 0..j {
            p *= xs[j] - xs[i];
        }
    }
    p
}

fn check_notches(xs: &[i64], m: u32, hi: i64) -> Result<(), CombError> {
    if xs.len() != m as usize {
        return Err(CombError::Domain(format!("expected {m} positions, got {}", xs.len())));
    }
    if let Some(x) = xs.iter().find(|&&x| x < 1 || x > hi) {
        return Err(CombError::Domain(format!("position {x} outside 1..={hi}")));
    }
    if xs.windows(2).any(|w| w[0] > w[1]) {
        return Err(CombError::Domain("positions must not decrease".into()));
    }
    Ok(())
}

fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact division by {den}");
    q
}

/// Matchings of the `n × m` black-edged rectangle with dents `xs`. Equal
/// dents give 0.
pub fn eklp_d(n: u32, m: u32, xs: &[i64]) -> Result<BigInt, CombError> {
    check_notches(xs, m, i64::from(n) + 1)?;
    if m == 0 {
        return Ok(BigInt::one());
    }
    let m = i64::from(m);
    let num = (BigInt::one() << (m * (m - 1) / 2) as usize) * vandermonde(xs);
    Ok(exact_div(num, &superfactorial_or_one(m - 1)))
}

/// Matchings of the `n × m` white-edged rectangle with teeth `ys`.
pub fn eklp_e(n: u32, m: u32, ys: &[i64]) -> Result<BigInt, CombError> {
    check_notches(ys, m, i64::from(n))?;
    if m == 0 {
        return Ok(BigInt::one());
    }
    let m = i64::from(m);
    let num = (BigInt::one() << (m * (m + 1) / 2) as usize) * vandermonde(ys);
    Ok(exact_div(num, &superfactorial_or_one(m - 1)))
}

/// `E` as the sum of `D` over `x_i ∈ {y_i, y_i + 1}`.
pub fn eklp_e_by_recursion(n: u32, m: u32, ys: &[i64]) -> Result<BigInt, CombError> {
    check_notches(ys, m, i64::from(n))?;
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << m) {
        let xs: Vec<i64> = ys.iter().enumerate().map(|(i, &y)| y + i64::from((mask >> i) & 1)).collect();
        if xs.windows(2).all(|w| w[0] < w[1]) {
            total += eklp_d(n, m, &xs)?;
        }
    }
    Ok(total)
}

/// `D_{n,m+1}` as the sum of `E_{n,m}` over `x_i ≤ y_i < x_{i+1}`.
pub fn eklp_d_by_recursion(n: u32, xs: &[i64]) -> Result<BigInt, CombError> {
    let m1 = xs.len() as u32;
    check_notches(xs, m1, i64::from(n) + 1)?;
    if m1 == 0 {
        return Err(CombError::Domain("need at least one dent".into()));
    }
    if xs.windows(2).any(|w| w[0] == w[1]) {
        return Ok(BigInt::zero());
    }
    let ranges: Vec<(i64, i64)> = xs.windows(2).map(|w| (w[0], w[1] - 1)).collect();
    let mut total = BigInt::zero();
    let mut ys = Vec::with_capacity(ranges.len());
    sum_boxes(&ranges, &mut ys, &mut |ys| {
        total += eklp_e(n, m1 - 1, ys)?;
        Ok(())
    })?;
    Ok(total)
}

fn sum_boxes(
    ranges: &[(i64, i64)],
    ys: &mut Vec<i64>,
    f: &mut dyn FnMut(&[i64]) -> Result<(), CombError>,
) -> Result<(), CombError> {
    let Some(&(lo, hi)) = ranges.get(ys.len()) else {
        return f(ys);
    };
    for y in lo..=hi {
        ys.push(y);
        sum_boxes(ranges, ys, f)?;
        ys.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::increasing_tuples;
    use crate::linalg::{det, IntMatrix};

    #[test]
    fn superfactorials() {
        assert_eq!(superfactorial(0).unwrap(), BigInt::from(1));
        assert_eq!(superfactorial(3).unwrap(), BigInt::from(12));
        assert_eq!(superfactorial(4).unwrap(), BigInt::from(288));
        assert!(superfactorial(-1).is_err());
    }

    #[test]
    fn vandermonde_is_determinant() {
        let xs = [1, 3, 4, 7];
        let m = IntMatrix::from_fn(4, 4, |i, j| BigInt::from(xs[i]).pow(j as u32));
        assert_eq!(vandermonde(&xs), det(&m).unwrap());
    }

    #[test]
    fn small_values() {
        assert_eq!(eklp_d(3, 1, &[2]).unwrap(), BigInt::from(1));
        assert_eq!(eklp_d(2, 2, &[1, 2]).unwrap(), BigInt::from(2));
        assert_eq!(eklp_d(2, 2, &[2, 2]).unwrap(), BigInt::from(0));
        assert_eq!(eklp_e(3, 1, &[3]).unwrap(), BigInt::from(2));
        assert!(eklp_d(2, 2, &[2, 1]).is_err());
        assert!(eklp_d(2, 1, &[4]).is_err());
        assert!(eklp_e(2, 1, &[3]).is_err());
    }

    #[test]
    fn recursions_close() {
        for n in 1..=4u32 {
            for m in 1..=2u32 {
                for ys in increasing_tuples(m as usize, 1, i64::from(n)) {
                    assert_eq!(eklp_e_by_recursion(n, m, &ys).unwrap(), eklp_e(n, m, &ys).unwrap());
                }
                for xs in increasing_tuples(m as usize + 1, 1, i64::from(n) + 1) {
                    assert_eq!(eklp_d_by_recursion(n, &xs).unwrap(), eklp_d(n, m + 1, &xs).unwrap());
                }
            }
        }
    }
}
