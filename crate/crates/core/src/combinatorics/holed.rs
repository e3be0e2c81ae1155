//! Closed forms for weighted matchings of boards with holes: one black hole
//! in a notched rectangle, and one hole of each color in a diamond.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::delta::product_operator;
use super::eklp::superfactorial_or_one;
use super::krawtchouk::{krawtchouk, krawtchouk_generator};
use super::poly::Poly;
use super::CombError;
use crate::lattice::RectKind;
use crate::linalg::det_rational;

fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

fn sign(e: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(if e.rem_euclid(2) == 0 { 1 } else { -1 }))
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn into_integer(q: BigRational, what: &str) -> BigInt {
    assert!(q.is_integer(), "{what} is not an integer: {q}");
    q.to_integer()
}

/// Weighted matchings of an `n × (m+d1)` rectangle with `m+d1-1` notches
/// (teeth for `WhiteEdged`, dents for `BlackEdged`) and a black hole at
/// `(w0, m)`, from the operator determinant.
pub fn koloro_weighted(kind: RectKind, n: u32, m: u32, d1: u32, w0: i64, notches: &[i64]) -> Result<BigInt, CombError> {
    let h = i64::from(m + d1);
    if m == 0 {
        return Err(CombError::Domain("hole row must be at least 1".into()));
    }
    let hi = match kind {
        RectKind::WhiteEdged => i64::from(n),
        RectKind::BlackEdged => i64::from(n) + 1,
    };
    if notches.len() as i64 != h - 1
        || notches.iter().any(|&y| y < 1 || y > hi)
        || notches.windows(2).any(|w| w[0] >= w[1])
    {
        return Err(CombError::Domain(format!("need {} increasing notches in 1..={hi}", h - 1)));
    }
    if w0 < 1 || w0 > i64::from(n) + 1 {
        return Err(CombError::Domain(format!("hole column {w0} outside the rectangle")));
    }
    if kind == RectKind::BlackEdged && d1 == 0 && notches.contains(&w0) {
        return Err(CombError::Domain(format!("hole ({w0}, {m}) sits on a dent")));
    }
    let d1 = i64::from(d1);
    let (two_exp, tri) = match kind {
        RectKind::WhiteEdged => (-(d1 + 1), h * (h + 1) / 2),
        RectKind::BlackEdged => (-d1, h * (h - 1) / 2),
    };
    let size = h as usize;
    let op = product_operator(w0 - 1, two_exp, d1 as usize, size)?;
    let mut rows = vec![(0..size).map(|j| op.eval_monomial_at_one(j)).collect::<Result<Vec<_>, _>>()?];
    for &y in notches {
        rows.push((0..size).map(|j| rat(y.pow(j as u32))).collect());
    }
    let d = det_rational(&rows)?;
    let pre = sign(d1) * pow2(tri) / BigRational::from_integer(superfactorial_or_one(h - 1));
    Ok(into_integer(pre * d, "weighted rectangle count"))
}

fn check_diamond_holes(n: u32, w0: i64, d0: i64, w1: i64, d1: i64) -> Result<(), CombError> {
    let n = i64::from(n);
    let ok = (1..=n).contains(&w0)
        && (1..=n + 1).contains(&(w0 + d0))
        && (1..=n).contains(&w1)
        && (1..=n + 1).contains(&(w1 + d1));
    if !ok {
        return Err(CombError::Domain(format!("holes (w0={w0}, d0={d0}, w1={w1}, d1={d1}) leave the diamond")));
    }
    Ok(())
}

/// Weighted count with the white hole in the first column:
/// `(-1)^{w1+1} Kr(w1-1, n-1, n-d0) 2^{n(n-1)/2}`. It does not depend on `d1`.
pub fn lemur(n: u32, d0: i64, w1: i64) -> Result<BigInt, CombError> {
    if n == 0 || d0 < 1 || d0 > i64::from(n) || w1 < 1 || w1 > i64::from(n) {
        return Err(CombError::Domain(format!("lemur({n}, {d0}, {w1}) out of range")));
    }
    let n = i64::from(n);
    let k = krawtchouk(w1 - 1, n - 1, n - d0) << (n * (n - 1) / 2) as usize;
    Ok(if w1 % 2 == 1 { k } else { -k })
}

/// Coefficients `a_0..a_n` of `(x-1)^{s-1} (x+1)^{n-s+1}`.
pub fn kato_coeffs(n: u32, s: i64) -> Result<Vec<BigInt>, CombError> {
    let n = i64::from(n);
    if s < 1 || s > n + 1 {
        return Err(CombError::Domain(format!("s={s} outside 1..={}", n + 1)));
    }
    let one = BigInt::one();
    let p = Poly::linear(-one.clone(), one.clone())
        .pow((s - 1) as u32)
        .mul(&Poly::linear(one.clone(), one).pow((n - s + 1) as u32));
    Ok((0..=n).map(|k| p.coeff(k)).collect())
}

/// The two families of vanishing sums of the `a_k`.
pub fn kato_identities_hold(n: u32, s: i64) -> Result<bool, CombError> {
    let a = kato_coeffs(n, s)?;
    let n = i64::from(n);
    let sum = |f: &dyn Fn(usize) -> BigInt| a.iter().enumerate().map(|(k, ak)| ak * f(k)).sum::<BigInt>();
    for j in 2..=s {
        if !sum(&|k| BigInt::from(k as i64 + 1).pow((j - 2) as u32)).is_zero() {
            return Ok(false);
        }
    }
    for j in s + 1..=n + 1 {
        let v = sum(&|k| {
            let t = BigInt::from(k as i64 + 1).pow((j - s - 1) as u32);
            if k % 2 == 0 {
                t
            } else {
                -t
            }
        });
        if !v.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The factor turning the `(n+1)`-square determinant into the weighted
/// count of the two-hole diamond.
pub fn hoho_prefactor(n: u32, w1: i64, d1: i64) -> BigRational {
    let n = i64::from(n);
    let s = w1 + d1;
    let r = n - s + 1;
    sign(d1) * pow2((s - 1) * s / 2) / BigRational::from_integer(superfactorial_or_one(s - 2)) * pow2(r * (r + 1) / 2)
        / BigRational::from_integer(superfactorial_or_one(r - 1))
        * sign((n + 1) / 2 - s / 2)
}

/// The `(n+1)`-square determinant `D(w0, d0, w1, d1)`, entry by entry.
pub fn big_d(n: u32, w0: i64, d0: i64, w1: i64, d1: i64) -> Result<BigRational, CombError> {
    check_diamond_holes(n, w0, d0, w1, d1)?;
    if d0 < 1 || d1 < 1 {
        return Err(CombError::Domain("needs d0, d1 >= 1".into()));
    }
    let size = n as usize + 1;
    let s = w1 + d1;
    let op = product_operator(w0 + d0 - 1, -d1, (d1 - 1) as usize, (s - 1).max(1) as usize)?;
    let mut rows = vec![vec![BigRational::zero(); size]; size];
    for (i0, row) in rows.iter_mut().enumerate() {
        let i = i0 as i64 + 1;
        for (j0, e) in row.iter_mut().enumerate() {
            let j = j0 as i64 + 1;
            *e = if j == 1 {
                if i == w0 + 1 {
                    rat(1)
                } else {
                    rat(0)
                }
            } else if i == 1 {
                if j <= s {
                    op.eval_monomial_at_one((j - 2) as usize)?
                } else {
                    rat(0)
                }
            } else if j <= s {
                rat((i - 1).pow((j - 2) as u32))
            } else {
                sign(i - 1) * rat((i - 1).pow((j - s - 1) as u32))
            };
        }
    }
    Ok(det_rational(&rows)?)
}

/// `Σ_{j<w0} Kr(j, n, s-1) · D(1, j+d0, w1, d1)` with each inner term taken
/// from the determinant.
pub fn telescoped_d(n: u32, w0: i64, d0: i64, w1: i64, d1: i64) -> Result<BigRational, CombError> {
    telescope(n, w0, d0, w1, d1, |dd| big_d(n, 1, dd, w1, d1))
}

/// As [`telescoped_d`] with each inner term from [`lemur`] instead; no
/// determinants at all.
pub fn telescoped_d_closed(n: u32, w0: i64, d0: i64, w1: i64, d1: i64) -> Result<BigRational, CombError> {
    let pre = hoho_prefactor(n, w1, d1);
    telescope(n, w0, d0, w1, d1, |dd| Ok(BigRational::from_integer(lemur(n, dd, w1)?) / &pre))
}

fn telescope(
    n: u32,
    w0: i64,
    d0: i64,
    w1: i64,
    d1: i64,
    inner: impl Fn(i64) -> Result<BigRational, CombError>,
) -> Result<BigRational, CombError> {
    check_diamond_holes(n, w0, d0, w1, d1)?;
    if d0 < 1 || d1 < 1 {
        return Err(CombError::Domain("needs d0, d1 >= 1".into()));
    }
    let s = w1 + d1;
    let mut total = BigRational::zero();
    for j in 0..w0 {
        let k = krawtchouk(j, i64::from(n), s - 1);
        if !k.is_zero() {
            total += BigRational::from_integer(k) * inner(j + d0)?;
        }
    }
    Ok(total)
}

/// `[x^{w1-1}] (1+x)^{d0-1} (2+x)^{-(n+1-w1)}` by truncated power-series
/// division, exact.
pub fn series_chain_coefficient(n: u32, d0: i64, w1: i64) -> Result<BigRational, CombError> {
    let n = i64::from(n);
    if d0 < 1 || w1 < 1 || w1 > n {
        return Err(CombError::Domain(format!("series chain ({n}, {d0}, {w1}) out of range")));
    }
    let t = n as usize + 1;
    // 1/(2+x) = Σ (-1)^k x^k / 2^{k+1}
    let recip: Vec<BigRational> = (0..t).map(|k| sign(k as i64) * pow2(-(k as i64) - 1)).collect();
    let mut acc = truncate(&Poly::linear(rat(1), rat(1)).pow((d0 - 1) as u32), t);
    for _ in 0..n + 1 - w1 {
        acc = truncated_mul(&acc, &recip, t);
    }
    Ok(acc.get((w1 - 1) as usize).cloned().unwrap_or_else(BigRational::zero))
}

/// The same coefficient in Krawtchouk form: `2^{-n} Kr(w1-1, n-1, n-d0)`.
pub fn series_chain_krawtchouk(n: u32, d0: i64, w1: i64) -> BigRational {
    let n = i64::from(n);
    let k = krawtchouk_generator(n - 1, n - d0).map_or_else(BigInt::zero, |p| p.coeff(w1 - 1));
    BigRational::from_integer(k) * pow2(-n)
}

fn truncate(p: &Poly<BigRational>, t: usize) -> Vec<BigRational> {
    (0..t).map(|k| p.coeff(k as i64)).collect()
}

fn truncated_mul(a: &[BigRational], b: &[BigRational], t: usize) -> Vec<BigRational> {
    let mut c = vec![BigRational::zero(); t];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().take(t - i) {
            c[i + j] += x * y;
        }
    }
    c
}
