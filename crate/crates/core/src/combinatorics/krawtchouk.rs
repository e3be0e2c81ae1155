//! Krawtchouk coefficients `Kr(a, b, c) = [x^a] (1-x)^c (1+x)^(b-c)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;

pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `(1-x)^c (1+x)^(b-c)`, or `None` when either exponent is negative.
pub fn krawtchouk_generator(b: i64, c: i64) -> Option<Poly<BigInt>> {
    if c < 0 || c > b {
        return None;
    }
    let one = BigInt::one();
    let minus = Poly::linear(one.clone(), -one.clone()).pow(c as u32);
    let plus = Poly::linear(one.clone(), one).pow((b - c) as u32);
    Some(minus.mul(&plus))
}

/// Literal coefficient extraction from the dense product. Zero whenever the
/// product is not a polynomial or `a` is outside its support.
pub fn krawtchouk(a: i64, b: i64, c: i64) -> BigInt {
    krawtchouk_generator(b, c).map_or_else(BigInt::zero, |p| p.coeff(a))
}

/// `Σ_i (-1)^i C(c,i) C(b-c, a-i)`; same value as [`krawtchouk`].
pub fn krawtchouk_sum(a: i64, b: i64, c: i64) -> BigInt {
    if c < 0 || c > b || a < 0 || a > b {
        return BigInt::zero();
    }
    let mut s = BigInt::zero();
    for i in 0..=a.min(c) {
        let t = binomial(c, i) * binomial(b - c, a - i);
        if i % 2 == 0 {
            s += t;
        } else {
            s -= t;
        }
    }
    s
}

/// Every `Kr(a, b, c)` for one `b`, built by stepping `c` with an exact
/// division by `1+x`.
#[derive(Clone, Debug)]
pub struct KrTable {
    b: i64,
    // rows[c][a]
    rows: Vec<Vec<BigInt>>,
}

impl KrTable {
    pub fn new(b: u32) -> Self {
        let b = i64::from(b);
        let len = b as usize + 1;
        let mut row: Vec<BigInt> = (0..=b).map(|a| binomial(b, a)).collect();
        let mut rows = Vec::with_capacity(len);
        for _ in 0..=b {
            rows.push(row.clone());
            // times (1-x) then divided by (1+x)
            let mut times = vec![BigInt::zero(); len + 1];
            for (k, v) in row.iter().enumerate() {
                times[k] += v;
                times[k + 1] -= v;
            }
            let mut q = vec![BigInt::zero(); len];
            let mut prev = BigInt::zero();
            for k in 0..len {
                let v = &times[k] - &prev;
                q[k] = v.clone();
                prev = v;
            }
            row = q;
        }
        KrTable { b, rows }
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn get(&self, a: i64, c: i64) -> &BigInt {
        static ZERO: std::sync::OnceLock<BigInt> = std::sync::OnceLock::new();
        if a < 0 || a > self.b || c < 0 || c > self.b {
            return ZERO.get_or_init(BigInt::zero);
        }
        &self.rows[c as usize][a as usize]
    }
}
