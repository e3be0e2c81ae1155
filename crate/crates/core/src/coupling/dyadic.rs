//! Exact numbers of the form `k / 2^s`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// `numerator / 2^scale`, kept canonical: the numerator is odd, or it is zero
/// and the scale is 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    numerator: BigInt,
    scale: u32,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("not a dyadic value `k / 2^s`: {0:?}")]
pub struct ParseDyadicError(pub String);

impl DyadicRational {
    pub fn new(numerator: BigInt, scale: u32) -> Self {
        if numerator.is_zero() {
            return Self::zero();
        }
        let tz = numerator.trailing_zeros().unwrap_or(0).min(u64::from(scale)) as u32;
        DyadicRational { numerator: numerator >> tz, scale: scale - tz }
    }

    pub fn zero() -> Self {
        DyadicRational { numerator: BigInt::zero(), scale: 0 }
    }

    pub fn from_integer(k: impl Into<BigInt>) -> Self {
        Self::new(k.into(), 0)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn abs(&self) -> Self {
        DyadicRational { numerator: self.numerator.abs(), scale: self.scale }
    }

    /// The numerator over `2^s` for a fixed `s ≥ scale`.
    pub fn numerator_at_scale(&self, s: u32) -> Option<BigInt> {
        (s >= self.scale).then(|| &self.numerator << (s - self.scale) as usize)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.numerator.clone(), BigInt::one() << self.scale as usize)
    }

    /// `None` unless the denominator is a power of two.
    pub fn from_rational(q: &BigRational) -> Option<Self> {
        let d = q.denom();
        let tz = d.trailing_zeros().unwrap_or(0);
        (d >> tz as usize).is_one().then(|| Self::new(q.numer().clone(), tz as u32))
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let s = self.scale.max(other.scale);
        (self.numerator_at_scale(s).unwrap(), other.numerator_at_scale(s).unwrap(), s)
    }
}

impl Add for &DyadicRational {
    type Output = DyadicRational;
    fn add(self, rhs: Self) -> DyadicRational {
        let (a, b, s) = self.aligned(rhs);
        DyadicRational::new(a + b, s)
    }
}

impl Sub for &DyadicRational {
    type Output = DyadicRational;
    fn sub(self, rhs: Self) -> DyadicRational {
        let (a, b, s) = self.aligned(rhs);
        DyadicRational::new(a - b, s)
    }
}

impl Mul for &DyadicRational {
    type Output = DyadicRational;
    fn mul(self, rhs: Self) -> DyadicRational {
        DyadicRational::new(&self.numerator * &rhs.numerator, self.scale + rhs.scale)
    }
}

impl Neg for DyadicRational {
    type Output = DyadicRational;
    fn neg(self) -> DyadicRational {
        DyadicRational { numerator: -self.numerator, scale: self.scale }
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / 2^{}", self.numerator, self.scale)
    }
}

impl FromStr for DyadicRational {
    type Err = ParseDyadicError;

    /// Accepts `k / 2^s` (any spacing) or a bare integer `k`. Non-canonical
    /// input is reduced.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseDyadicError(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (num, scale) = match compact.split_once('/') {
            None => (compact.as_str(), 0),
            Some((num, den)) => {
                let e = den.strip_prefix("2^").ok_or_else(err)?;
                (num, e.parse::<u32>().map_err(|_| err())?)
            }
        };
        let k = num.parse::<BigInt>().map_err(|_| err())?;
        Ok(DyadicRational::new(k, scale))
    }
}

/// Decimal rendering of `q` rounded half-to-even to `digits` significant
/// digits. For display only.
pub fn approx_decimal(q: &BigRational, digits: u32) -> String {
    if q.is_zero() {
        return "0".into();
    }
    let neg = q.is_negative();
    let a = q.abs();
    // decimal exponent e with 10^e <= a < 10^{e+1}
    let ten = BigInt::from(10);
    let mut e: i64 = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    let pow10 = |k: i64| -> BigRational {
        if k >= 0 {
            BigRational::from_integer(ten.pow(k as u32))
        } else {
            BigRational::new(BigInt::one(), ten.pow((-k) as u32))
        }
    };
    while a < pow10(e) {
        e -= 1;
    }
    while a >= pow10(e + 1) {
        e += 1;
    }
    let scaled = &a * pow10(i64::from(digits) - 1 - e);
    let (mut m, rem) = scaled.numer().div_rem(scaled.denom());
    let twice = rem * 2;
    if twice > *scaled.denom() || (twice == *scaled.denom() && m.is_odd()) {
        m += 1;
    }
    if m == ten.pow(digits) {
        m /= 10;
        e += 1;
    }
    let mut ds = m.to_string();
    let sign = if neg { "-" } else { "" };
    let out = if (-7..i64::from(digits)).contains(&e) {
        if e >= 0 {
            let int_len = (e + 1) as usize;
            let (i, f) = ds.split_at(int_len);
            let f = f.trim_end_matches('0');
            if f.is_empty() {
                i.to_string()
            } else {
                format!("{i}.{f}")
            }
        } else {
            let zeros = "0".repeat((-e - 1) as usize);
            format!("0.{zeros}{}", ds.trim_end_matches('0'))
        }
    } else {
        let rest = ds.split_off(1);
        let rest = rest.trim_end_matches('0');
        if rest.is_empty() {
            format!("{ds}e{e}")
        } else {
            format!("{ds}.{rest}e{e}")
        }
    };
    format!("{sign}{out}")
}
