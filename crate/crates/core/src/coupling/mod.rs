//! The coupling function of the order-`n` diamond (the transposed inverse
//! Kasteleyn matrix) as a finite sum of products of Krawtchouk coefficients,
//! and pattern probabilities as small determinants of it.

mod dyadic;
mod orientation;

pub use dyadic::{approx_decimal, DyadicRational, ParseDyadicError};
pub use orientation::OrientationMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::combinatorics::KrTable;
use crate::kasteleyn::{kasteleyn_matrix, KasteleynError, SignConvention};
use crate::lattice::{build_diamond, validate_pattern, Board, DiamondCoord, LatticeError, Pattern};
use crate::linalg::{self, IntMatrix, LinalgError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CouplingError {
    #[error("order must be at least 1")]
    InvalidOrder,
    #[error("{0} is not a {1} vertex of the order-{2} diamond")]
    OutOfRange(DiamondCoord, &'static str, u32),
    #[error("calibration failed: {0}")]
    Calibration(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Kasteleyn(#[from] KasteleynError),
}

/// The closed form and a few deliberately broken variants, for mutation
/// testing of the verification suite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Formula {
    #[default]
    Correct,
    /// Krawtchouk arguments `a` and `c` exchanged in both factors.
    Transposed,
    /// `Kr(j, n, y)` in place of `Kr(j, n, y-1)`.
    OffByOne,
    /// The minus sign of the `x' ≤ x` branch left out.
    DroppedNegation,
}

impl Formula {
    pub const ALL: [Formula; 4] = [Formula::Correct, Formula::Transposed, Formula::OffByOne, Formula::DroppedNegation];
}

fn in_diamond(n: u32, v: &DiamondCoord) -> bool {
    let n = i64::from(n);
    let (xmax, ymax) = if v.is_white() { (n, n + 1) } else { (n + 1, n) };
    (1..=xmax).contains(&v.x) && (1..=ymax).contains(&v.y)
}

/// Evaluates the closed form for one diamond order. Holds the two Krawtchouk
/// tables every entry draws from, so sweeps pay for them once.
#[derive(Clone, Debug)]
pub struct CouplingEngine {
    n: u32,
    kr_n: KrTable,
    kr_n1: KrTable,
    formula: Formula,
    orientation: OrientationMap,
}

impl CouplingEngine {
    pub fn new(n: u32) -> Result<Self, CouplingError> {
        Self::with_options(n, Formula::Correct, OrientationMap::CALIBRATED)
    }

    pub fn with_options(n: u32, formula: Formula, orientation: OrientationMap) -> Result<Self, CouplingError> {
        if n == 0 {
            return Err(CouplingError::InvalidOrder);
        }
        Ok(CouplingEngine { n, kr_n: KrTable::new(n), kr_n1: KrTable::new(n - 1), formula, orientation })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn kr(&self, table: &KrTable, a: i64, c: i64) -> BigInt {
        match self.formula {
            Formula::Transposed => table.get(c, a).clone(),
            _ => table.get(a, c).clone(),
        }
    }

    /// The closed-form sum at raw coordinates `(x, y)`, `(x', y')`, before
    /// any orientation is applied. Returns the integer numerator over `2^n`.
    pub fn raw_numerator(&self, (x, y): (i64, i64), (xp, yp): (i64, i64)) -> BigInt {
        let n = i64::from(self.n);
        let ycol = if self.formula == Formula::OffByOne { y } else { y - 1 };
        let term = |j: i64| {
            let a = self.kr(&self.kr_n, j, ycol);
            if a.is_zero() {
                return a;
            }
            a * self.kr(&self.kr_n1, yp - 1, n - (j + xp - x))
        };
        if xp > x {
            (0..x).map(term).sum()
        } else {
            let s: BigInt = (x..=n).map(term).sum();
            if self.formula == Formula::DroppedNegation {
                s
            } else {
                -s
            }
        }
    }

    fn check(&self, v: &DiamondCoord, w: &DiamondCoord) -> Result<(), CouplingError> {
        if !v.is_white() || !in_diamond(self.n, v) {
            return Err(CouplingError::OutOfRange(*v, "white", self.n));
        }
        if w.is_white() || !in_diamond(self.n, w) {
            return Err(CouplingError::OutOfRange(*w, "black", self.n));
        }
        Ok(())
    }

    /// `c(v, w)` as the closed form states it. Its absolute value is the
    /// absolute value of the Kasteleyn inverse entry.
    pub fn coupling(&self, v: &DiamondCoord, w: &DiamondCoord) -> Result<DyadicRational, CouplingError> {
        self.check(v, w)?;
        let gv = self.orientation.apply(self.n, v);
        let gw = self.orientation.apply(self.n, w);
        Ok(DyadicRational::new(self.raw_numerator((gv.x, gv.y), (gw.x, gw.y)), self.n))
    }

    /// The signed entry `(K⁻¹)ᵀ[v, w]` for the vertical-edge convention:
    /// `c(v, w)` times `(-1)^{d0+d1+w1}`.
    pub fn coupling_signed(&self, v: &DiamondCoord, w: &DiamondCoord) -> Result<DyadicRational, CouplingError> {
        let c = self.coupling(v, w)?;
        let h = (w.x - v.x) + (v.y - w.y) + w.y;
        Ok(if h.rem_euclid(2) == 0 { c } else { -c })
    }

    /// Signed entry from the hole parameters: white `(w0, w1+d1)`, black
    /// `(w0+d0, w1)`. Any signs of `d0` and `d1` are allowed.
    pub fn coupling_signed_holes(&self, w0: i64, d0: i64, w1: i64, d1: i64) -> Result<DyadicRational, CouplingError> {
        self.coupling_signed(&DiamondCoord::white(w0, w1 + d1), &DiamondCoord::black(w0 + d0, w1))
    }

    /// `|det [c(v_i, w_j)]|` over the pattern's squares.
    pub fn pattern_probability(&self, p: &Pattern) -> Result<BigRational, CouplingError> {
        let board = build_diamond(self.n)?;
        let (whites, blacks) = validate_pattern(&board, p)?;
        let k = whites.len();
        let mut m = IntMatrix::zeros(k, k);
        for (i, v) in whites.iter().enumerate() {
            for (j, w) in blacks.iter().enumerate() {
                let c = self.coupling(v, w)?;
                m.set(i, j, c.numerator_at_scale(self.n).expect("scale never exceeds n"));
            }
        }
        let d = linalg::det(&m)?.abs();
        Ok(BigRational::new(d, BigInt::one() << (self.n as usize * k)))
    }
}

/// `c(v, w)` for the order-`n` diamond.
pub fn coupling(n: u32, v: &DiamondCoord, w: &DiamondCoord) -> Result<DyadicRational, CouplingError> {
    CouplingEngine::new(n)?.coupling(v, w)
}

/// Signed Kasteleyn inverse entry from hole parameters; see
/// [`CouplingEngine::coupling_signed_holes`].
pub fn coupling_signed(n: u32, w0: i64, d0: i64, w1: i64, d1: i64) -> Result<DyadicRational, CouplingError> {
    CouplingEngine::new(n)?.coupling_signed_holes(w0, d0, w1, d1)
}

/// Probability that a uniform tiling of the order-`n` diamond contains `p`.
pub fn pattern_probability(n: u32, p: &Pattern) -> Result<BigRational, CouplingError> {
    if p.is_empty() {
        build_diamond(n)?;
        return Ok(BigRational::one());
    }
    CouplingEngine::new(n)?.pattern_probability(p)
}

/// Which orientations reproduced the Kasteleyn inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalibrationReport {
    pub n: u32,
    pub formula: Formula,
    /// Agreement of `|c|` with `|K⁻¹|` on every pair.
    pub absolute: Vec<OrientationMap>,
    /// Agreement of the signed entry with `K⁻¹` on every pair.
    pub signed: Vec<OrientationMap>,
}

impl CalibrationReport {
    /// The single orientation that passes the signed check.
    pub fn unique(&self) -> Result<OrientationMap, CouplingError> {
        match self.signed.as_slice() {
            [g] => Ok(*g),
            [] => Err(CouplingError::Calibration(format!("no orientation matches at n={}", self.n))),
            many => Err(CouplingError::Calibration(format!("{} orientations match at n={}", many.len(), self.n))),
        }
    }
}

/// Full `(K⁻¹)ᵀ` of the diamond by one rational inversion, keyed by
/// (white index, black index) in board order.
pub struct InverseTable {
    board: Board,
    inv: Vec<Vec<BigRational>>,
}

impl InverseTable {
    pub fn new(n: u32) -> Result<Self, CouplingError> {
        let board = build_diamond(n)?;
        let k = kasteleyn_matrix(&board, SignConvention::VerticalEdges)?;
        let inv = linalg::inverse(&k)?;
        Ok(InverseTable { board, inv })
    }

    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn entry(&self, v: &DiamondCoord, w: &DiamondCoord) -> &BigRational {
        let i = self.board.index_of(v).expect("white vertex");
        let j = self.board.index_of(w).expect("black vertex");
        &self.inv[j][i]
    }
}

/// Tries all eight orientations at order `n` against the Kasteleyn inverse.
pub fn calibration_report(n: u32, formula: Formula) -> Result<CalibrationReport, CouplingError> {
    let table = InverseTable::new(n)?;
    let mut report = CalibrationReport { n, formula, absolute: Vec::new(), signed: Vec::new() };
    for g in OrientationMap::ALL {
        let engine = CouplingEngine::with_options(n, formula, g)?;
        let (mut abs_ok, mut signed_ok) = (true, true);
        for v in table.board().whites() {
            for w in table.board().blacks() {
                let want = table.entry(v, w);
                let got = engine.coupling_signed(v, w)?.to_rational();
                abs_ok &= got.abs() == want.abs();
                signed_ok &= &got == want;
            }
        }
        if abs_ok {
            report.absolute.push(g);
        }
        if signed_ok {
            report.signed.push(g);
        }
    }
    Ok(report)
}

/// The unique orientation for which the signed closed form equals the
/// Kasteleyn inverse at order `n`; an error if there is none or several.
pub fn calibrate_orientation(n: u32) -> Result<OrientationMap, CouplingError> {
    calibration_report(n, Formula::Correct)?.unique()
}
