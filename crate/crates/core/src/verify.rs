//! Self-check: closed forms against determinant and enumeration oracles on
//! small diamonds.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coupling::{calibration_report, CouplingEngine, Formula, InverseTable, OrientationMap};
use crate::enumerate::{count_matchings_enum, weighted_count, HoleSpec};
use crate::kasteleyn::{count_matchings_det, DiamondOracle, SignConvention};
use crate::lattice::{build_diamond, Domino, Pattern};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyLevel {
    /// Orders up to 3.
    Quick,
    /// Orders up to 5.
    Full,
}

impl VerifyLevel {
    pub fn max_n(self) -> u32 {
        match self {
            VerifyLevel::Quick => 3,
            VerifyLevel::Full => 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub level: VerifyLevel,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        let bad = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {} failed", self.checks.len(), bad)
    }
}

type Check = Result<String, String>;

fn run(name: &'static str, f: impl FnOnce() -> Check) -> CheckOutcome {
    match f() {
        Ok(detail) => CheckOutcome { name, passed: true, detail },
        Err(detail) => CheckOutcome { name, passed: false, detail },
    }
}

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e as usize
}

fn counts(max_n: u32) -> Check {
    for n in 1..=max_n.min(4) {
        let b = build_diamond(n).map_err(|e| e.to_string())?;
        let want = pow2(n * (n + 1) / 2);
        let e = count_matchings_enum(&b).map_err(|e| e.to_string())?;
        for conv in SignConvention::ALL {
            let d = count_matchings_det(&b, conv).map_err(|e| e.to_string())?;
            if d != e || d != want {
                return Err(format!("n={n} {conv:?}: det {d}, enumeration {e}, expected {want}"));
            }
        }
    }
    Ok(format!("n <= {}", max_n.min(4)))
}

fn entries(max_n: u32, formula: Formula, signed: bool) -> Check {
    let mut pairs = 0usize;
    for n in 1..=max_n {
        let t = InverseTable::new(n).map_err(|e| e.to_string())?;
        let eng = CouplingEngine::with_options(n, formula, OrientationMap::CALIBRATED).map_err(|e| e.to_string())?;
        for v in t.board().whites() {
            for w in t.board().blacks() {
                let got = eng.coupling_signed(v, w).map_err(|e| e.to_string())?.to_rational();
                let want = t.entry(v, w);
                let ok = if signed { &got == want } else { got.abs() == want.abs() };
                if !ok {
                    return Err(format!("n={n} {v} {w}: closed form {got}, inverse {want}"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs, n <= {max_n}"))
}

fn normalization(max_n: u32, formula: Formula) -> Check {
    for n in 1..=max_n {
        let b = build_diamond(n).map_err(|e| e.to_string())?;
        let eng = CouplingEngine::with_options(n, formula, OrientationMap::CALIBRATED).map_err(|e| e.to_string())?;
        for v in b.whites() {
            let mut s = BigRational::zero();
            for w in b.neighbors(v) {
                s += eng.coupling(v, &w).map_err(|e| e.to_string())?.to_rational().abs();
            }
            if !s.is_one() {
                return Err(format!("n={n} {v}: neighbours sum to {s}"));
            }
        }
    }
    Ok(format!("n <= {max_n}"))
}

fn single_dominoes(max_n: u32, formula: Formula) -> Check {
    let mut k = 0;
    for n in 1..=max_n {
        let o = DiamondOracle::new(n).map_err(|e| e.to_string())?;
        let eng = CouplingEngine::with_options(n, formula, OrientationMap::CALIBRATED).map_err(|e| e.to_string())?;
        for v in o.board().whites() {
            for w in o.board().neighbors(v) {
                let p = Pattern::new(vec![Domino::new(*v, w).map_err(|e| e.to_string())?]);
                let a = eng.pattern_probability(&p).map_err(|e| e.to_string())?;
                let b = o.pattern_probability(&p).map_err(|e| e.to_string())?;
                if a != b {
                    return Err(format!("n={n} {v}-{w}: closed form {a}, minors {b}"));
                }
                k += 1;
            }
        }
    }
    Ok(format!("{k} dominoes, n <= {max_n}"))
}

fn weighted(max_n: u32, formula: Formula) -> Check {
    let mut k = 0;
    for n in 1..=max_n {
        let b = build_diamond(n).map_err(|e| e.to_string())?;
        let eng = CouplingEngine::with_options(n, formula, OrientationMap::CALIBRATED).map_err(|e| e.to_string())?;
        for v in b.whites() {
            for w in b.blacks() {
                let h = HoleSpec::from_holes(v, w);
                if h.d0 <= 0 || h.d1 <= 0 {
                    continue;
                }
                let got = weighted_count(n, &h).map_err(|e| e.to_string())?;
                let c = eng.coupling_signed(v, w).map_err(|e| e.to_string())?.to_rational();
                let mut want = c * BigRational::from_integer(pow2(n * (n + 1) / 2));
                if (h.d0 + h.d1) % 2 == 0 {
                    want = -want;
                }
                if BigRational::from_integer(got.clone()) != want {
                    return Err(format!("n={n} {h:?}: enumerated {got}, closed form {want}"));
                }
                k += 1;
            }
        }
    }
    Ok(format!("{k} hole pairs, n <= {max_n}"))
}

fn calibration(formula: Formula) -> Check {
    let r = calibration_report(3, formula).map_err(|e| e.to_string())?;
    match r.unique() {
        Ok(g) if g == OrientationMap::CALIBRATED => Ok(format!("{g:?} at n=3")),
        Ok(g) => Err(format!("found {g:?}, frozen constant is {:?}", OrientationMap::CALIBRATED)),
        Err(e) => Err(e.to_string()),
    }
}

/// Runs every check at `level` against the closed form `formula`.
pub fn run_verification(level: VerifyLevel, formula: Formula) -> VerifyReport {
    let max_n = level.max_n();
    let (norm_n, weight_n) = match level {
        VerifyLevel::Quick => (6, 3),
        VerifyLevel::Full => (10, 4),
    };
    let checks = vec![
        run("matching counts", || counts(max_n)),
        run("orientation calibration", || calibration(formula)),
        run("coupling magnitudes", || entries(max_n, formula, false)),
        run("signed coupling entries", || entries(max_n, formula, true)),
        run("normalization", || normalization(norm_n, formula)),
        run("single-domino probabilities", || single_dominoes(max_n, formula)),
        run("weighted hole counts", || weighted(weight_n, formula)),
    ];
    VerifyReport { level, checks }
}
