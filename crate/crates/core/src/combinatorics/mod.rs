//! Closed-form counting: Krawtchouk coefficients, rectangle formulas,
//! difference-operator calculus and the holed-board determinants.

pub mod delta;
pub mod eklp;
pub mod holed;
pub mod krawtchouk;
pub mod laplace;
pub mod poly;

use thiserror::Error;

use crate::linalg::LinalgError;

pub use delta::DeltaOperator;
pub use eklp::{eklp_d, eklp_e, superfactorial};
pub use holed::{big_d, hoho_prefactor, kato_coeffs, koloro_weighted, lemur, telescoped_d};
pub use krawtchouk::{krawtchouk, KrTable};
pub use poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombError {
    #[error("{0}")]
    Domain(String),
    #[error("degree {degree} polynomial needs more than {trunc} series terms")]
    Truncation { degree: usize, trunc: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// All strictly increasing `k`-tuples drawn from `lo..=hi`.
pub fn increasing_tuples(k: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let n = (hi - lo + 1).max(0) as usize;
    laplace::subsets(n, k).into_iter().map(|s| s.into_iter().map(|i| lo + i as i64).collect()).collect()
}
