//! Exact local statistics of uniformly random domino tilings of the Aztec
//! diamond: Kasteleyn oracles, brute-force enumeration, and the closed-form
//! coupling function built from Krawtchouk coefficients.

pub mod combinatorics;
pub mod coupling;
pub mod enumerate;
pub mod heatmap;
pub mod kasteleyn;
pub mod lattice;
pub mod linalg;
pub mod pattern_file;
pub mod verify;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
