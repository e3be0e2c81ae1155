//! Pattern files: one JSON object naming the diamond order and the dominoes.
//!
//! ```json
//! {
//!   "format": 1,
//!   "n": 2,
//!   "dominoes": [
//!     [["W", 1, 1], ["B", 1, 1]]
//!   ]
//! }
//! ```
//!
//! Each square is `[color, x, y]` with color `"W"` or `"B"`; the two squares
//! of a domino may come in either order.

use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

use crate::lattice::{build_diamond, validate_pattern, Color, DiamondCoord, Domino, LatticeError, Pattern};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternFile {
    pub n: u32,
    pub pattern: Pattern,
}

#[derive(Debug, Error)]
pub enum PatternFileError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("order n must be at least 1")]
    InvalidOrder,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Serialize, Deserialize, Clone, Copy)]
enum ColorTag {
    W,
    B,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    #[serde(deserialize_with = "format_one")]
    format: u32,
    n: u32,
    dominoes: Vec<[(ColorTag, i64, i64); 2]>,
}

fn format_one<'de, D: Deserializer<'de>>(d: D) -> Result<u32, D::Error> {
    let v = u32::deserialize(d)?;
    if v != FORMAT_VERSION {
        return Err(serde::de::Error::custom(format!("unsupported format {v}, expected {FORMAT_VERSION}")));
    }
    Ok(v)
}

fn square((c, x, y): (ColorTag, i64, i64)) -> DiamondCoord {
    match c {
        ColorTag::W => DiamondCoord::white(x, y),
        ColorTag::B => DiamondCoord::black(x, y),
    }
}

fn tag(v: &DiamondCoord) -> (ColorTag, i64, i64) {
    let c = match v.color {
        Color::White => ColorTag::W,
        Color::Black => ColorTag::B,
    };
    (c, v.x, v.y)
}

/// Parses and checks a pattern file against the order-`n` diamond.
pub fn parse_pattern_file(text: &str) -> Result<PatternFile, PatternFileError> {
    let raw: Raw = serde_json::from_str(text).map_err(|e| PatternFileError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string().split(" at line").next().unwrap_or_default().to_string(),
    })?;
    if raw.n == 0 {
        return Err(PatternFileError::InvalidOrder);
    }
    let dominoes =
        raw.dominoes.into_iter().map(|[a, b]| Domino::new(square(a), square(b))).collect::<Result<Vec<_>, _>>()?;
    let pattern = Pattern::new(dominoes);
    validate_pattern(&build_diamond(raw.n)?, &pattern)?;
    Ok(PatternFile { n: raw.n, pattern })
}

/// Renders a pattern file that [`parse_pattern_file`] reads back unchanged.
pub fn to_json(file: &PatternFile) -> String {
    let raw = Raw {
        format: FORMAT_VERSION,
        n: file.n,
        dominoes: file.pattern.dominoes.iter().map(|d| [tag(&d.white), tag(&d.black)]).collect(),
    };
    serde_json::to_string_pretty(&raw).expect("plain data serializes")
}
