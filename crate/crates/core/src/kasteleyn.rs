//! Kasteleyn matrices and the determinant-based oracles built on them.
//!
//! Rows are the board's white vertices and columns its black vertices, both in
//! the row-major order of [`Board::whites`] / [`Board::blacks`]. Horizontal
//! and vertical refer to the axis-aligned drawing given by
//! [`DiamondCoord::square_lattice`].

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lattice::{build_diamond, validate_pattern, Board, DiamondCoord, LatticeError, Pattern};
use crate::linalg::{self, IntMatrix, LinalgError};

/// How vertical edges are signed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SignConvention {
    /// `(-1)^k` with `k` the number of board vertices in the lower row to the
    /// left of the edge. Valid for every subgraph of the square lattice.
    WilsonVertices,
    /// `(-1)^k` with `k` the number of vertical edges between the same two
    /// rows to the left of the edge.
    #[default]
    VerticalEdges,
}

impl SignConvention {
    pub const ALL: [SignConvention; 2] = [SignConvention::WilsonVertices, SignConvention::VerticalEdges];
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KasteleynError {
    #[error("board has {whites} white and {blacks} black vertices")]
    Unbalanced { whites: usize, blacks: usize },
    #[error("{0} is not a white vertex of the board")]
    NotWhite(DiamondCoord),
    #[error("{0} is not a black vertex of the board")]
    NotBlack(DiamondCoord),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub fn kasteleyn_matrix(board: &Board, conv: SignConvention) -> Result<IntMatrix, KasteleynError> {
    if !board.is_balanced() {
        return Err(KasteleynError::Unbalanced { whites: board.whites().len(), blacks: board.blacks().len() });
    }
    let edges = board.edges();
    let is_vertical = |w: &DiamondCoord, b: &DiamondCoord| w.square_lattice().1 != b.square_lattice().1;

    // lower row -> columns of the things counted to the left
    let mut left: HashMap<i64, Vec<i64>> = HashMap::new();
    match conv {
        SignConvention::WilsonVertices => {
            for v in board.whites().iter().chain(board.blacks()) {
                let (u, row) = v.square_lattice();
                left.entry(row).or_default().push(u);
            }
        }
        SignConvention::VerticalEdges => {
            for (w, b) in edges.iter().filter(|(w, b)| is_vertical(w, b)) {
                let (u, rw) = w.square_lattice();
                left.entry(rw.min(b.square_lattice().1)).or_default().push(u);
            }
        }
    }

    let n = board.whites().len();
    let mut k = IntMatrix::zeros(n, n);
    for (w, b) in &edges {
        let i = board.index_of(w).expect("white on board");
        let j = board.index_of(b).expect("black on board");
        let sign = if is_vertical(w, b) {
            let (u, rw) = w.square_lattice();
            let lower = rw.min(b.square_lattice().1);
            let count = left.get(&lower).map_or(0, |us| us.iter().filter(|&&x| x < u).count());
            if count.is_multiple_of(2) {
                1
            } else {
                -1
            }
        } else {
            1
        };
        k.set(i, j, BigInt::from(sign));
    }
    Ok(k)
}

/// `|det K|`, the number of perfect matchings. Unbalanced boards have none.
pub fn count_matchings_det(board: &Board, conv: SignConvention) -> Result<BigInt, KasteleynError> {
    if !board.is_balanced() {
        return Ok(BigInt::zero());
    }
    Ok(linalg::det(&kasteleyn_matrix(board, conv)?)?.abs())
}

/// The Kasteleyn matrix of a diamond with its determinant, for repeated
/// minor and cofactor queries. Slow on purpose: every query is a fresh
/// determinant.
#[derive(Clone, Debug)]
pub struct DiamondOracle {
    board: Board,
    matrix: IntMatrix,
    det: BigInt,
}

impl DiamondOracle {
    pub fn new(n: u32) -> Result<Self, KasteleynError> {
        Self::with_convention(n, SignConvention::default())
    }

    pub fn with_convention(n: u32, conv: SignConvention) -> Result<Self, KasteleynError> {
        let board = build_diamond(n)?;
        let matrix = kasteleyn_matrix(&board, conv)?;
        let det = linalg::det(&matrix)?;
        Ok(DiamondOracle { board, matrix, det })
    }

    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Signed determinant in this crate's row-major vertex order.
    pub fn det(&self) -> &BigInt {
        &self.det
    }

    fn white_index(&self, v: &DiamondCoord) -> Result<usize, KasteleynError> {
        match self.board.index_of(v) {
            Some(i) if v.is_white() => Ok(i),
            _ => Err(KasteleynError::NotWhite(*v)),
        }
    }

    fn black_index(&self, w: &DiamondCoord) -> Result<usize, KasteleynError> {
        match self.board.index_of(w) {
            Some(j) if !w.is_white() => Ok(j),
            _ => Err(KasteleynError::NotBlack(*w)),
        }
    }

    /// `|det|` of `K` with the pattern's rows and columns deleted, over `|det K|`.
    pub fn pattern_probability(&self, p: &Pattern) -> Result<BigRational, KasteleynError> {
        let (whites, blacks) = validate_pattern(&self.board, p)?;
        let rows: Vec<usize> = whites.iter().map(|v| self.white_index(v)).collect::<Result<_, _>>()?;
        let cols: Vec<usize> = blacks.iter().map(|w| self.black_index(w)).collect::<Result<_, _>>()?;
        let sub = linalg::minor(&self.matrix, &rows, &cols)?;
        Ok(BigRational::new(linalg::det(&sub)?.abs(), self.det.abs()))
    }

    /// Entry `(v, w)` of `(K⁻¹)ᵀ`, computed as a cofactor over the determinant.
    pub fn inverse_entry(&self, v: &DiamondCoord, w: &DiamondCoord) -> Result<BigRational, KasteleynError> {
        let (i, j) = (self.white_index(v)?, self.black_index(w)?);
        Ok(linalg::inverse_entry_with_det(&self.matrix, &self.det, j, i)?)
    }

    /// `|det K| · (K⁻¹)ᵀ[v, w]`: the cofactor of `(v, w)` taken in a vertex
    /// order that makes `det K` positive. An integer.
    pub fn normalized_cofactor(&self, v: &DiamondCoord, w: &DiamondCoord) -> Result<BigInt, KasteleynError> {
        let (i, j) = (self.white_index(v)?, self.black_index(w)?);
        let c = linalg::det(&linalg::minor(&self.matrix, &[i], &[j])?)?;
        let c = if (i + j) % 2 == 1 { -c } else { c };
        Ok(if self.det.is_negative() { -c } else { c })
    }

    /// `|det|` of `K` with `v`'s row and `w`'s column deleted.
    pub fn first_minor_abs(&self, v: &DiamondCoord, w: &DiamondCoord) -> Result<BigInt, KasteleynError> {
        let (i, j) = (self.white_index(v)?, self.black_index(w)?);
        Ok(linalg::det(&linalg::minor(&self.matrix, &[i], &[j])?)?.abs())
    }
}

/// Probability that a uniform tiling of the order-`n` diamond contains `p`,
/// from minors of the Kasteleyn matrix.
pub fn pattern_probability_oracle(n: u32, p: &Pattern) -> Result<BigRational, KasteleynError> {
    if p.is_empty() {
        build_diamond(n)?;
        return Ok(BigRational::one());
    }
    DiamondOracle::new(n)?.pattern_probability(p)
}

/// Entry `(v, w)` of the transposed inverse Kasteleyn matrix (vertical-edge
/// convention).
pub fn inverse_coupling_oracle(n: u32, v: &DiamondCoord, w: &DiamondCoord) -> Result<BigRational, KasteleynError> {
    DiamondOracle::new(n)?.inverse_entry(v, w)
}
