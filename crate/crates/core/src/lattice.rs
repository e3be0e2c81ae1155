//! Aztec diamonds and Aztec rectangles as bipartite subgraphs of the square
//! lattice.
//!
//! Vertices are addressed by *diagonal* coordinates `(color, x, y)`. White
//! vertices of a given `y` form a row, as do black vertices; a white vertex
//! `(x, y)` is adjacent to the black vertices `(x, y)`, `(x + 1, y)`,
//! `(x, y - 1)` and `(x + 1, y - 1)`.
//!
//! The Cartesian drawing used for Kasteleyn signs is fixed by
//!
//! ```text
//! white (x, y) <-> (2x - 1, 2y - 2)
//! black (x, y) <-> (2x - 2, 2y - 1)
//! ```
//!
//! so the diamond of order `n` has white vertices `(2r + 1, 2s)` and black
//! vertices `(2r, 2s + 1)` with `0 <= r < n, 0 <= s <= n` (resp. `r <= n`,
//! `s < n`), and every edge is a `(±1, ±1)` step.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// A colored lattice vertex in diagonal coordinates.
///
/// Ordering is row-major within a color: by color, then `y`, then `x`. This is
/// the row/column order of every Kasteleyn matrix built by this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiamondCoord {
    pub color: Color,
    pub x: i64,
    pub y: i64,
}

impl DiamondCoord {
    pub const fn white(x: i64, y: i64) -> Self {
        DiamondCoord { color: Color::White, x, y }
    }

    pub const fn black(x: i64, y: i64) -> Self {
        DiamondCoord { color: Color::Black, x, y }
    }

    pub fn is_white(&self) -> bool {
        self.color == Color::White
    }

    /// Cartesian position in the drawing of the diamond's definition.
    pub fn cartesian(&self) -> (i64, i64) {
        match self.color {
            Color::White => (2 * self.x - 1, 2 * self.y - 2),
            Color::Black => (2 * self.x - 2, 2 * self.y - 1),
        }
    }

    /// Inverse of [`DiamondCoord::cartesian`]. Points with `X + Y` even are not
    /// lattice vertices of this family and map to `None`.
    pub fn from_cartesian(p: (i64, i64)) -> Option<Self> {
        let (cx, cy) = p;
        match (cx.rem_euclid(2), cy.rem_euclid(2)) {
            (1, 0) => Some(DiamondCoord::white((cx + 1) / 2, cy.div_euclid(2) + 1)),
            (0, 1) => Some(DiamondCoord::black(cx / 2 + 1, (cy + 1) / 2)),
            _ => None,
        }
    }

    /// Position in the axis-aligned drawing `(column, row)`, where edges are
    /// horizontal or vertical. Used for Kasteleyn signs.
    pub fn square_lattice(&self) -> (i64, i64) {
        let (cx, cy) = self.cartesian();
        ((cx + cy - 1).div_euclid(2), (cy - cx + 1).div_euclid(2))
    }

    /// The four lattice neighbours (of the opposite color), whether or not they
    /// belong to any particular board.
    pub fn lattice_neighbors(&self) -> [DiamondCoord; 4] {
        let (x, y) = (self.x, self.y);
        match self.color {
            Color::White => [
                DiamondCoord::black(x, y),
                DiamondCoord::black(x + 1, y),
                DiamondCoord::black(x, y - 1),
                DiamondCoord::black(x + 1, y - 1),
            ],
            Color::Black => [
                DiamondCoord::white(x - 1, y),
                DiamondCoord::white(x, y),
                DiamondCoord::white(x - 1, y + 1),
                DiamondCoord::white(x, y + 1),
            ],
        }
    }

    pub fn is_lattice_adjacent(&self, other: &DiamondCoord) -> bool {
        self.color != other.color && self.lattice_neighbors().contains(other)
    }
}

impl Ord for DiamondCoord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.color, self.y, self.x).cmp(&(other.color, other.y, other.x))
    }
}

impl PartialOrd for DiamondCoord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DiamondCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.color {
            Color::White => 'W',
            Color::Black => 'B',
        };
        write!(f, "{c}({},{})", self.x, self.y)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("order must be positive, got {0}")]
    InvalidOrder(u32),
    #[error("invalid notches {notches:?}: {reason}")]
    InvalidNotch { notches: Vec<u32>, reason: String },
    #[error("{0} is not a vertex of the board")]
    NotAVertex(DiamondCoord),
    #[error("{0} is already a hole")]
    DuplicateHole(DiamondCoord),
    #[error("{0} and {1} do not form an edge of the board")]
    InvalidDomino(DiamondCoord, DiamondCoord),
    #[error("vertex {0} is covered by more than one domino")]
    Overlap(DiamondCoord),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RectKind {
    /// Black-edged: the top black row is missing the dents.
    BlackEdged,
    /// White-edged: an extra white row carries the teeth.
    WhiteEdged,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BoardKind {
    Diamond { n: u32 },
    BlackRect { n: u32, m: u32, dents: Vec<u32> },
    WhiteRect { n: u32, m: u32, teeth: Vec<u32> },
}

impl BoardKind {
    /// Whether `v` belongs to the shape, ignoring holes.
    pub fn contains(&self, v: &DiamondCoord) -> bool {
        let (x, y) = (v.x, v.y);
        match self {
            BoardKind::Diamond { n } => {
                let n = *n as i64;
                match v.color {
                    Color::White => (1..=n).contains(&x) && (1..=n + 1).contains(&y),
                    Color::Black => (1..=n + 1).contains(&x) && (1..=n).contains(&y),
                }
            }
            BoardKind::BlackRect { n, m, dents } => {
                let (n, m) = (*n as i64, *m as i64);
                match v.color {
                    Color::White => (1..=n).contains(&x) && (1..=m).contains(&y),
                    Color::Black => {
                        (1..=n + 1).contains(&x)
                            && (1..=m).contains(&y)
                            && (y < m || !dents.iter().any(|&d| d as i64 == x))
                    }
                }
            }
            BoardKind::WhiteRect { n, m, teeth } => {
                let (n, m) = (*n as i64, *m as i64);
                match v.color {
                    Color::White => {
                        ((1..=n).contains(&x) && (1..=m).contains(&y))
                            || (y == m + 1 && teeth.iter().any(|&t| t as i64 == x))
                    }
                    Color::Black => (1..=n + 1).contains(&x) && (1..=m).contains(&y),
                }
            }
        }
    }

    fn vertices(&self) -> Vec<DiamondCoord> {
        let (xs, ys) = match self {
            BoardKind::Diamond { n } => (*n as i64 + 1, *n as i64 + 1),
            BoardKind::BlackRect { n, m, .. } => (*n as i64 + 1, *m as i64),
            BoardKind::WhiteRect { n, m, .. } => (*n as i64 + 1, *m as i64 + 1),
        };
        let mut out = Vec::new();
        for color in [Color::White, Color::Black] {
            for y in 1..=ys {
                for x in 1..=xs {
                    let v = DiamondCoord { color, x, y };
                    if self.contains(&v) {
                        out.push(v);
                    }
                }
            }
        }
        out
    }
}

/// An Aztec diamond or rectangle, possibly with holes. Immutable once built.
#[derive(Clone, Debug)]
pub struct Board {
    kind: BoardKind,
    holes: BTreeSet<DiamondCoord>,
    whites: Vec<DiamondCoord>,
    blacks: Vec<DiamondCoord>,
    index: HashMap<DiamondCoord, usize>,
}

impl PartialEq for Board {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.holes == other.holes
    }
}

impl Eq for Board {}

impl Board {
    fn from_parts(kind: BoardKind, holes: BTreeSet<DiamondCoord>) -> Board {
        let (whites, blacks): (Vec<_>, Vec<_>) =
            kind.vertices().into_iter().filter(|v| !holes.contains(v)).partition(|v| v.is_white());
        let index = whites.iter().enumerate().chain(blacks.iter().enumerate()).map(|(i, v)| (*v, i)).collect();
        Board { kind, holes, whites, blacks, index }
    }

    pub fn kind(&self) -> &BoardKind {
        &self.kind
    }

    pub fn holes(&self) -> &BTreeSet<DiamondCoord> {
        &self.holes
    }

    /// White vertices in row-major order. Holes excluded.
    pub fn whites(&self) -> &[DiamondCoord] {
        &self.whites
    }

    /// Black vertices in row-major order. Holes excluded.
    pub fn blacks(&self) -> &[DiamondCoord] {
        &self.blacks
    }

    pub fn vertex_count(&self) -> usize {
        self.whites.len() + self.blacks.len()
    }

    pub fn is_balanced(&self) -> bool {
        self.whites.len() == self.blacks.len()
    }

    pub fn contains(&self, v: &DiamondCoord) -> bool {
        self.index.contains_key(v)
    }

    /// Position of `v` within [`Board::whites`] or [`Board::blacks`].
    pub fn index_of(&self, v: &DiamondCoord) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn neighbors(&self, v: &DiamondCoord) -> impl Iterator<Item = DiamondCoord> + '_ {
        v.lattice_neighbors().into_iter().filter(move |u| self.contains(u))
    }

    pub fn is_edge(&self, a: &DiamondCoord, b: &DiamondCoord) -> bool {
        self.contains(a) && self.contains(b) && a.is_lattice_adjacent(b)
    }

    /// All edges as `(white, black)` pairs, white-major.
    pub fn edges(&self) -> Vec<(DiamondCoord, DiamondCoord)> {
        self.whites.iter().flat_map(|w| self.neighbors(w).map(move |b| (*w, b))).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.whites.iter().map(|w| self.neighbors(w).count()).sum()
    }

    /// The order `n` when the board is a diamond.
    pub fn diamond_order(&self) -> Option<u32> {
        match self.kind {
            BoardKind::Diamond { n } => Some(n),
            _ => None,
        }
    }
}

pub fn build_diamond(n: u32) -> Result<Board, LatticeError> {
    if n == 0 {
        return Err(LatticeError::InvalidOrder(n));
    }
    Ok(Board::from_parts(BoardKind::Diamond { n }, BTreeSet::new()))
}

/// Builds an `n × m` Aztec rectangle.
///
/// Black-edged rectangles take dents in `1..=n+1`, white-edged ones take teeth
/// in `1..=n`. A balanced rectangle has exactly `m` notches; up to `m` are
/// accepted so that one-hole variants can be formed with
/// [`remove_vertices`].
pub fn build_rectangle(kind: RectKind, n: u32, m: u32, notches: &[u32]) -> Result<Board, LatticeError> {
    if n == 0 || m == 0 {
        return Err(LatticeError::InvalidOrder(n.min(m)));
    }
    let bad = |reason: &str| LatticeError::InvalidNotch { notches: notches.to_vec(), reason: reason.to_string() };
    let upper = match kind {
        RectKind::BlackEdged => n + 1,
        RectKind::WhiteEdged => n,
    };
    if notches.len() > m as usize {
        return Err(bad(&format!("at most {m} notches fit an {n}x{m} rectangle")));
    }
    if notches.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad("notches must be strictly increasing"));
    }
    if notches.iter().any(|&x| x < 1 || x > upper) {
        return Err(bad(&format!("notches must lie in 1..={upper}")));
    }
    let kind = match kind {
        RectKind::BlackEdged => BoardKind::BlackRect { n, m, dents: notches.to_vec() },
        RectKind::WhiteEdged => BoardKind::WhiteRect { n, m, teeth: notches.to_vec() },
    };
    Ok(Board::from_parts(kind, BTreeSet::new()))
}

pub fn remove_vertices(board: &Board, holes: &[DiamondCoord]) -> Result<Board, LatticeError> {
    let mut all = board.holes.clone();
    for h in holes {
        if !board.kind.contains(h) {
            return Err(LatticeError::NotAVertex(*h));
        }
        if !all.insert(*h) {
            return Err(LatticeError::DuplicateHole(*h));
        }
    }
    Ok(Board::from_parts(board.kind.clone(), all))
}

/// One domino: a white vertex and an adjacent black vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domino {
    pub white: DiamondCoord,
    pub black: DiamondCoord,
}

impl Domino {
    /// Accepts the two squares in either order.
    pub fn new(a: DiamondCoord, b: DiamondCoord) -> Result<Domino, LatticeError> {
        match (a.color, b.color) {
            (Color::White, Color::Black) => Ok(Domino { white: a, black: b }),
            (Color::Black, Color::White) => Ok(Domino { white: b, black: a }),
            _ => Err(LatticeError::InvalidDomino(a, b)),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pattern {
    pub dominoes: Vec<Domino>,
}

impl Pattern {
    pub fn new(dominoes: Vec<Domino>) -> Pattern {
        Pattern { dominoes }
    }

    pub fn len(&self) -> usize {
        self.dominoes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominoes.is_empty()
    }
}

/// Checks that every domino is an edge of `board` and that no square is used
/// twice. Returns the white and black squares in pattern order.
pub fn validate_pattern(
    board: &Board,
    pattern: &Pattern,
) -> Result<(Vec<DiamondCoord>, Vec<DiamondCoord>), LatticeError> {
    let mut seen = BTreeSet::new();
    let mut whites = Vec::with_capacity(pattern.len());
    let mut blacks = Vec::with_capacity(pattern.len());
    for d in &pattern.dominoes {
        if !board.is_edge(&d.white, &d.black) {
            return Err(LatticeError::InvalidDomino(d.white, d.black));
        }
        for v in [d.white, d.black] {
            if !seen.insert(v) {
                return Err(LatticeError::Overlap(v));
            }
        }
        whites.push(d.white);
        blacks.push(d.black);
    }
    Ok((whites, blacks))
}
