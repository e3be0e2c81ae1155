//! Brute-force perfect matchings and the signed (weighted) counts of holed
//! boards. This is the ground truth every closed form is checked against.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::lattice::{build_diamond, remove_vertices, Board, BoardKind, DiamondCoord, LatticeError};

/// Boards larger than this are refused unless the caller lifts the limit.
pub const MAX_ENUM_VERTICES: usize = 60;

/// A perfect matching as (white, black) pairs in the board's white order.
pub type Matching = [(DiamondCoord, DiamondCoord)];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("board has {0} vertices, above the enumeration limit of {1}")]
    TooLarge(usize, usize),
    #[error("{0} is not a black vertex of a rectangle")]
    BadRectHole(DiamondCoord),
    #[error("weighted rectangle counts need an unholed rectangle")]
    NotARectangle,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Visits every perfect matching of `board` once and returns how many there
/// were. Refuses boards above [`MAX_ENUM_VERTICES`].
pub fn enumerate_matchings(board: &Board, visitor: impl FnMut(&Matching)) -> Result<BigInt, EnumerateError> {
    enumerate_matchings_with_limit(board, Some(MAX_ENUM_VERTICES), visitor)
}

pub fn enumerate_matchings_with_limit(
    board: &Board,
    limit: Option<usize>,
    mut visitor: impl FnMut(&Matching),
) -> Result<BigInt, EnumerateError> {
    if let Some(l) = limit {
        if board.vertex_count() > l {
            return Err(EnumerateError::TooLarge(board.vertex_count(), l));
        }
    }
    if !board.is_balanced() {
        return Ok(BigInt::zero());
    }
    let mut s = Search::new(board);
    let mut count = 0u64;
    s.run(&mut |m| {
        count += 1;
        visitor(m)
    });
    Ok(BigInt::from(count))
}

/// Number of perfect matchings by enumeration.
pub fn count_matchings_enum(board: &Board) -> Result<BigInt, EnumerateError> {
    enumerate_matchings(board, |_| {})
}

struct Search<'a> {
    whites: &'a [DiamondCoord],
    blacks: &'a [DiamondCoord],
    // white -> blacks and black -> whites, as indices
    w_adj: Vec<Vec<usize>>,
    b_adj: Vec<Vec<usize>>,
    w_mate: Vec<Option<usize>>,
    b_used: Vec<bool>,
    buf: Vec<(DiamondCoord, DiamondCoord)>,
}

impl<'a> Search<'a> {
    fn new(board: &'a Board) -> Self {
        let whites = board.whites();
        let blacks = board.blacks();
        let w_adj: Vec<Vec<usize>> =
            whites.iter().map(|w| board.neighbors(w).map(|b| board.index_of(&b).unwrap()).collect()).collect();
        let mut b_adj = vec![Vec::new(); blacks.len()];
        for (i, nb) in w_adj.iter().enumerate() {
            for &j in nb {
                b_adj[j].push(i);
            }
        }
        Search {
            whites,
            blacks,
            w_adj,
            b_adj,
            w_mate: vec![None; whites.len()],
            b_used: vec![false; blacks.len()],
            buf: Vec::with_capacity(whites.len()),
        }
    }

    fn run(&mut self, visit: &mut dyn FnMut(&Matching)) {
        // pick the uncovered vertex with the fewest free partners
        let mut best: Option<(usize, bool, usize)> = None;
        for (i, nb) in self.w_adj.iter().enumerate() {
            if self.w_mate[i].is_none() {
                let d = nb.iter().filter(|&&j| !self.b_used[j]).count();
                if best.is_none_or(|b| d < b.0) {
                    best = Some((d, true, i));
                }
            }
        }
        for (j, nb) in self.b_adj.iter().enumerate() {
            if !self.b_used[j] {
                let d = nb.iter().filter(|&&i| self.w_mate[i].is_none()).count();
                if best.is_none_or(|b| d < b.0) {
                    best = Some((d, false, j));
                }
            }
        }
        let Some((deg, is_white, v)) = best else {
            self.buf.clear();
            for (i, m) in self.w_mate.iter().enumerate() {
                self.buf.push((self.whites[i], self.blacks[m.unwrap()]));
            }
            visit(&self.buf);
            return;
        };
        if deg == 0 {
            return;
        }
        if is_white {
            for k in 0..self.w_adj[v].len() {
                let j = self.w_adj[v][k];
                if !self.b_used[j] {
                    self.pair(v, j, visit);
                }
            }
        } else {
            for k in 0..self.b_adj[v].len() {
                let i = self.b_adj[v][k];
                if self.w_mate[i].is_none() {
                    self.pair(i, v, visit);
                }
            }
        }
    }

    fn pair(&mut self, i: usize, j: usize, visit: &mut dyn FnMut(&Matching)) {
        self.w_mate[i] = Some(j);
        self.b_used[j] = true;
        self.run(visit);
        self.w_mate[i] = None;
        self.b_used[j] = false;
    }
}

/// Two holes in a diamond: white at `(w0, w1+d1)`, black at `(w0+d0, w1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HoleSpec {
    pub w0: i64,
    pub d0: i64,
    pub w1: i64,
    pub d1: i64,
}

impl HoleSpec {
    pub fn new(w0: i64, d0: i64, w1: i64, d1: i64) -> Self {
        HoleSpec { w0, d0, w1, d1 }
    }

    /// The hole pair made of `v` (white) and `w` (black).
    pub fn from_holes(v: &DiamondCoord, w: &DiamondCoord) -> Self {
        HoleSpec { w0: v.x, d0: w.x - v.x, w1: w.y, d1: v.y - w.y }
    }

    pub fn white_hole(&self) -> DiamondCoord {
        DiamondCoord::white(self.w0, self.w1 + self.d1)
    }

    pub fn black_hole(&self) -> DiamondCoord {
        DiamondCoord::black(self.w0 + self.d0, self.w1)
    }

    pub fn holed_diamond(&self, n: u32) -> Result<Board, LatticeError> {
        remove_vertices(&build_diamond(n)?, &[self.white_hole(), self.black_hole()])
    }

    /// How many of the four weight families contain the edge. An edge can
    /// sit in two families at once when `d1 = 1`.
    pub fn weight_multiplicity(&self, white: &DiamondCoord, black: &DiamondCoord) -> u32 {
        let HoleSpec { w0, d0, w1, d1 } = *self;
        let mut c = 0;
        if black.y == w1 && white.y == w1 + 1 && black.x < w0 + d0 {
            let i = black.x;
            if white.x == i - 1 && i > 1 {
                c += 1;
            }
            if white.x == i && i >= 1 {
                c += 1;
            }
        }
        if white.y == w1 + d1 && black.y == w1 + d1 - 1 && white.x >= 1 && white.x < w0 {
            let i = white.x;
            if black.x == i || black.x == i + 1 {
                c += 1;
            }
        }
        c
    }
}

/// `w(T)`: the number of edges of `t` along the two cut rows, counted with
/// family multiplicity.
pub fn weight_w(t: &Matching, h: &HoleSpec) -> u64 {
    t.iter().map(|(w, b)| u64::from(h.weight_multiplicity(w, b))).sum()
}

/// Parity of `w(t)` obtained from a reference matching instead of a scan:
/// every loop of `t ⊕ reference` flips the parity once for each hole it
/// encloses.
pub fn weight_parity_by_loops(t: &Matching, reference: &Matching, h: &HoleSpec) -> bool {
    let mut parity = weight_w(reference, h) % 2 == 1;
    let holes = [h.white_hole().cartesian(), h.black_hole().cartesian()];
    for cycle in alternating_cycles(t, reference) {
        let poly: Vec<(i64, i64)> = cycle.iter().map(|v| v.cartesian()).collect();
        for p in holes {
            if point_in_polygon(p, &poly) {
                parity = !parity;
            }
        }
    }
    parity
}

/// Cycles of the union of two perfect matchings of the same vertex set,
/// skipping doubled edges. Each cycle alternates white and black.
pub fn alternating_cycles(a: &Matching, b: &Matching) -> Vec<Vec<DiamondCoord>> {
    let in_a: HashMap<DiamondCoord, DiamondCoord> = a.iter().map(|&(w, bl)| (w, bl)).collect();
    let back_b: HashMap<DiamondCoord, DiamondCoord> = b.iter().map(|&(w, bl)| (bl, w)).collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for &(start, _) in a {
        if seen.contains(&start) || b.contains(&(start, in_a[&start])) {
            continue;
        }
        let mut cycle = Vec::new();
        let mut w = start;
        loop {
            seen.insert(w);
            let bl = in_a[&w];
            cycle.push(w);
            cycle.push(bl);
            w = back_b[&bl];
            if w == start {
                break;
            }
        }
        out.push(cycle);
    }
    out
}

/// Even-odd rule. `p` must not lie on the polygon.
pub fn point_in_polygon(p: (i64, i64), poly: &[(i64, i64)]) -> bool {
    let mut inside = false;
    for k in 0..poly.len() {
        let a = poly[k];
        let b = poly[(k + 1) % poly.len()];
        if (a.1 > p.1) != (b.1 > p.1) {
            // crossing x > p.x, compared without division
            let lhs = (b.0 - a.0) * (p.1 - a.1);
            let rhs = (p.0 - a.0) * (b.1 - a.1);
            let right = if b.1 > a.1 { lhs > rhs } else { lhs < rhs };
            if right {
                inside = !inside;
            }
        }
    }
    inside
}

/// `Σ_T (-1)^{w(T)}` over the perfect matchings of the diamond with the two
/// holes removed.
pub fn weighted_count(n: u32, h: &HoleSpec) -> Result<BigInt, EnumerateError> {
    let board = h.holed_diamond(n)?;
    let mut total = 0i64;
    enumerate_matchings(&board, |t| total += if weight_w(t, h).is_multiple_of(2) { 1 } else { -1 })?;
    Ok(BigInt::from(total))
}

/// Which edges carry the sign in a rectangle with one black hole.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum HoleRowRule {
    /// Edges from the hole's row, left of the hole, to the row above.
    EdgesAbove,
    /// As above, plus each dent left of the hole when the hole sits in the
    /// dented top row. Agrees with `EdgesAbove` everywhere else.
    #[default]
    EdgesAboveOrDents,
}

/// Weighted count of `rect` with the black vertex `hole` removed: each
/// matching is signed by the parity of its edges joining black row `hole.y`,
/// left of the hole, to the white row above.
pub fn weighted_count_rect(rect: &Board, hole: &DiamondCoord, rule: HoleRowRule) -> Result<BigInt, EnumerateError> {
    if !rect.holes().is_empty() {
        return Err(EnumerateError::NotARectangle);
    }
    let dents_left = match rect.kind() {
        BoardKind::Diamond { .. } => return Err(EnumerateError::NotARectangle),
        BoardKind::WhiteRect { .. } => 0,
        BoardKind::BlackRect { m, dents, .. } => {
            if rule == HoleRowRule::EdgesAboveOrDents && hole.y == i64::from(*m) {
                dents.iter().filter(|&&x| i64::from(x) < hole.x).count() as u64
            } else {
                0
            }
        }
    };
    if hole.is_white() || !rect.contains(hole) {
        return Err(EnumerateError::BadRectHole(*hole));
    }
    let board = remove_vertices(rect, &[*hole])?;
    let mut total = 0i64;
    enumerate_matchings(&board, |t| {
        let crossing = t.iter().filter(|(w, b)| b.y == hole.y && w.y == hole.y + 1 && b.x < hole.x).count() as u64;
        total += if (crossing + dents_left).is_multiple_of(2) { 1 } else { -1 };
    })?;
    Ok(BigInt::from(total))
}
