//! Coupling values over every hole position for fixed offsets `(d0, d1)`,
//! written as CSV.

use std::io::{self, Write};

use thiserror::Error;

use crate::coupling::{approx_decimal, CouplingEngine, CouplingError, DyadicRational};

/// Orders above this need `force`.
pub const HEATMAP_MAX_N: u32 = 200;

pub const CSV_HEADER: &str = "w0,w1,numerator,scale,approx";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeatmapRequest {
    pub n: u32,
    pub d0: i64,
    pub d1: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeatmapCell {
    pub w0: i64,
    pub w1: i64,
    /// Signed entry of the transposed Kasteleyn inverse.
    pub value: DyadicRational,
}

#[derive(Debug, Error)]
pub enum HeatmapError {
    #[error("n = {0} is above {HEATMAP_MAX_N}; pass force to run anyway")]
    TooLarge(u32),
    #[error("no hole pair with d0 = {d0}, d1 = {d1} fits in the order-{n} diamond")]
    Empty { n: u32, d0: i64, d1: i64 },
    #[error(transparent)]
    Coupling(#[from] CouplingError),
    #[error("thread pool: {0}")]
    Threads(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl HeatmapRequest {
    /// Every `(w0, w1)` with both holes on the board, sorted by `w0` then `w1`.
    pub fn positions(&self) -> Vec<(i64, i64)> {
        let n = i64::from(self.n);
        let mut out = Vec::new();
        for w0 in 1..=n {
            if !(1..=n + 1).contains(&(w0 + self.d0)) {
                continue;
            }
            for w1 in 1..=n {
                if (1..=n + 1).contains(&(w1 + self.d1)) {
                    out.push((w0, w1));
                }
            }
        }
        out
    }
}

/// Computes the grid. `threads` of `None` uses the default pool; results do
/// not depend on it.
pub fn heatmap(req: &HeatmapRequest, force: bool, threads: Option<usize>) -> Result<Vec<HeatmapCell>, HeatmapError> {
    if req.n > HEATMAP_MAX_N && !force {
        return Err(HeatmapError::TooLarge(req.n));
    }
    let engine = CouplingEngine::new(req.n)?;
    let positions = req.positions();
    if positions.is_empty() {
        return Err(HeatmapError::Empty { n: req.n, d0: req.d0, d1: req.d1 });
    }
    let cell = |&(w0, w1): &(i64, i64)| -> Result<HeatmapCell, CouplingError> {
        Ok(HeatmapCell { w0, w1, value: engine.coupling_signed_holes(w0, req.d0, w1, req.d1)? })
    };
    compute(&positions, cell, threads)
}

#[cfg(feature = "parallel")]
fn compute<F>(positions: &[(i64, i64)], cell: F, threads: Option<usize>) -> Result<Vec<HeatmapCell>, HeatmapError>
where
    F: Fn(&(i64, i64)) -> Result<HeatmapCell, CouplingError> + Sync,
{
    use rayon::prelude::*;
    let run = || positions.par_iter().map(&cell).collect::<Result<Vec<_>, _>>();
    let cells = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| HeatmapError::Threads(e.to_string()))?
            .install(run),
        None => run(),
    };
    Ok(cells?)
}

#[cfg(not(feature = "parallel"))]
fn compute<F>(positions: &[(i64, i64)], cell: F, _threads: Option<usize>) -> Result<Vec<HeatmapCell>, HeatmapError>
where
    F: Fn(&(i64, i64)) -> Result<HeatmapCell, CouplingError>,
{
    Ok(positions.iter().map(cell).collect::<Result<Vec<_>, _>>()?)
}

/// One CSV line per cell after the header. `approx` is a 12-significant-digit
/// rendering for plotting only; the exact value is `numerator / 2^scale`.
pub fn write_csv(cells: &[HeatmapCell], mut out: impl Write) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for c in cells {
        writeln!(
            out,
            "{},{},{},{},{}",
            c.w0,
            c.w1,
            c.value.numerator(),
            c.value.scale(),
            approx_decimal(&c.value.to_rational(), 12)
        )?;
    }
    Ok(())
}

pub fn to_csv_string(cells: &[HeatmapCell]) -> String {
    let mut buf = Vec::new();
    write_csv(cells, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coupling::InverseTable;
    use crate::lattice::DiamondCoord;

    #[test]
    fn matches_inverse() {
        let n = 4;
        let t = InverseTable::new(n).unwrap();
        for (d0, d1) in [(1, 2), (-2, 1), (0, -1), (3, 3)] {
            let cells = heatmap(&HeatmapRequest { n, d0, d1 }, false, Some(2)).unwrap();
            for c in cells {
                let v = DiamondCoord::white(c.w0, c.w1 + d1);
                let w = DiamondCoord::black(c.w0 + d0, c.w1);
                assert_eq!(&c.value.to_rational(), t.entry(&v, &w));
            }
        }
    }

    #[test]
    fn sorted_and_thread_independent() {
        let req = HeatmapRequest { n: 12, d0: 1, d1: 2 };
        let a = to_csv_string(&heatmap(&req, false, Some(1)).unwrap());
        let b = to_csv_string(&heatmap(&req, false, Some(4)).unwrap());
        assert_eq!(a, b);
        assert!(a.starts_with("w0,w1,numerator,scale,approx\n1,1,"));
        let cells = heatmap(&req, false, None).unwrap();
        assert!(cells.windows(2).all(|p| (p[0].w0, p[0].w1) < (p[1].w0, p[1].w1)));
    }

    #[test]
    fn guards() {
        assert!(matches!(
            heatmap(&HeatmapRequest { n: 201, d0: 1, d1: 1 }, false, None),
            Err(HeatmapError::TooLarge(201))
        ));
        assert!(matches!(
            heatmap(&HeatmapRequest { n: 2, d0: 5, d1: 1 }, false, None),
            Err(HeatmapError::Empty { .. })
        ));
    }

    #[test]
    fn csv_round_trip() {
        let cells = heatmap(&HeatmapRequest { n: 6, d0: -1, d1: 2 }, false, None).unwrap();
        let text = to_csv_string(&cells);
        for (line, c) in text.lines().skip(1).zip(&cells) {
            let f: Vec<&str> = line.split(',').collect();
            let v: DyadicRational = format!("{} / 2^{}", f[2], f[3]).parse().unwrap();
            assert_eq!(v, c.value);
        }
    }
}
