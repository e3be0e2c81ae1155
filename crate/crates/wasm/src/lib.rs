//! Bindings for the static demo page in `www/`.
//!
//! Each export wraps a plain function that is also unit tested natively.

use aztec_core::coupling::{approx_decimal, CouplingEngine, DyadicRational};
use aztec_core::heatmap::{heatmap, HeatmapRequest};
use aztec_core::lattice::{build_diamond, DiamondCoord};
use num_traits::ToPrimitive;
use wasm_bindgen::prelude::*;

/// Largest order the page will ask for. Work grows roughly as n^3.
pub const DEMO_MAX_N: u32 = 120;

fn check_order(n: u32) -> Result<(), String> {
    if n == 0 || n > DEMO_MAX_N {
        return Err(format!("order must be between 1 and {DEMO_MAX_N}, got {n}"));
    }
    Ok(())
}

fn to_f64(q: &DyadicRational) -> f64 {
    let k = q.numerator().to_f64().unwrap_or(f64::NAN);
    k * 2f64.powi(-(q.scale() as i32))
}

/// Signed coupling values on an `n` by `n` grid indexed `[(w1-1)*n + (w0-1)]`.
/// Positions with no valid hole pair are NaN.
pub fn heatmap_grid(n: u32, d0: i64, d1: i64) -> Result<Vec<f64>, String> {
    check_order(n)?;
    let cells = heatmap(&HeatmapRequest { n, d0, d1 }, false, None).map_err(|e| e.to_string())?;
    let size = n as usize;
    let mut grid = vec![f64::NAN; size * size];
    for c in cells {
        grid[(c.w1 as usize - 1) * size + (c.w0 as usize - 1)] = to_f64(&c.value);
    }
    Ok(grid)
}

/// For every domino of the order-`n` diamond, five numbers: the white square's
/// cartesian `X, Y`, the black square's `X, Y`, and the placement probability.
pub fn placement_map(n: u32) -> Result<Vec<f64>, String> {
    check_order(n)?;
    let eng = CouplingEngine::new(n).map_err(|e| e.to_string())?;
    let board = build_diamond(n).map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(board.edge_count() * 5);
    for (w, b) in board.edges() {
        let p = eng.coupling(&w, &b).map_err(|e| e.to_string())?.abs();
        let (wx, wy) = w.cartesian();
        let (bx, by) = b.cartesian();
        out.extend([wx as f64, wy as f64, bx as f64, by as f64, to_f64(&p)]);
    }
    Ok(out)
}

/// Exact coupling between white `(wx, wy)` and black `(bx, by)` as
/// `"k / 2^n"`, followed by a decimal approximation on a second line.
pub fn exact_coupling(n: u32, wx: i64, wy: i64, bx: i64, by: i64, signed: bool) -> Result<String, String> {
    check_order(n)?;
    let eng = CouplingEngine::new(n).map_err(|e| e.to_string())?;
    let (v, w) = (DiamondCoord::white(wx, wy), DiamondCoord::black(bx, by));
    let c = if signed { eng.coupling_signed(&v, &w) } else { eng.coupling(&v, &w) }.map_err(|e| e.to_string())?;
    let k = c.numerator_at_scale(n).ok_or("scale exceeds n")?;
    Ok(format!("{k} / 2^{n}\n~ {}", approx_decimal(&c.to_rational(), 12)))
}

#[wasm_bindgen(js_name = heatmapGrid)]
pub fn heatmap_grid_js(n: u32, d0: i32, d1: i32) -> Result<Vec<f64>, JsValue> {
    heatmap_grid(n, d0.into(), d1.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = placementMap)]
pub fn placement_map_js(n: u32) -> Result<Vec<f64>, JsValue> {
    placement_map(n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = exactCoupling)]
pub fn exact_coupling_js(n: u32, wx: i32, wy: i32, bx: i32, by: i32, signed: bool) -> Result<String, JsValue> {
    exact_coupling(n, wx.into(), wy.into(), bx.into(), by.into(), signed).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shape() {
        let g = heatmap_grid(6, 1, 2).unwrap();
        assert_eq!(g.len(), 36);
        // w1 + 2 <= 7 leaves five valid rows
        assert_eq!(g.iter().filter(|x| !x.is_nan()).count(), 6 * 5);
    }

    #[test]
    fn placements_cover_each_white_once() {
        let n = 5;
        let m = placement_map(n).unwrap();
        let mut by_white = std::collections::BTreeMap::<(i64, i64), f64>::new();
        for r in m.chunks(5) {
            *by_white.entry((r[0] as i64, r[1] as i64)).or_default() += r[4];
        }
        assert_eq!(by_white.len(), (n * (n + 1)) as usize);
        for s in by_white.values() {
            assert!((s - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn exact_text() {
        assert_eq!(exact_coupling(1, 1, 1, 1, 1, false).unwrap(), "-1 / 2^1\n~ -0.5");
        assert!(exact_coupling(0, 1, 1, 1, 1, false).is_err());
        assert!(exact_coupling(3, 7, 1, 1, 1, false).is_err());
    }
}
