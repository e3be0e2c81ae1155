use aztec_core::combinatorics::eklp::{eklp_d_by_recursion, eklp_e_by_recursion};
use aztec_core::combinatorics::holed::{
    kato_identities_hold, series_chain_coefficient, series_chain_krawtchouk, telescoped_d_closed,
};
use aztec_core::combinatorics::{
    big_d, eklp_d, eklp_e, hoho_prefactor, increasing_tuples, koloro_weighted, lemur, telescoped_d,
};
use aztec_core::enumerate::{count_matchings_enum, weighted_count, weighted_count_rect, HoleRowRule, HoleSpec};
use aztec_core::lattice::{build_rectangle, DiamondCoord, RectKind};
use aztec_core::BigRational;

#[test]
fn eklp_matches_enumeration() {
    for n in 1..=4u32 {
        for m in 1..=3u32 {
            for xs in increasing_tuples(m as usize, 1, i64::from(n) + 1) {
                let dents: Vec<u32> = xs.iter().map(|&x| x as u32).collect();
                let b = build_rectangle(RectKind::BlackEdged, n, m, &dents).unwrap();
                assert_eq!(eklp_d(n, m, &xs).unwrap(), count_matchings_enum(&b).unwrap(), "D n={n} {xs:?}");
            }
            for ys in increasing_tuples(m as usize, 1, i64::from(n)) {
                let teeth: Vec<u32> = ys.iter().map(|&y| y as u32).collect();
                let b = build_rectangle(RectKind::WhiteEdged, n, m, &teeth).unwrap();
                assert_eq!(eklp_e(n, m, &ys).unwrap(), count_matchings_enum(&b).unwrap(), "E n={n} {ys:?}");
            }
        }
    }
}

#[test]
fn eklp_recursions() {
    for n in 1..=4u32 {
        for m in 1..=2u32 {
            for ys in increasing_tuples(m as usize, 1, i64::from(n)) {
                assert_eq!(eklp_e_by_recursion(n, m, &ys).unwrap(), eklp_e(n, m, &ys).unwrap());
            }
            for xs in increasing_tuples(m as usize + 1, 1, i64::from(n) + 1) {
                assert_eq!(eklp_d_by_recursion(n, &xs).unwrap(), eklp_d(n, m + 1, &xs).unwrap());
            }
        }
    }
}

#[test]
fn operator_determinant_matches_weighted_rectangles() {
    let mut cases = 0;
    for kind in [RectKind::WhiteEdged, RectKind::BlackEdged] {
        for n in 1..=4u32 {
            for h in 1..=3u32 {
                for m in 1..=h {
                    let d1 = h - m;
                    let hi = if kind == RectKind::WhiteEdged { n } else { n + 1 };
                    for notches in increasing_tuples(h as usize - 1, 1, i64::from(hi)) {
                        let ns: Vec<u32> = notches.iter().map(|&x| x as u32).collect();
                        let rect = build_rectangle(kind, n, h, &ns).unwrap();
                        for w0 in 1..=i64::from(n) + 1 {
                            let hole = DiamondCoord::black(w0, i64::from(m));
                            if !rect.contains(&hole) {
                                continue;
                            }
                            let want = weighted_count_rect(&rect, &hole, HoleRowRule::EdgesAboveOrDents).unwrap();
                            let got = koloro_weighted(kind, n, m, d1, w0, &notches).unwrap();
                            assert_eq!(got, want, "{kind:?} n={n} m={m} d1={d1} w0={w0} {notches:?}");
                            cases += 1;
                        }
                    }
                }
            }
        }
    }
    assert_eq!(cases, 552);
}

#[test]
fn dent_rule_only_matters_in_the_top_row() {
    // the plain rule disagrees somewhere on a dented top row, and nowhere else
    let mut differs = false;
    for n in 1..=3u32 {
        for dents in increasing_tuples(2, 1, i64::from(n) + 1) {
            let ds: Vec<u32> = dents.iter().map(|&x| x as u32).collect();
            let rect = build_rectangle(RectKind::BlackEdged, n, 3, &ds).unwrap();
            for m in 1..=3 {
                for w0 in 1..=i64::from(n) + 1 {
                    let hole = DiamondCoord::black(w0, m);
                    if !rect.contains(&hole) {
                        continue;
                    }
                    let a = weighted_count_rect(&rect, &hole, HoleRowRule::EdgesAbove).unwrap();
                    let b = weighted_count_rect(&rect, &hole, HoleRowRule::EdgesAboveOrDents).unwrap();
                    if m < 3 {
                        assert_eq!(a, b);
                    } else if a != b {
                        differs = true;
                    }
                }
            }
        }
    }
    assert!(differs);
}

#[test]
fn first_column_closed_form() {
    for n in 1..=4u32 {
        let ni = i64::from(n);
        for d0 in 1..=ni {
            for w1 in 1..=ni {
                for d1 in 1..=ni + 1 - w1 {
                    let h = HoleSpec::new(1, d0, w1, d1);
                    assert_eq!(lemur(n, d0, w1).unwrap(), weighted_count(n, &h).unwrap(), "n={n} {h:?}");
                }
            }
        }
    }
}

#[test]
fn kato_up_to_eight() {
    for n in 0..=8u32 {
        for s in 1..=i64::from(n) + 1 {
            assert!(kato_identities_hold(n, s).unwrap());
        }
    }
}

#[test]
fn hole_determinant_routes() {
    for n in 1..=5u32 {
        let ni = i64::from(n);
        for w0 in 1..=ni {
            for d0 in 1..=ni + 1 - w0 {
                for w1 in 1..=ni {
                    for d1 in 1..=ni + 1 - w1 {
                        let d = big_d(n, w0, d0, w1, d1).unwrap();
                        assert_eq!(d, telescoped_d(n, w0, d0, w1, d1).unwrap());
                        assert_eq!(d, telescoped_d_closed(n, w0, d0, w1, d1).unwrap());
                        if n <= 4 {
                            let wc = weighted_count(n, &HoleSpec::new(w0, d0, w1, d1)).unwrap();
                            assert_eq!(hoho_prefactor(n, w1, d1) * d, BigRational::from_integer(wc));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn series_chain_up_to_ten() {
    for n in 1..=10u32 {
        for d0 in 1..=i64::from(n) {
            for w1 in 1..=i64::from(n) {
                assert_eq!(series_chain_coefficient(n, d0, w1).unwrap(), series_chain_krawtchouk(n, d0, w1));
            }
        }
    }
}
