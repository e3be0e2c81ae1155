use aztec_core::combinatorics::lemur;
use aztec_core::coupling::{
    calibrate_orientation, coupling, pattern_probability, CouplingEngine, DyadicRational, OrientationMap,
};
use aztec_core::enumerate::enumerate_matchings;
use aztec_core::kasteleyn::{inverse_coupling_oracle, DiamondOracle};
use aztec_core::lattice::{build_diamond, Domino, Pattern};
use aztec_core::{BigInt, BigRational};
use num_traits::{One, Signed, Zero};

#[test]
fn closed_form_equals_cofactor_oracle() {
    for n in 1..=5 {
        let o = DiamondOracle::new(n).unwrap();
        let eng = CouplingEngine::new(n).unwrap();
        for v in o.board().whites() {
            for w in o.board().blacks() {
                let c = eng.coupling(v, w).unwrap().to_rational();
                let k = o.inverse_entry(v, w).unwrap();
                assert_eq!(c.abs(), k.abs(), "n={n} {v} {w}");
                assert_eq!(eng.coupling_signed(v, w).unwrap().to_rational(), k, "n={n} {v} {w}");
            }
        }
    }
}

#[test]
fn free_function_oracle_agrees() {
    let (v, w) = (aztec_core::lattice::DiamondCoord::white(2, 2), aztec_core::lattice::DiamondCoord::black(3, 1));
    let c = coupling(3, &v, &w).unwrap();
    assert_eq!(c.to_rational().abs(), inverse_coupling_oracle(3, &v, &w).unwrap().abs());
}

#[test]
fn calibration_is_stable() {
    for n in 3..=5 {
        assert_eq!(calibrate_orientation(n).unwrap(), OrientationMap::CALIBRATED, "n={n}");
    }
}

#[test]
fn normalization_from_the_closed_form() {
    for n in 1..=10 {
        let b = build_diamond(n).unwrap();
        let eng = CouplingEngine::new(n).unwrap();
        for v in b.whites() {
            let s: BigRational = b.neighbors(v).map(|w| eng.coupling(v, &w).unwrap().to_rational().abs()).sum();
            assert!(s.is_one(), "n={n} {v}: {s}");
        }
    }
}

#[test]
fn one_and_two_domino_patterns() {
    let n = 3;
    let o = DiamondOracle::new(n).unwrap();
    let eng = CouplingEngine::new(n).unwrap();
    let dominoes: Vec<Domino> = o.board().edges().into_iter().map(|(w, b)| Domino::new(w, b).unwrap()).collect();
    for d in &dominoes {
        let p = Pattern::new(vec![*d]);
        assert_eq!(eng.pattern_probability(&p).unwrap(), o.pattern_probability(&p).unwrap());
    }
    let mut pairs = 0;
    for (i, a) in dominoes.iter().enumerate() {
        for b in &dominoes[i + 1..] {
            if a.white == b.white || a.black == b.black {
                continue;
            }
            let p = Pattern::new(vec![*a, *b]);
            assert_eq!(eng.pattern_probability(&p).unwrap(), o.pattern_probability(&p).unwrap(), "{a:?} {b:?}");
            pairs += 1;
        }
    }
    assert!(pairs > 0);
}

#[test]
fn complete_tilings_of_order_two() {
    let b = build_diamond(2).unwrap();
    let mut seen = 0;
    enumerate_matchings(&b, |t| {
        let p = Pattern::new(t.iter().map(|&(w, bl)| Domino::new(w, bl).unwrap()).collect());
        assert_eq!(pattern_probability(2, &p).unwrap(), BigRational::new(1.into(), 8.into()));
        seen += 1;
    })
    .unwrap();
    assert_eq!(seen, 8);
}

#[test]
fn half_turn_symmetry_relates_the_branches() {
    // the half turn sends d0 > 0 to d0 < 0 and d1 > 0 to d1 < 0
    for n in 1..=4 {
        let b = build_diamond(n).unwrap();
        let eng = CouplingEngine::new(n).unwrap();
        for g in [OrientationMap::Rotate180, OrientationMap::MirrorX, OrientationMap::MirrorY] {
            for v in b.whites() {
                for w in b.blacks() {
                    let a = eng.coupling(v, w).unwrap().abs();
                    let c = eng.coupling(&g.apply(n, v), &g.apply(n, w)).unwrap().abs();
                    assert_eq!(a, c, "n={n} {g:?} {v} {w}");
                }
            }
        }
    }
}

#[test]
fn first_column_reduces_to_lemur() {
    for n in 1..=4u32 {
        let eng = CouplingEngine::new(n).unwrap();
        let ni = i64::from(n);
        for d0 in 1..=ni {
            for w1 in 1..=ni {
                for d1 in 1..=ni + 1 - w1 {
                    let c = eng.coupling_signed_holes(1, d0, w1, d1).unwrap();
                    let scaled = &c * &DyadicRational::new(BigInt::one() << (n * (n + 1) / 2) as usize, 0);
                    let signed = if (d0 + d1) % 2 == 0 { -scaled } else { scaled };
                    assert_eq!(signed, DyadicRational::from_integer(lemur(n, d0, w1).unwrap()), "n={n} {d0} {w1} {d1}");
                }
            }
        }
    }
}

#[test]
fn probabilities_are_bounded_dyadics() {
    for n in 1..=5u32 {
        let o = DiamondOracle::new(n).unwrap();
        let eng = CouplingEngine::new(n).unwrap();
        let edges = o.board().edges();
        let bound = BigInt::one() << (n * (n + 1) / 2) as usize;
        for (k, &(w1, b1)) in edges.iter().enumerate().step_by(3) {
            for &(w2, b2) in edges.iter().skip(k + 1).step_by(5) {
                if w1 == w2 || b1 == b2 {
                    continue;
                }
                let p = Pattern::new(vec![Domino::new(w1, b1).unwrap(), Domino::new(w2, b2).unwrap()]);
                let q = eng.pattern_probability(&p).unwrap();
                assert!(q >= BigRational::zero() && q <= BigRational::one());
                assert!((&bound % q.denom()).is_zero(), "n={n}: {q}");
            }
        }
    }
}

#[test]
fn far_apart_dominoes_factor() {
    // dominoes in opposite corners with zero cross couplings: the 2x2
    // determinant is the product of the two diagonal entries
    let n = 6;
    let eng = CouplingEngine::new(n).unwrap();
    let b = build_diamond(n).unwrap();
    let mut found = 0;
    let edges = b.edges();
    for &(w1, b1) in &edges {
        for &(w2, b2) in &edges {
            if w1 >= w2 || b1 == b2 {
                continue;
            }
            if !eng.coupling(&w1, &b2).unwrap().is_zero() || !eng.coupling(&w2, &b1).unwrap().is_zero() {
                continue;
            }
            let p = Pattern::new(vec![Domino::new(w1, b1).unwrap(), Domino::new(w2, b2).unwrap()]);
            let one = |w, bl| pattern_probability(n, &Pattern::new(vec![Domino::new(w, bl).unwrap()])).unwrap();
            assert_eq!(pattern_probability(n, &p).unwrap(), one(w1, b1) * one(w2, b2));
            found += 1;
        }
    }
    assert!(found > 0);
}
