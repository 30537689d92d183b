//! Zolotarev nodes and poles: closed-form symmetric references
//! (tests/oracles/zolotarev.py) and Möbius-invariance properties.

#![allow(clippy::excessive_precision, clippy::approx_constant)]

use lrak::moebius::{build_four_point_map, cross_ratio_gamma, tau_from_gamma, ExtendedReal, MoebiusMap};
use lrak::zolotarev::*;
use proptest::prelude::*;
use ExtendedReal::{Finite, NegInf, PosInf};

fn finite(poles: &[ExtendedReal]) -> Vec<f64> {
    poles.iter().map(|p| p.to_f64()).collect()
}

#[test]
fn symmetric_pairs_match_closed_form() {
    let cases: [(f64, f64, &[f64], f64); 2] = [
        (
            1.0,
            2.0,
            &[
                1.0174220004106598351,
                1.1550697134378665771,
                1.4142135623730950488,
                1.7314972219705627743,
                1.9657526564127218973,
            ],
            8.6440429664783832745e-11,
        ),
        (
            1.0,
            10.0,
            &[
                1.0346832826208546441,
                1.3260206022629551412,
                1.9843958027727048573,
                3.162277660168379332,
                5.0393172501309771887,
                7.5413609584453201163,
                9.6647932444312637786,
            ],
            2.9028932857876015044e-8,
        ),
    ];
    for (a, b, p, z) in cases {
        let pair = IntervalPair::from_bounds((-b, -a), (a, b)).unwrap();
        let rp = nodes_poles(&pair, p.len()).unwrap();
        let poles = finite(&rp.poles);
        for (j, &want) in p.iter().enumerate() {
            assert!((poles[j] - want).abs() < 1e-12 * b, "pole {j}: {} vs {want}", poles[j]);
            // zeros are the mirror images of the poles
            assert!((rp.zeros[p.len() - 1 - j] + want).abs() < 1e-12 * b);
        }
        let s = sup_ratio_estimate(&rp, &pair, 4000).unwrap();
        assert!((s / z - 1.0).abs() < 1e-6, "sup ratio {s:e} vs {z:e}");
    }
}

#[test]
fn first_order_symmetric_node() {
    let pair = IntervalPair::from_bounds((-2.0, -1.0), (1.0, 2.0)).unwrap();
    let rp = nodes_poles(&pair, 1).unwrap();
    assert!((rp.zeros[0] + 2f64.sqrt()).abs() < 1e-14);
    assert!((rp.poles[0].to_f64() - 2f64.sqrt()).abs() < 1e-14);
}

#[test]
fn semi_infinite_containment() {
    let pair = IntervalPair::from_bounds((0.0, 100.0), (f64::NEG_INFINITY, -0.5)).unwrap();
    let rp = nodes_poles(&pair, 10).unwrap();
    assert_eq!(rp.zeros.len(), 10);
    assert!(rp.zeros.windows(2).all(|w| w[0] < w[1]));
    assert!(rp.zeros.iter().all(|&q| q > 0.0 && q < 100.0));
    let p = finite(&rp.poles);
    assert_eq!(p.len(), 10);
    assert!(p.windows(2).all(|w| w[0] < w[1]));
    assert!(p.iter().all(|&v| v < -0.5));
}

#[test]
fn cross_ratio_examples() {
    let g = cross_ratio_gamma(Finite(1.0), Finite(2.0), Finite(3.0), Finite(4.0)).unwrap();
    assert!((g - 4.0 / 3.0).abs() < 1e-15);
    let g = cross_ratio_gamma(NegInf, Finite(-0.5), Finite(0.0), Finite(100.0)).unwrap();
    assert!((g - 201.0).abs() < 1e-12);
    let t = tau_from_gamma(201.0).unwrap();
    assert!((t - (401.0 + 2.0 * 40200f64.sqrt())).abs() < 1e-12 * t);
}

#[test]
fn odd_map_for_symmetric_points() {
    let t = build_four_point_map(Finite(-2.0), Finite(-1.0), Finite(1.0), Finite(2.0), 2.0).unwrap();
    assert!(t.equivalent(&MoebiusMap::new(2.0, 0.0, 0.0, 1.0).unwrap(), 1e-12));
    assert_eq!(t.apply(PosInf), PosInf);
    assert!((t.inverse().apply_f64(-2f64.sqrt()) + 2f64.sqrt() / 2.0).abs() < 1e-15);
}

#[test]
fn bt_estimates() {
    assert!((bt_bound(1, 201.0).unwrap() - 1.17844).abs() < 1e-4);
    assert!(bt_bound_elliptic(3, 50.5).unwrap() <= bt_bound(3, 50.5).unwrap());
    // elliptic rate for γ = 201 from a 30-digit AGM evaluation
    let q = bt_bound_elliptic(1, 201.0).unwrap() / 4.0;
    assert!((q - 0.294497695283946462).abs() < 1e-14);
}

#[test]
fn extended_node() {
    let pair = IntervalPair::from_bounds((1.0, 100.0), (f64::NEG_INFINITY, -1.0)).unwrap();
    assert!((z1_node(&pair).unwrap() - 13.212670403551895).abs() < 1e-12);
    let rp = extended_nodes_z1(&pair, 1).unwrap();
    assert_eq!(rp.zeros, vec![z1_node(&pair).unwrap()]);
    assert!(rp.finite_poles().is_empty());
    let pair = IntervalPair::from_bounds((0.0, 100.0), (f64::NEG_INFINITY, -0.5)).unwrap();
    assert!((z1_node(&pair).unwrap() - (-0.5 + 50.25f64.sqrt())).abs() < 1e-12);
    assert_eq!(extended_nodes_z1(&pair, 6).unwrap().zeros.len(), 6);
}

#[test]
fn invalid_pairs_rejected() {
    assert!(IntervalPair::from_bounds((0.0, 2.0), (1.0, 3.0)).is_err());
    assert!(IntervalPair::from_bounds((0.0, f64::INFINITY), (-2.0, -1.0)).is_err());
    assert!(IntervalPair::from_bounds((0.0, 1.0), (f64::NEG_INFINITY, f64::INFINITY)).is_err());
    let pair = IntervalPair::from_bounds((-2.0, -1.0), (1.0, 2.0)).unwrap();
    assert!(nodes_poles(&pair, 0).is_err());
}

fn arb_pair() -> impl Strategy<Value = IntervalPair> {
    (
        -50.0f64..50.0,
        0.1f64..20.0,
        0.05f64..10.0,
        prop::option::of(0.1f64..30.0),
        any::<bool>(),
    )
        .prop_map(|(lo, width, gap, flen, below)| {
            let e = (lo, lo + width);
            let f = if below {
                let s = e.1 + gap;
                (s, flen.map_or(f64::INFINITY, |l| s + l))
            } else {
                let s = e.0 - gap;
                (flen.map_or(f64::NEG_INFINITY, |l| s - l), s)
            };
            IntervalPair::from_bounds(e, f).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zeros_in_e_poles_in_f(pair in arb_pair(), n in 1usize..12) {
        let rp = nodes_poles(&pair, n).unwrap();
        let (elo, ehi) = (pair.e.lo.to_f64(), pair.e.hi.to_f64());
        prop_assert!(rp.zeros.iter().all(|&q| q >= elo && q <= ehi));
        let (flo, fhi) = (pair.f.lo.to_f64(), pair.f.hi.to_f64());
        let inside = |p: &ExtendedReal| {
            let v = p.to_f64();
            !p.is_finite() || (v >= flo && v <= fhi) || v.abs() > POLE_INFINITY
        };
        prop_assert!(rp.poles.iter().all(inside));
    }

    #[test]
    fn certificate_below_bt(pair in arb_pair(), n in 1usize..10) {
        let rp = nodes_poles(&pair, n).unwrap();
        let s = sup_ratio_estimate(&rp, &pair, 2000).unwrap();
        let elliptic = bt_bound_elliptic(n, pair.gamma()).unwrap();
        prop_assert!(s <= elliptic * (1.0 + 1e-9));
        prop_assert!(elliptic <= bt_bound(n, pair.gamma()).unwrap() * (1.0 + 1e-12));
    }

    #[test]
    fn cross_ratio_invariant(a in -10.0f64..0.0, gaps in prop::array::uniform3(0.1f64..5.0), s in 0.2f64..5.0, shift in -20.0f64..20.0) {
        let pts = [a, a + gaps[0], a + gaps[0] + gaps[1], a + gaps[0] + gaps[1] + gaps[2]];
        let g = cross_ratio_gamma(Finite(pts[0]), Finite(pts[1]), Finite(pts[2]), Finite(pts[3])).unwrap();
        let m = MoebiusMap::new(s, shift, 0.0, 1.0).unwrap();
        let q: Vec<ExtendedReal> = pts.iter().map(|&x| m.apply(Finite(x))).collect();
        let h = cross_ratio_gamma(q[0], q[1], q[2], q[3]).unwrap();
        prop_assert!((g - h).abs() <= 1e-12 * g);
    }

    #[test]
    fn inverse_round_trip(a in -5.0f64..5.0, b in -5.0f64..5.0, c in -5.0f64..5.0, d in -5.0f64..5.0, x in -10.0f64..10.0) {
        prop_assume!((a * d - b * c).abs() > 1e-2);
        let m = MoebiusMap::new(a, b, c, d).unwrap();
        let y = m.apply(Finite(x));
        prop_assume!(y.is_finite() && y.to_f64().abs() < 1e6);
        let back = m.inverse().apply(y).to_f64();
        prop_assert!((back - x).abs() <= 1e-8 * x.abs().max(1.0));
    }
}
