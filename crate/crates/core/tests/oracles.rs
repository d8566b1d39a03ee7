//! Independent oracle routes checked against each other, and the exact
//! values they produced frozen for regression.

mod common;

use aglrc::bounds::{hermitian_m_perp, hermitian_phase_distance};
use aglrc::code::hermitian_code;
use aglrc::curve::{CurveInstance, CurveKind};
use aglrc::lrc::LrcCode;
use aglrc::oracle::{self, Method, OracleConfig};

use common::q2_instances;

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

#[test]
fn distance_routes_agree() {
    let mut compared = 0;
    // d=14 at n=32 is beyond a small subset budget; exhaustive covers it
    let small = OracleConfig {
        max_subsets: 10_000_000,
        ..cfg()
    };
    for (name, lrc) in q2_instances() {
        let circuits = oracle::min_distance_by_circuits(lrc.code(), &small);
        let exhaustive = oracle::min_distance_exhaustive(lrc.code(), &cfg());
        match (exhaustive, circuits) {
            (Ok(a), Ok(b)) => {
                assert_eq!(a.value, b.value, "{name}");
                compared += 1;
            }
            (Ok(_), Err(_)) => assert_eq!(name, "normtrace-x(2,3,1)"),
            (Err(_), Ok(_)) => assert_eq!(name, "normtrace-y(2,3,1)"),
            (Err(a), Err(b)) => panic!("{name}: {a}; {b}"),
        }
    }
    assert_eq!(compared, 5);
}

#[test]
fn frozen_distances() {
    let expect = [
        ("hermitian-x(2,1)", 8, 2, 6),
        ("hermitian-x(2,2)", 8, 3, 4),
        ("hermitian-x(2,3)", 8, 4, 2),
        ("normtrace-x(2,3,1)", 32, 6, 14),
        ("normtrace-y(2,2,1)", 6, 4, 2),
        ("normtrace-y(2,3,1)", 28, 12, 6),
        ("lrc2(2)", 6, 2, 3),
    ];
    for ((name, lrc), (ename, n, k, d)) in q2_instances().into_iter().zip(expect) {
        assert_eq!(name, ename);
        assert_eq!((lrc.n(), lrc.k()), (n, k), "{name}");
        let got = oracle::min_distance(lrc.code(), &cfg()).unwrap();
        assert_eq!(got.value, d, "{name}");
        assert_eq!(got.witness.len(), d, "{name}");
    }
}

#[test]
fn witness_is_a_codeword_support() {
    let lrc = LrcCode::hermitian_x(2, 1).unwrap();
    let d = oracle::min_distance_exhaustive(lrc.code(), &cfg()).unwrap();
    assert_eq!(d.method, Method::Exhaustive);
    assert_eq!(d.witness, vec![0, 1, 4, 5, 6, 7]);
}

#[test]
fn ghw_routes_agree() {
    let mut codes = q2_instances();
    codes.retain(|(name, _)| *name != "normtrace-y(2,3,1)");
    let mut compared = 0;
    for (name, lrc) in codes {
        for v in 1..=lrc.k() {
            let Ok(a) = oracle::ghw_by_subspaces(lrc.code(), v, &cfg()) else {
                continue;
            };
            let b = oracle::ghw_by_flats(lrc.code(), v, &cfg()).unwrap();
            assert_eq!(a.value, b.value, "{name} d_{v}");
            compared += 1;
        }
    }
    assert!(compared >= 15, "{compared}");
}

#[test]
fn frozen_weight_hierarchies() {
    let cases: Vec<(LrcCode, Vec<usize>)> = vec![
        (LrcCode::hermitian_x(2, 1).unwrap(), vec![6, 8]),
        (LrcCode::hermitian_x(2, 2).unwrap(), vec![4, 6, 8]),
        (LrcCode::hermitian_x(2, 3).unwrap(), vec![2, 4, 6, 8]),
        (LrcCode::normtrace_x(2, 3, 1).unwrap(), vec![14, 18, 24, 25, 31, 32]),
        (LrcCode::normtrace_y(2, 2, 1).unwrap(), vec![2, 3, 5, 6]),
        (LrcCode::lrc2(2).unwrap(), vec![3, 6]),
        (LrcCode::lrc2(3).unwrap(), vec![13, 16, 19, 20, 23, 24]),
    ];
    for (lrc, want) in cases {
        let got: Vec<usize> = oracle::weight_hierarchy(lrc.code(), &cfg())
            .unwrap()
            .iter()
            .map(|g| g.value)
            .collect();
        assert_eq!(got, want, "{}", lrc.construction());
    }
}

#[test]
fn normtrace_y_231_low_weights_by_flats() {
    let lrc = LrcCode::normtrace_y(2, 3, 1).unwrap();
    let d1 = oracle::ghw_by_flats(lrc.code(), 1, &cfg()).unwrap();
    let d2 = oracle::ghw_by_flats(lrc.code(), 2, &cfg()).unwrap();
    assert_eq!((d1.value, d2.value), (6, 8));
    let d11 = oracle::ghw_by_flats(lrc.code(), 11, &cfg()).unwrap();
    assert_eq!(d11.value, 27);
}

#[test]
fn locality_routes_agree() {
    for (name, lrc) in q2_instances() {
        let Ok(dual) = oracle::locality_by_dual_enumeration(lrc.code(), &cfg()) else {
            continue;
        };
        for l in dual {
            let span = oracle::locality_by_span_search(lrc.code(), l.coordinate, &cfg()).unwrap();
            assert_eq!(l.r, span.r, "{name} coordinate {}", l.coordinate);
        }
    }
}

#[test]
fn frozen_localities() {
    let count = |lrc: &LrcCode| {
        let mut m = std::collections::BTreeMap::new();
        for l in oracle::locality_all(lrc.code(), &cfg()).unwrap() {
            *m.entry(l.r.unwrap()).or_insert(0usize) += 1;
        }
        m.into_iter().collect::<Vec<_>>()
    };
    assert_eq!(count(&LrcCode::hermitian_x(2, 2).unwrap()), vec![(1, 8)]);
    assert_eq!(count(&LrcCode::normtrace_x(2, 3, 1).unwrap()), vec![(2, 28), (3, 4)]);
    assert_eq!(count(&LrcCode::normtrace_y(2, 2, 1).unwrap()), vec![(2, 6)]);
    assert_eq!(count(&LrcCode::normtrace_y(2, 3, 1).unwrap()), vec![(2, 28)]);
    assert_eq!(count(&LrcCode::lrc2(2).unwrap()), vec![(1, 6)]);
    assert_eq!(count(&LrcCode::lrc2(3).unwrap()), vec![(2, 24)]);
}

#[test]
fn fiber_recovering_sets_hold_on_every_codeword() {
    for (name, lrc) in q2_instances() {
        for part in lrc.partitions().iter().filter(|p| p.interpolation_available) {
            match oracle::verify_recovering_partition(&lrc, part.axis, &cfg()) {
                Ok(ok) => assert!(ok, "{name} {}", part.axis),
                Err(oracle::OracleError::CapExceeded { .. }) => {}
                Err(e) => panic!("{name}: {e}"),
            }
        }
    }
}

/// The one-point code of degree `m` is the dual of the one of degree
/// `m_perp`, so the phase formulas can be read on either side.
#[test]
fn hermitian_phase_distance_matches_codes() {
    let q = 2;
    let curve = CurveInstance::new(CurveKind::Hermitian { q }).unwrap();
    let mut checked = 0;
    for m in 0..=8i64 {
        let code = hermitian_code(&curve, m as u64).unwrap();
        if let Some(expect) = hermitian_phase_distance(q, hermitian_m_perp(q, m)) {
            let d = oracle::min_distance(&code, &cfg()).unwrap();
            assert_eq!(d.value as i64, expect, "C_L({m})");
            checked += 1;
        }
        if let Some(expect) = hermitian_phase_distance(q, m) {
            let d = oracle::min_distance(&code.dual(), &cfg()).unwrap();
            assert_eq!(d.value as i64, expect, "dual of C_L({m})");
            checked += 1;
        }
    }
    assert!(checked >= 4, "{checked}");
}
