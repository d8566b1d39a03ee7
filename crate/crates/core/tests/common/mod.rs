#![allow(dead_code)]

use aglrc::gf::Elem;
use aglrc::lrc::LrcCode;
use aglrc::rng::SeededRng;

/// The q=2 instances used throughout the integration tests.
pub fn q2_instances() -> Vec<(&'static str, LrcCode)> {
    vec![
        ("hermitian-x(2,1)", LrcCode::hermitian_x(2, 1).unwrap()),
        ("hermitian-x(2,2)", LrcCode::hermitian_x(2, 2).unwrap()),
        ("hermitian-x(2,3)", LrcCode::hermitian_x(2, 3).unwrap()),
        ("normtrace-x(2,3,1)", LrcCode::normtrace_x(2, 3, 1).unwrap()),
        ("normtrace-y(2,2,1)", LrcCode::normtrace_y(2, 2, 1).unwrap()),
        ("normtrace-y(2,3,1)", LrcCode::normtrace_y(2, 3, 1).unwrap()),
        ("lrc2(2)", LrcCode::lrc2(2).unwrap()),
    ]
}

/// Every message in GF(q)^k, in counting order.
pub fn all_messages(q: u32, k: usize) -> impl Iterator<Item = Vec<Elem>> {
    let total = (q as u64).pow(k as u32);
    (0..total).map(move |mut i| {
        (0..k)
            .map(|_| {
                let d = (i % q as u64) as u32;
                i /= q as u64;
                Elem(d)
            })
            .collect()
    })
}

/// All messages when there are at most `limit`, otherwise the unit vectors
/// plus `limit` seeded random ones.
pub fn messages(q: u32, k: usize, limit: u64, seed: u64) -> Vec<Vec<Elem>> {
    if (q as f64).powi(k as i32) <= limit as f64 {
        return all_messages(q, k).collect();
    }
    let mut out: Vec<Vec<Elem>> = (0..k)
        .map(|i| (0..k).map(|j| Elem((i == j) as u32)).collect())
        .collect();
    let mut rng = SeededRng::new(seed);
    for _ in 0..limit {
        out.push((0..k).map(|_| Elem(rng.below(q as u64) as u32)).collect());
    }
    out
}

pub fn verdict_line(criterion: u32, ok: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
}

pub fn random_message(q: u32, k: usize, seed: u64) -> Vec<Elem> {
    let mut rng = SeededRng::new(seed);
    (0..k).map(|_| Elem(rng.below(q as u64) as u32)).collect()
}
