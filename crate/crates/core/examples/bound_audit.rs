//! Audit every bound on a Norm-Trace code against exact oracle values.

use aglrc::bounds::{audit, GonalityInput, Measured, OracleFacts};
use aglrc::lrc::LrcCode;
use aglrc::oracle::{self, OracleConfig};

fn main() {
    let lrc = LrcCode::normtrace_x(2, 3, 1).unwrap();
    let cfg = OracleConfig::default();
    let d = oracle::min_distance(lrc.code(), &cfg).unwrap();
    let ghw = oracle::weight_hierarchy(lrc.code(), &cfg).unwrap();
    let loc = oracle::locality_all(lrc.code(), &cfg).unwrap();
    let facts = OracleFacts {
        d: Some(Measured::exact(d.value as i64)),
        ghw: ghw.iter().map(|g| (g.v, g.value as i64)).collect(),
        locality: Some(loc.iter().map(|l| l.r).collect()),
    };
    // gamma_2 = 7 for this curve is supplied by hand
    let gon = GonalityInput::for_curve(lrc.curve()).with([(2, 7)]).unwrap();
    let report = audit(&lrc, &facts, &gon);
    println!("# {}", report.code_id);
    print!("{}", report.csv());
}
