//! True per-coordinate locality compared with the fiber sizes.

use aglrc::lrc::LrcCode;
use aglrc::oracle::{locality_all, OracleConfig};

fn main() {
    let cfg = OracleConfig::default();
    let codes = [
        LrcCode::normtrace_x(2, 3, 1).unwrap(),
        LrcCode::normtrace_y(2, 3, 1).unwrap(),
        LrcCode::lrc2(2).unwrap(),
    ];
    for lrc in &codes {
        let loc = locality_all(lrc.code(), &cfg).unwrap();
        let nominal: Vec<String> = lrc.partitions().iter().map(|p| format!("{}:{}", p.axis, p.r)).collect();
        println!("{} nominal r {}", lrc.construction(), nominal.join(" "));
        for l in loc.iter().take(6) {
            println!("  coordinate {:>2}: r_i={:?} via {:?} {:?}", l.coordinate, l.r, l.method, l.witness);
        }
    }
}
