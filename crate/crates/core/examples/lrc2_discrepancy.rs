//! The two-recovering-set code: claimed bound against prior bound and the
//! exact distance.

use aglrc::bounds::lrc2_bounds;
use aglrc::lrc::LrcCode;
use aglrc::oracle::{min_distance, OracleConfig};

fn main() {
    for q in [2, 3] {
        let lrc = LrcCode::lrc2(q).unwrap();
        let d = min_distance(lrc.code(), &OracleConfig::default()).unwrap();
        let b = lrc2_bounds(q);
        println!("q={q}: n={} k={} d={}", lrc.n(), lrc.k(), d.value);
        println!("  (q+1)(q^2-3q+3) = {}", b.btv_bound);
        println!("  q^3+q+2 = {} {}", b.claimed_bound, if b.claimed_bound > d.value as i64 { "VIOLATED" } else { "holds" });
        println!("  chain from spanning monomials: {:?}", b.recomputed);
        println!("  chain from the stated m: {:?}", b.stated_m);
        println!("  quoted m_perp {} vs fourth phase start {}", b.quoted_m_perp, q.pow(3) - 1);
        for part in lrc.partitions() {
            println!(
                "  {}-partition: fibers of {}, interpolation {}",
                part.axis,
                part.fiber_size(),
                if part.interpolation_available { "available" } else { "unavailable" }
            );
        }
    }
}
