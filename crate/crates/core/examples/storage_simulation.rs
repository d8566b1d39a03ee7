//! Store a file on a simulated cluster, lose nodes, and count repair reads.

use aglrc::lrc::LrcCode;
use aglrc::sim::{report, Cluster, FailureSchedule};

fn main() {
    let lrc = LrcCode::normtrace_y(2, 3, 1).unwrap();
    let payload: Vec<u8> = (0..4096u32).map(|i| (i * 31 % 251) as u8).collect();
    let mut cluster = Cluster::new(lrc);
    let stripes = cluster.ingest(&payload);
    println!("{} bytes in {stripes} stripes of {} symbols", payload.len(), cluster.lrc().n());

    for per_event in [1, 2, 4] {
        let log = cluster
            .fail_and_repair(&FailureSchedule::Random {
                events: 500,
                per_event,
                seed: 7,
            })
            .unwrap();
        println!("{per_event} losses per event: {}", report(&log));
    }
    assert_eq!(cluster.read_back(), payload);
    println!("read-back matches");
}
