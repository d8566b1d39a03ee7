//! Weight hierarchies by two independent searches.

use aglrc::bounds::{ghw_bound, GonalityInput};
use aglrc::lrc::LrcCode;
use aglrc::oracle::{ghw_by_flats, ghw_by_subspaces, gaussian_binomial, OracleConfig};

fn main() {
    let cfg = OracleConfig::default();
    for t in 1..=3 {
        let lrc = LrcCode::hermitian_x(2, t).unwrap();
        let p = lrc.params();
        let gon = GonalityInput::for_curve(lrc.curve());
        println!("{} (n={}, k={})", lrc.construction(), lrc.n(), lrc.k());
        for v in 1..=lrc.k() {
            let a = ghw_by_subspaces(lrc.code(), v, &cfg).unwrap();
            let b = ghw_by_flats(lrc.code(), v, &cfg).unwrap();
            let bound = ghw_bound(lrc.n() as u64, p.t, p.ell, p.r, p.h, v, &gon)
                .map(|x| x.to_string())
                .unwrap_or_else(|_| "-".into());
            println!(
                "  d_{v} = {} (flats {}), {} subspaces, bound {bound}",
                a.value,
                b.value,
                gaussian_binomial(lrc.k(), v, 4).unwrap()
            );
        }
    }
}
