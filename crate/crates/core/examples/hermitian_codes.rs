//! One-point Hermitian codes over GF(4) with their exact distances.

use aglrc::code::{hermitian_basis, hermitian_code, hermitian_max_degree};
use aglrc::curve::{CurveInstance, CurveKind};
use aglrc::oracle::{min_distance, OracleConfig};

fn main() {
    let q = 2;
    let curve = CurveInstance::new(CurveKind::Hermitian { q }).unwrap();
    let cfg = OracleConfig::default();
    println!("m  k  d  n-k+1  monomials");
    for m in 0..=hermitian_max_degree(q) {
        let code = hermitian_code(&curve, m).unwrap();
        let d = min_distance(&code, &cfg).unwrap();
        let basis: Vec<String> = hermitian_basis(q, m).iter().map(|x| x.to_string()).collect();
        println!("{m}  {}  {}  {}  {}", code.k(), d.value, code.n() - code.k() + 1, basis.join(" "));
    }
}
