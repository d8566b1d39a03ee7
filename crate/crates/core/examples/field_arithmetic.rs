//! GF(9) tables, inverses, and the norm and trace down to GF(3).

use aglrc::gf::{Elem, FiniteField};

fn main() {
    let f = FiniteField::new(3, 2).unwrap();
    println!("GF({}) modulus {:?}, generator {}", f.order(), f.modulus(), f.generator().0);
    println!("elem  coeffs  log  inverse  norm  trace");
    for a in f.elements() {
        let inv = f.inv(a).map(|x| x.0.to_string()).unwrap_or_else(|_| "-".into());
        let log = f.log(a).map(|l| l.to_string()).unwrap_or_else(|| "-".into());
        println!(
            "{:>4}  {:?}  {:>3}  {:>7}  {:>4}  {:>5}",
            a.0,
            f.coefficients(a),
            log,
            inv,
            f.norm_in_place(a, 3).unwrap().0,
            f.trace_in_place(a, 3).unwrap().0
        );
    }
    let (a, b) = (Elem(5), Elem(7));
    println!("5*7 = {}, 5/7 = {}, 5^10 = {}", f.mul(a, b).0, f.div(a, b).unwrap().0, f.pow(a, 10).0);
}
