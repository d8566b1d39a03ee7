//! Rational points of the Hermitian curve over GF(9) and its fibers.

use aglrc::curve::{Axis, CurveInstance, CurveKind};

fn main() {
    let c = CurveInstance::new(CurveKind::Hermitian { q: 3 }).unwrap();
    println!(
        "{} affine points, genus {}, pole orders x:{} y:{}, gonality {}",
        c.points().len(),
        c.genus(),
        c.pole_order_x(),
        c.pole_order_y(),
        c.gonality_first()
    );
    for axis in [Axis::X, Axis::Y] {
        let p = c.fiber_partition(axis);
        println!(
            "{axis}-fibers: {} of size {}, {} points excluded",
            p.fibers.len(),
            p.fiber_size(),
            p.excluded_points.len()
        );
    }
    c.write_points_csv(std::io::stdout().lock()).unwrap();

    let nt = CurveInstance::new(CurveKind::NormTrace { q: 2, u: 3 }).unwrap();
    println!("norm-trace q=2 u=3: {} points, genus {}", nt.points().len(), nt.genus());
}
