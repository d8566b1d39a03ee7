//! Locally recoverable codes from the Hermitian and Norm-Trace curves.
//!
//! Codes are evaluations of monomials `x^i y^j` at the affine points of a
//! curve. Points are grouped into fibers of the `x` or `y` projection, and a
//! lost symbol is rebuilt by Lagrange interpolation over the rest of its
//! fiber. Everything is exact arithmetic over `GF(p^e)`.
//!
//! * [`gf`]: finite fields with log/exp tables, norm and trace.
//! * [`curve`]: rational points, genus, pole orders, fibers.
//! * [`code`], [`matrix`]: linear codes, row reduction, duals, puncturing.
//! * [`lrc`]: the x- and y-projection constructions and the code with two
//!   recovering sets, with repair and fiber parity checks.
//! * [`bounds`]: closed-form distance bounds and an audit against measured
//!   values.
//! * [`oracle`]: exact minimum distance, weight hierarchy and locality by
//!   exhaustive search, with caps.
//! * [`sim`]: a storage cluster that loses symbols and logs repair reads.
//! * [`descriptor`], [`cli`]: the on-disk code format and the `aglrc` tool.
//!
//! Runnable examples live in `examples/`: `field_arithmetic`,
//! `curve_points`, `hermitian_codes`, `local_repair`, `bound_audit`,
//! `generalized_weights`, `lrc2_discrepancy`, `oracle_locality` and
//! `storage_simulation`.

pub mod bounds;
pub mod cli;
pub mod code;
pub mod curve;
pub mod descriptor;
pub mod gf;
pub mod lrc;
pub mod matrix;
pub mod oracle;
pub mod rng;
pub mod sim;
