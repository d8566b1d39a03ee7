//! Locally recoverable codes built from a coordinate projection of a curve.
//!
//! Every codeword, restricted to one fiber of the projection, is a polynomial
//! of bounded degree in the coordinate that varies along the fiber. When that
//! degree is at most `fiber size - 2`, any erased symbol in the fiber is the
//! interpolation of the remaining ones, and the fiber carries a parity test.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{evaluation_code, CodeError, LinearCode, Monomial};
use crate::curve::{Axis, CurveError, CurveInstance, CurveKind};
use crate::gf::{Elem, FiniteField};
use crate::matrix::{self, Matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LrcError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("t = {t} outside {min}..={max}")]
    TOutOfRange { t: u64, min: u64, max: u64 },
    #[error("construction {construction} does not apply to {curve}")]
    WrongCurve { construction: Construction, curve: CurveKind },
    #[error("code has no {0}-partition")]
    NoSuchPartition(Axis),
    #[error("{0}-fibers carry no redundancy; interpolation unavailable")]
    InterpolationUnavailable(Axis),
    #[error("coordinate {coordinate} shares its {axis}-fiber with another erasure")]
    SecondErasure { axis: Axis, coordinate: usize },
    #[error("no partition can repair coordinate {0} locally")]
    NoLocalRepair(usize),
    #[error("known symbols of the {0}-fiber are not a low-degree polynomial")]
    InconsistentFiber(Axis),
    #[error("coordinate {0} out of range")]
    BadCoordinate(usize),
    #[error("fiber {0} does not exist")]
    BadFiber(usize),
    #[error("expected {expected} symbols, got {got}")]
    SymbolCount { expected: usize, got: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Construction {
    /// `x^a y^b`, `a <= t`, `b <= q - 2` on all points of the Hermitian curve.
    HermitianX { t: u64 },
    /// `x^a y^b`, `a <= t`, `b <= q^(u-1) - 2` on all points.
    NormTraceX { t: u64 },
    /// `y^b x^a`, `b <= t`, `a <= r - 1` on points whose `y` has nonzero trace.
    NormTraceY { t: u64 },
    /// `x^a y^b`, `a <= q - 2`, `b <= q - 1` on the Hermitian points with
    /// nonzero-trace `y`; two partitions.
    Lrc2,
}

impl Construction {
    pub fn t(self) -> Option<u64> {
        match self {
            Construction::HermitianX { t }
            | Construction::NormTraceX { t }
            | Construction::NormTraceY { t } => Some(t),
            Construction::Lrc2 => None,
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::HermitianX { t } => write!(f, "hermitian-x(t={t})"),
            Construction::NormTraceX { t } => write!(f, "normtrace-x(t={t})"),
            Construction::NormTraceY { t } => write!(f, "normtrace-y(t={t})"),
            Construction::Lrc2 => write!(f, "lrc2"),
        }
    }
}

/// Parameters of the covering construction `n = (r+1)s`, `k <= r m` with
/// `m = t l + 1 - g_Y` and `h` the pole degree of the fiber variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrcParams {
    pub t: u64,
    pub ell: u64,
    pub r: u64,
    pub h: u64,
    pub s: u64,
    pub m: u64,
}

impl LrcParams {
    fn new(t: u64, r: u64, h: u64, s: u64) -> Self {
        // base curve is the projective line: genus 0, one point at infinity
        Self {
            t,
            ell: 1,
            r,
            h,
            s,
            m: t + 1,
        }
    }
}

/// Lagrange data for repairing one coordinate from its fiber partners.
#[derive(Clone, Debug)]
struct RepairPlan {
    /// Fiber partners, in fiber order.
    partners: Vec<usize>,
    /// Weights on the first `deg + 1` partners giving the erased value.
    weights: Vec<Elem>,
    /// For each further partner, weights predicting it from the first
    /// `deg + 1`. Empty when the fiber has exactly one symbol of slack.
    checks: Vec<Vec<Elem>>,
}

/// A recovering partition of the coordinates into fibers.
#[derive(Clone, Debug)]
pub struct LrcPartition {
    pub axis: Axis,
    /// Coordinate indices per fiber, ordered by the varying coordinate.
    pub blocks: Vec<Vec<usize>>,
    /// Nominal recovering-set size `r` (fiber size minus one).
    pub r: usize,
    /// Degree bound of codeword restrictions in the varying coordinate.
    pub deg_fiber: usize,
    pub interpolation_available: bool,
    block_of: Vec<usize>,
    along: Vec<Elem>,
    plans: Vec<Option<RepairPlan>>,
    block_checks: Vec<Matrix>,
}

impl LrcPartition {
    fn new(
        field: &FiniteField,
        axis: Axis,
        blocks: Vec<Vec<usize>>,
        along: Vec<Elem>,
        deg_fiber: usize,
    ) -> Self {
        let n = along.len();
        let size = blocks[0].len();
        assert!(blocks.iter().all(|b| b.len() == size), "fibers must have equal size");
        let mut block_of = vec![usize::MAX; n];
        for (bi, b) in blocks.iter().enumerate() {
            for &c in b {
                block_of[c] = bi;
            }
        }
        let available = deg_fiber + 2 <= size;
        let mut plans = vec![None; n];
        let mut block_checks = Vec::new();
        if available {
            for b in &blocks {
                for &c in b {
                    plans[c] = Some(repair_plan(field, b, c, &along, deg_fiber));
                }
                let z: Vec<Elem> = b.iter().map(|&c| along[c]).collect();
                block_checks.push(fiber_checks(field, &z, deg_fiber));
            }
        }
        Self {
            axis,
            r: size - 1,
            deg_fiber,
            interpolation_available: available,
            blocks,
            block_of,
            along,
            plans,
            block_checks,
        }
    }

    pub fn fiber_size(&self) -> usize {
        self.r + 1
    }

    /// Fiber index of a coordinate.
    pub fn block_of(&self, coordinate: usize) -> usize {
        self.block_of[coordinate]
    }

    /// The varying coordinate value at a code coordinate.
    pub fn along(&self, coordinate: usize) -> Elem {
        self.along[coordinate]
    }

    /// Fiber partners of a coordinate (its recovering set).
    pub fn recovering_set(&self, coordinate: usize) -> Vec<usize> {
        self.blocks[self.block_of[coordinate]]
            .iter()
            .copied()
            .filter(|&c| c != coordinate)
            .collect()
    }

    /// Parity checks of a fiber as rows over the fiber's positions.
    pub fn checks(&self, block: usize) -> Option<&Matrix> {
        self.block_checks.get(block)
    }
}

/// Weights `w_a` with `p(target) = sum_a w_a p(nodes[a])` for every
/// polynomial of degree below `nodes.len()`.
pub fn lagrange_weights(f: &FiniteField, nodes: &[Elem], target: Elem) -> Vec<Elem> {
    (0..nodes.len())
        .map(|a| {
            let mut num = Elem::ONE;
            let mut den = Elem::ONE;
            for (b, &zb) in nodes.iter().enumerate() {
                if b != a {
                    num = f.mul(num, f.sub(target, zb));
                    den = f.mul(den, f.sub(nodes[a], zb));
                }
            }
            f.div(num, den).expect("fiber coordinates are distinct")
        })
        .collect()
}

fn repair_plan(
    f: &FiniteField,
    block: &[usize],
    target: usize,
    along: &[Elem],
    deg: usize,
) -> RepairPlan {
    let partners: Vec<usize> = block.iter().copied().filter(|&c| c != target).collect();
    let nodes: Vec<Elem> = partners[..=deg].iter().map(|&c| along[c]).collect();
    let weights = lagrange_weights(f, &nodes, along[target]);
    let checks = partners[deg + 1..]
        .iter()
        .map(|&c| lagrange_weights(f, &nodes, along[c]))
        .collect();
    RepairPlan {
        partners,
        weights,
        checks,
    }
}

/// Null space of the `(deg+1) x |z|` Vandermonde matrix on the fiber
/// coordinates `z`: the dual of the restricted code.
fn fiber_checks(f: &FiniteField, z: &[Elem], deg: usize) -> Matrix {
    let mut v = Matrix::zeros(deg + 1, z.len());
    for e in 0..=deg {
        for (c, &zc) in z.iter().enumerate() {
            v[(e, c)] = f.pow(zc, e as u64);
        }
    }
    matrix::null_space(f, &v)
}

/// Per-coordinate locality as exposed by the construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateLocality {
    pub coordinate: usize,
    /// Recovering sets from partitions with interpolation available.
    pub sets: Vec<(Axis, Vec<usize>)>,
    /// No partition repairs this coordinate; the oracle has to decide.
    pub oracle_required: bool,
}

#[derive(Clone, Debug)]
pub struct LrcCode {
    code: LinearCode,
    curve: CurveInstance,
    construction: Construction,
    coordinates: Vec<usize>,
    partitions: Vec<LrcPartition>,
    params: LrcParams,
}

impl LrcCode {
    pub fn build(curve: CurveKind, construction: Construction) -> Result<Self, LrcError> {
        let wrong = || LrcError::WrongCurve {
            construction,
            curve,
        };
        match (curve, construction) {
            (CurveKind::Hermitian { q }, Construction::HermitianX { t }) => {
                Self::hermitian_x(q, t)
            }
            (CurveKind::Hermitian { q }, Construction::Lrc2) => Self::lrc2(q),
            (CurveKind::NormTrace { q, u }, Construction::NormTraceX { t }) => {
                Self::normtrace_x(q, u, t)
            }
            (CurveKind::NormTrace { q, u }, Construction::NormTraceY { t }) => {
                Self::normtrace_y(q, u, t)
            }
            _ => Err(wrong()),
        }
    }

    /// `x^a y^b` with `a <= t`, `b <= q - 2` on all `q^3` Hermitian points,
    /// `1 <= t <= q^2 - 1`.
    pub fn hermitian_x(q: u64, t: u64) -> Result<Self, LrcError> {
        let curve = CurveInstance::new(CurveKind::Hermitian { q })?;
        if t < 1 || t > q * q - 1 {
            return Err(LrcError::TOutOfRange {
                t,
                min: 1,
                max: q * q - 1,
            });
        }
        let monomials = along_first(t, q - 2, Axis::X);
        let params = LrcParams::new(t, q - 1, q + 1, q * q);
        Self::assemble(curve, Construction::HermitianX { t }, monomials, Axis::X, params)
    }

    pub fn normtrace_x(q: u64, u: u32, t: u64) -> Result<Self, LrcError> {
        let curve = CurveInstance::new(CurveKind::NormTrace { q, u })?;
        if t < 1 {
            return Err(LrcError::TOutOfRange {
                t,
                min: 1,
                max: u64::MAX,
            });
        }
        let fiber = q.pow(u - 1);
        let monomials = along_first(t, fiber - 2, Axis::X);
        let params = LrcParams::new(t, fiber - 1, curve.pole_order_y(), q.pow(u));
        Self::assemble(curve, Construction::NormTraceX { t }, monomials, Axis::X, params)
    }

    pub fn normtrace_y(q: u64, u: u32, t: u64) -> Result<Self, LrcError> {
        let curve = CurveInstance::new(CurveKind::NormTrace { q, u })?;
        if t < 1 {
            return Err(LrcError::TOutOfRange {
                t,
                min: 1,
                max: u64::MAX,
            });
        }
        let r = curve.pole_order_y() - 1;
        let monomials = along_first(t, r - 1, Axis::Y);
        let params = LrcParams::new(t, r, q.pow(u - 1), q.pow(u) - q.pow(u - 1));
        Self::assemble(curve, Construction::NormTraceY { t }, monomials, Axis::Y, params)
    }

    /// The two-partition Hermitian code. Its parameters are those of the
    /// y-projection code with `t = q - 1`, which contains it.
    pub fn lrc2(q: u64) -> Result<Self, LrcError> {
        let curve = CurveInstance::new(CurveKind::Hermitian { q })?;
        let monomials = along_first(q - 1, q - 2, Axis::Y);
        let params = LrcParams::new(q - 1, q, q, q * q - q);
        Self::assemble(curve, Construction::Lrc2, monomials, Axis::Y, params)
    }

    fn assemble(
        curve: CurveInstance,
        construction: Construction,
        monomials: Vec<Monomial>,
        primary: Axis,
        params: LrcParams,
    ) -> Result<Self, LrcError> {
        let field = curve.field().clone();
        // For the y-projection the points over trace-zero y are dropped; the
        // x-projection constructions use every point.
        let coordinates: Vec<usize> = match primary {
            Axis::X => (0..curve.points().len()).collect(),
            Axis::Y => {
                let part = curve.fiber_partition(Axis::Y);
                let mut c: Vec<usize> = part.fibers.concat();
                c.sort_unstable();
                c
            }
        };
        let code = evaluation_code(&curve, &monomials, &coordinates)?;

        let mut position = vec![usize::MAX; curve.points().len()];
        for (c, &pi) in coordinates.iter().enumerate() {
            position[pi] = c;
        }
        let axes: &[Axis] = match construction {
            Construction::Lrc2 => &[Axis::Y, Axis::X],
            _ => &[primary],
        };
        let partitions = axes
            .iter()
            .map(|&axis| {
                let fp = curve.fiber_partition(axis);
                let blocks: Vec<Vec<usize>> = fp
                    .fibers
                    .iter()
                    .map(|fib| {
                        fib.iter()
                            .map(|&pi| position[pi])
                            .filter(|&c| c != usize::MAX)
                            .collect::<Vec<_>>()
                    })
                    .filter(|b| !b.is_empty())
                    .collect();
                let along = coordinates
                    .iter()
                    .map(|&pi| axis.along(&curve.points()[pi]))
                    .collect();
                let deg = monomials
                    .iter()
                    .map(|m| match axis {
                        Axis::X => m.j,
                        Axis::Y => m.i,
                    })
                    .max()
                    .unwrap_or(0) as usize;
                LrcPartition::new(&field, axis, blocks, along, deg)
            })
            .collect();

        Ok(Self {
            code,
            curve,
            construction,
            coordinates,
            partitions,
            params,
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn curve(&self) -> &CurveInstance {
        &self.curve
    }

    pub fn field(&self) -> &FiniteField {
        self.code.field()
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn params(&self) -> LrcParams {
        self.params
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn k(&self) -> usize {
        self.code.k()
    }

    /// Curve point index behind each code coordinate.
    pub fn coordinates(&self) -> &[usize] {
        &self.coordinates
    }

    pub fn partitions(&self) -> &[LrcPartition] {
        &self.partitions
    }

    pub fn partition(&self, axis: Axis) -> Result<&LrcPartition, LrcError> {
        self.partitions
            .iter()
            .find(|p| p.axis == axis)
            .ok_or(LrcError::NoSuchPartition(axis))
    }

    /// Largest monomial exponent count times `r`, i.e. the number of
    /// spanning functions.
    pub fn spanning_count(&self) -> usize {
        self.code.generator().rows()
    }

    /// Recovers the symbol at `position` from its fiber partners in the
    /// `axis` partition. `word` marks erasures with `None`; every partner
    /// must be present. All partners are used: the first `deg + 1`
    /// interpolate and the rest must agree with the interpolant.
    pub fn recover_erasure(
        &self,
        word: &[Option<Elem>],
        position: usize,
        axis: Axis,
    ) -> Result<Elem, LrcError> {
        if position >= self.n() || word.len() != self.n() {
            return Err(LrcError::BadCoordinate(position));
        }
        let part = self.partition(axis)?;
        let plan = part.plans[position]
            .as_ref()
            .ok_or(LrcError::InterpolationUnavailable(axis))?;
        let f = self.field();
        let mut known = Vec::with_capacity(plan.partners.len());
        for &c in &plan.partners {
            match word[c] {
                Some(v) => known.push(v),
                None => {
                    return Err(LrcError::SecondErasure {
                        axis,
                        coordinate: position,
                    })
                }
            }
        }
        let base = &known[..plan.weights.len()];
        for (w, &actual) in plan.checks.iter().zip(&known[plan.weights.len()..]) {
            if matrix::dot(f, w, base) != actual {
                return Err(LrcError::InconsistentFiber(axis));
            }
        }
        Ok(matrix::dot(f, &plan.weights, base))
    }

    /// Like [`recover_erasure`](Self::recover_erasure), trying partitions in
    /// order and taking the first whose fiber has no other erasure.
    pub fn recover_any(
        &self,
        word: &[Option<Elem>],
        position: usize,
    ) -> Result<(Axis, Elem), LrcError> {
        for part in self.partitions.iter().filter(|p| p.interpolation_available) {
            match self.recover_erasure(word, position, part.axis) {
                Ok(v) => return Ok((part.axis, v)),
                Err(LrcError::SecondErasure { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(LrcError::NoLocalRepair(position))
    }

    /// The fiber parity test: true iff every check of the fiber's restricted
    /// dual vanishes on `symbols` (given in fiber order).
    pub fn parity_check(&self, axis: Axis, block: usize, symbols: &[Elem]) -> Result<bool, LrcError> {
        let part = self.partition(axis)?;
        if !part.interpolation_available {
            return Err(LrcError::InterpolationUnavailable(axis));
        }
        let checks = part.checks(block).ok_or(LrcError::BadFiber(block))?;
        if symbols.len() != part.fiber_size() {
            return Err(LrcError::SymbolCount {
                expected: part.fiber_size(),
                got: symbols.len(),
            });
        }
        let f = self.field();
        Ok(checks.iter_rows().all(|row| matrix::dot(f, row, symbols).is_zero()))
    }

    pub fn locality_table(&self) -> Vec<CoordinateLocality> {
        (0..self.n())
            .map(|c| {
                let sets: Vec<(Axis, Vec<usize>)> = self
                    .partitions
                    .iter()
                    .filter(|p| p.interpolation_available)
                    .map(|p| (p.axis, p.recovering_set(c)))
                    .collect();
                CoordinateLocality {
                    coordinate: c,
                    oracle_required: sets.is_empty(),
                    sets,
                }
            })
            .collect()
    }
}

/// Monomials `base^b * along^a` for `b <= base_max`, `a <= along_max`,
/// ordered by `(b, a)`. `axis` names the base variable.
fn along_first(base_max: u64, along_max: u64, axis: Axis) -> Vec<Monomial> {
    let mut out = Vec::new();
    for b in 0..=base_max {
        for a in 0..=along_max {
            out.push(match axis {
                Axis::X => Monomial::new(b, a),
                Axis::Y => Monomial::new(a, b),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_messages(q: u32, k: usize) -> impl Iterator<Item = Vec<Elem>> {
        (0..(q as u64).pow(k as u32)).map(move |mut idx| {
            (0..k)
                .map(|_| {
                    let d = (idx % q as u64) as u32;
                    idx /= q as u64;
                    Elem(d)
                })
                .collect()
        })
    }

    #[test]
    fn hermitian_x_small() {
        let c = LrcCode::hermitian_x(2, 1).unwrap();
        assert_eq!((c.n(), c.k()), (8, 2));
        assert_eq!(c.code().labels().unwrap(), &[Monomial::new(0, 0), Monomial::new(1, 0)]);
        let p = c.partition(Axis::X).unwrap();
        assert_eq!((p.r, p.deg_fiber, p.blocks.len()), (1, 0, 4));

        let c3 = LrcCode::hermitian_x(2, 3).unwrap();
        let labels: Vec<Monomial> = (0..4).map(|i| Monomial::new(i, 0)).collect();
        assert_eq!(c3.code().labels().unwrap(), labels.as_slice());
        assert_eq!(c3.k(), 4);

        let q3 = LrcCode::hermitian_x(3, 1).unwrap();
        assert_eq!(q3.n(), 27);
        assert_eq!(q3.partition(Axis::X).unwrap().r, 2);
        assert_eq!(
            q3.code().labels().unwrap(),
            &[
                Monomial::new(0, 0),
                Monomial::new(0, 1),
                Monomial::new(1, 0),
                Monomial::new(1, 1)
            ]
        );
        assert!(matches!(
            LrcCode::hermitian_x(2, 4),
            Err(LrcError::TOutOfRange { t: 4, .. })
        ));
        assert!(matches!(LrcCode::hermitian_x(2, 0), Err(LrcError::TOutOfRange { .. })));
    }

    #[test]
    fn normtrace_constructions() {
        let x = LrcCode::normtrace_x(2, 3, 1).unwrap();
        assert_eq!(x.n(), 32);
        assert_eq!(x.partition(Axis::X).unwrap().fiber_size(), 4);
        assert_eq!(x.params().r, 3);

        let y = LrcCode::normtrace_y(2, 2, 1).unwrap();
        assert_eq!(y.n(), 6);
        let py = y.partition(Axis::Y).unwrap();
        assert_eq!((py.r, py.fiber_size()), (2, 3));

        let y3 = LrcCode::normtrace_y(2, 3, 1).unwrap();
        assert_eq!(y3.n(), 28);
        let p = y3.partition(Axis::Y).unwrap();
        assert_eq!((p.r, p.blocks.len()), (6, 4));
    }

    #[test]
    fn normtrace_u2_matches_hermitian() {
        let a = LrcCode::hermitian_x(2, 1).unwrap();
        let b = LrcCode::normtrace_x(2, 2, 1).unwrap();
        assert_eq!(a.code().basis(), b.code().basis());
    }

    #[test]
    fn lrc2_partitions() {
        let c = LrcCode::lrc2(2).unwrap();
        assert_eq!((c.n(), c.k()), (6, 2));
        assert_eq!(c.code().labels().unwrap(), &[Monomial::new(0, 0), Monomial::new(0, 1)]);
        let y = c.partition(Axis::Y).unwrap();
        assert_eq!((y.blocks.len(), y.fiber_size()), (2, 3));
        assert!(y.interpolation_available);
        let x = c.partition(Axis::X).unwrap();
        assert_eq!(x.fiber_size(), 2);
        assert!(!x.interpolation_available);
        assert!(c.locality_table().iter().all(|l| l.sets.len() == 1));

        let c3 = LrcCode::lrc2(3).unwrap();
        assert_eq!((c3.n(), c3.k()), (24, 6));
        assert_eq!(c3.partition(Axis::Y).unwrap().fiber_size(), 4);
        assert_eq!(c3.partition(Axis::X).unwrap().fiber_size(), 3);
    }

    #[test]
    fn wrong_curve_rejected() {
        let err = LrcCode::build(CurveKind::NormTrace { q: 2, u: 3 }, Construction::Lrc2);
        assert!(matches!(err, Err(LrcError::WrongCurve { .. })));
    }

    #[test]
    fn hermitian_x_repair_is_partner_symbol() {
        // a + b x is constant on each x-fiber
        let c = LrcCode::hermitian_x(2, 1).unwrap();
        let f = c.field().clone();
        for a in f.elements() {
            for b in f.elements() {
                let cw = c.code().combine(&[a, b]);
                for pos in 0..8 {
                    let mut w: Vec<Option<Elem>> = cw.iter().copied().map(Some).collect();
                    w[pos] = None;
                    let x = c.curve().points()[c.coordinates()[pos]].x;
                    let v = c.recover_erasure(&w, pos, Axis::X).unwrap();
                    assert_eq!(v, f.add(a, f.mul(b, x)));
                }
            }
        }
    }

    #[test]
    fn lrc2_y_repair_all_messages() {
        let c = LrcCode::lrc2(2).unwrap();
        for msg in all_messages(4, c.k()) {
            let cw = c.code().encode(&msg).unwrap();
            for pos in 0..c.n() {
                let mut w: Vec<Option<Elem>> = cw.iter().copied().map(Some).collect();
                w[pos] = None;
                assert_eq!(c.recover_erasure(&w, pos, Axis::Y).unwrap(), cw[pos]);
                assert_eq!(
                    c.recover_erasure(&w, pos, Axis::X),
                    Err(LrcError::InterpolationUnavailable(Axis::X))
                );
            }
        }
    }

    #[test]
    fn repair_errors() {
        let c = LrcCode::normtrace_y(2, 2, 1).unwrap();
        let cw = c.code().encode(&[Elem(1), Elem(2), Elem(3), Elem(1)]).unwrap();
        let block = &c.partition(Axis::Y).unwrap().blocks[0];
        let mut w: Vec<Option<Elem>> = cw.iter().copied().map(Some).collect();
        w[block[0]] = None;
        w[block[1]] = None;
        assert!(matches!(
            c.recover_erasure(&w, block[0], Axis::Y),
            Err(LrcError::SecondErasure { .. })
        ));
        assert_eq!(c.recover_any(&w, block[0]), Err(LrcError::NoLocalRepair(block[0])));
        assert_eq!(
            c.recover_erasure(&w, 0, Axis::X).unwrap_err(),
            LrcError::NoSuchPartition(Axis::X)
        );
    }

    #[test]
    fn parity_check_single_vector() {
        let c = LrcCode::hermitian_x(2, 1).unwrap();
        let p = c.partition(Axis::X).unwrap();
        let checks = p.checks(0).unwrap();
        assert_eq!(checks.rows(), 1);
        // (1, -1) in characteristic 2
        assert_eq!(checks.row(0), &[Elem::ONE, Elem::ONE]);
        assert!(c.parity_check(Axis::X, 0, &[Elem(3), Elem(3)]).unwrap());
        assert!(!c.parity_check(Axis::X, 0, &[Elem(3), Elem(2)]).unwrap());
        assert!(matches!(
            c.parity_check(Axis::X, 0, &[Elem(3)]),
            Err(LrcError::SymbolCount { .. })
        ));
        let l = LrcCode::lrc2(2).unwrap();
        assert_eq!(
            l.parity_check(Axis::X, 0, &[Elem(0), Elem(0)]),
            Err(LrcError::InterpolationUnavailable(Axis::X))
        );
    }

    #[test]
    fn locality_table_shapes() {
        let c = LrcCode::hermitian_x(3, 1).unwrap();
        assert!(c.locality_table().iter().all(|l| l.sets[0].1.len() == 2));
        let y = LrcCode::normtrace_y(2, 3, 1).unwrap();
        assert!(y.locality_table().iter().all(|l| l.sets[0].1.len() == 6 && !l.oracle_required));
    }
}
