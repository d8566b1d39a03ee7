//! Rational affine points of the Hermitian and Norm-Trace curves over
//! GF(q^u), their coordinate-projection fibers, and pole orders at the single
//! point at infinity.
//!
//! The Norm-Trace curve is `N(x) = Tr(y)` with norm and trace taken from
//! GF(q^u) down to GF(q); the Hermitian curve `x^(q+1) = y^q + y` is the
//! `u = 2` case, kept as its own kind for reporting.

use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{prime_power, Elem, FiniteField, GfError};

/// Largest number of affine points a curve may have.
pub const MAX_POINTS: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("u must be at least 2, got {0}")]
    DegreeTooSmall(u32),
    #[error("curve would have {0} points, above the cap of {MAX_POINTS}")]
    TooLarge(u128),
    #[error(transparent)]
    Field(#[from] GfError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CurveKind {
    Hermitian { q: u64 },
    #[serde(rename = "normtrace")]
    NormTrace { q: u64, u: u32 },
}

impl CurveKind {
    pub fn q(self) -> u64 {
        match self {
            CurveKind::Hermitian { q } | CurveKind::NormTrace { q, .. } => q,
        }
    }

    pub fn u(self) -> u32 {
        match self {
            CurveKind::Hermitian { .. } => 2,
            CurveKind::NormTrace { u, .. } => u,
        }
    }
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveKind::Hermitian { q } => write!(f, "Hermitian(q={q})"),
            CurveKind::NormTrace { q, u } => write!(f, "NormTrace(q={q}, u={u})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffinePoint {
    pub x: Elem,
    pub y: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    /// The coordinate that stays constant on a fiber.
    pub fn base(self, p: &AffinePoint) -> Elem {
        match self {
            Axis::X => p.x,
            Axis::Y => p.y,
        }
    }

    /// The coordinate that varies inside a fiber.
    pub fn along(self, p: &AffinePoint) -> Elem {
        match self {
            Axis::X => p.y,
            Axis::Y => p.x,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
        })
    }
}

impl std::str::FromStr for Axis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "x" | "X" => Ok(Axis::X),
            "y" | "Y" => Ok(Axis::Y),
            _ => Err(format!("unknown axis {s:?}")),
        }
    }
}

/// Fibers of one coordinate projection, as index sets into the curve's
/// point list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberPartition {
    pub axis: Axis,
    pub base_values: Vec<Elem>,
    pub fibers: Vec<Vec<usize>>,
    pub excluded_points: Vec<usize>,
}

impl FiberPartition {
    pub fn fiber_size(&self) -> usize {
        self.fibers.first().map_or(0, Vec::len)
    }
}

#[derive(Clone, Debug)]
pub struct CurveInstance {
    kind: CurveKind,
    field: FiniteField,
    points: Vec<AffinePoint>,
    genus: u64,
    pole_order_x: u64,
    pole_order_y: u64,
    // membership of each field element in the trace-zero set M
    trace_zero: Vec<bool>,
}

/// `1 + q + ... + q^(u-1)`.
pub fn norm_exponent(q: u64, u: u32) -> u64 {
    (0..u).map(|i| q.pow(i)).sum()
}

pub fn build_curve(kind: CurveKind) -> Result<CurveInstance, CurveError> {
    CurveInstance::new(kind)
}

impl CurveInstance {
    pub fn new(kind: CurveKind) -> Result<Self, CurveError> {
        let (q, u) = (kind.q(), kind.u());
        let (p, f) = prime_power(q).ok_or(CurveError::NotPrimePower(q))?;
        if u < 2 {
            return Err(CurveError::DegreeTooSmall(u));
        }
        let expected = (q as u128).pow(2 * u - 1);
        if expected > MAX_POINTS as u128 {
            return Err(CurveError::TooLarge(expected));
        }
        let field = FiniteField::new(p, f * u)?;

        let norms: Vec<Elem> = field
            .elements()
            .map(|x| field.norm_in_place(x, q))
            .collect::<Result<_, _>>()?;
        let traces: Vec<Elem> = field
            .elements()
            .map(|y| field.trace_in_place(y, q))
            .collect::<Result<_, _>>()?;

        let mut points = Vec::with_capacity(expected as usize);
        for x in field.elements() {
            for y in field.elements() {
                if norms[x.index()] == traces[y.index()] {
                    points.push(AffinePoint { x, y });
                }
            }
        }

        let qu1 = q.pow(u - 1);
        let h = norm_exponent(q, u);
        Ok(Self {
            kind,
            genus: (qu1 - 1) * (h - 1) / 2,
            pole_order_x: qu1,
            pole_order_y: h,
            trace_zero: traces.iter().map(|t| t.is_zero()).collect(),
            field,
            points,
        })
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    pub fn q(&self) -> u64 {
        self.kind.q()
    }

    pub fn u(&self) -> u32 {
        self.kind.u()
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn points(&self) -> &[AffinePoint] {
        &self.points
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn pole_order_x(&self) -> u64 {
        self.pole_order_x
    }

    pub fn pole_order_y(&self) -> u64 {
        self.pole_order_y
    }

    /// Pole order of `x^i y^j` at the point at infinity.
    pub fn pole_order(&self, i: u64, j: u64) -> u64 {
        i * self.pole_order_x + j * self.pole_order_y
    }

    /// First gonality over GF(q^u): the degree `q^(u-1)` of the x-projection,
    /// which no map of lower degree can beat on this many points.
    pub fn gonality_first(&self) -> u64 {
        self.q().pow(self.u() - 1)
    }

    /// Whether `a` lies in `M = {a : Tr(a) = 0}`.
    pub fn is_trace_zero(&self, a: Elem) -> bool {
        self.trace_zero[a.index()]
    }

    pub fn trace_zero_set(&self) -> Vec<Elem> {
        self.field.elements().filter(|&a| self.is_trace_zero(a)).collect()
    }

    /// Fibers of the projection onto `axis`. For the y-projection the base
    /// values exclude the trace-zero set and the points over it are listed as
    /// excluded.
    pub fn fiber_partition(&self, axis: Axis) -> FiberPartition {
        let base_values: Vec<Elem> = match axis {
            Axis::X => self.field.elements().collect(),
            Axis::Y => self
                .field
                .elements()
                .filter(|&a| !self.is_trace_zero(a))
                .collect(),
        };
        let mut slot = vec![usize::MAX; self.field.order() as usize];
        for (i, b) in base_values.iter().enumerate() {
            slot[b.index()] = i;
        }
        let mut fibers = vec![Vec::new(); base_values.len()];
        let mut excluded_points = Vec::new();
        for (idx, p) in self.points.iter().enumerate() {
            match slot[axis.base(p).index()] {
                usize::MAX => excluded_points.push(idx),
                s => fibers[s].push(idx),
            }
        }
        for fiber in &mut fibers {
            fiber.sort_by_key(|&i| axis.along(&self.points[i]));
        }
        FiberPartition {
            axis,
            base_values,
            fibers,
            excluded_points,
        }
    }

    /// Writes `x_index,y_index` lines, one per point, with a header.
    pub fn write_points_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "x_index,y_index")?;
        for p in &self.points {
            writeln!(out, "{},{}", p.x, p.y)?;
        }
        Ok(())
    }

    /// Checks the defining equation at a point.
    pub fn contains(&self, p: &AffinePoint) -> bool {
        let f = &self.field;
        let lhs = f.pow(p.x, self.pole_order_y);
        let mut rhs = Elem::ZERO;
        let mut conj = p.y;
        for _ in 0..self.u() {
            rhs = f.add(rhs, conj);
            conj = f.pow(conj, self.q());
        }
        lhs == rhs
    }
}
