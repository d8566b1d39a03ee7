//! Closed-form distance, dimension and weight-hierarchy bounds, and an audit
//! that lines them up against oracle values.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::{Axis, CurveInstance, CurveKind};
use crate::lrc::{Construction, LrcCode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("need 1 <= r <= k <= n, got n={n} k={k} r={r}")]
    SingletonParams { n: u64, k: u64, r: u64 },
    #[error("gonality gamma_{0} not supplied")]
    MissingGonality(usize),
    #[error("gonality sequence must be positive and non-decreasing: {0}")]
    BadGonality(String),
    #[error("t = {t} outside {min}..={max}")]
    TWindow { t: u64, min: u64, max: u64 },
    #[error("v must be at least 2 for the weight-hierarchy bound, got {0}")]
    BadV(usize),
}

fn pow(q: u64, e: u32) -> i64 {
    q.pow(e) as i64
}

/// `1 + q + ... + q^(u-1)`.
fn geometric(q: u64, u: u32) -> i64 {
    (0..u).map(|e| pow(q, e)).sum()
}

/// `n - k - ceil(k/r) + 2`, an upper bound on `d` for locality `r`.
pub fn lrc_singleton_bound(n: u64, k: u64, r: u64) -> Result<i64, BoundsError> {
    if r < 1 || r > k || k > n {
        return Err(BoundsError::SingletonParams { n, k, r });
    }
    Ok(n as i64 - k as i64 - k.div_ceil(r) as i64 + 2)
}

/// `n - t l (r+1) - (r-1) h`. May be zero or negative.
pub fn designed_distance(n: u64, t: u64, ell: u64, r: u64, h: u64) -> i64 {
    n as i64 - (t * ell * (r + 1)) as i64 - (r as i64 - 1) * h as i64
}

/// Gonalities `gamma_v` of a curve. `gamma_1` comes from the curve; larger
/// indices are supplied by the caller.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GonalityInput {
    pub gamma: BTreeMap<usize, u64>,
}

impl GonalityInput {
    pub fn for_curve(curve: &CurveInstance) -> Self {
        let mut gamma = BTreeMap::new();
        gamma.insert(1, curve.gonality_first());
        Self { gamma }
    }

    /// Adds user values and validates the whole sequence.
    pub fn with(mut self, extra: impl IntoIterator<Item = (usize, u64)>) -> Result<Self, BoundsError> {
        for (v, g) in extra {
            self.gamma.insert(v, g);
        }
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), BoundsError> {
        let mut prev = 0;
        for (&v, &g) in &self.gamma {
            if v == 0 || g == 0 || g < prev {
                return Err(BoundsError::BadGonality(format!("gamma_{v} = {g}")));
            }
            prev = g;
        }
        Ok(())
    }

    pub fn get(&self, v: usize) -> Option<u64> {
        self.gamma.get(&v).copied()
    }

    /// Parses `"2:5,3:7"`.
    pub fn parse_extra(text: &str) -> Result<Vec<(usize, u64)>, BoundsError> {
        text.split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|item| {
                let bad = || BoundsError::BadGonality(item.to_string());
                let (v, g) = item.split_once(':').ok_or_else(bad)?;
                Ok((
                    v.trim().parse().map_err(|_| bad())?,
                    g.trim().parse().map_err(|_| bad())?,
                ))
            })
            .collect()
    }
}

/// Designed distance plus `gamma_{v-1}`: a lower bound on `d_v`.
pub fn ghw_bound(
    n: u64,
    t: u64,
    ell: u64,
    r: u64,
    h: u64,
    v: usize,
    gonality: &GonalityInput,
) -> Result<i64, BoundsError> {
    if v < 2 {
        return Err(BoundsError::BadV(v));
    }
    let g = gonality.get(v - 1).ok_or(BoundsError::MissingGonality(v - 1))?;
    Ok(designed_distance(n, t, ell, r, h) + g as i64)
}

/// The stand-alone `d_2` formulas for the x- and y-projection codes on the
/// Norm-Trace curve, computed exactly as stated.
pub fn remark_d2_bounds(q: u64, u: u32, t: u64, which: Axis) -> i64 {
    let t = t as i64;
    let big = pow(q, 2 * u - 1);
    let f = pow(q, u - 1);
    match which {
        Axis::X => big + f - t * f - (f - 1) * geometric(q, u),
        Axis::Y => big - (t - 1) * f - (1 + f) * (geometric(q, u) - 1),
    }
}

/// `n - t q^(u-1) - (q^(u-1) - 1) h` for the x-projection code.
pub fn x_projection_distance(q: u64, u: u32, t: u64) -> i64 {
    let f = pow(q, u - 1);
    let h = geometric(q, u);
    pow(q, 2 * u - 1) - t as i64 * f - (f - 1) * h
}

/// `n - t q^(u-1) - r - q^(u-1)(r - 1)` with `n = q^(2u-1) - q^(u-1)` and
/// `r = q + ... + q^(u-1)`, for the y-projection code.
pub fn y_projection_distance(q: u64, u: u32, t: u64) -> i64 {
    let f = pow(q, u - 1);
    let r = geometric(q, u) - 1;
    let n = pow(q, 2 * u - 1) - f;
    n - t as i64 * f - r - f * (r - 1)
}

/// `n + 2g - 2 - m` on the Hermitian curve: `q^3 + q(q-1) - 2 - m`.
pub fn hermitian_m_perp(q: u64, m: i64) -> i64 {
    pow(q, 3) + (q * (q - 1)) as i64 - 2 - m
}

/// Distance of the dual one-point Hermitian code with parameter `m_perp`
/// in the first and fourth phases. `None` outside them.
pub fn hermitian_phase_distance(q: u64, m_perp: i64) -> Option<i64> {
    let qi = q as i64;
    let n = pow(q, 3);
    let top = n + qi * (qi - 1) - 2;
    if (0..=qi * qi - 2).contains(&m_perp) {
        let (a, b) = (m_perp / qi, m_perp % qi);
        if b > a || a > qi - 1 || b == qi - 1 {
            return None;
        }
        return Some(if a > b { a + 1 } else { a + 2 });
    }
    if (n - 1..=top).contains(&m_perp) {
        let s = top - m_perp;
        let (a, b) = (s / qi, s % qi);
        if b <= a && a <= qi - 2 {
            return Some(n - s);
        }
    }
    None
}

/// `q^2 - t + 1` for `q^2 - q + 1 <= t <= q^2 - 1`.
pub fn improved_hermitian_x_bound(q: u64, t: u64) -> Result<i64, BoundsError> {
    let (min, max) = (q * q - q + 1, q * q - 1);
    if t < min || t > max {
        return Err(BoundsError::TWindow { t, min, max });
    }
    Ok((q * q) as i64 - t as i64 + 1)
}

/// Values of `t` in `1..q^2` where "`q^2-t+1` beats the designed distance"
/// and "`t > q^2 - q`" disagree.
pub fn improvement_claim_failures(q: u64) -> Vec<u64> {
    (1..q * q)
        .filter(|&t| {
            let beats = (q * q) as i64 - t as i64 + 1 > designed_distance(q.pow(3), t, 1, q - 1, q + 1);
            beats != (t > q * q - q)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lrc2Chain {
    pub m: i64,
    pub m_perp: i64,
    pub d_her: i64,
    pub d_lrc: i64,
}

impl Lrc2Chain {
    fn from_m(q: u64, m: i64) -> Self {
        let g = (q * (q - 1) / 2) as i64;
        let m_perp = hermitian_m_perp(q, m);
        let d_her = m_perp - 2 * g + 2;
        Self {
            m,
            m_perp,
            d_her,
            d_lrc: d_her - q as i64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lrc2Bounds {
    /// `(q+1)(q^2-3q+3) = q^3 - 2q^2 + 3`.
    pub btv_bound: i64,
    /// `q^3 + q + 2` as claimed.
    pub claimed_bound: i64,
    /// Chain from the largest pole order of the spanning monomials.
    pub recomputed: Lrc2Chain,
    /// Same chain from `m = q(q-1) + (q+1)(q-2)`.
    pub stated_m: Lrc2Chain,
    /// The dual parameter quoted for the fourth phase, `q^3 - q^2 + q`.
    pub quoted_m_perp: i64,
}

pub fn lrc2_bounds(q: u64) -> Lrc2Bounds {
    let qi = q as i64;
    let literal = (0..=q - 2)
        .flat_map(|i| (0..q).map(move |j| (q * i + (q + 1) * j) as i64))
        .max()
        .unwrap_or(0);
    Lrc2Bounds {
        btv_bound: (qi + 1) * (qi * qi - 3 * qi + 3),
        claimed_bound: qi.pow(3) + qi + 2,
        recomputed: Lrc2Chain::from_m(q, literal),
        stated_m: Lrc2Chain::from_m(q, qi * (qi - 1) + (qi + 1) * (qi - 2)),
        quoted_m_perp: qi.pow(3) - qi * qi + qi,
    }
}

// ---------------------------------------------------------------------------
// audit

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
    /// A claimed exact value.
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    HoldsWithEquality,
    Violated,
    Untested,
    Vacuous,
    Matches,
    Differs,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "holds",
            Verdict::HoldsWithEquality => "holds-with-equality",
            Verdict::Violated => "violated",
            Verdict::Untested => "untested",
            Verdict::Vacuous => "vacuous",
            Verdict::Matches => "matches",
            Verdict::Differs => "differs",
        };
        f.write_str(s)
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
            BoundKind::Exact => "exact",
        })
    }
}

/// A measured quantity. `exact == false` marks a sampled upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Measured {
    pub value: i64,
    pub exact: bool,
}

impl Measured {
    pub fn exact(value: i64) -> Self {
        Self { value, exact: true }
    }

    pub fn upper(value: i64) -> Self {
        Self { value, exact: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub name: String,
    pub source: String,
    pub kind: BoundKind,
    pub value: i64,
    pub oracle: Option<Measured>,
    pub verdict: Verdict,
    pub note: String,
}

impl AuditEntry {
    pub fn new(name: &str, source: &str, kind: BoundKind, value: i64, oracle: Option<Measured>) -> Self {
        let verdict = judge(kind, value, oracle);
        Self {
            name: name.to_string(),
            source: source.to_string(),
            kind,
            value,
            oracle,
            verdict,
            note: String::new(),
        }
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

/// Verdict of a bound against a measurement. Sampled values are upper
/// bounds on the truth, so they can refute a lower bound or confirm an upper
/// bound but never confirm a lower bound.
pub fn judge(kind: BoundKind, value: i64, oracle: Option<Measured>) -> Verdict {
    if kind == BoundKind::Lower && value < 1 {
        return Verdict::Vacuous;
    }
    let Some(m) = oracle else {
        return Verdict::Untested;
    };
    match kind {
        BoundKind::Lower if !m.exact => {
            if value > m.value {
                Verdict::Violated
            } else {
                Verdict::Untested
            }
        }
        BoundKind::Lower | BoundKind::Upper => {
            let ok = if kind == BoundKind::Lower {
                value <= m.value
            } else {
                m.value <= value
            };
            match (ok, value == m.value && m.exact) {
                (false, _) => Verdict::Violated,
                (true, true) => Verdict::HoldsWithEquality,
                (true, false) => Verdict::Holds,
            }
        }
        BoundKind::Exact if !m.exact => Verdict::Untested,
        BoundKind::Exact if value == m.value => Verdict::Matches,
        BoundKind::Exact => Verdict::Differs,
    }
}

/// Oracle results available to the audit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleFacts {
    pub d: Option<Measured>,
    /// Exact `d_v` by `v`.
    pub ghw: BTreeMap<usize, i64>,
    /// Exact per-coordinate locality; `None` for an unrecoverable coordinate.
    pub locality: Option<Vec<Option<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundAuditReport {
    pub code_id: String,
    pub entries: Vec<AuditEntry>,
}

impl BoundAuditReport {
    pub fn entry(&self, name: &str) -> Option<&AuditEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "name,kind,value,oracle,verdict,source,note")?;
        for e in &self.entries {
            let oracle = match e.oracle {
                None => String::new(),
                Some(m) if m.exact => m.value.to_string(),
                Some(m) => format!("<={}", m.value),
            };
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                e.name,
                e.kind,
                e.value,
                oracle,
                e.verdict,
                csv_field(&e.source),
                csv_field(&e.note)
            )?;
        }
        Ok(())
    }

    pub fn csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("write to Vec");
        String::from_utf8(buf).expect("ascii")
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Evaluates every applicable bound for `lrc` and compares it with `facts`.
pub fn audit(lrc: &LrcCode, facts: &OracleFacts, gonality: &GonalityInput) -> BoundAuditReport {
    use BoundKind::*;
    let q = lrc.curve().q();
    let u = lrc.curve().u();
    let p = lrc.params();
    let n = lrc.n() as u64;
    let k = lrc.k() as u64;
    let construction = lrc.construction();
    let mut e = Vec::new();

    let (n_formula, n_source) = match construction {
        Construction::HermitianX { .. } => (pow(q, 3), "q^3"),
        Construction::NormTraceX { .. } => (pow(q, 2 * u - 1), "q^(2u-1)"),
        Construction::NormTraceY { .. } => (pow(q, 2 * u - 1) - pow(q, u - 1), "q^(2u-1) - q^(u-1)"),
        Construction::Lrc2 => ((q * q - 1) as i64 * q as i64, "(q^2-1)q"),
    };
    e.push(AuditEntry::new("length", n_source, Exact, n_formula, Some(Measured::exact(n as i64))));

    let rank = Some(Measured::exact(k as i64));
    let (k_formula, k_source) = match construction {
        Construction::HermitianX { t } => ((t + 1) * (q - 1), "(t+1)(q-1)"),
        Construction::NormTraceX { t } => ((t + 1) * (q.pow(u - 1) - 1), "(t+1)(q^(u-1)-1)"),
        Construction::NormTraceY { t } => ((t + 1) * p.r, "(t+1)(q+...+q^(u-1))"),
        Construction::Lrc2 => ((q - 1) * q, "(q-1)q"),
    };
    e.push(AuditEntry::new("dimension", k_source, Exact, k_formula as i64, rank));
    if let Construction::HermitianX { t } = construction {
        let claimed = (t as i64 - 1) * (q as i64 - 1);
        e.push(
            AuditEntry::new("dimension_alt", "(t-1)(q-1)", Exact, claimed, rank)
                .note("second dimension claim for the Hermitian x-projection code"),
        );
    }
    e.push(AuditEntry::new("dimension_cap", "k <= r m", Upper, (p.r * p.m) as i64, rank));

    match lrc_singleton_bound(n, k, p.r) {
        Ok(v) => e.push(AuditEntry::new("lrc_singleton", "n - k - ceil(k/r) + 2", Upper, v, facts.d)),
        Err(err) => e.push(
            AuditEntry {
                verdict: Verdict::Untested,
                ..AuditEntry::new("lrc_singleton", "n - k - ceil(k/r) + 2", Upper, 0, None)
            }
            .note(format!("not applicable: {err}")),
        ),
    }
    let designed = designed_distance(n, p.t, p.ell, p.r, p.h);
    e.push(AuditEntry::new(
        "designed_distance",
        "n - t l (r+1) - (r-1) h",
        Lower,
        designed,
        facts.d,
    ));

    match construction {
        Construction::HermitianX { t } | Construction::NormTraceX { t } => {
            e.push(AuditEntry::new(
                "x_projection_distance",
                "n - t q^(u-1) - (q^(u-1)-1) h",
                Lower,
                x_projection_distance(q, u, t),
                facts.d,
            ));
        }
        Construction::NormTraceY { t } => {
            e.push(AuditEntry::new(
                "y_projection_distance",
                "n - t q^(u-1) - r - q^(u-1)(r-1)",
                Lower,
                y_projection_distance(q, u, t),
                facts.d,
            ));
        }
        Construction::Lrc2 => {}
    }

    if let Construction::HermitianX { t } = construction {
        if let Ok(v) = improved_hermitian_x_bound(q, t) {
            e.push(AuditEntry::new("improved_x_distance", "q^2 - t + 1", Lower, v, facts.d));
        }
        let failures = improvement_claim_failures(q);
        e.push(
            AuditEntry::new(
                "improvement_window",
                "q^2-t+1 > n-tq-(q-2)(q+1) iff t > q^2-q",
                Exact,
                0,
                Some(Measured::exact(failures.len() as i64)),
            )
            .note(if failures.is_empty() {
                "equivalence holds for every t".to_string()
            } else {
                format!("equivalence fails at t = {failures:?}")
            }),
        );
    }

    if let Construction::Lrc2 = construction {
        let b = lrc2_bounds(q);
        e.push(AuditEntry::new("lrc2_btv", "(q+1)(q^2-3q+3)", Lower, b.btv_bound, facts.d));
        e.push(AuditEntry::new("lrc2_claimed", "q^3 + q + 2", Lower, b.claimed_bound, facts.d));
        let chain = |c: &Lrc2Chain| {
            format!("m={} m_perp={} d_her={} d>={}", c.m, c.m_perp, c.d_her, c.d_lrc)
        };
        e.push(
            AuditEntry::new(
                "lrc2_chain",
                "(n + 2g - 2 - m) - 2g + 2 - q, m = max pole order of the spanning monomials",
                Lower,
                b.recomputed.d_lrc,
                facts.d,
            )
            .note(chain(&b.recomputed)),
        );
        e.push(
            AuditEntry::new(
                "lrc2_chain_stated_m",
                "same chain with m = q(q-1) + (q+1)(q-2)",
                Lower,
                b.stated_m.d_lrc,
                facts.d,
            )
            .note(chain(&b.stated_m)),
        );
        let n_her = pow(q, 3);
        let in_phase4 = b.quoted_m_perp >= n_her - 1;
        e.push(
            AuditEntry::new(
                "lrc2_phase4_claim",
                "quoted m_perp = q^3 - q^2 + q lies in n-1..=n+2g-2",
                Exact,
                1,
                Some(Measured::exact(in_phase4 as i64)),
            )
            .note(format!("m_perp {} vs phase start {}", b.quoted_m_perp, n_her - 1)),
        );
    }

    if facts.d.is_some_and(|m| m.exact) || !facts.ghw.is_empty() {
        for v in 2..=lrc.k() {
            let Ok(bound) = ghw_bound(n, p.t, p.ell, p.r, p.h, v, gonality) else {
                continue;
            };
            let oracle = facts.ghw.get(&v).map(|&x| Measured::exact(x));
            e.push(AuditEntry::new(
                &format!("ghw_d{v}"),
                &format!("n - t l (r+1) - (r-1) h + gamma_{}", v - 1),
                Lower,
                bound,
                oracle,
            ));
        }
    }
    let remark_axis = match construction {
        Construction::HermitianX { .. } | Construction::NormTraceX { .. } => Some(Axis::X),
        Construction::NormTraceY { .. } => Some(Axis::Y),
        Construction::Lrc2 => None,
    };
    if let (Some(axis), Some(t)) = (remark_axis, construction.t()) {
        let source = match axis {
            Axis::X => "q^(2u-1) + q^(u-1) - t q^(u-1) - (q^(u-1)-1)(1+q+...+q^(u-1))",
            Axis::Y => "q^(2u-1) - (t-1) q^(u-1) - (1+q^(u-1))(q+...+q^(u-1))",
        };
        let oracle = facts.ghw.get(&2).map(|&x| Measured::exact(x));
        e.push(AuditEntry::new("remark_d2", source, Lower, remark_d2_bounds(q, u, t, axis), oracle));
    }

    if let Some(loc) = &facts.locality {
        for part in lrc.partitions() {
            let mut worst: Option<i64> = Some(0);
            let (mut below, mut total) = (0, 0);
            for block in &part.blocks {
                for &c in block {
                    total += 1;
                    if loc[c].is_some_and(|r| r < part.r) {
                        below += 1;
                    }
                    worst = match (worst, loc[c]) {
                        (Some(w), Some(r)) => Some(w.max(r as i64)),
                        _ => None,
                    };
                }
            }
            let name = format!("locality_{}", part.axis.to_string().to_lowercase());
            let mut entry = AuditEntry::new(
                &name,
                "fiber size - 1",
                Exact,
                part.r as i64,
                worst.map(Measured::exact),
            );
            if !part.interpolation_available {
                entry = entry.note(
                    "fibers carry no redundancy for the spanning functions; value is nominal only",
                );
            } else if below > 0 {
                entry = entry.note(format!("{below} of {total} coordinates have r_i < r"));
            }
            e.push(entry);
        }
    }

    BoundAuditReport {
        code_id: describe(lrc),
        entries: e,
    }
}

pub fn describe(lrc: &LrcCode) -> String {
    let curve = match lrc.curve().kind() {
        CurveKind::Hermitian { q } => format!("hermitian(q={q})"),
        CurveKind::NormTrace { q, u } => format!("normtrace(q={q},u={u})"),
    };
    format!("{curve}/{}", lrc.construction())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_examples() {
        assert_eq!(lrc_singleton_bound(8, 2, 1), Ok(6));
        assert_eq!(lrc_singleton_bound(27, 4, 2), Ok(23));
        assert_eq!(lrc_singleton_bound(10, 4, 4), Ok(7));
        assert!(lrc_singleton_bound(8, 2, 3).is_err());
        assert!(lrc_singleton_bound(8, 2, 0).is_err());
    }

    #[test]
    fn designed_examples() {
        assert_eq!(designed_distance(27, 1, 1, 2, 4), 20);
        assert_eq!(designed_distance(8, 1, 1, 1, 3), 6);
        assert_eq!(designed_distance(32, 1, 1, 3, 7), 14);
        // matches n - tq - (q-2)(q+1) for every Hermitian instance
        for q in [2u64, 3, 4, 5] {
            for t in 1..q * q {
                let alt = (q.pow(3) - t * q) as i64 - ((q - 2) * (q + 1)) as i64;
                assert_eq!(designed_distance(q.pow(3), t, 1, q - 1, q + 1), alt);
            }
        }
    }

    #[test]
    fn ghw_examples() {
        let g = GonalityInput {
            gamma: [(1, 2)].into(),
        };
        assert_eq!(ghw_bound(8, 1, 1, 1, 3, 2, &g), Ok(8));
        let g4 = GonalityInput {
            gamma: [(1, 4)].into(),
        };
        assert_eq!(ghw_bound(32, 1, 1, 3, 7, 2, &g4), Ok(18));
        assert_eq!(ghw_bound(32, 1, 1, 3, 7, 3, &g4), Err(BoundsError::MissingGonality(2)));
        assert_eq!(ghw_bound(32, 1, 1, 3, 7, 1, &g4), Err(BoundsError::BadV(1)));
    }

    #[test]
    fn gonality_validation() {
        let g = GonalityInput {
            gamma: [(1, 4)].into(),
        };
        assert!(g.clone().with([(2, 6), (3, 7)]).is_ok());
        assert!(g.clone().with([(2, 3)]).is_err());
        assert!(g.with([(2, 0)]).is_err());
        assert_eq!(GonalityInput::parse_extra("2:5, 3:7").unwrap(), vec![(2, 5), (3, 7)]);
        assert!(GonalityInput::parse_extra("2-5").is_err());
    }

    #[test]
    fn standalone_d2_examples() {
        // 8 + 2 - 2 - 1*3
        assert_eq!(remark_d2_bounds(2, 2, 1, Axis::X), 5);
        assert_eq!(remark_d2_bounds(2, 2, 1, Axis::Y), 2);
        assert_eq!(remark_d2_bounds(2, 3, 1, Axis::X), 11);
    }

    #[test]
    fn projection_distance_examples() {
        assert_eq!(x_projection_distance(2, 3, 1), 7);
        assert_eq!(x_projection_distance(2, 2, 1), 3);
        // n=6, r=2: 6 - 2 - 2 - 2 = 0
        assert_eq!(y_projection_distance(2, 2, 1), 0);
    }

    #[test]
    fn m_perp_and_phases() {
        assert_eq!(hermitian_m_perp(2, 3), 5);
        assert_eq!(hermitian_m_perp(3, 0), 31);
        for m in 0..40 {
            assert_eq!(hermitian_m_perp(3, hermitian_m_perp(3, m)), m);
        }
        assert_eq!(hermitian_phase_distance(4, 9), Some(3));
        assert_eq!(hermitian_phase_distance(3, 31), Some(27));
        assert_eq!(hermitian_phase_distance(3, 4), Some(3));
        // b > a
        assert_eq!(hermitian_phase_distance(3, 2), None);
        // between the phases
        assert_eq!(hermitian_phase_distance(3, 15), None);
        assert_eq!(hermitian_phase_distance(2, 0), Some(2));
        assert_eq!(hermitian_phase_distance(2, 7), None);
    }

    #[test]
    fn improved_bound_window() {
        assert_eq!(improved_hermitian_x_bound(3, 7), Ok(3));
        assert_eq!(improved_hermitian_x_bound(3, 8), Ok(2));
        assert_eq!(improved_hermitian_x_bound(2, 3), Ok(2));
        assert!(improved_hermitian_x_bound(3, 6).is_err());
        assert!(improvement_claim_failures(3).is_empty());
        assert_eq!(improvement_claim_failures(2), vec![3]);
        // headline comparison at q=3, t=7
        assert!(improved_hermitian_x_bound(3, 7).unwrap() > designed_distance(27, 7, 1, 2, 4));
    }

    #[test]
    fn lrc2_values() {
        let b = lrc2_bounds(2);
        assert_eq!(b.btv_bound, 3);
        assert_eq!(b.claimed_bound, 12);
        assert_eq!(
            b.recomputed,
            Lrc2Chain {
                m: 3,
                m_perp: 5,
                d_her: 5,
                d_lrc: 3
            }
        );
        assert_eq!(b.stated_m.m, 2);
        let b3 = lrc2_bounds(3);
        assert_eq!(b3.recomputed.m, 3 + 4 * 2);
        assert_eq!(b3.stated_m.m, 6 + 4);
        // quoted m_perp misses the fourth phase
        assert!(b3.quoted_m_perp < 26);
    }

    #[test]
    fn verdicts() {
        use BoundKind::*;
        let ex = |v| Some(Measured::exact(v));
        assert_eq!(judge(Lower, 6, ex(6)), Verdict::HoldsWithEquality);
        assert_eq!(judge(Lower, 5, ex(6)), Verdict::Holds);
        assert_eq!(judge(Lower, 12, ex(3)), Verdict::Violated);
        assert_eq!(judge(Lower, 0, ex(3)), Verdict::Vacuous);
        assert_eq!(judge(Upper, 7, ex(6)), Verdict::Holds);
        assert_eq!(judge(Upper, 5, ex(6)), Verdict::Violated);
        assert_eq!(judge(Lower, 3, None), Verdict::Untested);
        assert_eq!(judge(Lower, 3, Some(Measured::upper(5))), Verdict::Untested);
        assert_eq!(judge(Lower, 6, Some(Measured::upper(5))), Verdict::Violated);
        assert_eq!(judge(Upper, 6, Some(Measured::upper(5))), Verdict::Holds);
        assert_eq!(judge(Exact, 4, ex(4)), Verdict::Matches);
        assert_eq!(judge(Exact, 0, ex(4)), Verdict::Differs);
    }

    #[test]
    fn audit_without_oracle() {
        let lrc = LrcCode::hermitian_x(2, 1).unwrap();
        let g = GonalityInput::for_curve(lrc.curve());
        let rep = audit(&lrc, &OracleFacts::default(), &g);
        assert_eq!(rep.entry("length").unwrap().verdict, Verdict::Matches);
        assert_eq!(rep.entry("dimension").unwrap().verdict, Verdict::Matches);
        assert_eq!(rep.entry("dimension_alt").unwrap().verdict, Verdict::Differs);
        assert_eq!(rep.entry("designed_distance").unwrap().value, 6);
        assert_eq!(rep.entry("designed_distance").unwrap().verdict, Verdict::Untested);
        let csv = rep.csv();
        assert!(csv.starts_with("name,kind,value,oracle,verdict,source,note\n"));
        assert!(csv.contains("designed_distance,lower,6,,untested,"));
    }
}
