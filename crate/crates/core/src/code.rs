//! Linear codes over a finite field and evaluation codes on curve points.

use std::collections::BTreeSet;
use std::fmt;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::{CurveInstance, CurveKind};
use crate::gf::{Elem, FiniteField};
use crate::matrix::{self, EchelonBasis, Matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("code needs at least one coordinate")]
    EmptyPointSet,
    #[error("code needs at least one spanning function")]
    NoMonomials,
    #[error("point index {0} out of range")]
    BadPointIndex(usize),
    #[error("message has length {got}, expected {expected}")]
    MessageLength { got: usize, expected: usize },
    #[error("degree m = {m} outside 0..={max}")]
    DegreeOutOfRange { m: u64, max: u64 },
    #[error("this construction needs a Hermitian curve, got {0}")]
    NotHermitian(CurveKind),
    #[error("cannot drop every coordinate")]
    DropAll,
    #[error("coordinate {0} out of range")]
    BadCoordinate(usize),
    #[error("matrix text: {0}")]
    Parse(String),
}

/// The monomial `x^i y^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    pub i: u64,
    pub j: u64,
}

impl Monomial {
    pub const fn new(i: u64, j: u64) -> Self {
        Self { i, j }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |v: &str, e: u64| match e {
            0 => String::new(),
            1 => v.to_string(),
            e => format!("{v}^{e}"),
        };
        match (self.i, self.j) {
            (0, 0) => write!(f, "1"),
            (i, j) => write!(f, "{}{}", part("x", i), part("y", j)),
        }
    }
}

/// A linear code given by a spanning set of rows. The rows may be dependent;
/// the dimension is always the computed rank.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: FiniteField,
    gen: Matrix,
    basis: Matrix,
    pivots: Vec<usize>,
    labels: Option<Vec<Monomial>>,
}

impl LinearCode {
    pub fn new(field: FiniteField, gen: Matrix) -> Result<Self, CodeError> {
        Self::with_labels(field, gen, None)
    }

    pub fn with_labels(
        field: FiniteField,
        gen: Matrix,
        labels: Option<Vec<Monomial>>,
    ) -> Result<Self, CodeError> {
        if gen.cols() == 0 {
            return Err(CodeError::EmptyPointSet);
        }
        if let Some(l) = &labels {
            assert_eq!(l.len(), gen.rows(), "one label per generator row");
        }
        let mut work = gen.clone();
        let pivots = matrix::rref(&field, &mut work);
        let basis = work.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Ok(Self {
            field,
            gen,
            basis,
            pivots,
            labels,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    /// Dimension, i.e. the rank of the spanning rows.
    pub fn k(&self) -> usize {
        self.pivots.len()
    }

    /// The spanning rows as given.
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    /// Reduced row echelon basis with exactly `k` rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Pivot columns of the echelon basis; an information set.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn labels(&self) -> Option<&[Monomial]> {
        self.labels.as_deref()
    }

    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>, CodeError> {
        if message.len() != self.k() {
            return Err(CodeError::MessageLength {
                got: message.len(),
                expected: self.k(),
            });
        }
        Ok(matrix::vec_mul(&self.field, message, &self.basis))
    }

    /// Inverse of [`encode`](Self::encode) for a codeword: the echelon basis
    /// is the identity on the pivot columns.
    pub fn message_of(&self, codeword: &[Elem]) -> Vec<Elem> {
        self.pivots.iter().map(|&c| codeword[c]).collect()
    }

    /// Linear combination of the spanning rows, e.g. the evaluation of
    /// `sum c_r * monomial_r`.
    pub fn combine(&self, coeffs: &[Elem]) -> Vec<Elem> {
        matrix::vec_mul(&self.field, coeffs, &self.gen)
    }

    pub fn dual(&self) -> LinearCode {
        let h = matrix::null_space(&self.field, &self.basis);
        LinearCode::new(self.field.clone(), h).expect("same length as the primal")
    }

    pub fn puncture(&self, drop: &BTreeSet<usize>) -> Result<LinearCode, CodeError> {
        if let Some(&bad) = drop.iter().find(|&&c| c >= self.n()) {
            return Err(CodeError::BadCoordinate(bad));
        }
        let keep: Vec<usize> = (0..self.n()).filter(|c| !drop.contains(c)).collect();
        if keep.is_empty() {
            return Err(CodeError::DropAll);
        }
        LinearCode::with_labels(
            self.field.clone(),
            self.gen.select_columns(&keep),
            self.labels.clone(),
        )
    }

    pub fn is_codeword(&self, word: &[Elem]) -> bool {
        let mut b = EchelonBasis::new(self.n());
        for row in self.basis.iter_rows() {
            b.insert(&self.field, row);
        }
        b.contains(&self.field, word)
    }

    /// Recovers the message from known coordinates. Picks the first
    /// information set in index order among `known` and solves on it.
    /// Returns the message and the coordinates that were read.
    pub fn decode_from(&self, known: &[(usize, Elem)]) -> Option<(Vec<Elem>, Vec<usize>)> {
        let f = &self.field;
        let k = self.k();
        if k == 0 {
            return Some((Vec::new(), Vec::new()));
        }
        let mut span = EchelonBasis::new(k);
        let mut chosen = Vec::with_capacity(k);
        for &(c, v) in known {
            if span.insert(f, &self.basis.column(c)) {
                chosen.push((c, v));
                if chosen.len() == k {
                    break;
                }
            }
        }
        if chosen.len() < k {
            return None;
        }
        let cols: Vec<usize> = chosen.iter().map(|&(c, _)| c).collect();
        let sub = self.basis.select_columns(&cols);
        let rhs: Vec<Elem> = chosen.iter().map(|&(_, v)| v).collect();
        let msg = matrix::solve_left(f, &sub, &rhs)?;
        Some((msg, cols))
    }

    /// Text form: a `q n rows` header, then one line per spanning row of
    /// space-separated element indices.
    pub fn write_matrix<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "{} {} {}", self.field.order(), self.n(), self.gen.rows())?;
        for row in self.gen.iter_rows() {
            let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Ok(())
    }

    pub fn matrix_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_matrix(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii")
    }
}

/// Parses the text matrix format against a known field.
pub fn read_matrix<R: BufRead>(field: &FiniteField, input: R) -> Result<Matrix, CodeError> {
    let perr = |m: &str| CodeError::Parse(m.to_string());
    let mut lines = input.lines().map(|l| l.map_err(|e| CodeError::Parse(e.to_string())));
    let header = lines.next().ok_or_else(|| perr("missing header"))??;
    let nums: Vec<u64> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| perr("bad header")))
        .collect::<Result<_, _>>()?;
    let [q, n, rows] = nums[..] else {
        return Err(perr("header must be `q n rows`"));
    };
    if q != field.order() as u64 {
        return Err(perr("field order mismatch"));
    }
    let mut out = Vec::with_capacity(rows as usize);
    for _ in 0..rows {
        let line = lines.next().ok_or_else(|| perr("missing row"))??;
        let row: Vec<Elem> = line
            .split_whitespace()
            .map(|t| {
                let v: u64 = t.parse().map_err(|_| perr("bad entry"))?;
                field.elem(v).map_err(|e| CodeError::Parse(e.to_string()))
            })
            .collect::<Result<_, _>>()?;
        if row.len() != n as usize {
            return Err(perr("row length mismatch"));
        }
        out.push(row);
    }
    Ok(Matrix::from_rows(out, n as usize))
}

/// Union of nonzero positions over a set of words.
pub fn support<'a>(codewords: impl IntoIterator<Item = &'a [Elem]>) -> BTreeSet<usize> {
    let mut s = BTreeSet::new();
    for w in codewords {
        s.extend(w.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i));
    }
    s
}

pub fn weight(word: &[Elem]) -> usize {
    word.iter().filter(|x| !x.is_zero()).count()
}

/// Evaluates each monomial at the chosen curve points. Exponents are used
/// literally, with `0^0 = 1`.
pub fn evaluation_code(
    curve: &CurveInstance,
    monomials: &[Monomial],
    point_indices: &[usize],
) -> Result<LinearCode, CodeError> {
    if monomials.is_empty() {
        return Err(CodeError::NoMonomials);
    }
    if point_indices.is_empty() {
        return Err(CodeError::EmptyPointSet);
    }
    let pts = curve.points();
    if let Some(&bad) = point_indices.iter().find(|&&i| i >= pts.len()) {
        return Err(CodeError::BadPointIndex(bad));
    }
    let f = curve.field();
    let max_i = monomials.iter().map(|m| m.i).max().unwrap_or(0) as usize;
    let max_j = monomials.iter().map(|m| m.j).max().unwrap_or(0) as usize;
    let n = point_indices.len();
    let mut gen = Matrix::zeros(monomials.len(), n);
    let mut xp = vec![Elem::ONE; max_i + 1];
    let mut yp = vec![Elem::ONE; max_j + 1];
    for (c, &pi) in point_indices.iter().enumerate() {
        let p = pts[pi];
        for a in 1..=max_i {
            xp[a] = f.mul(xp[a - 1], p.x);
        }
        for b in 1..=max_j {
            yp[b] = f.mul(yp[b - 1], p.y);
        }
        for (r, m) in monomials.iter().enumerate() {
            gen[(r, c)] = f.mul(xp[m.i as usize], yp[m.j as usize]);
        }
    }
    LinearCode::with_labels(f.clone(), gen, Some(monomials.to_vec()))
}

/// Largest admissible `m` for the one-point Hermitian code: `q^3 + q^2 - q - 2`.
pub fn hermitian_max_degree(q: u64) -> u64 {
    q.pow(3) + q * q - q - 2
}

/// Monomials `x^i y^j` with `q i + (q+1) j <= m`, `i < q^2`, `j < q`, sorted
/// by pole order.
pub fn hermitian_basis(q: u64, m: u64) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = (0..q)
        .flat_map(|j| (0..q * q).map(move |i| Monomial::new(i, j)))
        .filter(|mo| q * mo.i + (q + 1) * mo.j <= m)
        .collect();
    out.sort_by_key(|mo| (q * mo.i + (q + 1) * mo.j, mo.j));
    out
}

/// The one-point Hermitian code `C(m, q)` on all affine points.
pub fn hermitian_code(curve: &CurveInstance, m: u64) -> Result<LinearCode, CodeError> {
    let CurveKind::Hermitian { q } = curve.kind() else {
        return Err(CodeError::NotHermitian(curve.kind()));
    };
    let max = hermitian_max_degree(q);
    if m > max {
        return Err(CodeError::DegreeOutOfRange { m, max });
    }
    let all: Vec<usize> = (0..curve.points().len()).collect();
    evaluation_code(curve, &hermitian_basis(q, m), &all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::build_curve;
    use crate::gf::make_field;

    fn herm(q: u64) -> CurveInstance {
        build_curve(CurveKind::Hermitian { q }).unwrap()
    }

    fn repetition(field: &FiniteField, n: usize) -> LinearCode {
        LinearCode::new(field.clone(), Matrix::from_rows(vec![vec![Elem::ONE; n]], n)).unwrap()
    }

    #[test]
    fn constant_monomial_gives_all_ones() {
        let c = herm(2);
        let code = evaluation_code(&c, &[Monomial::new(0, 0)], &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(code.k(), 1);
        assert!(code.generator().row(0).iter().all(|&e| e == Elem::ONE));
    }

    #[test]
    fn one_and_x_are_independent() {
        let c = herm(2);
        let all: Vec<usize> = (0..8).collect();
        let code =
            evaluation_code(&c, &[Monomial::new(0, 0), Monomial::new(1, 0)], &all).unwrap();
        assert_eq!(code.k(), 2);
        let s = support(code.basis().iter_rows());
        assert_eq!(s.len(), 8);
    }

    #[test]
    fn hermitian_small_degrees() {
        let c = herm(2);
        let k = |m| hermitian_code(&c, m).unwrap();
        assert_eq!(hermitian_basis(2, 0), vec![Monomial::new(0, 0)]);
        assert_eq!(k(0).k(), 1);
        assert_eq!(hermitian_basis(2, 2), vec![Monomial::new(0, 0), Monomial::new(1, 0)]);
        assert_eq!(k(2).k(), 2);
        assert_eq!(
            hermitian_basis(2, 3),
            vec![Monomial::new(0, 0), Monomial::new(1, 0), Monomial::new(0, 1)]
        );
        assert_eq!(k(3).k(), 3);
        assert_eq!(k(3).dual().k(), 5);
        assert!(matches!(
            hermitian_code(&c, 9),
            Err(CodeError::DegreeOutOfRange { m: 9, max: 8 })
        ));
        let nt = build_curve(CurveKind::NormTrace { q: 2, u: 3 }).unwrap();
        assert!(matches!(hermitian_code(&nt, 1), Err(CodeError::NotHermitian(_))));
    }

    #[test]
    fn repetition_dual_and_puncture() {
        let f = make_field(2, 1).unwrap();
        let rep = repetition(&f, 3);
        let d = rep.dual();
        assert_eq!(d.k(), 2);
        // sum-zero code
        for row in d.basis().iter_rows() {
            assert!(f.sum(row.iter().copied()).is_zero());
        }
        let dd = d.dual();
        assert_eq!(dd.basis(), rep.basis());

        let same = rep.puncture(&BTreeSet::new()).unwrap();
        assert_eq!(same.basis(), rep.basis());
        let p = rep.puncture(&[1].into()).unwrap();
        assert_eq!((p.n(), p.k()), (2, 1));
        assert_eq!(rep.puncture(&[0, 1, 2].into()).unwrap_err(), CodeError::DropAll);
    }

    #[test]
    fn encode_is_linear() {
        let c = herm(2);
        let code = hermitian_code(&c, 3).unwrap();
        let f = code.field().clone();
        let zero = vec![Elem::ZERO; 3];
        assert!(code.encode(&zero).unwrap().iter().all(|e| e.is_zero()));
        let e1 = vec![Elem::ONE, Elem::ZERO, Elem::ZERO];
        assert_eq!(code.encode(&e1).unwrap(), code.basis().row(0));
        let a = vec![Elem(2), Elem(3), Elem(1)];
        let b = vec![Elem(1), Elem(1), Elem(2)];
        let ab: Vec<Elem> = a.iter().zip(&b).map(|(&x, &y)| f.add(x, y)).collect();
        let lhs = code.encode(&ab).unwrap();
        let rhs: Vec<Elem> = code
            .encode(&a)
            .unwrap()
            .iter()
            .zip(code.encode(&b).unwrap())
            .map(|(&x, y)| f.add(x, y))
            .collect();
        assert_eq!(lhs, rhs);
        assert_eq!(code.message_of(&code.encode(&a).unwrap()), a);
        assert!(matches!(code.encode(&[Elem::ONE]), Err(CodeError::MessageLength { .. })));
    }

    #[test]
    fn support_examples() {
        let zero = vec![Elem::ZERO; 5];
        assert!(support([zero.as_slice()]).is_empty());
        let mut e3 = zero.clone();
        e3[3] = Elem::ONE;
        assert_eq!(support([e3.as_slice()]), [3].into());
    }

    #[test]
    fn matrix_text_round_trip() {
        let c = herm(2);
        let code = hermitian_code(&c, 5).unwrap();
        let text = code.matrix_text();
        assert!(text.starts_with("4 8 5\n"));
        let back = read_matrix(code.field(), text.as_bytes()).unwrap();
        assert_eq!(&back, code.generator());
    }

    #[test]
    fn decode_from_information_set() {
        let c = herm(2);
        let code = hermitian_code(&c, 5).unwrap();
        let msg = vec![Elem(1), Elem(3), Elem(0), Elem(2), Elem(1)];
        let cw = code.encode(&msg).unwrap();
        let known: Vec<(usize, Elem)> = (2..8).map(|i| (i, cw[i])).collect();
        let (back, read) = code.decode_from(&known).unwrap();
        assert_eq!(back, msg);
        assert_eq!(read.len(), 5);
        // two known coordinates cannot determine five symbols
        assert!(code.decode_from(&known[..2]).is_none());
    }
}
