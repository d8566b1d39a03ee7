//! Dense matrices over a [`FiniteField`] and the row reductions the code
//! module is built on.

use crate::gf::{Elem, FiniteField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Elem>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        Self { rows: r, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Elem::ONE;
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Elem]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m[(r, j)] = self[(r, c)];
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|&r| self.row(r).to_vec()).collect(), self.cols)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Elem;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Elem {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Elem {
        &mut self.data[r * self.cols + c]
    }
}

/// `dst += c * src` elementwise.
#[inline]
pub fn axpy(f: &FiniteField, dst: &mut [Elem], c: Elem, src: &[Elem]) {
    if c.is_zero() {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = f.add(*d, f.mul(c, s));
    }
}

pub fn dot(f: &FiniteField, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `v * M` for a row vector `v`.
pub fn vec_mul(f: &FiniteField, v: &[Elem], m: &Matrix) -> Vec<Elem> {
    assert_eq!(v.len(), m.rows());
    let mut out = vec![Elem::ZERO; m.cols()];
    for (r, &c) in v.iter().enumerate() {
        axpy(f, &mut out, c, m.row(r));
    }
    out
}

pub fn mat_mul(f: &FiniteField, a: &Matrix, b: &Matrix) -> Matrix {
    assert_eq!(a.cols(), b.rows());
    let rows = a.iter_rows().map(|r| vec_mul(f, r, b)).collect();
    Matrix::from_rows(rows, b.cols())
}

/// In-place reduced row echelon form. Pivots are taken leftmost-first, using
/// the first row at or below the current position with a nonzero entry.
/// Returns the pivot columns; the first `pivots.len()` rows form the basis
/// and the rest are zero.
pub fn rref(f: &FiniteField, m: &mut Matrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols() {
        if row == m.rows() {
            break;
        }
        let Some(src) = (row..m.rows()).find(|&r| !m[(r, col)].is_zero()) else {
            continue;
        };
        m.swap_rows(row, src);
        let inv = f.inv(m[(row, col)]).expect("pivot is nonzero");
        for x in m.row_mut(row) {
            *x = f.mul(*x, inv);
        }
        let pivot_row = m.row(row).to_vec();
        for r in 0..m.rows() {
            if r != row {
                let c = m[(r, col)];
                if !c.is_zero() {
                    axpy(f, m.row_mut(r), f.neg(c), &pivot_row);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(f: &FiniteField, m: &Matrix) -> usize {
    let mut work = m.clone();
    rref(f, &mut work).len()
}

/// Basis of `{v : M v^T = 0}`, one row per free column in increasing order.
pub fn null_space(f: &FiniteField, m: &Matrix) -> Matrix {
    let mut work = m.clone();
    let pivots = rref(f, &mut work);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    let mut out = Matrix::zeros(free.len(), m.cols());
    for (i, &fc) in free.iter().enumerate() {
        out[(i, fc)] = Elem::ONE;
        for (r, &pc) in pivots.iter().enumerate() {
            out[(i, pc)] = f.neg(work[(r, fc)]);
        }
    }
    out
}

/// Solves `x A = b` for a row vector `x` when `A` is square and invertible.
pub fn solve_left(f: &FiniteField, a: &Matrix, b: &[Elem]) -> Option<Vec<Elem>> {
    // x A = b  <=>  A^T x^T = b^T; reduce the augmented [A^T | b^T].
    let n = a.rows();
    assert_eq!(a.cols(), n);
    let at = a.transpose();
    let mut aug = Matrix::zeros(n, n + 1);
    for r in 0..n {
        aug.row_mut(r)[..n].copy_from_slice(at.row(r));
        aug[(r, n)] = b[r];
    }
    let pivots = rref(f, &mut aug);
    if pivots.len() != n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some((0..n).map(|r| aug[(r, n)]).collect())
}

/// Incrementally built echelon basis of a subspace of `F^len`.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    len: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, f: &FiniteField, v: &mut [Elem]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if !c.is_zero() {
                axpy(f, v, f.neg(c), row);
            }
        }
    }

    pub fn contains(&self, f: &FiniteField, v: &[Elem]) -> bool {
        debug_assert_eq!(v.len(), self.len);
        let mut w = v.to_vec();
        self.reduce(f, &mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns false (and leaves the basis alone) if it was
    /// already in the span.
    pub fn insert(&mut self, f: &FiniteField, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(f, &mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(w[p]).expect("nonzero");
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }
}
