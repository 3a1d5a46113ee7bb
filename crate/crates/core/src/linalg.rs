//! Exact matrices: rank, determinant, nullspace, solving and span membership.
//!
//! Rank and determinant use Bareiss fraction-free elimination with the first
//! nonzero entry of each column as pivot. Span membership goes through
//! [`EchelonBasis`], which keeps a fully reduced basis and eliminates
//! fraction-free, stripping content after each step.

use crate::error::{Error, Result};
use crate::scalar::{normalize_vector, FieldDescriptor, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(field: FieldDescriptor, rows: usize, cols: usize) -> Self {
        ExactMatrix { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from rows of equal length. Rational entries are
    /// embedded into `field`; any other mismatch is an error.
    pub fn from_rows(field: FieldDescriptor, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Dimension(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            for x in r {
                entries.push(if x.field() == field { x } else { field.embed(&x)? });
            }
        }
        Ok(ExactMatrix { field, rows: nrows, cols, entries })
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn scale_row(&mut self, i: usize, c: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(i, j) * c;
            self.set(i, j, v);
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc: Option<Scalar> = None;
    for (x, y) in a.iter().zip(b) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let t = x * y;
        acc = Some(match acc {
            Some(s) => &s + &t,
            None => t,
        });
    }
    acc.unwrap_or_else(|| a.first().or(b.first()).map_or(FieldDescriptor::Rational.zero(), |s| s.field().zero()))
}

/// Bareiss elimination in place. Returns the pivot columns and the number of
/// row swaps performed.
fn bareiss(m: &mut ExactMatrix) -> (Vec<usize>, usize) {
    let field = m.field;
    let mut prev = field.one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            m.swap_rows(p, r);
            swaps += 1;
        }
        let piv = m.get(r, c).clone();
        for i in (r + 1)..m.rows {
            let lead = m.get(i, c).clone();
            for j in (c + 1)..m.cols {
                let a = &piv * m.get(i, j);
                let b = if lead.is_zero() { field.zero() } else { &lead * m.get(r, j) };
                let mut v = &a - &b;
                if !prev.is_one() && !v.is_zero() {
                    v = &v / &prev;
                }
                m.set(i, j, v);
            }
            m.set(i, c, field.zero());
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    (pivots, swaps)
}

pub fn rank(m: &ExactMatrix) -> usize {
    let mut w = m.clone();
    bareiss(&mut w).0.len()
}

pub fn determinant(m: &ExactMatrix) -> Result<Scalar> {
    if m.rows != m.cols {
        return Err(Error::Dimension(format!("determinant of a {}x{} matrix", m.rows, m.cols)));
    }
    if m.rows == 0 {
        return Ok(m.field.one());
    }
    let mut w = m.clone();
    let (pivots, swaps) = bareiss(&mut w);
    if pivots.len() < m.rows {
        return Ok(m.field.zero());
    }
    let d = w.get(m.rows - 1, m.cols - 1).clone();
    Ok(if swaps % 2 == 1 { -d } else { d })
}

/// Reduced row echelon form (with field division) and its pivot columns.
pub fn rref(m: &ExactMatrix) -> (ExactMatrix, Vec<usize>) {
    let mut w = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..w.cols {
        if r == w.rows {
            break;
        }
        let Some(p) = (r..w.rows).find(|&i| !w.get(i, c).is_zero()) else {
            continue;
        };
        w.swap_rows(p, r);
        let inv = w.get(r, c).inv().expect("nonzero pivot");
        w.scale_row(r, &inv);
        for i in 0..w.rows {
            if i == r || w.get(i, c).is_zero() {
                continue;
            }
            let f = w.get(i, c).clone();
            for j in 0..w.cols {
                if w.get(r, j).is_zero() {
                    continue;
                }
                let v = w.get(i, j) - &(&f * w.get(r, j));
                w.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (w, pivots)
}

/// Basis of the right kernel: one vector per free column, with that
/// coordinate 1 and the other free coordinates 0.
pub fn nullspace(m: &ExactMatrix) -> Vec<Vec<Scalar>> {
    let (r, pivots) = rref(m);
    let field = m.field;
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); m.cols];
            v[f] = field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, f);
            }
            v
        })
        .collect()
}

/// One solution of `m x = b` (free variables set to zero), or `None` when
/// the system is inconsistent.
pub fn solve(m: &ExactMatrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if b.len() != m.rows {
        return Err(Error::Dimension(format!("right-hand side has {} entries, expected {}", b.len(), m.rows)));
    }
    let rows: Vec<Vec<Scalar>> = (0..m.rows)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(m.field.embed(&b[i])?);
            Ok(r)
        })
        .collect::<Result<_>>()?;
    let aug = ExactMatrix::from_rows(m.field, rows)?;
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![m.field.zero(); m.cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r.get(row, m.cols).clone();
    }
    Ok(Some(x))
}

/// Whether `v` lies in the span of `vectors`.
pub fn in_span(v: &[Scalar], vectors: &[Vec<Scalar>]) -> bool {
    let mut basis = EchelonBasis::new(v.len());
    for s in vectors {
        basis.insert(s);
    }
    basis.contains(v)
}

/// A fully reduced echelon basis of a subspace of `K^dim`, grown one vector
/// at a time. Each stored row has a distinct pivot column and is zero in the
/// pivot columns of the other rows.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// A nonzero multiple of `v` minus an element of the span, supported off
    /// the pivot columns. Zero iff `v` is in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut v = v.to_vec();
        let mut touched = false;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            eliminate(&mut v, row, p);
            touched = true;
        }
        if touched && matches!(v.first(), Some(Scalar::Generic(_))) {
            normalize_vector(&mut v);
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the basis; returns `false` when it was already in the span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        normalize_row(&mut r, p);
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                eliminate(row, &r, p);
                if matches!(row[p], Scalar::Generic(_)) {
                    normalize_vector(row);
                }
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }
}

/// `v <- row[p] * v - v[p] * row`, then rescales `v`.
fn eliminate(v: &mut [Scalar], row: &[Scalar], p: usize) {
    let factor = v[p].clone();
    let unit = row[p].is_one();
    for (x, y) in v.iter_mut().zip(row) {
        let scaled = if unit { x.clone() } else { &row[p] * x };
        *x = if y.is_zero() { scaled } else { &scaled - &(&factor * y) };
    }
}

fn normalize_row(r: &mut [Scalar], p: usize) {
    match &r[p] {
        Scalar::Generic(_) => normalize_vector(r),
        piv if piv.is_one() => {}
        piv => {
            let inv = piv.inv().expect("nonzero pivot");
            for x in r.iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
    }
}
