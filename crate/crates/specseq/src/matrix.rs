//! Dense exact matrices over a runtime-chosen field.
//!
//! Matrices carry their [`FieldSpec`] and store entries row-major. Zero-row
//! and zero-column matrices are first-class citizens: they represent maps to
//! and from the zero space and arise constantly at the boundary of bounded
//! complexes. Row reduction uses the first nonzero pivot in column order; no
//! magnitude pivoting is ever needed since all arithmetic is exact.

use crate::field::{FieldSpec, Scalar};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix entries disagree with the declared field")]
    FieldMismatch,
    #[error("shape mismatch in {op}: lhs is {lhs_rows}x{lhs_cols}, rhs is {rhs_rows}x{rhs_cols}")]
    ShapeMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },
    #[error("expected {rows}x{cols} = {} entries, got {got}", rows * cols)]
    EntryCount { rows: usize, cols: usize, got: usize },
    #[error("ambient dimensions differ: {lhs} vs {rhs}")]
    AmbientMismatch { lhs: usize, rhs: usize },
    #[error("{what}: basis column {col} is not contained in the target subspace")]
    NotContained { what: &'static str, col: usize },
    #[error("induced map is ill-defined: image of {part} basis column {col} leaves the target")]
    IllDefined { part: &'static str, col: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>, // row-major
}

/// Output of [`Matrix::rref`]: the reduced row echelon form together with the
/// pivot column indices (ascending) and the rank.
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn new(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        entries: Vec<Scalar>,
    ) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::EntryCount {
                rows,
                cols,
                got: entries.len(),
            });
        }
        if entries.iter().any(|e| e.field() != field) {
            return Err(LinalgError::FieldMismatch);
        }
        Ok(Matrix {
            rows,
            cols,
            field,
            entries,
        })
    }

    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            field,
            entries,
        }
    }

    /// Builds a matrix over GF(p) or Q from integer entries, row by row.
    pub fn from_int_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix::from_fn(field, rows.len(), ncols, |i, j| field.integer(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        debug_assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.entry(j, i).clone()
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.entry(i, j).neg()
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_shape("add", other, self.rows, self.cols)?;
        Ok(Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.entry(i, j).add(other.entry(i, j)).expect("same field")
        }))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.entry(i, j).mul(c).expect("same field")
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows || self.field != other.field {
            return Err(LinalgError::ShapeMismatch {
                op: "mul",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = out.entry(i, j).add(&a.mul(b).expect("same field")).expect("same field");
                    out.set(i, j, t);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    let e = self.entry(i, j);
                    if !e.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&e.mul(&v[j]).expect("same field")).expect("same field");
                    }
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.rows != other.rows || self.field != other.field {
            return Err(LinalgError::ShapeMismatch {
                op: "hstack",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        Ok(Matrix::from_fn(
            self.field,
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.entry(i, j).clone()
                } else {
                    other.entry(i, j - self.cols).clone()
                }
            },
        ))
    }

    /// Vertical concatenation, `self` on top.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.cols || self.field != other.field {
            return Err(LinalgError::ShapeMismatch {
                op: "vstack",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        Ok(Matrix::from_fn(
            self.field,
            self.rows + other.rows,
            self.cols,
            |i, j| {
                if i < self.rows {
                    self.entry(i, j).clone()
                } else {
                    other.entry(i - self.rows, j).clone()
                }
            },
        ))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| {
            self.entry(idx[i], j).clone()
        })
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| {
            self.entry(i, idx[j]).clone()
        })
    }

    /// Kronecker product, used for assembling tensor-product differentials.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(
            self.field,
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| {
                let a = self.entry(i / other.rows, j / other.cols);
                let b = other.entry(i % other.rows, j % other.cols);
                a.mul(b).expect("same field")
            },
        )
    }

    fn check_shape(
        &self,
        op: &'static str,
        other: &Matrix,
        rows: usize,
        cols: usize,
    ) -> Result<(), LinalgError> {
        if other.rows != rows || other.cols != cols || other.field != self.field {
            return Err(LinalgError::ShapeMismatch {
                op,
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        Ok(())
    }

    /// Reduced row echelon form. Pivoting takes the first nonzero entry in
    /// column order, which makes the output canonical for a given matrix.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let pivot_row = (row..m.rows).find(|&r| !m.entry(r, col).is_zero());
            let Some(pr) = pivot_row else { continue };
            if pr != row {
                for j in 0..m.cols {
                    let a = m.entry(pr, j).clone();
                    let b = m.entry(row, j).clone();
                    m.set(pr, j, b);
                    m.set(row, j, a);
                }
            }
            let inv = m.entry(row, col).inv().expect("pivot is nonzero");
            for j in col..m.cols {
                let v = m.entry(row, j).mul(&inv).expect("same field");
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.entry(r, col).is_zero() {
                    continue;
                }
                let factor = m.entry(r, col).clone();
                for j in col..m.cols {
                    let v = m
                        .entry(r, j)
                        .sub(&factor.mul(m.entry(row, j)).expect("same field"))
                        .expect("same field");
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            matrix: m,
            pivots,
            rank: row,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Solves `self * X = rhs` for one solution, or `None` if inconsistent.
    /// Free variables are set to zero, so the answer is deterministic.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        if rhs.rows != self.rows || rhs.field != self.field {
            return None;
        }
        let aug = self.hstack(rhs).expect("shapes checked");
        let red = aug.rref();
        // A pivot in the rhs block means the system is inconsistent.
        if red.pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zero(self.field, self.cols, rhs.cols);
        for (r, &pc) in red.pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, red.matrix.entry(r, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.field, self.rows))?;
        if self.mul(&x).expect("shapes agree") == Matrix::identity(self.field, self.rows) {
            Some(x)
        } else {
            None
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}
