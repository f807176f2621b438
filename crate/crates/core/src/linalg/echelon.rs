//! Gaussian elimination: rank, kernels, inverses and linear solves.
//!
//! Pivots are chosen column by column (lowest column index first); within a
//! column the entry with the smallest representation is preferred, which
//! keeps rational-function and big-rational growth in check.

use super::Mat;
use crate::error::{Error, Result};
use crate::fields::{FieldElem, FieldSpec};

/// Reduced row echelon form of a list of rows.
pub(crate) struct Echelon {
    /// The nonzero rows, each normalized to have a leading 1.
    pub rows: Vec<Vec<FieldElem>>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
    /// Rows left over after elimination; zero in every pivot-eligible column.
    pub residual: Vec<Vec<FieldElem>>,
}

fn pick_pivot(rows: &[Vec<FieldElem>], from: usize, col: usize) -> Option<usize> {
    rows.iter()
        .enumerate()
        .skip(from)
        .filter(|(_, r)| !r[col].is_zero())
        .min_by_key(|(_, r)| r[col].cost())
        .map(|(i, _)| i)
}

/// `target -= factor * source`, skipping zero entries of `source`.
fn axpy(target: &mut [FieldElem], factor: &FieldElem, source: &[FieldElem], from: usize) {
    for (t, s) in target[from..].iter_mut().zip(&source[from..]) {
        if !s.is_zero() {
            *t = &*t - &(factor * s);
        }
    }
}

/// Forward elimination only; returns the rank. Columns `>= limit` are
/// carried along but never used as pivots.
fn forward(rows: &mut [Vec<FieldElem>], limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..limit {
        if rank == rows.len() {
            break;
        }
        let Some(p) = pick_pivot(rows, rank, col) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        let pivot_row: Vec<FieldElem> = rows[rank].iter().map(|e| e * &inv).collect();
        for r in rows.iter_mut().skip(rank + 1) {
            if r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            axpy(r, &factor, &pivot_row, col);
        }
        rows[rank] = pivot_row;
        pivots.push(col);
        rank += 1;
    }
    pivots
}

pub(crate) fn row_reduce(mut rows: Vec<Vec<FieldElem>>, limit: usize) -> Echelon {
    let pivots = forward(&mut rows, limit);
    let residual = rows.split_off(pivots.len());
    // Back substitution to clear entries above each pivot.
    for k in (0..pivots.len()).rev() {
        let col = pivots[k];
        let (above, rest) = rows.split_at_mut(k);
        let pivot_row = &rest[0];
        for r in above.iter_mut() {
            if r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            axpy(r, &factor, pivot_row, col);
        }
    }
    Echelon {
        rows,
        pivots,
        residual,
    }
}

pub fn rank(a: &Mat) -> usize {
    let mut rows = a.to_rows();
    forward(&mut rows, a.cols()).len()
}

/// Dimension of the kernel of a square matrix.
pub fn kernel_dim(a: &Mat) -> Result<usize> {
    let n = a.require_square()?;
    Ok(n - rank(a))
}

/// A basis of `{ v : a v = 0 }`, one vector per free column.
pub fn nullspace(a: &Mat) -> Vec<Vec<FieldElem>> {
    let ech = row_reduce(a.to_rows(), a.cols());
    nullspace_from(&ech, a.cols(), a.field())
}

pub(crate) fn nullspace_from(ech: &Echelon, ncols: usize, field: FieldSpec) -> Vec<Vec<FieldElem>> {
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); ncols];
            v[free] = field.one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                if !row[free].is_zero() {
                    v[p] = -&row[free];
                }
            }
            v
        })
        .collect()
}

/// Free (non-pivot) column indices of a reduced system.
pub(crate) fn free_columns(ech: &Echelon, ncols: usize) -> Vec<usize> {
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..ncols).filter(|&c| !is_pivot[c]).collect()
}

/// Solves `a X = b` for one particular solution (free variables set to 0).
pub fn solve(a: &Mat, b: &Mat) -> Result<Mat> {
    if a.rows() != b.rows() {
        return Err(Error::ShapeMismatch(format!(
            "system with {} equations and right-hand side of {} rows",
            a.rows(),
            b.rows()
        )));
    }
    let aug = a.hstack(b)?;
    let ech = row_reduce(aug.to_rows(), a.cols());
    let field = a.field();
    if ech.residual.iter().flatten().any(|e| !e.is_zero()) {
        return Err(Error::Inconsistent);
    }
    let mut x = Mat::zeros(field, a.cols(), b.cols());
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        for j in 0..b.cols() {
            x[(p, j)] = row[a.cols() + j].clone();
        }
    }
    Ok(x)
}

pub fn inverse(a: &Mat) -> Result<Mat> {
    let n = a.require_square()?;
    let aug = a.hstack(&Mat::identity(a.field(), n))?;
    let ech = row_reduce(aug.to_rows(), n);
    if ech.pivots.len() < n {
        return Err(Error::Singular);
    }
    let mut inv = Mat::zeros(a.field(), n, n);
    for (i, row) in ech.rows.iter().enumerate() {
        for j in 0..n {
            inv[(i, j)] = row[n + j].clone();
        }
    }
    Ok(inv)
}

impl Mat {
    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn inverse(&self) -> Result<Mat> {
        inverse(self)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && rank(self) == self.rows()
    }
}
