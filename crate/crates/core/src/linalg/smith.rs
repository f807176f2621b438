//! Smith normal form over `K[T]` by Euclidean elimination.

use super::Mat;
use crate::error::{Error, Result};
use crate::fields::{FieldElem, FieldSpec};
use crate::poly::Poly;

/// A square matrix with entries in `K[T]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMat {
    field: FieldSpec,
    n: usize,
    entries: Vec<Poly>,
}

impl PolyMat {
    pub fn new(field: FieldSpec, n: usize, entries: Vec<Poly>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {n}x{n} polynomial matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.field() != field) {
            return Err(Error::FieldMismatch(
                field.to_string(),
                bad.field().to_string(),
            ));
        }
        Ok(PolyMat { field, n, entries })
    }

    /// The characteristic matrix `T I - x`.
    pub fn characteristic(x: &Mat) -> Result<Self> {
        let n = x.require_square()?;
        let field = x.field();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let c = Poly::constant(-&x[(i, j)]);
                entries.push(if i == j { &c + &Poly::x(field) } else { c });
            }
        }
        Ok(PolyMat { field, n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    fn at(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.n + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.n {
                self.entries.swap(a * self.n + j, b * self.n + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.n {
                self.entries.swap(i * self.n + a, i * self.n + b);
            }
        }
    }

    /// row[target] -= q * row[source], for columns `from..`.
    fn row_op(&mut self, target: usize, source: usize, q: &Poly, from: usize) {
        for j in from..self.n {
            let s = self.at(source, j);
            if !s.is_zero() {
                let v = self.at(target, j) - &(q * s);
                self.entries[target * self.n + j] = v;
            }
        }
    }

    fn col_op(&mut self, target: usize, source: usize, q: &Poly, from: usize) {
        for i in from..self.n {
            let s = self.at(i, source);
            if !s.is_zero() {
                let v = self.at(i, target) - &(q * s);
                self.entries[i * self.n + target] = v;
            }
        }
    }
}

/// Nontrivial invariant factors of `m`, monic, in descending divisibility
/// order (the largest, i.e. the minimal polynomial for `T I - x`, first).
pub fn smith_invariant_factors(m: &PolyMat) -> Result<Vec<Poly>> {
    let mut a = m.clone();
    let n = a.n;
    let mut diagonal = Vec::with_capacity(n);
    for k in 0..n {
        loop {
            // Lowest-degree nonzero entry of the trailing block, preferring
            // small coefficients among those.
            let pivot = (k..n)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !a.at(i, j).is_zero())
                .min_by_key(|&(i, j)| {
                    let e = a.at(i, j);
                    (
                        e.degree(),
                        e.coeffs().iter().map(FieldElem::cost).sum::<usize>(),
                    )
                });
            let Some((pi, pj)) = pivot else {
                return Err(Error::SingularInput);
            };
            a.swap_rows(k, pi);
            a.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..n {
                if a.at(i, k).is_zero() {
                    continue;
                }
                let (q, r) = a.at(i, k).div_rem(a.at(k, k))?;
                a.row_op(i, k, &q, k);
                clean &= r.is_zero();
            }
            for j in k + 1..n {
                if a.at(k, j).is_zero() {
                    continue;
                }
                let (q, r) = a.at(k, j).div_rem(a.at(k, k))?;
                a.col_op(j, k, &q, k);
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            // The pivot must divide the whole trailing block.
            let offender = (k + 1..n).find(|&i| {
                (k + 1..n).any(|j| {
                    !a.at(i, j).is_zero() && !a.at(k, k).divides(a.at(i, j)).unwrap_or(false)
                })
            });
            match offender {
                Some(i) => {
                    let one = Poly::one(a.field);
                    a.row_op(k, i, &-&one, k);
                }
                None => break,
            }
        }
        diagonal.push(a.at(k, k).monic());
    }
    // The diagonal is an ascending divisor chain; report it descending.
    Ok(diagonal
        .into_iter()
        .filter(|d| d.degree().unwrap_or(0) >= 1)
        .rev()
        .collect())
}
