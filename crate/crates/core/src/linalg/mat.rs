use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::fields::{FieldElem, FieldSpec, FpPoly, RatFunc};

/// A dense row-major matrix over one of the supported fields.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds a matrix from rows, checking rectangularity and that every
    /// entry lives in `field`.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<FieldElem>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n_cols {
                return Err(Error::RaggedRows {
                    row: i,
                    found: row.len(),
                    expected: n_cols,
                });
            }
            for e in row {
                if e.spec() != field {
                    return Err(Error::FieldMismatch(
                        field.to_string(),
                        e.spec().to_string(),
                    ));
                }
                data.push(e);
            }
        }
        Ok(Mat {
            field,
            rows: n_rows,
            cols: n_cols,
            data,
        })
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, rows).expect("well-formed integer matrix")
    }

    /// A column vector as an `n x 1` matrix.
    pub fn column(field: FieldSpec, v: Vec<FieldElem>) -> Self {
        Mat {
            field,
            rows: v.len(),
            cols: 1,
            data: v,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElem::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    fn check_same(&self, other: &Self, what: &str) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{what} of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "sum")?;
        Ok(Mat {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
            ..self.clone_shape()
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "difference")?;
        Ok(Mat {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
            ..self.clone_shape()
        })
    }

    fn clone_shape(&self) -> Self {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: Vec::new(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if let FieldSpec::RationalFunctions(p) = self.field {
            return Ok(mul_cleared(self, other, p));
        }
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        Mat {
            data: self.data.iter().map(|a| a * c).collect(),
            ..self.clone_shape()
        }
    }

    pub fn mul_vec(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    pub fn pow(&self, mut exp: u32) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Mat::identity(self.field, n);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Block-diagonal matrix with the given square or rectangular blocks.
    pub fn block_diag(blocks: &[Mat]) -> Result<Self> {
        let field = match blocks.first() {
            Some(b) => b.field,
            None => {
                return Err(Error::ShapeMismatch(
                    "block_diag needs at least one block".into(),
                ))
            }
        };
        let rows = blocks.iter().map(Mat::rows).sum();
        let cols = blocks.iter().map(Mat::cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            if b.field != field {
                return Err(Error::FieldMismatch(field.to_string(), b.field.to_string()));
            }
            out.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        Ok(out)
    }

    /// Overwrites the submatrix with top-left corner `(r, c)`.
    pub fn set_block(&mut self, r: usize, c: usize, block: &Mat) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r + i, c + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r: usize, c: usize, rows: usize, cols: usize) -> Mat {
        let mut out = Mat::zeros(self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(r + i, c + j)].clone();
            }
        }
        out
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let mut out = Mat::zeros(self.field, self.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(0, self.cols, other);
        Ok(out)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, n: usize, columns: &[Vec<FieldElem>]) -> Mat {
        let mut out = Mat::zeros(field, n, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, e) in col.iter().enumerate() {
                out[(i, j)] = e.clone();
            }
        }
        out
    }

    pub fn commutes_with(&self, other: &Mat) -> bool {
        self * other == other * self
    }
}

fn ratfunc(e: &FieldElem) -> &RatFunc {
    e.as_ratfunc().expect("entry of a GF(p)(t) matrix")
}

fn lcm(a: &FpPoly, b: &FpPoly) -> FpPoly {
    if b.degree() == Some(0) {
        return a.clone();
    }
    a.exact_div(&a.gcd(b)).mul(b)
}

/// Numerators of `entries` over their least common denominator.
fn clear_denominators<'a>(
    entries: impl Iterator<Item = &'a FieldElem> + Clone,
    p: u32,
) -> (Vec<FpPoly>, FpPoly) {
    let den = entries
        .clone()
        .fold(FpPoly::one(p), |acc, e| lcm(&acc, ratfunc(e).denom()));
    let nums = entries
        .map(|e| {
            let r = ratfunc(e);
            if r.is_zero() {
                FpPoly::zero(p)
            } else {
                r.numer().mul(&den.exact_div(r.denom()))
            }
        })
        .collect();
    (nums, den)
}

/// Product over GF(p)(t) with polynomial inner products: rows of `a` and
/// columns of `b` are put over common denominators first, so each output
/// entry is reduced once instead of after every addition.
fn mul_cleared(a: &Mat, b: &Mat, p: u32) -> Mat {
    let rows: Vec<(Vec<FpPoly>, FpPoly)> = (0..a.rows)
        .map(|i| clear_denominators(a.row(i).iter(), p))
        .collect();
    let cols: Vec<(Vec<FpPoly>, FpPoly)> = (0..b.cols)
        .map(|j| clear_denominators((0..b.rows).map(|k| &b[(k, j)]), p))
        .collect();
    let mut out = Mat::zeros(a.field, a.rows, b.cols);
    for (i, (rnum, rden)) in rows.iter().enumerate() {
        for (j, (cnum, cden)) in cols.iter().enumerate() {
            let mut acc = FpPoly::zero(p);
            for (x, y) in rnum.iter().zip(cnum) {
                if !x.is_zero() && !y.is_zero() {
                    acc = acc.add(&x.mul(y));
                }
            }
            if !acc.is_zero() {
                let value = RatFunc::new(acc, rden.mul(cden)).expect("nonzero denominator");
                out[(i, j)] = FieldElem::Function(value);
            }
        }
    }
    out
}

impl Index<(usize, usize)> for Mat {
    type Output = FieldElem;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElem {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElem {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Mat> for &Mat {
            type Output = Mat;
            fn $method(self, rhs: &Mat) -> Mat {
                match self.$try(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat {
            data: self.data.iter().map(FieldElem::negate).collect(),
            ..self.clone_shape()
        }
    }
}

/// `[[a, b],[c, d]]`, the same grammar the parser accepts.
impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
