//! Univariate polynomials over a supported field, together with the
//! separability data the classification depends on.

mod irreducible;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

pub use irreducible::{is_irreducible, is_irreducible_with_budget, DEFAULT_IRREDUCIBILITY_BUDGET};

use crate::error::{Error, Result};
use crate::fields::{FieldElem, FieldSpec};
use crate::linalg::Mat;

/// A polynomial in `T` with coefficients in ascending degree order and no
/// trailing zeros. The zero polynomial has no coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<FieldElem>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients. All coefficients must
    /// belong to `field`.
    pub fn new(field: FieldSpec, coeffs: Vec<FieldElem>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| c.spec() != field) {
            return Err(Error::FieldMismatch(
                field.to_string(),
                bad.spec().to_string(),
            ));
        }
        Ok(Self::from_coeffs(field, coeffs))
    }

    pub(crate) fn from_coeffs(field: FieldSpec, mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(FieldElem::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_i64(field: FieldSpec, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::from_coeffs(c.spec(), vec![c])
    }

    /// The variable `T`.
    pub fn x(field: FieldSpec) -> Self {
        Self::monomial(field.one(), 1)
    }

    pub fn monomial(c: FieldElem, k: usize) -> Self {
        let field = c.spec();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Self::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FieldElem {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(FieldElem::is_one)
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Self::from_coeffs(self.field, coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field));
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(Self::from_coeffs(self.field, coeffs))
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        Self::from_coeffs(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_field(divisor)?;
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[d].inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Self::zero(self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] = &rem[k + j] - &(&c * dc);
                }
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Ok((
            Self::from_coeffs(self.field, quot),
            Self::from_coeffs(self.field, rem),
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) if !lead.is_one() => {
                self.scale(&lead.inv().expect("leading coefficient is nonzero"))
            }
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Extended gcd: returns `(g, u, v)` with `u * a + v * b = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        self.check_field(other)?;
        let k = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(k), Self::zero(k));
        let (mut t0, mut t1) = (Self::zero(k), Self::one(k));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            Some(lead) => {
                let inv = lead.inv()?;
                Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
            }
            None => Ok((r0, s0, t0)),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::one(self.field);
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
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &self.field.from_i64(k as i64))
            .collect();
        Self::from_coeffs(self.field, coeffs)
    }

    pub fn eval(&self, at: &FieldElem) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * at) + c)
    }

    /// The matrix `g(x)` by Horner's rule.
    pub fn eval_at_matrix(&self, x: &Mat) -> Result<Mat> {
        if !x.is_square() {
            return Err(Error::NotSquare {
                rows: x.rows(),
                cols: x.cols(),
            });
        }
        if x.field() != self.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                x.field().to_string(),
            ));
        }
        let n = x.rows();
        let mut acc = Mat::zeros(self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * x;
            if !c.is_zero() {
                for i in 0..n {
                    acc[(i, i)] = &acc[(i, i)] + c;
                }
            }
        }
        Ok(acc)
    }

    /// The polynomial `g` with `self(T) = g(T^k)`, if every exponent present
    /// is a multiple of `k`.
    pub fn deflate(&self, k: usize) -> Option<Self> {
        if k == 0 {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len() / k + 1);
        for (e, c) in self.coeffs.iter().enumerate() {
            if e % k == 0 {
                out.push(c.clone());
            } else if !c.is_zero() {
                return None;
            }
        }
        Some(Self::from_coeffs(self.field, out))
    }

    /// Companion matrix: ones on the subdiagonal and the negated low-order
    /// coefficients in the last column, so that it represents multiplication
    /// by `T` on `K[T]/self` in the basis `1, T, T^2, ...`.
    pub fn companion(&self) -> Result<Mat> {
        let d = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => {
                return Err(Error::TypeMismatch(
                    "companion matrix needs a polynomial of degree >= 1".into(),
                ))
            }
        };
        if !self.is_monic() {
            return Err(Error::TypeMismatch(format!(
                "companion matrix needs a monic polynomial, got {self}"
            )));
        }
        let mut c = Mat::zeros(self.field, d, d);
        for i in 1..d {
            c[(i, i - 1)] = self.field.one();
        }
        for i in 0..d {
            c[(i, d - 1)] = -&self.coeffs[i];
        }
        Ok(c)
    }

    /// Renders with an explicit variable name.
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, var }
    }
}

/// The inseparability degree `q` of a monic irreducible `f`: the largest
/// power `q = p^e` such that `f(T) = g(T^q)`. Always 1 in characteristic 0.
///
/// Irreducibility is a precondition; pass `check = true` to validate it.
pub fn insep_degree(f: &Poly, check: bool) -> Result<usize> {
    if check && !is_irreducible(f)? {
        return Err(Error::NotIrreducible(f.to_string()));
    }
    let p = f.field().characteristic() as usize;
    if p == 0 {
        return Ok(1);
    }
    let mut q = 1;
    while q * p <= f.degree().unwrap_or(0) && f.deflate(q * p).is_some() {
        q *= p;
    }
    Ok(q)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
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

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            field: self.field,
            coeffs: self.coeffs.iter().map(FieldElem::negate).collect(),
        }
    }
}

struct PolyDisplay<'a> {
    poly: &'a Poly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.var;
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.as_rational().is_some_and(Signed::is_negative);
            let magnitude = if negative { c.negate() } else { c.clone() };
            if negative {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let coeff = if magnitude.is_atomic() {
                magnitude.to_string()
            } else {
                format!("({magnitude})")
            };
            match k {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{coeff}*")?;
                    }
                    if k == 1 {
                        write!(f, "{var}")?;
                    } else {
                        write!(f, "{var}^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("T"))
    }
}
