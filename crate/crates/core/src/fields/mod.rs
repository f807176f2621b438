//! Exact arithmetic over the three supported coefficient fields: the
//! rationals, prime fields GF(p), and the rational function field GF(p)(t).
//!
//! Elements are immutable values in canonical form, so `==` is value
//! equality. The binary operators on `&FieldElem` panic when the operands
//! come from different fields; the `try_*` methods report that as an error
//! instead.

mod fp_poly;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use fp_poly::FpPoly;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

/// Largest supported characteristic.
pub const MAX_PRIME: u64 = 17;

/// Which field the coefficients live in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
    RationalFunctions(u32),
}

fn check_prime(p: u64) -> Result<u32> {
    let is_prime = p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d));
    if !is_prime {
        return Err(Error::NotPrime(p));
    }
    if p > MAX_PRIME {
        return Err(Error::UnsupportedPrime(p));
    }
    Ok(p as u32)
}

impl FieldSpec {
    /// GF(p), validating that `p` is a supported prime.
    pub fn prime_field(p: u64) -> Result<Self> {
        check_prime(p).map(FieldSpec::PrimeField)
    }

    /// GF(p)(t), validating that `p` is a supported prime.
    pub fn rational_functions(p: u64) -> Result<Self> {
        check_prime(p).map(FieldSpec::RationalFunctions)
    }

    pub fn characteristic(&self) -> u32 {
        match *self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) | FieldSpec::RationalFunctions(p) => p,
        }
    }

    /// Perfect fields are exactly those where every irreducible polynomial
    /// is separable; among ours, only GF(p)(t) fails this.
    pub fn is_perfect(&self) -> bool {
        !matches!(self, FieldSpec::RationalFunctions(_))
    }

    pub fn zero(&self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    /// Image of an integer under the canonical ring map Z -> K.
    pub fn from_i64(&self, n: i64) -> FieldElem {
        match *self {
            FieldSpec::Rationals => FieldElem::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => FieldElem::Prime {
                value: n.rem_euclid(p as i64) as u32,
                p,
            },
            FieldSpec::RationalFunctions(p) => {
                FieldElem::Function(RatFunc::from_poly(FpPoly::from_signed(p, &[n])))
            }
        }
    }

    /// The transcendental `t` of GF(p)(t); `None` for the other fields.
    pub fn t(&self) -> Option<FieldElem> {
        match *self {
            FieldSpec::RationalFunctions(p) => {
                Some(FieldElem::Function(RatFunc::from_poly(FpPoly::t(p))))
            }
            _ => None,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
            FieldSpec::RationalFunctions(p) => write!(f, "GF({p})(t)"),
        }
    }
}

/// An exact field element in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FieldElem {
    Rational(BigRational),
    Prime { value: u32, p: u32 },
    Function(RatFunc),
}

/// The four field operations, for callers that dispatch on an operator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(op: ArithOp, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.try_div(b),
    }
}

impl FieldElem {
    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldElem::Rational(_) => FieldSpec::Rationals,
            FieldElem::Prime { p, .. } => FieldSpec::PrimeField(*p),
            FieldElem::Function(r) => FieldSpec::RationalFunctions(r.modulus()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_zero(),
            FieldElem::Prime { value, .. } => *value == 0,
            FieldElem::Function(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_one(),
            FieldElem::Prime { value, .. } => *value == 1,
            FieldElem::Function(r) => r.numer().is_one() && r.denom().is_one(),
        }
    }

    fn mismatch(&self, other: &Self) -> Error {
        Error::FieldMismatch(self.spec().to_string(), other.spec().to_string())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => Ok(FieldElem::Rational(a + b)),
            (FieldElem::Prime { value: a, p }, FieldElem::Prime { value: b, p: q }) if p == q => {
                Ok(FieldElem::Prime {
                    value: (a + b) % p,
                    p: *p,
                })
            }
            (FieldElem::Function(a), FieldElem::Function(b)) if a.modulus() == b.modulus() => {
                Ok(FieldElem::Function(a.add(b)))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.negate())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => Ok(FieldElem::Rational(a * b)),
            (FieldElem::Prime { value: a, p }, FieldElem::Prime { value: b, p: q }) if p == q => {
                Ok(FieldElem::Prime {
                    value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                    p: *p,
                })
            }
            (FieldElem::Function(a), FieldElem::Function(b)) if a.modulus() == b.modulus() => {
                Ok(FieldElem::Function(a.mul(b)))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        if self.spec() != other.spec() {
            return Err(self.mismatch(other));
        }
        self.try_mul(&other.inv()?)
    }

    pub fn negate(&self) -> Self {
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(-a),
            FieldElem::Prime { value, p } => FieldElem::Prime {
                value: (p - value) % p,
                p: *p,
            },
            FieldElem::Function(a) => FieldElem::Function(a.neg()),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElem::Rational(a) => FieldElem::Rational(a.recip()),
            FieldElem::Prime { value, p } => FieldElem::Prime {
                value: fp_poly::inv_mod(*value, *p),
                p: *p,
            },
            FieldElem::Function(a) => FieldElem::Function(a.inv().expect("nonzero")),
        })
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = self.spec().one();
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

    /// A size measure used to prefer cheap pivots during elimination.
    pub(crate) fn cost(&self) -> usize {
        match self {
            FieldElem::Rational(r) => (r.numer().bits() + r.denom().bits()) as usize,
            FieldElem::Prime { .. } => 1,
            FieldElem::Function(r) => r.size(),
        }
    }

    /// Whether the text form is a single token that needs no parentheses when
    /// used as a coefficient.
    pub fn is_atomic(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_integer() && !r.is_negative(),
            FieldElem::Prime { .. } => true,
            FieldElem::Function(r) => r.is_polynomial() && r.numer().is_single_term(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElem::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        match self {
            FieldElem::Function(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElem::Prime { value, .. } => write!(f, "{value}"),
            FieldElem::Function(r) => write!(f, "{r}"),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                match self.$try(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $trait<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.negate()
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.negate()
    }
}
