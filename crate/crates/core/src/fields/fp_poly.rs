//! Dense polynomials over GF(p) in the indeterminate `t`.
//!
//! These are the numerators and denominators of elements of GF(p)(t). The
//! prime is small (bounded by [`super::MAX_PRIME`]), so coefficients live in
//! `u32` and products are accumulated in `u64` before reduction.

use std::cmp::Ordering;
use std::fmt;

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let p64 = p as u64;
    let mut acc = 1u64;
    let mut b = base as u64 % p64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p64;
        }
        b = b * b % p64;
        exp >>= 1;
    }
    acc as u32
}

/// A polynomial in `t` over GF(p), coefficients in ascending degree order with
/// no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FpPoly {
    p: u32,
    coeffs: Vec<u32>,
}

impl FpPoly {
    pub fn new(p: u32, coeffs: Vec<u32>) -> Self {
        let mut poly = FpPoly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        poly.trim();
        poly
    }

    /// Builds from signed coefficients, reducing each into `[0, p)`.
    pub fn from_signed(p: u32, coeffs: &[i64]) -> Self {
        let coeffs = coeffs
            .iter()
            .map(|&c| c.rem_euclid(p as i64) as u32)
            .collect();
        FpPoly::new(p, coeffs)
    }

    pub fn zero(p: u32) -> Self {
        FpPoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u32) -> Self {
        FpPoly { p, coeffs: vec![1] }
    }

    pub fn constant(p: u32, c: u32) -> Self {
        FpPoly::new(p, vec![c])
    }

    /// The indeterminate `t`.
    pub fn t(p: u32) -> Self {
        FpPoly {
            p,
            coeffs: vec![0, 1],
        }
    }

    pub fn monomial(p: u32, c: u32, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        FpPoly::new(p, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u32 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.p;
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, &d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = (*c + d) % p;
        }
        let mut out = FpPoly { p, coeffs };
        out.trim();
        out
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        FpPoly {
            p,
            coeffs: self.coeffs.iter().map(|&c| (p - c) % p).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.p as u64;
        let c = c as u64 % p;
        if c == 0 {
            return FpPoly::zero(self.p);
        }
        FpPoly {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .map(|&a| (a as u64 * c % p) as u32)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.p);
        }
        if other.coeffs.len() == 1 {
            return self.scale(other.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return other.scale(self.coeffs[0]);
        }
        let p = self.p as u64;
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] += a as u64 * b as u64;
            }
        }
        FpPoly::new(self.p, acc.into_iter().map(|c| (c % p) as u32).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d_deg = divisor.degree().expect("division by the zero polynomial");
        let p = self.p as u64;
        let lead_inv = inv_mod(divisor.lead(), self.p) as u64;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return (FpPoly::zero(self.p), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - d_deg];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d_deg] as u64 * lead_inv % p;
            if c == 0 {
                continue;
            }
            quot[k] = c as u32;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let sub = c * dc as u64 % p;
                rem[k + j] = ((rem[k + j] as u64 + p - sub) % p) as u32;
            }
        }
        rem.truncate(d_deg);
        (FpPoly::new(self.p, quot), FpPoly::new(self.p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact division, for callers that know `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact division in GF(p)[t]");
        q
    }

    /// Returns `(lead, self / lead)`; the zero polynomial maps to `(0, 0)`.
    pub fn monic(&self) -> (u32, Self) {
        let lead = self.lead();
        if lead == 0 || lead == 1 {
            return (lead, self.clone());
        }
        (lead, self.scale(inv_mod(lead, self.p)))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic().1
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = FpPoly::one(self.p);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let p = self.p as u64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| ((k as u64 % p) * c as u64 % p) as u32)
            .collect();
        FpPoly::new(self.p, coeffs)
    }

    /// Whether the canonical text form is a single token (no `+`).
    pub(crate) fn is_single_term(&self) -> bool {
        self.coeffs.iter().filter(|&&c| c != 0).count() <= 1
    }

    pub(crate) fn fmt_var(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "{var}")?,
                (1, c) => write!(f, "{c}*{var}")?,
                (k, 1) => write!(f, "{var}^{k}")?,
                (k, c) => write!(f, "{c}*{var}^{k}")?,
            }
        }
        Ok(())
    }

    /// Total order used only to pick cheap pivots; not an algebraic order.
    pub(crate) fn size(&self) -> usize {
        self.coeffs.len()
    }
}

impl PartialOrd for FpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FpPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_var(f, "t")
    }
}
