use std::fmt;

use super::fp_poly::FpPoly;

/// An element of GF(p)(t), kept as a reduced fraction with monic denominator.
///
/// Zero is stored as `0/1`, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: FpPoly,
    den: FpPoly,
}

impl RatFunc {
    pub fn from_poly(num: FpPoly) -> Self {
        let p = num.modulus();
        RatFunc {
            num,
            den: FpPoly::one(p),
        }
    }

    /// Builds `num / den`, returning `None` when `den` is zero.
    pub fn new(num: FpPoly, den: FpPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalize(num, den))
    }

    fn normalize(num: FpPoly, den: FpPoly) -> Self {
        let p = num.modulus();
        if num.is_zero() {
            return RatFunc {
                num,
                den: FpPoly::one(p),
            };
        }
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g), den.exact_div(&g))
            }
        };
        let (lead, den) = den.monic();
        let num = if lead == 1 {
            num
        } else {
            num.scale(super::fp_poly::inv_mod(lead, p))
        };
        RatFunc { num, den }
    }

    pub fn zero(p: u32) -> Self {
        RatFunc::from_poly(FpPoly::zero(p))
    }

    pub fn one(p: u32) -> Self {
        RatFunc::from_poly(FpPoly::one(p))
    }

    pub fn modulus(&self) -> u32 {
        self.num.modulus()
    }

    pub fn numer(&self) -> &FpPoly {
        &self.num
    }

    pub fn denom(&self) -> &FpPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return RatFunc::from_poly(num);
            }
            return Self::normalize(num, self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::normalize(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero(self.modulus());
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc::from_poly(self.num.mul(&other.num));
        }
        // Cross-cancel so the product of the reduced halves is already reduced.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), other.den.clone())
        } else {
            (self.num.exact_div(&g1), other.den.exact_div(&g1))
        };
        let (n2, d1) = if g2.is_one() {
            (other.num.clone(), self.den.clone())
        } else {
            (other.num.exact_div(&g2), self.den.exact_div(&g2))
        };
        let num = n1.mul(&n2);
        let (lead, den) = d1.mul(&d2).monic();
        let num = if lead == 1 {
            num
        } else {
            num.scale(super::fp_poly::inv_mod(lead, self.modulus()))
        };
        RatFunc { num, den }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (lead, num) = self.num.monic();
        let den = self
            .den
            .scale(super::fp_poly::inv_mod(lead, self.modulus()));
        Some(RatFunc { num: den, den: num })
    }

    /// Rough size used for pivot selection.
    pub(crate) fn size(&self) -> usize {
        self.num.size() + self.den.size()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}
