//! Irreducibility by bounded exhaustive trial division.
//!
//! Over GF(p) every monic candidate of degree at most `deg f / 2` is tried.
//! Over GF(p)(t) the polynomial is first cleared to a primitive element of
//! GF(p)[t][T]; any factor can then be taken primitive with `t`-degree at
//! most that of `f`, leading coefficient dividing the leading coefficient of
//! `f` and constant coefficient dividing its constant coefficient. Over Q the
//! same reduction to Z[T] is combined with Mignotte's coefficient bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Poly;
use crate::error::{Error, Result};
use crate::fields::{FieldElem, FieldSpec, FpPoly, RatFunc};

/// Maximum number of trial divisors examined before giving up.
pub const DEFAULT_IRREDUCIBILITY_BUDGET: u64 = 10_000_000;

pub fn is_irreducible(f: &Poly) -> Result<bool> {
    is_irreducible_with_budget(f, DEFAULT_IRREDUCIBILITY_BUDGET)
}

/// Decides irreducibility, failing with [`Error::DegreeTooLarge`] if the
/// candidate space is larger than `budget`.
pub fn is_irreducible_with_budget(f: &Poly, budget: u64) -> Result<bool> {
    let n = match f.degree() {
        None | Some(0) => return Ok(false),
        Some(1) => return Ok(true),
        Some(n) => n,
    };
    let f = f.monic();
    match f.field() {
        FieldSpec::PrimeField(p) => prime_field(&f, p, n, budget),
        FieldSpec::RationalFunctions(p) => function_field(&f, p, n, budget),
        FieldSpec::Rationals => rationals(&f, n, budget),
    }
}

fn check_budget(needed: u128, budget: u64) -> Result<()> {
    if needed > budget as u128 {
        return Err(Error::DegreeTooLarge { needed, budget });
    }
    Ok(())
}

fn to_fp_poly(f: &Poly, p: u32) -> FpPoly {
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| match c {
            FieldElem::Prime { value, .. } => *value,
            _ => unreachable!("coefficient outside GF(p)"),
        })
        .collect();
    FpPoly::new(p, coeffs)
}

/// All polynomials over GF(p) of degree `< len` (including zero), as an
/// iterator over coefficient vectors.
fn all_polys(p: u32, len: usize) -> impl Iterator<Item = FpPoly> {
    let total = (p as u64).pow(len as u32);
    (0..total).map(move |mut idx| {
        let mut coeffs = Vec::with_capacity(len);
        for _ in 0..len {
            coeffs.push((idx % p as u64) as u32);
            idx /= p as u64;
        }
        FpPoly::new(p, coeffs)
    })
}

fn prime_field(f: &Poly, p: u32, n: usize, budget: u64) -> Result<bool> {
    let needed: u128 = (1..=n / 2).map(|d| (p as u128).pow(d as u32)).sum();
    check_budget(needed, budget)?;
    let f = to_fp_poly(f, p);
    for d in 1..=n / 2 {
        for low in all_polys(p, d) {
            let candidate = low.add(&FpPoly::monomial(p, 1, d));
            if f.rem(&candidate).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Monic divisors of a nonzero polynomial over GF(p).
fn monic_divisors(a: &FpPoly) -> Vec<FpPoly> {
    let p = a.modulus();
    let deg = a.degree().expect("nonzero");
    let mut out = Vec::new();
    for e in 0..=deg {
        for low in all_polys(p, e) {
            let d = low.add(&FpPoly::monomial(p, 1, e));
            if a.rem(&d).is_zero() {
                out.push(d);
            }
        }
    }
    out
}

fn function_field(f: &Poly, p: u32, n: usize, budget: u64) -> Result<bool> {
    // Clear denominators: multiply through by the lcm of all denominators.
    let rats: Vec<&RatFunc> = f
        .coeffs()
        .iter()
        .map(|c| c.as_ratfunc().expect("coefficient outside GF(p)(t)"))
        .collect();
    let mut lcm = FpPoly::one(p);
    for r in &rats {
        let g = lcm.gcd(r.denom());
        lcm = lcm.mul(&r.denom().exact_div(&g));
    }
    let mut coeffs: Vec<FpPoly> = rats
        .iter()
        .map(|r| r.numer().mul(&lcm.exact_div(r.denom())))
        .collect();
    let content = coeffs.iter().fold(FpPoly::zero(p), |g, c| g.gcd(c));
    coeffs = coeffs.iter().map(|c| c.exact_div(&content)).collect();

    if coeffs[0].is_zero() {
        // T divides f and n >= 2.
        return Ok(false);
    }
    let t_degree = coeffs.iter().filter_map(FpPoly::degree).max().unwrap_or(0);
    let leads = monic_divisors(&coeffs[n]);
    let constants: Vec<FpPoly> = monic_divisors(&coeffs[0])
        .into_iter()
        .flat_map(|d| (1..p).map(move |u| d.scale(u)))
        .collect();
    let middle = (p as u128).pow(t_degree as u32 + 1);
    let needed: u128 = (1..=n / 2)
        .map(|d| leads.len() as u128 * constants.len() as u128 * middle.pow(d as u32 - 1))
        .sum();
    check_budget(needed, budget)?;

    for d in 1..=n / 2 {
        let mid_count = middle.pow(d as u32 - 1) as u64;
        for lead in &leads {
            for c0 in &constants {
                for mut idx in 0..mid_count {
                    let mut g = Vec::with_capacity(d + 1);
                    g.push(c0.clone());
                    for _ in 1..d {
                        let mut cs = Vec::with_capacity(t_degree + 1);
                        for _ in 0..=t_degree {
                            cs.push((idx % p as u64) as u32);
                            idx /= p as u64;
                        }
                        g.push(FpPoly::new(p, cs));
                    }
                    g.push(lead.clone());
                    if divides_bivariate(&g, &coeffs) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Exact division test in GF(p)[t][T]: every quotient step must divide
/// exactly in GF(p)[t].
fn divides_bivariate(g: &[FpPoly], f: &[FpPoly]) -> bool {
    let d = g.len() - 1;
    let mut rem: Vec<FpPoly> = f.to_vec();
    while rem.len() > d {
        let top = rem.len() - 1;
        let (q, r) = rem[top].div_rem(&g[d]);
        if !r.is_zero() {
            return false;
        }
        let shift = top - d;
        for (j, gc) in g.iter().enumerate() {
            rem[shift + j] = rem[shift + j].sub(&q.mul(gc));
        }
        debug_assert!(rem[top].is_zero());
        while rem.last().is_some_and(FpPoly::is_zero) {
            rem.pop();
        }
    }
    rem.is_empty()
}

fn int_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn rationals(f: &Poly, n: usize, budget: u64) -> Result<bool> {
    let rats: Vec<&BigRational> = f
        .coeffs()
        .iter()
        .map(|c| c.as_rational().expect("coefficient outside Q"))
        .collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let mut ints: Vec<BigInt> = rats
        .iter()
        .map(|r| r.numer() * (&lcm / r.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    ints.iter_mut().for_each(|c| *c = &*c / &content);

    if ints[0].is_zero() {
        return Ok(false);
    }
    let norm = ints
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::INFINITY).powi(2))
        .sum::<f64>()
        .sqrt();
    let leads = int_divisors(&ints[n]);
    let constants: Vec<BigInt> = int_divisors(&ints[0])
        .into_iter()
        .flat_map(|d| [d.clone(), -d])
        .collect();

    let bound = |d: usize, j: usize| -> i64 {
        let b = (binomial(d, j) as f64 * norm).ceil();
        if b.is_finite() && b < i64::MAX as f64 {
            b as i64
        } else {
            i64::MAX
        }
    };
    let mut needed: u128 = 0;
    for d in 1..=n / 2 {
        let mut count = leads.len() as u128 * constants.len() as u128;
        for j in 1..d {
            count = count.saturating_mul(2 * bound(d, j) as u128 + 1);
        }
        needed = needed.saturating_add(count);
    }
    check_budget(needed, budget)?;

    let q = FieldSpec::Rationals;
    let to_q = |v: &BigInt| FieldElem::Rational(BigRational::from_integer(v.clone()));
    let target = Poly::from_coeffs(q, ints.iter().map(to_q).collect());
    for d in 1..=n / 2 {
        let ranges: Vec<i64> = (1..d).map(|j| bound(d, j)).collect();
        for lead in &leads {
            for c0 in &constants {
                let mut mid: Vec<i64> = ranges.iter().map(|b| -b).collect();
                loop {
                    let mut coeffs = vec![to_q(c0)];
                    coeffs.extend(mid.iter().map(|&m| to_q(&BigInt::from(m))));
                    coeffs.push(to_q(lead));
                    let g = Poly::from_coeffs(q, coeffs);
                    if target.rem(&g)?.is_zero() {
                        return Ok(false);
                    }
                    // Odometer over the middle coefficients.
                    let mut k = 0;
                    loop {
                        if k == mid.len() {
                            break;
                        }
                        if mid[k] < ranges[k] {
                            mid[k] += 1;
                            break;
                        }
                        mid[k] = -ranges[k];
                        k += 1;
                    }
                    if k == mid.len() {
                        break;
                    }
                }
            }
        }
    }
    Ok(true)
}
