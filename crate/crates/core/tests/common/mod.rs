#![allow(dead_code)]

use jc_forge_core::fields::{FpPoly, RatFunc};
use jc_forge_core::{FieldElem, FieldSpec, Mat, Poly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q() -> FieldSpec {
    FieldSpec::Rationals
}

pub fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime_field(p).unwrap()
}

pub fn gft(p: u64) -> FieldSpec {
    FieldSpec::rational_functions(p).unwrap()
}

pub fn all_fields() -> Vec<FieldSpec> {
    vec![q(), gf(2), gf(3), gf(5), gft(2), gft(3)]
}

/// Elements with small numerators and denominators; over GF(p)(t) both
/// have t-degree at most `deg`.
pub fn elem(field: FieldSpec, deg: usize) -> BoxedStrategy<FieldElem> {
    match field {
        FieldSpec::Rationals => (-40i64..40, 1i64..12)
            .prop_map(move |(a, b)| &field.from_i64(a) / &field.from_i64(b))
            .boxed(),
        FieldSpec::PrimeField(p) => (0..p as i64).prop_map(move |a| field.from_i64(a)).boxed(),
        FieldSpec::RationalFunctions(p) => (
            prop::collection::vec(0..p, 0..=deg + 1),
            prop::collection::vec(0..p, 1..=deg + 1),
        )
            .prop_filter_map("zero denominator", move |(n, d)| {
                RatFunc::new(FpPoly::new(p, n), FpPoly::new(p, d)).map(FieldElem::Function)
            })
            .boxed(),
    }
}

pub fn nonzero_elem(field: FieldSpec, deg: usize) -> BoxedStrategy<FieldElem> {
    elem(field, deg)
        .prop_filter("zero", |e| !e.is_zero())
        .boxed()
}

pub fn square(field: FieldSpec, n: usize, deg: usize) -> BoxedStrategy<Mat> {
    if n == 0 {
        return Just(Mat::zeros(field, 0, 0)).boxed();
    }
    prop::collection::vec(elem(field, deg), n * n)
        .prop_map(move |v| Mat::from_rows(field, v.chunks(n).map(<[_]>::to_vec).collect()).unwrap())
        .boxed()
}

pub fn poly(field: FieldSpec, max_deg: usize, coeff_deg: usize) -> BoxedStrategy<Poly> {
    prop::collection::vec(elem(field, coeff_deg), 0..=max_deg + 1)
        .prop_map(move |c| Poly::new(field, c).unwrap())
        .boxed()
}

/// Every monic polynomial of degree `d` over GF(p).
pub fn monic_polys(p: u32, d: usize) -> Vec<Poly> {
    let field = gf(p as u64);
    let count = (p as usize).pow(d as u32);
    (0..count)
        .map(|mut code| {
            let mut c: Vec<i64> = (0..d)
                .map(|_| {
                    let r = code % p as usize;
                    code /= p as usize;
                    r as i64
                })
                .collect();
            c.push(1);
            Poly::from_i64(field, &c)
        })
        .collect()
}

pub fn random_in(field: FieldSpec, rng: &mut ChaCha8Rng, with_t: bool) -> FieldElem {
    let c = match field.characteristic() {
        0 => field.from_i64(rng.gen_range(-3..=3)),
        p => field.from_i64(rng.gen_range(0..p as i64)),
    };
    match field.t() {
        Some(t) if with_t && rng.gen_bool(0.3) => &c + &(&t * &field.from_i64(rng.gen_range(1..3))),
        _ => c,
    }
}

/// `(R, R^{-1})` with `R = L U` unit-triangular, so always invertible.
pub fn conjugator(field: FieldSpec, n: usize, seed: u64, with_t: bool) -> (Mat, Mat) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut l = Mat::identity(field, n);
    let mut u = Mat::identity(field, n);
    for i in 0..n {
        for j in 0..i {
            l[(i, j)] = random_in(field, &mut rng, with_t);
            u[(j, i)] = random_in(field, &mut rng, with_t);
        }
    }
    let r = &l * &u;
    let r_inv = r.inverse().unwrap();
    (r, r_inv)
}

pub fn conjugate(x: &Mat, r: &Mat, r_inv: &Mat) -> Mat {
    &(r * x) * r_inv
}

/// Integers in -3..=3, residues, or `a + b t` with residues `a, b`.
pub fn small_elem(field: FieldSpec) -> BoxedStrategy<FieldElem> {
    let p = field.characteristic() as i64;
    (-3i64..=3, 0..p.max(1))
        .prop_map(move |(a, b)| match field.t() {
            Some(t) => &field.from_i64(a) + &(&t * &field.from_i64(b)),
            None => field.from_i64(a),
        })
        .boxed()
}

/// Monic with degree in `1..=max_deg` and small lower coefficients.
pub fn small_monic(field: FieldSpec, max_deg: usize) -> BoxedStrategy<Poly> {
    (1..=max_deg)
        .prop_flat_map(move |d| prop::collection::vec(small_elem(field), d))
        .prop_map(move |mut c| {
            c.push(field.one());
            Poly::new(field, c).unwrap()
        })
        .boxed()
}
