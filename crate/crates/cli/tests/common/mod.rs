#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use jc_forge_core::{parse_field, parse_poly, FieldElem, FieldSpec, Mat, Poly};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub struct TestField {
    pub name: &'static str,
    pub field: FieldSpec,
    pub f: Poly,
    pub q: usize,
}

/// `T^2 - t` over GF(2)(t), `T^3 - t` over GF(3)(t), `T^2 + T + 1` over GF(2).
pub fn test_fields() -> Vec<TestField> {
    [
        ("GF(2)(t), T^2-t", "GF(2)(t)", "T^2 - t", 2),
        ("GF(3)(t), T^3-t", "GF(3)(t)", "T^3 - t", 3),
        ("GF(2), T^2+T+1", "GF(2)", "T^2 + T + 1", 1),
    ]
    .into_iter()
    .map(|(name, field, f, q)| {
        let field = parse_field(field).unwrap();
        TestField {
            name,
            f: parse_poly(f, field).unwrap(),
            field,
            q,
        }
    })
    .collect()
}

/// A prime-field constant, or `a + b t` over GF(p)(t).
pub fn random_small(field: FieldSpec, rng: &mut ChaCha8Rng) -> FieldElem {
    let p = field.characteristic().max(7) as i64;
    let a = field.from_i64(rng.gen_range(0..p));
    match field.t() {
        Some(t) if rng.gen_bool(0.3) => &a + &(&t * &field.from_i64(rng.gen_range(0..p))),
        _ => a,
    }
}

/// A uniformly random element of the prime subfield (for Q, of -3..=3).
pub fn random_constant(field: FieldSpec, rng: &mut ChaCha8Rng) -> FieldElem {
    match field.characteristic() {
        0 => field.from_i64(rng.gen_range(-3..=3)),
        p => field.from_i64(rng.gen_range(0..p as i64)),
    }
}

/// A random invertible `R = L U` with unit-triangular factors over the
/// prime subfield, and its inverse.
pub fn random_conjugator(field: FieldSpec, n: usize, rng: &mut ChaCha8Rng) -> (Mat, Mat) {
    let mut l = Mat::identity(field, n);
    let mut u = Mat::identity(field, n);
    for i in 0..n {
        for j in 0..i {
            l[(i, j)] = random_constant(field, rng);
            u[(j, i)] = random_constant(field, rng);
        }
    }
    let r = &l * &u;
    let r_inv = r.inverse().expect("unit-triangular factors");
    (r, r_inv)
}

pub fn conjugate(r: &Mat, x: &Mat, r_inv: &Mat) -> Mat {
    &(r * x) * r_inv
}

pub fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_jc-forge"))
}

pub fn run_cli(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .env_remove("JC_FORGE_BUDGET")
        .output()
        .expect("spawn jc-forge")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

pub fn run_cli_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(bin());
    cmd.args(args).env_remove("JC_FORGE_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("spawn jc-forge")
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}
