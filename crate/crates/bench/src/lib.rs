//! Fixtures shared by the benchmarks.

use jc_forge_core::{
    build_c, build_j, parse_field, parse_poly, validate_primary, Mat, Partition, PrimaryEndo,
};

/// `(label, field, f)` for the fields the benchmarks sweep.
pub const FIELDS: [(&str, &str, &str); 3] = [
    ("gf2t", "GF(2)(t)", "T^2 - t"),
    ("gf3t", "GF(3)(t)", "T^3 - t"),
    ("gf2", "GF(2)", "T^2 + T + 1"),
];

/// `x = R J_{f,phi} R^{-1}` with a fixed dense unit-triangular `R`.
pub fn conjugated_model(field: &str, f: &str, phi: &str) -> PrimaryEndo {
    let k = parse_field(field).unwrap();
    let f = parse_poly(f, k).unwrap();
    let phi: Partition = phi.parse().unwrap();
    let (j, ..) = build_j(&f, &phi).unwrap();
    let n = j.rows();
    let mut l = Mat::identity(k, n);
    let mut u = Mat::identity(k, n);
    for i in 0..n {
        for c in 0..i {
            l[(i, c)] = k.from_i64(((i * 7 + c * 3) % 5) as i64);
            u[(c, i)] = k.from_i64(((i * 5 + c) % 3) as i64);
        }
    }
    let r = &l * &u;
    let x = &(&r * &j) * &r.inverse().unwrap();
    validate_primary(&f, &x).unwrap()
}

pub fn companion_model(field: &str, f: &str, psi: &str) -> PrimaryEndo {
    let k = parse_field(field).unwrap();
    let f = parse_poly(f, k).unwrap();
    let x = build_c(&f, &psi.parse().unwrap()).unwrap();
    validate_primary(&f, &x).unwrap()
}
