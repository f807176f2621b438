mod common;

use common::*;
use jc_forge_core::partitions::{
    enumerate_preimages, existence_check, jc_dimension, partitions_of, zeta_apply,
};
use jc_forge_core::{
    admissible_types, build_c, build_j, classification_table, decompose, inv_of, inv_of_checked,
    parse_matrix, parse_poly, random_decomposition, typ_of, validate_primary, verify_decomp, Error,
    FailedCheck, FieldSpec, Mat, Partition, Poly, VerifyOutcome,
};

fn test_fields() -> Vec<(FieldSpec, Poly, usize)> {
    [
        (gft(2), "T^2 - t", 2),
        (gft(3), "T^3 - t", 3),
        (gf(2), "T^2 + T + 1", 1),
        (q(), "T^2 + 1", 1),
    ]
    .into_iter()
    .map(|(k, f, q)| (k, parse_poly(f, k).unwrap(), q))
    .collect()
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn model_pairs_have_the_expected_invariants() {
    for (_, f, q) in test_fields() {
        for m in 1..=4 {
            for phi in partitions_of(m) {
                let (j, s0, n0) = build_j(&f, &phi).unwrap();
                let e = validate_primary(&f, &j).unwrap();
                assert_eq!(e.q(), q);
                assert_eq!(e.m(), m);
                assert_eq!(inv_of(&e).unwrap(), zeta_apply(&phi, q), "{f} {phi}");
                assert_eq!(inv_of_checked(&e, true).unwrap(), zeta_apply(&phi, q));
                assert!(verify_decomp(&e, &s0, &n0).is_valid());
                assert_eq!(typ_of(&e, &s0, &n0).unwrap(), phi);
            }
        }
    }
}

#[test]
fn companion_blocks_have_inv_psi() {
    for (_, f, _) in test_fields() {
        for m in 1..=4 {
            for psi in partitions_of(m) {
                let e = validate_primary(&f, &build_c(&f, &psi).unwrap()).unwrap();
                assert_eq!(inv_of(&e).unwrap(), psi);
                assert_eq!(e.exponent(), psi.largest());
            }
        }
    }
}

#[test]
fn existence_end_to_end() {
    for (_, f, q) in test_fields() {
        for m in 1..=4 {
            for psi in partitions_of(m) {
                let e = validate_primary(&f, &build_c(&f, &psi).unwrap()).unwrap();
                let report = admissible_types(&e).unwrap();
                assert_eq!(report.exists, existence_check(&psi, q));
                let fiber = enumerate_preimages(&psi, q).unwrap();
                let listed: Vec<_> = report.types.iter().map(|(phi, _)| phi.clone()).collect();
                assert_eq!(listed, fiber);
                for (phi, dim) in &report.types {
                    assert_eq!(*dim, jc_dimension(&psi, phi, e.degf()).unwrap());
                    let d = decompose(&e, phi).unwrap();
                    assert!(verify_decomp(&e, &d.s, &d.n).is_valid(), "{f} {psi} {phi}");
                    assert_eq!(typ_of(&e, &d.s, &d.n).unwrap(), *phi);
                }
                for phi in partitions_of(m).iter().filter(|phi| !fiber.contains(phi)) {
                    assert!(matches!(decompose(&e, phi), Err(Error::NoSuchType(_))));
                }
            }
        }
    }
}

#[test]
fn round_trip_with_transcendental_conjugators() {
    for (k, f, q) in test_fields().into_iter().filter(|(k, ..)| !k.is_perfect()) {
        for m in 1..=3 {
            for phi in partitions_of(m) {
                let (j, ..) = build_j(&f, &phi).unwrap();
                for seed in 0..3 {
                    let (r, r_inv) = conjugator(k, j.rows(), seed, true);
                    let x = conjugate(&j, &r, &r_inv);
                    let e = validate_primary(&f, &x).unwrap();
                    assert_eq!(inv_of_checked(&e, true).unwrap(), zeta_apply(&phi, q));
                    let d = decompose(&e, &phi).unwrap();
                    assert!(verify_decomp(&e, &d.s, &d.n).is_valid());
                    assert_eq!(typ_of(&e, &d.s, &d.n).unwrap(), phi);
                }
            }
        }
    }
}

#[test]
fn random_decompositions_stay_valid_and_keep_their_type() {
    let k = gft(2);
    let f = parse_poly("T^2 - t", k).unwrap();
    let e = validate_primary(&f, &build_c(&f, &p("[2,1,1]")).unwrap()).unwrap();
    for phi in enumerate_preimages(&p("[2,1,1]"), 2).unwrap() {
        let mut seen = Vec::new();
        for seed in 0..4 {
            let d = random_decomposition(&e, &phi, seed).unwrap();
            assert!(verify_decomp(&e, &d.s, &d.n).is_valid());
            assert_eq!(typ_of(&e, &d.s, &d.n).unwrap(), phi);
            seen.push(d.s);
        }
        assert_eq!(random_decomposition(&e, &phi, 2).unwrap().s, seen[2]);
    }
}

#[test]
fn perfect_fields_have_exactly_one_decomposition() {
    for (k, f, _) in test_fields().into_iter().filter(|(k, ..)| k.is_perfect()) {
        for psi in partitions_of(4) {
            let e = validate_primary(&f, &build_c(&f, &psi).unwrap()).unwrap();
            let report = admissible_types(&e).unwrap();
            assert_eq!(report.types, [(psi.clone(), 0)], "{k}");
            let d = decompose(&e, &psi).unwrap();
            for seed in 0..3 {
                let r = random_decomposition(&e, &psi, seed).unwrap();
                assert_eq!((&r.s, &r.n), (&d.s, &d.n));
            }
        }
    }
}

#[test]
fn verify_reports_the_first_failed_check() {
    let k = gft(2);
    let f = parse_poly("T^2 - t", k).unwrap();
    let a = build_c(&f, &p("[1,1]")).unwrap();
    let e = validate_primary(&f, &a).unwrap();
    let zero = Mat::zeros(k, 4, 4);
    let invalid = |s: &Mat, n: &Mat| verify_decomp(&e, s, n);

    assert_eq!(invalid(&a, &zero), VerifyOutcome::Valid);
    assert_eq!(
        invalid(&zero, &zero),
        VerifyOutcome::Invalid(FailedCheck::Sum)
    );
    assert_eq!(
        invalid(&Mat::zeros(k, 2, 2), &zero),
        VerifyOutcome::Invalid(FailedCheck::Shape)
    );

    // s = a - n with n not commuting with a.
    let n = parse_matrix("[[0,0,1,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]", k).unwrap();
    assert_eq!(
        invalid(&(&a - &n), &n),
        VerifyOutcome::Invalid(FailedCheck::Commute)
    );

    // n = a commutes with s = 0 but is not nilpotent.
    assert_eq!(
        invalid(&zero, &a),
        VerifyOutcome::Invalid(FailedCheck::Nilpotent)
    );

    // Over GF(2)(t) this pair is the type [2] decomposition of a.
    let n = parse_matrix("[[0,0,1,0],[0,0,0,1],[0,0,0,0],[0,0,0,0]]", k).unwrap();
    assert_eq!(invalid(&(&a - &n), &n), VerifyOutcome::Valid);

    // Over GF(2) the same shape fails: f(a - n) = [[0,I],[0,0]].
    let k = gf(2);
    let f = parse_poly("T^2 + T + 1", k).unwrap();
    let a = build_c(&f, &p("[1,1]")).unwrap();
    let e = validate_primary(&f, &a).unwrap();
    let n = parse_matrix("[[0,0,1,0],[0,0,0,1],[0,0,0,0],[0,0,0,0]]", k).unwrap();
    assert_eq!(
        verify_decomp(&e, &(&a - &n), &n),
        VerifyOutcome::Invalid(FailedCheck::Semisimple)
    );
}

#[test]
fn validation_rejects_bad_inputs() {
    let k = gft(2);
    let f = parse_poly("T^2 - t", k).unwrap();
    let reducible = parse_poly("T^2 - t^2", k).unwrap();
    let a = build_c(&f, &p("[1,1]")).unwrap();
    assert!(matches!(
        validate_primary(&reducible, &a),
        Err(Error::NotIrreducible(_))
    ));
    let odd = Mat::identity(k, 3);
    assert!(matches!(
        validate_primary(&f, &odd),
        Err(Error::DimensionMismatch { .. })
    ));
    assert!(matches!(
        validate_primary(&f, &Mat::identity(k, 2)),
        Err(Error::NotPrimary { .. })
    ));
    assert!(matches!(
        validate_primary(&f, &Mat::zeros(k, 2, 3)),
        Err(Error::NotSquare { .. })
    ));
    let wrong_field = build_c(&parse_poly("T^2 + T + 1", gf(2)).unwrap(), &p("[1]")).unwrap();
    assert!(matches!(
        validate_primary(&f, &wrong_field),
        Err(Error::FieldMismatch(..))
    ));
    // A non-monic f is accepted through its monic associate.
    let e = validate_primary(&f.scale(&k.t().unwrap()), &a).unwrap();
    assert_eq!(e.f(), &f);
}

#[test]
fn typ_rejects_non_nilpotent_input() {
    let k = gft(2);
    let f = parse_poly("T^2 - t", k).unwrap();
    let a = build_c(&f, &p("[1,1]")).unwrap();
    let e = validate_primary(&f, &a).unwrap();
    assert!(typ_of(&e, &Mat::zeros(k, 4, 4), &a).is_err());
}

#[test]
fn small_classification_tables() {
    let rows = classification_table(2, 2, 3).unwrap();
    let rendered: Vec<String> = rows
        .iter()
        .map(|r| {
            let types: Vec<String> = r
                .types
                .iter()
                .map(|(phi, d)| format!("{phi}:{d}"))
                .collect();
            format!("{} | {}", r.psi, types.join(" "))
        })
        .collect();
    assert_eq!(
        rendered,
        ["[1,1,1] | [1,1,1]:0 [2,1]:8", "[2,1] | [3]:4", "[3] | "]
    );
}
