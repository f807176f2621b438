mod common;

use std::collections::HashSet;

use common::*;
use jc_forge_core::poly::{insep_degree, is_irreducible};
use jc_forge_core::{parse_poly, Poly};
use proptest::prelude::*;

/// Reducible monic polynomials of degree `d` as the set of all products of
/// two monic factors of positive degree.
fn reducible_by_multiplication(p: u32, d: usize) -> HashSet<String> {
    let mut out = HashSet::new();
    for a in 1..=d / 2 {
        for g in monic_polys(p, a) {
            for h in monic_polys(p, d - a) {
                out.insert((&g * &h).to_string());
            }
        }
    }
    out
}

#[test]
fn irreducibility_matches_product_enumeration() {
    for p in [2, 3] {
        for d in 1..=4 {
            let reducible = reducible_by_multiplication(p, d);
            for f in monic_polys(p, d) {
                let expected = !reducible.contains(&f.to_string());
                assert_eq!(is_irreducible(&f).unwrap(), expected, "{f} over GF({p})");
            }
        }
    }
}

#[test]
fn irreducible_counts_over_gf2() {
    // Gauss: 2, 1, 2, 3 monic irreducibles of degree 1..=4.
    let counts: Vec<usize> = (1..=4)
        .map(|d| {
            monic_polys(2, d)
                .iter()
                .filter(|f| is_irreducible(f).unwrap())
                .count()
        })
        .collect();
    assert_eq!(counts, [2, 1, 2, 3]);
}

#[test]
fn inseparability_degree_divides_degree() {
    let cases = [
        (gft(2), "T^2 - t", 2),
        (gft(2), "T^4 - t", 4),
        (gft(2), "T^2 + t*T + t", 1),
        (gft(2), "T^3 - t", 1),
        (gft(2), "T^4 + t*T^2 + t", 2),
        (gft(2), "T^8 + t", 8),
        (gft(3), "T^3 - t", 3),
        (gft(3), "T^6 + t*T^3 + t", 3),
        (gft(3), "T^9 - t", 9),
        (gf(2), "T^2 + T + 1", 1),
        (q(), "T^2 - 2", 1),
    ];
    for (field, s, expected) in cases {
        let f = parse_poly(s, field).unwrap();
        assert!(is_irreducible(&f).unwrap(), "{s}");
        let q = insep_degree(&f, true).unwrap();
        assert_eq!(q, expected, "{s}");
        assert_eq!(f.degree().unwrap() % q, 0);
    }
}

#[test]
fn companion_is_annihilated() {
    for (field, s) in [
        (gft(2), "T^2 - t"),
        (gft(3), "T^3 - t"),
        (gf(2), "T^2 + T + 1"),
        (q(), "T^3 - 2*T + 1/2"),
    ] {
        let f = parse_poly(s, field).unwrap();
        let c = f.companion().unwrap();
        assert!(f.eval_at_matrix(&c).unwrap().is_zero());
        let two = jc_forge_core::Mat::block_diag(&[c.clone(), c]).unwrap();
        assert!(f.eval_at_matrix(&two).unwrap().is_zero());
    }
}

proptest! {
    #[test]
    fn gcd_divides_and_bezout_reconstructs(
        (a, b) in prop::sample::select(vec![q(), gf(3), gft(2), gft(3)])
            .prop_flat_map(|k| (poly(k, 5, 2), poly(k, 4, 2)))
    ) {
        let (g, u, v) = a.xgcd(&b).unwrap();
        prop_assert_eq!(&g, &a.gcd(&b).unwrap());
        prop_assert_eq!(&(&u * &a) + &(&v * &b), g.clone());
        if !g.is_zero() {
            prop_assert!(a.rem(&g).unwrap().is_zero());
            prop_assert!(b.rem(&g).unwrap().is_zero());
            prop_assert!(g.is_monic());
        }
    }

    #[test]
    fn division_with_remainder(
        (a, b) in prop::sample::select(vec![q(), gf(5), gft(2)])
            .prop_flat_map(|k| (poly(k, 6, 2), poly(k, 3, 2)))
    ) {
        prop_assume!(!b.is_zero());
        let (quo, rem) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&quo * &b) + &rem, a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn derivative_vanishes_iff_exponents_divisible(
        (p, f) in prop::sample::select(vec![2u64, 3])
            .prop_flat_map(|p| (Just(p), poly(gft(p), 9, 1)))
    ) {
        let all_divisible = f
            .coeffs()
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || (k as u64).is_multiple_of(p));
        prop_assert_eq!(f.derivative().is_zero(), all_divisible);
    }

    #[test]
    fn products_are_reducible(
        (g, h) in prop::sample::select(vec![q(), gf(3), gft(2)])
            .prop_flat_map(|k| (small_monic(k, 2), small_monic(k, 2)))
    ) {
        prop_assert!(!is_irreducible(&(&g * &h)).unwrap());
    }

    #[test]
    fn printed_polynomials_parse_back(
        (k, f) in prop::sample::select(all_fields()).prop_flat_map(|k| (Just(k), poly(k, 5, 3)))
    ) {
        prop_assert_eq!(parse_poly(&f.to_string(), k).unwrap(), f);
    }
}

#[test]
fn zero_polynomial_has_no_degree() {
    let z = Poly::zero(gft(2));
    assert!(z.degree().is_none());
    assert!(z.is_zero());
    assert!(z.companion().is_err());
}
