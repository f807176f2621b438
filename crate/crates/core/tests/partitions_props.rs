use jc_forge_core::partitions::{
    enumerate_preimages, existence_check, has_multiple_preimages, jc_dimension, partitions_of,
    satisfies_stride_uniqueness, standard_preimage, zeta_apply, zeta_generator,
};
use jc_forge_core::Partition;
use proptest::prelude::*;

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_parts)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn zeta_is_a_monoid_homomorphism(a in partition(20, 8), b in partition(20, 8), q in 1usize..=6) {
        prop_assert_eq!(
            zeta_apply(&a.splice(&b), q),
            zeta_apply(&a, q).splice(&zeta_apply(&b, q))
        );
    }
}

proptest! {
    #[test]
    fn zeta_preserves_sum(phi in partition(30, 10), q in 1usize..=8) {
        prop_assert_eq!(zeta_apply(&phi, q).sum(), phi.sum());
    }

    #[test]
    fn zeta_is_generated_by_single_parts(phi in partition(25, 6), q in 1usize..=6) {
        let spliced = phi
            .parts()
            .iter()
            .fold(Partition::empty(), |acc, &a| acc.splice(&zeta_generator(a, q)));
        prop_assert_eq!(zeta_apply(&phi, q), spliced);
    }

    #[test]
    fn zeta_one_is_identity(phi in partition(25, 10)) {
        prop_assert_eq!(zeta_apply(&phi, 1), phi);
    }

    #[test]
    fn generator_parts_differ_by_at_most_one(a in 1usize..60, q in 1usize..=7) {
        let g = zeta_generator(a, q);
        prop_assert_eq!(g.sum(), a);
        prop_assert!(g.len() <= q);
        prop_assert!(g.largest() - g.get(g.len()) <= 1);
    }

    #[test]
    fn images_lie_in_the_image(phi in partition(15, 6), q in 1usize..=5) {
        let psi = zeta_apply(&phi, q);
        prop_assert!(existence_check(&psi, q));
        prop_assert_eq!(zeta_apply(&standard_preimage(&psi, q).unwrap(), q), psi);
    }
}

/// The full fiber by filtering all of `Part_m`, independent of the
/// preimage enumerator.
fn brute_fiber(psi: &Partition, q: usize) -> Vec<Partition> {
    partitions_of(psi.sum())
        .into_iter()
        .filter(|phi| zeta_apply(phi, q) == *psi)
        .collect()
}

#[test]
fn fibers_match_brute_force() {
    for m in 0..=12 {
        let all = partitions_of(m);
        for q in 1..=5 {
            for psi in &all {
                let fiber = brute_fiber(psi, q);
                let listed = enumerate_preimages(psi, q).unwrap();
                assert_eq!(listed, fiber, "psi = {psi}, q = {q}");
                assert_eq!(existence_check(psi, q), !fiber.is_empty());
                if fiber.is_empty() {
                    assert!(standard_preimage(psi, q).is_err());
                    continue;
                }
                assert_eq!(has_multiple_preimages(psi, q).unwrap(), fiber.len() >= 2);
                let std = standard_preimage(psi, q).unwrap();
                assert!(fiber.contains(&std));
                assert!(satisfies_stride_uniqueness(&std, q));
                for phi in &fiber {
                    assert!(phi.weight() <= psi.weight());
                    let d = jc_dimension(psi, phi, 3).unwrap();
                    assert_eq!(d, 3 * (psi.weight() - phi.weight()));
                }
            }
        }
    }
}

#[test]
fn standard_preimage_is_the_only_stride_unique_preimage() {
    for m in 1..=12 {
        for q in 2..=5 {
            for psi in partitions_of(m) {
                let unique: Vec<_> = brute_fiber(&psi, q)
                    .into_iter()
                    .filter(|phi| satisfies_stride_uniqueness(phi, q))
                    .collect();
                if existence_check(&psi, q) {
                    assert_eq!(
                        unique,
                        [standard_preimage(&psi, q).unwrap()],
                        "psi = {psi}, q = {q}"
                    );
                } else {
                    assert!(unique.is_empty());
                }
            }
        }
    }
}

#[test]
fn every_partition_lies_in_exactly_one_fiber() {
    for q in 2..=4 {
        for m in 1..=10 {
            let covered: usize = partitions_of(m)
                .iter()
                .map(|psi| enumerate_preimages(psi, q).unwrap().len())
                .sum();
            assert_eq!(covered, partitions_of(m).len());
        }
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=12).map(|m| partitions_of(m).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
}
