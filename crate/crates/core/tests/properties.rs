use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

use chardeg::degree::factorial;
use chardeg::number_theory::{factorize, Factorization};
use chardeg::partition::enumerate_partitions;
use chardeg::{cdset, degree, DegreeEngine, GroupKind, GroupTag, Partition};

fn partition(max_n: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=max_n, 1..8).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn kind() -> impl Strategy<Value = GroupKind> {
    prop_oneof![
        Just(GroupKind::Symmetric),
        Just(GroupKind::Alternating),
        Just(GroupKind::CoverSymmetric),
        Just(GroupKind::CoverAlternating),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_preserves_degree(lambda in partition(9)) {
        prop_assert_eq!(degree(&lambda), degree(&lambda.conjugate()));
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda);
    }

    #[test]
    fn degree_divides_factorial(lambda in partition(9)) {
        let f = degree(&lambda);
        prop_assert!((factorial(lambda.n()) % &f).is_zero());
        prop_assert_eq!(f * lambda.hook_product(), factorial(lambda.n()));
    }

    #[test]
    fn cache_round_trip(kind in kind(), n in 4u32..=25, mult in any::<bool>()) {
        let tag = GroupTag::new(kind, n).unwrap();
        let set = DegreeEngine::new(1).degree_set(tag, mult).unwrap();
        let text = cdset::encode(&set);
        prop_assert_eq!(&cdset::decode(&text).unwrap(), &*set);
        prop_assert!(cdset::decode(&text[..text.len() - 1]).is_err());
    }

    #[test]
    fn factorization_round_trip(v in 1u64..=u64::MAX) {
        let f = factorize(&BigUint::from(v)).unwrap();
        prop_assert_eq!(f.value(), &BigUint::from(v));
        let parsed: Factorization = f.to_string().parse().unwrap();
        prop_assert_eq!(parsed, f);
    }
}

#[test]
fn partition_counts_small() {
    let counts: Vec<usize> = (0..=12).map(|n| enumerate_partitions(n).count()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
}
