//! Faithful character degrees of the double covers `2.S_n` and `2.A_n`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::degree::{merge_counts, DegreeSet, GroupKind, GroupTag};
use crate::error::GroupError;
use crate::partition::{
    enumerate_strict_partitions, strict_partitions_with_largest_part, ProductAccumulator,
    StrictPartition,
};

/// `n!/(λ_1!···λ_m!) · ∏_{i<j} (λ_i−λ_j)/(λ_i+λ_j)`.
pub fn bar_quotient(lambda: &StrictPartition) -> BigUint {
    let parts = lambda.parts();
    let mut num = ProductAccumulator::new();
    let mut den = ProductAccumulator::new();
    for i in 2..=u64::from(lambda.n()) {
        num.push(i);
    }
    for &p in parts {
        for i in 2..=u64::from(p) {
            den.push(i);
        }
    }
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            num.push(u64::from(a - b));
            den.push(u64::from(a + b));
        }
    }
    let (num, den) = (num.finish(), den.finish());
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "bar quotient of {lambda} is not an integer");
    q
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinDegreeRecord {
    pub label: StrictPartition,
    pub cover: GroupKind,
    pub degree: BigUint,
    /// Number of characters with this label and degree (1 or 2).
    pub multiplicity: u8,
}

fn record(lambda: StrictPartition, cover: GroupKind) -> SpinDegreeRecord {
    let n = lambda.n();
    let m = lambda.m();
    let odd = (n - m) % 2 == 1;
    let d = bar_quotient(&lambda) << ((n - m) / 2);
    let (degree, multiplicity) = match (cover, odd) {
        (GroupKind::CoverSymmetric, true) => (d, 2),
        (GroupKind::CoverSymmetric, false) => (d, 1),
        (GroupKind::CoverAlternating, true) => (d, 1),
        (GroupKind::CoverAlternating, false) => {
            assert!(d.is_even(), "spin degree {d} of {lambda} should be even");
            (d >> 1u32, 2)
        }
        _ => unreachable!("record() is only called for cover kinds"),
    };
    SpinDegreeRecord {
        label: lambda,
        cover,
        degree,
        multiplicity,
    }
}

fn require_cover(group: GroupTag) -> Result<(), GroupError> {
    if group.kind().is_cover() {
        Ok(())
    } else {
        Err(GroupError::WrongKind {
            expected: "double cover",
            got: group.to_string(),
        })
    }
}

/// One record per strict partition of `n`, in descending lexicographic order.
pub fn spin_degrees(cover: GroupTag) -> Result<Vec<SpinDegreeRecord>, GroupError> {
    require_cover(cover)?;
    Ok(enumerate_strict_partitions(cover.n())
        .map(|lambda| record(lambda, cover.kind()))
        .collect())
}

/// Degrees of `spin_degrees` with multiplicities summed.
pub fn faithful_degree_set(cover: GroupTag) -> Result<DegreeSet, GroupError> {
    require_cover(cover)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("failed to build worker pool");
    Ok(compute_faithful(cover, &pool))
}

pub(crate) fn compute_faithful(cover: GroupTag, pool: &rayon::ThreadPool) -> DegreeSet {
    let n = cover.n();
    let kind = cover.kind();
    let chunks: Vec<BTreeMap<BigUint, u64>> = pool.install(|| {
        (1..=n)
            .into_par_iter()
            .map(|k| {
                let mut local = BTreeMap::new();
                for lambda in strict_partitions_with_largest_part(n, k) {
                    let r = record(lambda, kind);
                    *local.entry(r.degree).or_insert(0) += u64::from(r.multiplicity);
                }
                local
            })
            .collect()
    });
    DegreeSet::from_counts(cover, merge_counts(chunks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn bar_quotient_examples() {
        assert_eq!(bar_quotient(&sp(&[4, 1])), BigUint::from(3u32));
        assert_eq!(bar_quotient(&sp(&[3, 2])), BigUint::from(2u32));
        assert_eq!(bar_quotient(&sp(&[9])), BigUint::from(1u32));
    }

    #[test]
    fn cover_of_a5() {
        let tag = GroupTag::cover_alternating(5).unwrap();
        let mut multiset: Vec<u64> = spin_degrees(tag)
            .unwrap()
            .iter()
            .flat_map(|r| {
                std::iter::repeat_n(u64::try_from(&r.degree).unwrap(), r.multiplicity.into())
            })
            .collect();
        multiset.sort();
        assert_eq!(multiset, vec![2, 2, 4, 6]);
        let set = faithful_degree_set(tag).unwrap();
        let got: Vec<u64> = set.degrees().iter().map(|d| u64::try_from(d).unwrap()).collect();
        assert_eq!(got, vec![2, 4, 6]);
    }

    #[test]
    fn basic_spin_of_2a13() {
        let tag = GroupTag::cover_alternating(13).unwrap();
        let recs = spin_degrees(tag).unwrap();
        let basic = recs.iter().find(|r| r.label.parts() == [13]).unwrap();
        assert_eq!(basic.degree, BigUint::from(32u32));
        assert_eq!(basic.multiplicity, 2);
        assert!(faithful_degree_set(tag).unwrap().contains(&BigUint::from(20800u32)));
        let a12 = faithful_degree_set(GroupTag::cover_alternating(12).unwrap()).unwrap();
        assert!(a12.contains(&BigUint::from(7776u32)));
    }

    #[test]
    fn rejects_ordinary_tags() {
        assert!(spin_degrees(GroupTag::symmetric(6).unwrap()).is_err());
    }
}
