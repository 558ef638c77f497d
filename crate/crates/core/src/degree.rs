//! Character degrees of `S_n` and `A_n`.
//!
//! Degrees come from the hook length formula as an exact division of `n!` by
//! the hook product. Degree sets are built by splitting the partition stream
//! by largest part across a worker pool and merging the per-chunk
//! multiplicity maps in chunk order, so the result does not depend on the
//! number of workers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::cdset;
use crate::error::{DegreeSetError, EngineError, GroupError};
use crate::number_theory::{self, primes_up_to};
use crate::partition::{partitions_with_largest_part, Partition, ProductAccumulator};
use crate::spin;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Symmetric,
    Alternating,
    /// Faithful characters of the double cover `2.S_n`.
    CoverSymmetric,
    /// Faithful characters of the double cover `2.A_n`.
    CoverAlternating,
}

impl GroupKind {
    pub fn label(self) -> &'static str {
        match self {
            GroupKind::Symmetric => "S",
            GroupKind::Alternating => "A",
            GroupKind::CoverSymmetric => "2S",
            GroupKind::CoverAlternating => "2A",
        }
    }

    pub fn is_cover(self) -> bool {
        matches!(self, GroupKind::CoverSymmetric | GroupKind::CoverAlternating)
    }
}

impl FromStr for GroupKind {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        match s {
            "S" => Ok(GroupKind::Symmetric),
            "A" => Ok(GroupKind::Alternating),
            "2S" => Ok(GroupKind::CoverSymmetric),
            "2A" => Ok(GroupKind::CoverAlternating),
            other => Err(GroupError::UnknownLabel(other.to_string())),
        }
    }
}

/// A group kind together with its degree `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupTag {
    kind: GroupKind,
    n: u32,
}

impl GroupTag {
    pub fn new(kind: GroupKind, n: u32) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroDegree);
        }
        if kind.is_cover() && n < 4 {
            return Err(GroupError::CoverTooSmall(n));
        }
        Ok(GroupTag { kind, n })
    }

    pub fn symmetric(n: u32) -> Result<Self, GroupError> {
        GroupTag::new(GroupKind::Symmetric, n)
    }

    pub fn alternating(n: u32) -> Result<Self, GroupError> {
        GroupTag::new(GroupKind::Alternating, n)
    }

    pub fn cover_symmetric(n: u32) -> Result<Self, GroupError> {
        GroupTag::new(GroupKind::CoverSymmetric, n)
    }

    pub fn cover_alternating(n: u32) -> Result<Self, GroupError> {
        GroupTag::new(GroupKind::CoverAlternating, n)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Order of the group itself: `n!`, `n!/2`, `2·n!`, `n!`.
    pub fn order(&self) -> BigUint {
        let f = factorial(self.n);
        match self.kind {
            GroupKind::Symmetric => f,
            GroupKind::Alternating => alternating_order(self.n),
            GroupKind::CoverSymmetric => f * 2u32,
            GroupKind::CoverAlternating => f,
        }
    }

    /// `Σ χ(1)²` over the characters the degree set describes: all of them
    /// for `S_n`/`A_n`, the faithful ones for the covers.
    pub fn square_sum(&self) -> BigUint {
        match self.kind {
            GroupKind::Symmetric | GroupKind::CoverSymmetric => factorial(self.n),
            GroupKind::Alternating | GroupKind::CoverAlternating => alternating_order(self.n),
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.kind.label(), self.n)
    }
}

/// `n!`.
pub fn factorial(n: u32) -> BigUint {
    let mut acc = ProductAccumulator::new();
    for i in 2..=u64::from(n) {
        acc.push(i);
    }
    acc.finish()
}

/// `|A_n|`; `A_1` is the trivial group.
fn alternating_order(n: u32) -> BigUint {
    if n < 2 {
        BigUint::one()
    } else {
        factorial(n) >> 1u32
    }
}

/// `f_λ = n! / ∏ hooks`.
pub fn degree(lambda: &Partition) -> BigUint {
    degree_with_factorial(lambda, &factorial(lambda.n()))
}

pub(crate) fn degree_with_factorial(lambda: &Partition, n_factorial: &BigUint) -> BigUint {
    let hooks = lambda.hook_product();
    let (q, r) = n_factorial.div_rem(&hooks);
    assert!(
        r.is_zero(),
        "hook product {hooks} does not divide n! for {lambda}"
    );
    q
}

/// Sorted, deduplicated degrees with optional multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSet {
    group: GroupTag,
    degrees: Vec<BigUint>,
    multiplicities: Option<Vec<u64>>,
}

impl DegreeSet {
    /// Builds a degree set and checks every invariant against the group order.
    pub fn new(
        group: GroupTag,
        degrees: Vec<BigUint>,
        multiplicities: Option<Vec<u64>>,
    ) -> Result<Self, DegreeSetError> {
        let set = DegreeSet {
            group,
            degrees,
            multiplicities,
        };
        set.validate()?;
        Ok(set)
    }

    pub(crate) fn from_counts(group: GroupTag, counts: BTreeMap<BigUint, u64>) -> Self {
        let (degrees, mult): (Vec<_>, Vec<_>) = counts.into_iter().unzip();
        DegreeSet::new(group, degrees, Some(mult))
            .unwrap_or_else(|e| panic!("computed degree set for {group} is inconsistent: {e}"))
    }

    fn validate(&self) -> Result<(), DegreeSetError> {
        let first = self.degrees.first().ok_or(DegreeSetError::Empty)?;
        if let Some(i) = self
            .degrees
            .windows(2)
            .position(|w| w[0] >= w[1])
        {
            return Err(DegreeSetError::NotIncreasing(i + 1));
        }
        if !self.group.kind.is_cover() && !first.is_one() {
            return Err(DegreeSetError::MissingTrivial);
        }
        let order = self.group.order();
        if let Some(d) = self.degrees.iter().find(|d| d.is_zero() || !(&order % *d).is_zero()) {
            return Err(DegreeSetError::NotDivisor(d.to_string()));
        }
        if let Some(mult) = &self.multiplicities {
            if mult.len() != self.degrees.len() {
                return Err(DegreeSetError::MultiplicityLength {
                    expected: self.degrees.len(),
                    got: mult.len(),
                });
            }
            if let Some(i) = mult.iter().position(|&m| m == 0) {
                return Err(DegreeSetError::ZeroMultiplicity(self.degrees[i].to_string()));
            }
            let got = self.weighted_square_sum().expect("multiplicities present");
            let expected = self.group.square_sum();
            if got != expected {
                return Err(DegreeSetError::SquareSum {
                    expected: expected.to_string(),
                    got: got.to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn group(&self) -> GroupTag {
        self.group
    }

    pub fn degrees(&self) -> &[BigUint] {
        &self.degrees
    }

    pub fn multiplicities(&self) -> Option<&[u64]> {
        self.multiplicities.as_deref()
    }

    pub fn has_multiplicities(&self) -> bool {
        self.multiplicities.is_some()
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn contains(&self, value: &BigUint) -> bool {
        self.degrees.binary_search(value).is_ok()
    }

    pub fn multiplicity(&self, value: &BigUint) -> Option<u64> {
        let i = self.degrees.binary_search(value).ok()?;
        self.multiplicities.as_ref().map(|m| m[i])
    }

    pub fn largest(&self) -> &BigUint {
        self.degrees.last().expect("degree sets are non-empty")
    }

    pub fn without_multiplicities(&self) -> DegreeSet {
        DegreeSet {
            group: self.group,
            degrees: self.degrees.clone(),
            multiplicities: None,
        }
    }

    fn weighted_square_sum(&self) -> Option<BigUint> {
        let mult = self.multiplicities.as_ref()?;
        Some(
            self.degrees
                .iter()
                .zip(mult)
                .map(|(d, &m)| d * d * m)
                .sum(),
        )
    }
}

/// The `k` smallest degrees exceeding 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalDegreeTable {
    pub group: GroupTag,
    pub entries: Vec<BigUint>,
}

/// `{χ(1)/index : index | χ(1), χ ∈ Irr(A_n)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSet {
    pub n: u32,
    pub index: u64,
    pub values: Vec<BigUint>,
}

impl QuotientSet {
    pub fn max(&self) -> Option<&BigUint> {
        self.values.last()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    /// Number of irreducible characters (conjugacy classes for `S_n`/`A_n`).
    pub class_count: u64,
    pub largest_degree: BigUint,
    pub sum_of_squares: BigUint,
}

/// `{a/q : a ∈ values, q | a}`, sorted and deduplicated.
pub fn divide_filter<'a, I>(values: I, q: &BigUint) -> Vec<BigUint>
where
    I: IntoIterator<Item = &'a BigUint>,
{
    let mut out: Vec<BigUint> = values
        .into_iter()
        .filter_map(|a| {
            let (quot, rem) = a.div_rem(q);
            rem.is_zero().then_some(quot)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Elements of `values` that divide no other element.
pub fn maximal_under_divisibility(values: &[BigUint]) -> Vec<BigUint> {
    values
        .iter()
        .filter(|a| {
            !values
                .iter()
                .any(|b| b != *a && !a.is_zero() && (b % *a).is_zero())
        })
        .cloned()
        .collect()
}

/// Degree multiset of `S_n` or `A_n` over a given pool.
pub(crate) fn compute_ordinary(group: GroupTag, pool: &rayon::ThreadPool) -> DegreeSet {
    let n = group.n;
    if group.kind == GroupKind::Alternating && n < 2 {
        let counts = BTreeMap::from([(BigUint::one(), 1u64)]);
        return DegreeSet::from_counts(group, counts);
    }
    let symmetric = group.kind == GroupKind::Symmetric;
    let n_factorial = factorial(n);
    let chunks: Vec<BTreeMap<BigUint, u64>> = pool.install(|| {
        (1..=n)
            .into_par_iter()
            .map(|k| {
                let mut local = BTreeMap::new();
                for lambda in partitions_with_largest_part(n, k) {
                    let conj = lambda.conjugate();
                    if lambda > conj {
                        continue;
                    }
                    let f = degree_with_factorial(&lambda, &n_factorial);
                    let (d, m) = match (symmetric, lambda == conj) {
                        (true, true) => (f, 1),
                        (true, false) => (f, 2),
                        (false, true) => {
                            assert!(
                                f.is_even(),
                                "self-conjugate {lambda} has odd degree {f}"
                            );
                            (f >> 1u32, 2)
                        }
                        (false, false) => (f, 1),
                    };
                    *local.entry(d).or_insert(0) += m;
                }
                local
            })
            .collect()
    });
    DegreeSet::from_counts(group, merge_counts(chunks))
}

pub(crate) fn merge_counts(chunks: Vec<BTreeMap<BigUint, u64>>) -> BTreeMap<BigUint, u64> {
    let mut total = BTreeMap::new();
    for chunk in chunks {
        for (d, m) in chunk {
            *total.entry(d).or_insert(0) += m;
        }
    }
    total
}

/// Cache file name: `<group>_<n>[_mult].cdset`.
pub fn cache_file_name(group: GroupTag, with_multiplicity: bool) -> String {
    format!(
        "{}_{}{}.cdset",
        group.kind.label(),
        group.n,
        if with_multiplicity { "_mult" } else { "" }
    )
}

/// Degree sets above this `n` are written back to the disk cache.
pub const DEFAULT_PERSIST_ABOVE: u32 = 45;

/// Memoizing front end for degree-set queries.
///
/// Sets are immutable once built and handed out as `Arc`s. With a cache
/// directory configured, an existing cache file is always preferred over
/// recomputation.
pub struct DegreeEngine {
    pool: rayon::ThreadPool,
    workers: usize,
    cache_dir: Option<PathBuf>,
    persist_above: u32,
    memo: Mutex<HashMap<(GroupTag, bool), Arc<DegreeSet>>>,
}

impl fmt::Debug for DegreeEngine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DegreeEngine")
            .field("workers", &self.workers)
            .field("cache_dir", &self.cache_dir)
            .field("persist_above", &self.persist_above)
            .finish_non_exhaustive()
    }
}

impl Default for DegreeEngine {
    fn default() -> Self {
        DegreeEngine::new(default_workers())
    }
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

impl DegreeEngine {
    pub fn new(workers: usize) -> Self {
        let workers = workers.max(1);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .thread_name(|i| format!("chardeg-{i}"))
            .build()
            .expect("failed to build worker pool");
        DegreeEngine {
            pool,
            workers,
            cache_dir: None,
            persist_above: DEFAULT_PERSIST_ABOVE,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    /// Write computed sets back to the cache only when `n` exceeds `n`.
    pub fn persist_above(mut self, n: u32) -> Self {
        self.persist_above = n;
        self
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    /// Degree set of any group tag; cover tags give the faithful degrees.
    pub fn degree_set(
        &self,
        group: GroupTag,
        with_multiplicity: bool,
    ) -> Result<Arc<DegreeSet>, EngineError> {
        let key = (group, with_multiplicity);
        let mut memo = self.memo.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(set) = memo.get(&key) {
            return Ok(Arc::clone(set));
        }
        if let Some(path) = self.cache_path(group, with_multiplicity) {
            if path.exists() {
                let set = cdset::read(&path)?;
                check_cached_header(&set, group, with_multiplicity, &path)?;
                let set = Arc::new(set);
                memo.insert(key, Arc::clone(&set));
                return Ok(set);
            }
        }
        let full = match memo.get(&(group, true)) {
            Some(full) => Arc::clone(full),
            None => {
                let full = Arc::new(self.compute(group));
                memo.insert((group, true), Arc::clone(&full));
                full
            }
        };
        let set = if with_multiplicity {
            full
        } else {
            let stripped = Arc::new(full.without_multiplicities());
            memo.insert(key, Arc::clone(&stripped));
            stripped
        };
        if group.n > self.persist_above {
            if let Some(path) = self.cache_path(group, with_multiplicity) {
                cdset::write(&set, &path)?;
            }
        }
        Ok(set)
    }

    fn cache_path(&self, group: GroupTag, with_multiplicity: bool) -> Option<PathBuf> {
        self.cache_dir
            .as_ref()
            .map(|d| d.join(cache_file_name(group, with_multiplicity)))
    }

    /// Computes without touching the memo or the disk cache.
    pub fn compute(&self, group: GroupTag) -> DegreeSet {
        match group.kind {
            GroupKind::Symmetric | GroupKind::Alternating => compute_ordinary(group, &self.pool),
            GroupKind::CoverSymmetric | GroupKind::CoverAlternating => {
                spin::compute_faithful(group, &self.pool)
            }
        }
    }

    pub fn minimal_degrees(
        &self,
        group: GroupTag,
        k: usize,
    ) -> Result<MinimalDegreeTable, EngineError> {
        let set = self.degree_set(group, false)?;
        let nontrivial: Vec<BigUint> = set
            .degrees()
            .iter()
            .filter(|d| !d.is_one())
            .take(k)
            .cloned()
            .collect();
        if nontrivial.len() < k || k == 0 {
            return Err(EngineError::Exhausted {
                group: group.to_string(),
                available: set.degrees().iter().filter(|d| !d.is_one()).count(),
                requested: k,
            });
        }
        Ok(MinimalDegreeTable {
            group,
            entries: nontrivial,
        })
    }

    pub fn is_degree(&self, group: GroupTag, value: &BigUint) -> Result<bool, EngineError> {
        Ok(self.degree_set(group, false)?.contains(value))
    }

    /// Degrees greater than 1 that are powers of a single prime.
    pub fn prime_power_degrees(&self, group: GroupTag) -> Result<Vec<BigUint>, EngineError> {
        if group.kind.is_cover() {
            return Err(GroupError::WrongKind {
                expected: "symmetric or alternating",
                got: group.to_string(),
            }
            .into());
        }
        let set = self.degree_set(group, false)?;
        let primes = primes_up_to(u64::from(group.n));
        Ok(set
            .degrees()
            .iter()
            .filter(|d| number_theory::prime_power_base(d, &primes).is_some())
            .cloned()
            .collect())
    }

    pub fn stats(&self, group: GroupTag) -> Result<DegreeStats, EngineError> {
        let set = self.degree_set(group, true)?;
        let mult = set
            .multiplicities()
            .expect("requested with multiplicities");
        Ok(DegreeStats {
            class_count: mult.iter().sum(),
            largest_degree: set.largest().clone(),
            sum_of_squares: set.weighted_square_sum().expect("multiplicities present"),
        })
    }

    pub fn quotient_set(&self, n: u32, index: u64) -> Result<QuotientSet, EngineError> {
        if index == 0 {
            return Err(EngineError::ZeroIndex);
        }
        let set = self.degree_set(GroupTag::alternating(n)?, false)?;
        Ok(QuotientSet {
            n,
            index,
            values: divide_filter(set.degrees(), &BigUint::from(index)),
        })
    }
}

fn check_cached_header(
    set: &DegreeSet,
    group: GroupTag,
    with_multiplicity: bool,
    path: &Path,
) -> Result<(), EngineError> {
    if set.group() != group || set.has_multiplicities() != with_multiplicity {
        return Err(crate::error::CacheError::Malformed {
            line: 2,
            reason: format!(
                "{} holds {} (multiplicity={}), expected {group} (multiplicity={})",
                path.display(),
                set.group(),
                u8::from(set.has_multiplicities()),
                u8::from(with_multiplicity)
            ),
        }
        .into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn values(set: &DegreeSet) -> Vec<u64> {
        set.degrees()
            .iter()
            .map(|d| u64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn degree_examples() {
        for m in 5..30u64 {
            let mu = m as u32;
            assert_eq!(degree(&p(&[mu - 1, 1])), big(m - 1));
            assert_eq!(degree(&p(&[mu - 2, 2])), big(m * (m - 3) / 2));
            assert_eq!(degree(&p(&[mu - 2, 1, 1])), big((m - 1) * (m - 2) / 2));
            assert_eq!(degree(&p(&[mu])), big(1));
        }
        assert_eq!(degree(&p(&[2, 2])), big(2));
    }

    #[test]
    fn small_degree_sets() {
        let engine = DegreeEngine::new(2);
        let a5 = engine.degree_set(GroupTag::alternating(5).unwrap(), false).unwrap();
        assert_eq!(values(&a5), vec![1, 3, 4, 5]);
        let s4 = engine.degree_set(GroupTag::symmetric(4).unwrap(), false).unwrap();
        assert_eq!(values(&s4), vec![1, 2, 3]);
        let a14 = GroupTag::alternating(14).unwrap();
        assert!(engine.is_degree(a14, &big(560)).unwrap());
        assert!(engine.is_degree(a14, &big(1001)).unwrap());
        assert!(!engine.is_degree(a14, &big(7280)).unwrap());
    }

    #[test]
    fn trivial_alternating_groups() {
        let engine = DegreeEngine::new(1);
        for n in 1..=3 {
            let s = engine.stats(GroupTag::alternating(n).unwrap()).unwrap();
            assert_eq!(s.sum_of_squares, GroupTag::alternating(n).unwrap().order());
            assert_eq!(s.largest_degree, big(1));
        }
    }

    #[test]
    fn membership_examples() {
        let engine = DegreeEngine::new(2);
        let a13 = GroupTag::alternating(13).unwrap();
        let a12 = GroupTag::alternating(12).unwrap();
        assert!(engine.is_degree(a13, &big(21450)).unwrap());
        assert!(engine.is_degree(a12, &big(5775)).unwrap());
    }

    #[test]
    fn minimal_degrees_of_a14() {
        let engine = DegreeEngine::new(2);
        let t = engine
            .minimal_degrees(GroupTag::alternating(14).unwrap(), 4)
            .unwrap();
        let got: Vec<u64> = t.entries.iter().map(|d| u64::try_from(d).unwrap()).collect();
        assert_eq!(got, vec![13, 77, 78, 273]);
        let err = engine
            .minimal_degrees(GroupTag::alternating(5).unwrap(), 4)
            .unwrap_err();
        assert!(matches!(err, EngineError::Exhausted { available: 3, .. }));
    }

    #[test]
    fn prime_power_examples() {
        let engine = DegreeEngine::new(2);
        let pp = |n| -> Vec<u64> {
            engine
                .prime_power_degrees(GroupTag::alternating(n).unwrap())
                .unwrap()
                .iter()
                .map(|d| u64::try_from(d).unwrap())
                .collect()
        };
        assert_eq!(pp(6), vec![5, 8, 9]);
        assert_eq!(pp(17), vec![16]);
        assert!(pp(16).is_empty());
    }

    #[test]
    fn stats_examples() {
        let engine = DegreeEngine::new(2);
        let s5 = engine.stats(GroupTag::symmetric(5).unwrap()).unwrap();
        assert_eq!(s5.class_count, 7);
        assert_eq!(s5.sum_of_squares, big(120));
        let a5 = engine.stats(GroupTag::alternating(5).unwrap()).unwrap();
        assert_eq!(a5.class_count, 5);
        assert_eq!(a5.largest_degree, big(5));
        assert_eq!(a5.sum_of_squares, big(60));
    }

    #[test]
    fn quotient_sets_of_a14() {
        let engine = DegreeEngine::new(2);
        let case7 = engine.quotient_set(14, 1716).unwrap();
        let got: Vec<u64> = case7.values.iter().map(|d| u64::try_from(d).unwrap()).collect();
        assert_eq!(got, vec![1, 7, 9, 20, 28]);
        assert_eq!(engine.quotient_set(14, 91).unwrap().max(), Some(&big(704)));
        assert!(matches!(
            engine.quotient_set(14, 0),
            Err(EngineError::ZeroIndex)
        ));
    }

    #[test]
    fn divide_filter_examples() {
        let vals = [big(10), big(15), big(7)];
        assert_eq!(divide_filter(&vals, &big(5)), vec![big(2), big(3)]);
        assert_eq!(divide_filter(&vals, &big(1)), vec![big(7), big(10), big(15)]);
        assert!(divide_filter(&vals, &big(11)).is_empty());
    }

    #[test]
    fn divisibility_maxima() {
        let vals = [big(4), big(7), big(11), big(44)];
        assert_eq!(maximal_under_divisibility(&vals), vec![big(7), big(44)]);
    }

    #[test]
    fn rejects_inconsistent_sets() {
        let a5 = GroupTag::alternating(5).unwrap();
        assert_eq!(
            DegreeSet::new(a5, vec![big(1), big(4), big(3)], None),
            Err(DegreeSetError::NotIncreasing(2))
        );
        assert_eq!(
            DegreeSet::new(a5, vec![big(1), big(7)], None),
            Err(DegreeSetError::NotDivisor("7".into()))
        );
        assert!(matches!(
            DegreeSet::new(a5, vec![big(1), big(3)], Some(vec![1, 1])),
            Err(DegreeSetError::SquareSum { .. })
        ));
        assert_eq!(
            DegreeSet::new(a5, vec![big(3)], None),
            Err(DegreeSetError::MissingTrivial)
        );
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let one = DegreeEngine::new(1);
        let many = DegreeEngine::new(4);
        for n in [9, 16, 21] {
            for g in [GroupTag::symmetric(n).unwrap(), GroupTag::alternating(n).unwrap()] {
                assert_eq!(one.compute(g), many.compute(g));
            }
        }
    }

    #[test]
    fn group_tag_validation() {
        assert_eq!(GroupTag::symmetric(0), Err(GroupError::ZeroDegree));
        assert_eq!(
            GroupTag::cover_alternating(3),
            Err(GroupError::CoverTooSmall(3))
        );
        assert_eq!("2A".parse::<GroupKind>(), Ok(GroupKind::CoverAlternating));
        assert!("B".parse::<GroupKind>().is_err());
        assert_eq!(GroupTag::alternating(14).unwrap().to_string(), "A_14");
    }
}
