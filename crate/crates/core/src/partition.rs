//! Integer partitions, strict partitions and hook lengths.
//!
//! Enumeration is streaming and in descending lexicographic order. Both
//! partition streams can be split by largest part: the sub-stream with a
//! fixed first part `k` is produced independently by
//! [`partitions_with_largest_part`] / [`strict_partitions_with_largest_part`],
//! and concatenating the sub-streams for `k = n, n-1, .., 1` reproduces the
//! full stream exactly.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::PartitionError;

/// A partition of `n`: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing);
        }
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// `(k+1, 1^k)` for odd `n = 2k+1`, `(k, 2, 1^(k-2))` for even `n = 2k`.
    ///
    /// Both are self-conjugate; their degrees separate `cd(S_n)` from
    /// `cd(A_n)`. Requires `n >= 4`.
    pub fn hook_witness(n: u32) -> Result<Self, PartitionError> {
        if n < 4 {
            return Err(PartitionError::TooSmall { n, min: 4 });
        }
        let k = n / 2;
        let parts = if n % 2 == 1 {
            std::iter::once(k + 1)
                .chain(std::iter::repeat_n(1, k as usize))
                .collect()
        } else {
            [k, 2]
                .into_iter()
                .chain(std::iter::repeat_n(1, (k - 2) as usize))
                .collect()
        };
        Ok(Partition::from_parts_unchecked(parts))
    }

    /// `(n - i, 1^i)`.
    pub fn hook_shape(n: u32, i: u32) -> Result<Self, PartitionError> {
        if i >= n {
            return Err(PartitionError::TooSmall { n, min: i + 1 });
        }
        let parts = std::iter::once(n - i)
            .chain(std::iter::repeat_n(1, i as usize))
            .collect();
        Ok(Partition::from_parts_unchecked(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        Partition {
            parts: column_lengths(&self.parts),
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        let cols = column_lengths(&self.parts);
        cols == self.parts
    }

    pub fn hook_lengths(&self) -> HookMultiset {
        let cols = column_lengths(&self.parts);
        let mut hooks = Vec::with_capacity(self.n() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for (j, &col) in cols.iter().take(row as usize).enumerate() {
                hooks.push((row - j as u32) + (col - i as u32) - 1);
            }
        }
        HookMultiset::from_unsorted(hooks)
    }

    /// Product of hook lengths, computed without materialising the multiset.
    pub fn hook_product(&self) -> BigUint {
        let cols = column_lengths(&self.parts);
        let mut acc = ProductAccumulator::new();
        for (i, &row) in self.parts.iter().enumerate() {
            for (j, &col) in cols.iter().take(row as usize).enumerate() {
                acc.push(u64::from((row - j as u32) + (col - i as u32) - 1));
            }
        }
        acc.finish()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

fn column_lengths(parts: &[u32]) -> Vec<u32> {
    let width = parts.first().copied().unwrap_or(0) as usize;
    let mut cols = vec![0u32; width];
    for &p in parts {
        for c in cols.iter_mut().take(p as usize) {
            *c += 1;
        }
    }
    cols
}

/// Multiplies many small factors, flushing to a `BigUint` only when a
/// 64-bit accumulator would overflow.
pub(crate) struct ProductAccumulator {
    word: u64,
    big: BigUint,
}

impl ProductAccumulator {
    pub(crate) fn new() -> Self {
        ProductAccumulator {
            word: 1,
            big: BigUint::one(),
        }
    }

    pub(crate) fn push(&mut self, factor: u64) {
        match self.word.checked_mul(factor) {
            Some(w) => self.word = w,
            None => {
                self.big *= self.word;
                self.word = factor;
            }
        }
    }

    pub(crate) fn finish(self) -> BigUint {
        self.big * self.word
    }
}

/// The multiset of hook lengths of a Young diagram, stored sorted descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookMultiset {
    hooks: Vec<u32>,
}

impl HookMultiset {
    fn from_unsorted(mut hooks: Vec<u32>) -> Self {
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        HookMultiset { hooks }
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.hooks
    }

    pub fn len(&self) -> usize {
        self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }

    pub fn product(&self) -> BigUint {
        let mut acc = ProductAccumulator::new();
        for &h in &self.hooks {
            acc.push(u64::from(h));
        }
        acc.finish()
    }
}

/// A partition with strictly decreasing parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(PartitionError::NotStrict);
        }
        Ok(StrictPartition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn m(&self) -> u32 {
        self.parts.len() as u32
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Streaming iterator over partitions in descending lexicographic order.
///
/// The first `frozen` entries of the working vector never change, which is
/// how the fixed-largest-part sub-streams are produced.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<u32>>,
    frozen: usize,
}

/// Every partition of `n`, descending lexicographic.
pub fn enumerate_partitions(n: u32) -> Partitions {
    let start = if n == 0 { Vec::new() } else { vec![n] };
    Partitions {
        current: Some(start),
        frozen: 0,
    }
}

/// The partitions of `n` whose largest part is exactly `k`.
pub fn partitions_with_largest_part(n: u32, k: u32) -> Partitions {
    if k == 0 || k > n {
        return Partitions {
            current: None,
            frozen: 1,
        };
    }
    let mut start = vec![k];
    fill_greedy(&mut start, n - k, k);
    Partitions {
        current: Some(start),
        frozen: 1,
    }
}

fn fill_greedy(parts: &mut Vec<u32>, mut rest: u32, cap: u32) {
    while rest > 0 {
        let p = rest.min(cap);
        parts.push(p);
        rest -= p;
    }
}

impl Partitions {
    fn advance(&mut self) {
        let Some(a) = self.current.as_mut() else {
            return;
        };
        // Rightmost part greater than one, outside the frozen prefix.
        let pos = a.iter().rposition(|&p| p > 1);
        match pos {
            Some(i) if i >= self.frozen => {
                let ones = (a.len() - i - 1) as u32;
                let v = a[i] - 1;
                a.truncate(i);
                a.push(v);
                fill_greedy(a, ones + 1, v);
            }
            _ => self.current = None,
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.as_ref()?.clone();
        self.advance();
        Some(Partition::from_parts_unchecked(out))
    }
}

/// Streaming iterator over strict partitions in descending lexicographic order.
#[derive(Clone, Debug)]
pub struct StrictPartitions {
    current: Option<Vec<u32>>,
    frozen: usize,
}

pub fn enumerate_strict_partitions(n: u32) -> StrictPartitions {
    let start = if n == 0 { Vec::new() } else { vec![n] };
    StrictPartitions {
        current: Some(start),
        frozen: 0,
    }
}

/// Strict partitions of `n` whose largest part is exactly `k`.
pub fn strict_partitions_with_largest_part(n: u32, k: u32) -> StrictPartitions {
    let rest = n.saturating_sub(k);
    if k == 0 || k > n || !strict_fill_feasible(rest, k) {
        return StrictPartitions {
            current: None,
            frozen: 1,
        };
    }
    let mut start = vec![k];
    fill_strict_greedy(&mut start, rest, k);
    StrictPartitions {
        current: Some(start),
        frozen: 1,
    }
}

/// Can `rest` be written as distinct parts all below `bound`?
fn strict_fill_feasible(rest: u32, bound: u32) -> bool {
    let b = u64::from(bound);
    u64::from(rest) <= b * b.saturating_sub(1) / 2
}

fn fill_strict_greedy(parts: &mut Vec<u32>, mut rest: u32, bound: u32) {
    let mut cap = bound - 1;
    while rest > 0 {
        let p = rest.min(cap);
        parts.push(p);
        rest -= p;
        cap = p - 1;
    }
}

impl StrictPartitions {
    fn advance(&mut self) {
        let Some(a) = self.current.as_mut() else {
            return;
        };
        let mut suffix: u32 = 0;
        for i in (self.frozen..a.len()).rev() {
            suffix += a[i];
            let v = a[i] - 1;
            if v == 0 {
                continue;
            }
            let rest = suffix - v;
            if strict_fill_feasible(rest, v) {
                a.truncate(i);
                a.push(v);
                fill_strict_greedy(a, rest, v);
                return;
            }
        }
        self.current = None;
    }
}

impl Iterator for StrictPartitions {
    type Item = StrictPartition;

    fn next(&mut self) -> Option<StrictPartition> {
        let out = self.current.as_ref()?.clone();
        self.advance();
        Some(StrictPartition { parts: out })
    }
}

/// p(n) by Euler's pentagonal-number recurrence.
pub fn partition_count(n: u32) -> BigUint {
    partition_counts_up_to(n).pop().unwrap_or_else(BigUint::one)
}

/// `[p(0), p(1), .., p(n)]`.
pub fn partition_counts_up_to(n: u32) -> Vec<BigUint> {
    let n = n as usize;
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    table.push(BigUint::one());
    for i in 1..=n {
        // Signed sum kept as (positive, negative) halves.
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for k in 1usize.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let bucket = if k % 2 == 1 { &mut plus } else { &mut minus };
            *bucket += &table[i - g1];
            if g2 <= i {
                *bucket += &table[i - g2];
            }
        }
        table.push(plus - minus);
    }
    table
}
