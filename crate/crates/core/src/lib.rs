//! Exact character degrees of the symmetric and alternating groups and their
//! double covers, with the arithmetic checks built on them.

pub mod atlas;
pub mod cdset;
pub mod degree;
pub mod error;
pub mod lemmas;
pub mod number_theory;
pub mod partition;
pub mod spin;
pub mod verdict;

pub use degree::{
    degree, divide_filter, DegreeEngine, DegreeSet, DegreeStats, GroupKind, GroupTag,
    MinimalDegreeTable, QuotientSet,
};
pub use partition::{Partition, StrictPartition};
pub use verdict::{LemmaVerdict, Status, Witness};
