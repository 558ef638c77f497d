use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("partition parts must be weakly decreasing")]
    NotDecreasing,
    #[error("strict partition parts must be strictly decreasing")]
    NotStrict,
    #[error("n = {n} is below the minimum {min} for this shape")]
    TooSmall { n: u32, min: u32 },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("group degree n must be at least 1")]
    ZeroDegree,
    #[error("double cover tags need n >= 4, got {0}")]
    CoverTooSmall(u32),
    #[error("unknown group label {0:?} (expected S, A, 2S or 2A)")]
    UnknownLabel(String),
    #[error("operation needs a {expected} group, got {got}")]
    WrongKind { expected: &'static str, got: String },
}

/// Violations of the degree-set invariants.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DegreeSetError {
    #[error("degree set is empty")]
    Empty,
    #[error("degrees are not strictly increasing at position {0}")]
    NotIncreasing(usize),
    #[error("smallest degree of an ordinary character table must be 1")]
    MissingTrivial,
    #[error("degree {0} does not divide the group order")]
    NotDivisor(String),
    #[error("multiplicity table length {got} does not match {expected} degrees")]
    MultiplicityLength { expected: usize, got: usize },
    #[error("zero multiplicity for degree {0}")]
    ZeroMultiplicity(String),
    #[error("sum of multiplicity-weighted squares is {got}, expected {expected}")]
    SquareSum { expected: String, got: String },
}

/// CDSET cache reading and writing.
#[derive(Debug, Error)]
pub enum CacheError {
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("corrupt cache: unsupported header {0:?}")]
    Version(String),
    #[error("corrupt cache: line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("corrupt cache: truncated file")]
    Truncated,
    #[error("corrupt cache: header count {header} but {body} body lines")]
    Count { header: usize, body: usize },
    #[error("corrupt cache: body not strictly ascending at line {0}")]
    Unsorted(usize),
    #[error("corrupt cache: digest mismatch (stored {stored}, computed {computed})")]
    Digest { stored: String, computed: String },
    #[error("corrupt cache: {0}")]
    Invalid(#[from] DegreeSetError),
    #[error("corrupt cache: {0}")]
    Group(#[from] GroupError),
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error("only {available} nontrivial degrees exist for {group}, asked for {requested}")]
    Exhausted {
        group: String,
        available: usize,
        requested: usize,
    },
    #[error("index must be at least 1")]
    ZeroIndex,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumberTheoryError {
    #[error("{name} needs {constraint}, got {value}")]
    Domain {
        name: &'static str,
        constraint: &'static str,
        value: String,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("incomplete factorization of {value}: cofactor {cofactor} not certified prime")]
    Incomplete { value: String, cofactor: String },
    #[error("malformed factorization {0:?}")]
    BadFactorization(String),
}

#[derive(Debug, Error)]
pub enum AtlasError {
    #[error("atlas data line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("unknown ambient group {0:?}")]
    UnknownAmbient(String),
}
