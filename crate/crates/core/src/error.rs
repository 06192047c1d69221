use thiserror::Error;

use crate::sign::SymmetryKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set must have between 1 and 64 elements, got {0}")]
    GroundTooLarge(usize),
    #[error("arity {arity} out of range for a ground set of size {n}")]
    ArityOutOfRange { n: usize, arity: usize },
    #[error("value table needs {expected} entries, got {got}")]
    TableLength { expected: usize, got: usize },
    #[error("value table has no entry for subset {0:?}")]
    MissingEntry(Vec<usize>),
    #[error("value table entry {0:?} is not a sorted subset of the right size or repeats one")]
    BadEntry(Vec<usize>),
    #[error("{0} is not a sign (expected +1 or -1)")]
    NotASign(i64),
    #[error("index {index} out of range for a ground set of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("tuple {0:?} repeats an index")]
    RepeatedIndex(Vec<usize>),
    #[error("tuple has length {got}, expected {expected}")]
    TupleLength { expected: usize, got: usize },
    #[error("shapes differ: (n={n1}, l={l1}) vs (n={n2}, l={l2})")]
    ShapeMismatch { n1: usize, l1: usize, n2: usize, l2: usize },
    #[error("sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("{0:?} is not a permutation")]
    NotAPermutation(Vec<usize>),
    #[error("expected a {expected} function, got a {got} one")]
    WrongKind { expected: SymmetryKind, got: SymmetryKind },
    #[error("expected a function of arity {expected}, got arity {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("the pair function is not a cocycle: σ(a,b)σ(a,c)σ(b,c) = -1 on {0:?}")]
    NotClosed([usize; 3]),
    #[error("{0}")]
    Invalid(String),
    #[error("requested size exceeds the budget: {0}")]
    Budget(String),
    #[error("configuration is not generic: points {witness:?} are affinely dependent")]
    NonGeneric { witness: Vec<usize> },
}
