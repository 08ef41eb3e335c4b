use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("subspaces live in different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },

    #[error("scalar {value} is not an element of F_{q}")]
    InvalidScalar { value: u32, q: u32 },

    #[error("associativity fails on basis triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },

    #[error("unity fails on basis element {index}")]
    NotUnital { index: usize },

    #[error("{what}: size {size} exceeds cap {cap}")]
    SizeCap {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("algebra has a nonzero radical (dimension {0})")]
    NotSemisimple(usize),

    #[error("element is not idempotent modulo the radical")]
    NotIdempotentModRadical,

    #[error("subspace is not a unital subring: {0}")]
    NotSubring(String),

    #[error("subring is not stable under left multiplication by the unit {witness:?}")]
    NotUnitStable { witness: Vec<u32> },

    #[error("modules are defined over different algebras")]
    AlgebraMismatch,

    #[error("module axiom fails: {0}")]
    NotModule(String),

    #[error("subspace is not invariant under the action of basis element {0}")]
    NotSubmodule(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
