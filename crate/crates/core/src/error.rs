use thiserror::Error;

/// Failures raised while building or querying finite lattice structures.
///
/// Witnesses carry element names, never internal indices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element name `{0}`")]
    UnknownName(String),
    #[error("cover relation contains a cycle through `{0}`")]
    CycleDetected(String),
    #[error("order has no least or no greatest element")]
    NoBounds,
    #[error("`{0}` and `{1}` have no unique {2}")]
    NotALattice(String, String, &'static str),
    #[error("relation is not a partial order at ({0}, {1})")]
    NotAnOrder(String, String),
    #[error("structure has {size} elements, above the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("`{0}` is not below `{1}`")]
    NotComparable(String, String),
    #[error("orthocomplement is not order inverting at ({0}, {1})")]
    NotOrderInverting(String, String),
    #[error("orthocomplement is not involutive at `{0}`")]
    NotInvolutive(String),
    #[error("`{0}` is not complemented by its orthocomplement")]
    NotComplement(String),
    #[error("orthocomplement map is not total: `{0}` has no image")]
    NonTotalPerp(String),
    #[error("not orthomodular: law fails at ({0}, {1})")]
    NotOrthomodular(String, String),
    #[error("`{0}` is not central")]
    NotCentral(String),
    #[error("`{0}` is not below the join of the given set")]
    NotBelowJoin(String),
    #[error("maximal commuting set {0:?} is not a Boolean subalgebra")]
    BlockNotBoolean(Vec<String>),
    #[error("need at least {min} rows, got {got}")]
    RowsTooSmall { got: usize, min: usize },
    #[error("horizontal sum needs at least one summand")]
    EmptySum,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
