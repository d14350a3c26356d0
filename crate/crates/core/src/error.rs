use thiserror::Error;

/// Errors raised by the algebra and verification routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {0} is outside the supported range 1..=16")]
    UnsupportedDegree(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("subgroup is not contained in the ambient group: {0}")]
    NotContained(String),

    #[error("subgroup is not an elementary abelian 2-group: {0}")]
    NotElementaryAbelian(String),

    #[error("{by} does not normalize the subgroup")]
    NotNormalizing { by: String },

    #[error("2-cocycle identity fails at ({phi}, {psi}, {rho})")]
    CocycleIdentity { phi: String, psi: String, rho: String },

    #[error("cocycle is not normalized at ({0}, {1})")]
    NotNormalized(String, String),

    #[error("value {0} is not a 4th root of unity")]
    NotRootOfUnity(String),

    #[error("coboundary input must send the trivial character to 1")]
    CoboundaryNotNormalized,

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("support element {perm} lies outside the group of {owner}")]
    SupportOutsideGroup { perm: String, owner: String },

    #[error("subgroup does not split along the projection: {0}")]
    NotSplit(String),

    #[error("|N/Rad| = {0} is not a perfect square")]
    NonSquareQuotient(usize),

    #[error("pair {0} is not in the block group N")]
    PairNotInBlock(String),

    #[error("character groups differ in rank: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("twist axioms fail: {0}")]
    TwistAxioms(String),

    #[error("scalar {0} is not representable in the requested field")]
    NotRepresentable(String),

    #[error("basis is linearly dependent (rank {rank} < {len})")]
    DependentBasis { rank: usize, len: usize },

    #[error("mismatch at `{label}`\n  expected: {expected}\n  computed: {computed}")]
    Mismatch {
        label: String,
        expected: String,
        computed: String,
    },

    #[error("io error: {0}")]
    Io(String),

    #[error("json error: {0}")]
    Json(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
