use std::fmt;

use thiserror::Error;

/// One of the four complementarity conditions of an admissible couple
/// `((V₁,W₁),(V₂,W₂))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// `V₁ ⊕ W₁`
    V1W1,
    /// `V₂ ⊕ W₂`
    V2W2,
    /// `V₁ ⊕ W₂`
    V1W2,
    /// `V₂ ⊕ W₁`
    V2W1,
}

impl Condition {
    pub const ALL: [Condition; 4] = [
        Condition::V1W1,
        Condition::V2W2,
        Condition::V1W2,
        Condition::V2W1,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Condition::V1W1 => "V₁⊕W₁",
            Condition::V2W2 => "V₂⊕W₂",
            Condition::V1W2 => "V₁⊕W₂",
            Condition::V2W1 => "V₂⊕W₁",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn join(conds: &[Condition]) -> String {
    conds
        .iter()
        .map(|c| c.label())
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("matrix shape mismatch: expected {expected_rows}x{expected_cols}, found {found_rows}x{found_cols}")]
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        found_rows: usize,
        found_cols: usize,
    },

    #[error("matrix is singular")]
    Singular,

    #[error("subspaces do not form a splitting")]
    NotASplitting,

    #[error("map is not a projector (p² ≠ p)")]
    NotAProjector,

    #[error("map is not a symmetry (s² ≠ Id)")]
    NotASymmetry,

    #[error("couple of splittings is not admissible; failing: {}", join(.failed))]
    NotAdmissible { failed: Vec<Condition> },

    #[error("subspace is not a complement of the base subspace")]
    NotInRelativeGrassmannian,

    #[error("base subspace differs from the first component of the pair")]
    BaseMismatch,

    #[error("image of the map is not contained in the requested codomain")]
    NotInCodomain,

    #[error("both parameters are zero")]
    BothParametersZero,

    #[error("parameter must be nonzero")]
    ZeroParameter,

    #[error("partition is not a partition adapted to the measure")]
    NotAMuPartition,

    #[error("ground set mismatch: {left} vs {right} points")]
    GroundMismatch { left: usize, right: usize },

    #[error("invalid truncation: {0}")]
    InvalidTruncation(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("invalid number: {0:?}")]
    InvalidNumber(String),

    #[error("invalid tolerance {0}")]
    InvalidTolerance(f64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
