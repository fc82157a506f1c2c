use alloc::string::String;

use crate::univariate::UPoly;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("jet {index} has a nonzero constant or linear term")]
    NotAdapted { index: usize },
    #[error("point does not lie on the variety")]
    NotOnVariety,
    #[error("singular point: {0}")]
    Singular(String),
    #[error("order {0} is out of range")]
    OrderOutOfRange(usize),
    #[error("precondition violated: {0}")]
    Contract(String),
    #[error("codimension {0} is larger than two")]
    Codimension(usize),
    #[error("zero vector")]
    ZeroVector,
    #[error("pencil is not simultaneously diagonalizable")]
    NotDiagonalizable,
    #[error("generalized eigenvalues are not rational (characteristic polynomial {charpoly}); classification can still use the base-locus route")]
    IrrationalEigenvalues { charpoly: UPoly },
    #[error("no member of the pencil is invertible")]
    NoInvertibleMember,
    #[error("every member of the pencil is singular")]
    DegeneratePencil,
    #[error("base locus is positive dimensional")]
    PositiveDimensionalBase,
    #[error("configuration outside the implemented taxonomy: {0}")]
    Unrecognized(String),
    #[error("line is not contained in the hypersurface")]
    LineNotContained,
    #[error("restricted partial derivatives vanish identically along the line")]
    DegenerateRow,
    #[error("invalid example parameters: {0}")]
    InvalidParams(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
