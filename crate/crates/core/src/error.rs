use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix space basis is linearly dependent (element {index})")]
    DependentBasis { index: usize },

    #[error("no element of rank {rank} found in {attempts} consecutive samples")]
    RetryExhausted { rank: usize, attempts: usize },

    #[error("pencil is not singular: det(sA + tB) is not identically zero")]
    NotSingular,

    #[error("pencil is not two-dimensional: B lies in the span of A")]
    NotTwoDimensional,

    #[error("matrix {index} is not skew-symmetric")]
    NotSkew { index: usize },

    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),

    #[error("structure constants are not antisymmetric at ({0}, {1})")]
    AntisymmetryViolation(usize, usize),

    #[error("Cartan elements {0} and {1} do not commute")]
    CartanNotCommuting(usize, usize),

    #[error("solution space is not closed under the commutator")]
    NotClosedUnderBracket,

    #[error("representation is not a homomorphism on basis pair ({0}, {1})")]
    NotHomomorphism(usize, usize),

    #[error("subspace is not invariant under the action")]
    NotInvariant,

    #[error("invariant form does not split off the trivial summand")]
    DegenerateForm,

    #[error("no nonzero invariant bilinear form exists")]
    NoInvariantForm,

    #[error("Killing form is degenerate (algebra is not semisimple)")]
    DegenerateKilling,

    #[error("Cartan action has an eigenvalue outside the rationals")]
    NonSplit,

    #[error("Cartan action is not diagonalizable")]
    NonDiagonalizable,

    #[error("module has dimension {found}, expected {expected}")]
    WeylDimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("algebra has no split Cartan subalgebra / root data")]
    NoRootData,

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}
