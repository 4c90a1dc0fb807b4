use jlk_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("dominance undefined across weights")]
    DominanceWeights,
    #[error("cell outside diagram")]
    CellOutside,
    #[error("inner shape not contained in outer shape")]
    NotContained,
    #[error("outside P3")]
    OutsideP3,
    #[error("no division-number case")]
    NoCase,
    #[error("partition has more than {0} parts")]
    TooManyParts(usize),
    #[error("operator applied to asymmetric input")]
    Asymmetric,
    #[error("operator image not polynomial")]
    NotPolynomialImage,
    #[error("eigenvalue collision between {0} and {1}")]
    EigenvalueCollision(String, String),
    #[error("expansion did not terminate")]
    NonTermination,
    #[error("not a vertical strip")]
    NotVerticalStrip,
    #[error("not a horizontal strip")]
    NotHorizontalStrip,
    #[error("g is not a polynomial")]
    NotPolynomial,
    #[error("formula/convention violation: {0}")]
    ConventionViolation(String),
    #[error("evaluation paths disagree")]
    PathDisagreement,
    #[error("invalid subtraction")]
    InvalidSubtraction,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub type Result<T> = std::result::Result<T, CoreError>;
