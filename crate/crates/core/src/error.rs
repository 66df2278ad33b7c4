use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("elements live in different quadratic spaces")]
    SpaceMismatch,
    #[error("element is not in the Pin group")]
    NotPin,
    #[error("element is not in the Spin group")]
    NotSpin,
    #[error("bivector blades {0:#b} and {1:#b} do not commute")]
    NonCommutingBlades(u32, u32),
    #[error("blade {0:#b} does not square to -1")]
    BladeSquare(u32),
    #[error("angle {0}·π has cosine outside the field")]
    AngleOutsideField(String),
    #[error("input is not of unit norm: {0}")]
    NonUnitNorm(String),
    #[error("linear solve failed: {0}")]
    SolveFailure(String),
    #[error("map fails the order check: {0}")]
    OrderCheck(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix does not have determinant one")]
    NotUnimodular,
    #[error("span is not closed under the bracket")]
    NotClosed,
    #[error("unknown Levi subgroup `{0}`")]
    UnknownLevi(String),
    #[error("unknown Cartan type `{0}`")]
    UnknownCartanType(String),
    #[error("invalid parameter shape: {0}")]
    InvalidShape(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
