use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid bimodule: {0}")]
    InvalidBimodule(String),

    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    #[error("algebra `{0}` is not commutative (e{1}*e{2} != e{2}*e{1})")]
    NonCommutative(String, usize, usize),

    #[error("image of basis element {element} is not central: it fails to commute with basis element e{witness}")]
    NotCentral { element: usize, witness: usize },

    #[error("sector actions disagree on net basis pair ({left}, {right})")]
    ActionMismatch { left: usize, right: usize },

    #[error("net mismatch: {0}")]
    NetMismatch(String),

    #[error("defect mismatch: {0}")]
    DefectMismatch(String),

    #[error("induced map is not well defined: {0}")]
    NotWellDefined(String),

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("unsupported interval class: {0}")]
    UnsupportedClass(String),

    #[error("intervals are not nested")]
    NotNested,

    #[error("inconsistent configuration: {0}")]
    InconsistentConfig(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
