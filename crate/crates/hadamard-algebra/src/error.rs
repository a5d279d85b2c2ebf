use thiserror::Error;

/// Errors shared by every layer of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring spec: {0}")]
    Spec(String),

    #[error(
        "modulus {modulus:#x} is reducible over F2; a binary field needs an irreducible modulus"
    )]
    ReducibleModulus { modulus: u64 },

    #[error("modulus {modulus:#x} must have degree at least 1")]
    ModulusDegree { modulus: u64 },

    #[error("base ring does not have characteristic 2")]
    NotCharacteristicTwo,

    #[error("context mismatch: {left} vs {right}")]
    ContextMismatch { left: String, right: String },

    #[error("element is not invertible")]
    NotInvertible,

    #[error("element {bits:#x} does not fit a ring with modulus of degree {degree}")]
    ElementRange { bits: u64, degree: u32 },

    #[error("expected a {expected} matrix, found {found}")]
    Shape { expected: String, found: String },

    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix side {side} is not a power of two")]
    SideNotPowerOfTwo { side: usize },

    #[error("matrix side {side} is not divisible by block side {block}")]
    SideNotDivisible { side: usize, block: usize },

    #[error("not a Hadamard matrix: entry ({i},{j}) differs from entry (0,{})", i ^ j)]
    NotHadamard { i: usize, j: usize },

    #[error("block ({block_row},{block_col}) is not Hadamard: entry ({i},{j}) within the block")]
    NotBlockHadamard {
        block_row: usize,
        block_col: usize,
        i: usize,
        j: usize,
    },

    #[error("index {index} out of range for level {k}")]
    IndexRange { index: u64, k: u32 },

    #[error("matrix size {size} exceeds the principal-minors oracle limit {limit}")]
    OracleLimit { size: usize, limit: usize },

    #[error("element has nonzero augmentation; not a member of the augmentation ideal")]
    NotAugmentationIdeal,

    #[error("matrix is not in the kernel of the blockwise eigenvalue map")]
    NotInKernel,

    #[error("operation requires a binary-field context, got {spec}")]
    NotAField { spec: String },

    #[error("cauchy spec: {0}")]
    Cauchy(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
