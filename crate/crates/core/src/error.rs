use thiserror::Error;

/// Which of the two (1,1) component conditions an α-form violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Type11Condition {
    /// α^c_ij = α^c_{n+i,n+j}
    A,
    /// α^c_{i,n+j} = -α^c_{n+i,j}
    B,
}

impl std::fmt::Display for Type11Condition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Type11Condition::A => write!(f, "(a) alpha^c_ij = alpha^c_(n+i,n+j)"),
            Type11Condition::B => write!(f, "(b) alpha^c_(i,n+j) = -alpha^c_(n+i,j)"),
        }
    }
}

/// Errors raised by the library. Every index carried by a variant is
/// 1-based, matching the external file formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("bracket component ({a},{b},{c}) listed more than once")]
    DuplicateEntry { a: usize, b: usize, c: usize },

    #[error("bracket of e_{a} with itself cannot be prescribed (component c={c})")]
    DiagonalBracket { a: usize, c: usize },

    #[error("Jacobi identity fails at (a,b,c;l) = ({a},{b},{c};{l})")]
    JacobiViolation { a: usize, b: usize, c: usize, l: usize },

    #[error("unknown catalog name `{0}`")]
    UnknownName(String),

    #[error("frame change is not unitary: {0}")]
    NotUnitary(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("an almost Hermitian algebra needs even dimension, got {0}")]
    OddDimension(usize),

    #[error("component array is not antisymmetric in its lower indices at ({a},{b},{c})")]
    NotAntisymmetric { a: usize, b: usize, c: usize },

    #[error("alpha is not of type (1,1): condition {condition} fails at i={i}, j={j}, c={c}")]
    NotType11 {
        condition: Type11Condition,
        i: usize,
        j: usize,
        c: usize,
    },

    #[error("Nijenhuis tensor is not totally skew at ({a},{b},{c}); no Hermitian connection with totally skew torsion exists")]
    NijenhuisNotSkew { a: usize, b: usize, c: usize },

    #[error("algebra is not of the form h + a (nonzero component ({a},{b},{c}) touches the abelian block)")]
    NotProductForm { a: usize, b: usize, c: usize },

    #[error("torsion is not totally skew at ({a},{b},{c})")]
    NotTotallySkew { a: usize, b: usize, c: usize },

    #[error("frame is not bi-invariant on the h block: C^{k}_({i},{j}) != -C^{j}_({i},{k})")]
    NotBiinvariantFrame { i: usize, j: usize, k: usize },
}

/// Coarse classification used for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed or inconsistent input data.
    Validation,
    /// Well-formed input that fails a mathematical precondition of the
    /// requested operation.
    MathPrecondition,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::NijenhuisNotSkew { .. }
            | Error::NotProductForm { .. }
            | Error::NotTotallySkew { .. }
            | Error::NotBiinvariantFrame { .. } => ErrorClass::MathPrecondition,
            _ => ErrorClass::Validation,
        }
    }

    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DuplicateEntry { .. } => "DuplicateEntry",
            Error::DiagonalBracket { .. } => "DiagonalBracket",
            Error::JacobiViolation { .. } => "JacobiViolation",
            Error::UnknownName(_) => "UnknownName",
            Error::NotUnitary(_) => "NotUnitary",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::OddDimension(_) => "OddDimension",
            Error::NotAntisymmetric { .. } => "NotAntisymmetric",
            Error::NotType11 { .. } => "NotType11",
            Error::NijenhuisNotSkew { .. } => "NijenhuisNotSkew",
            Error::NotProductForm { .. } => "NotProductForm",
            Error::NotTotallySkew { .. } => "NotTotallySkew",
            Error::NotBiinvariantFrame { .. } => "NotBiinvariantFrame",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
