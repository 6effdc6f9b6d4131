use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} is not supported: m must be odd and 3 <= m <= 13")]
    EvenDegree(u32),
    #[error("extension degree {0} exceeds the table limit of 13")]
    UnsupportedDegree(u32),
    #[error("modulus {0} is not monic of degree {1}")]
    BadModulus(String, u32),
    #[error("modulus {0} is reducible over GF(3)")]
    NotIrreducible(String),
    #[error("x does not generate GF(3^{m})^* modulo {modulus} (order {order})")]
    NotPrimitive { modulus: String, m: u32, order: u64 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("quadratic character is undefined at zero")]
    ZeroInput,
    #[error("element does not belong to this field context")]
    ForeignElement,
    #[error("polynomial division by zero")]
    DivisionByZeroPoly,
    #[error("exponent {j} out of range [0, {max}]")]
    OutOfRange { j: u64, max: u64 },
    #[error("minimal polynomial of pi^{0} has a coefficient outside GF(3)")]
    CoefficientNotInBaseField(u64),
    #[error("cyclotomic cosets of u and v intersect")]
    CosetCollision,
    #[error("word length {got} does not match code length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("estimated work {estimate} exceeds budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },
    #[error("MacWilliams transform produced a non-integral or negative count at weight {0}")]
    NonIntegerOutput(usize),
    #[error("spectral weight is not integral at lambda = pi^{0}")]
    NonIntegralWeight(u64),
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
    #[error("cannot parse trit list {0:?}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Variant name, for messages and machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EvenDegree(_) => "EvenDegree",
            Error::UnsupportedDegree(_) => "UnsupportedDegree",
            Error::BadModulus(..) => "BadModulus",
            Error::NotIrreducible(_) => "NotIrreducible",
            Error::NotPrimitive { .. } => "NotPrimitive",
            Error::ZeroInverse => "ZeroInverse",
            Error::ZeroInput => "ZeroInput",
            Error::ForeignElement => "ForeignElement",
            Error::DivisionByZeroPoly => "DivisionByZeroPoly",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::CoefficientNotInBaseField(_) => "CoefficientNotInBaseField",
            Error::CosetCollision => "CosetCollision",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::NonIntegerOutput(_) => "NonIntegerOutput",
            Error::NonIntegralWeight(_) => "NonIntegralWeight",
            Error::Inconsistent(_) => "Inconsistent",
            Error::Parse(_) => "Parse",
        }
    }

    /// True for errors caused by caller input rather than by a failed
    /// internal consistency check.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::EvenDegree(_)
                | Error::UnsupportedDegree(_)
                | Error::BadModulus(..)
                | Error::NotIrreducible(_)
                | Error::NotPrimitive { .. }
                | Error::Parse(_)
                | Error::BudgetExceeded { .. }
                | Error::LengthMismatch { .. }
                | Error::OutOfRange { .. }
        )
    }
}
