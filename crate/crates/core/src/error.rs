use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("{0}: the zero polynomial is not a valid argument")]
    ZeroPolynomial(&'static str),

    #[error("invalid recurrence: {0}")]
    InvalidSpec(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    /// The shortest rational recurrence of an integer sequence came out with a
    /// non-integral coefficient. Impossible for a genuine integer linear
    /// recurrence, so the caller's order bound or terms are wrong.
    #[error("minimal recurrence has non-integral coefficient {0}")]
    FatouViolation(String),

    #[error("minimal recurrence has a vanishing constant coefficient a_0")]
    VanishingConstant,

    #[error("terms need a recurrence of order {found}, above the bound {bound}")]
    OrderBoundExceeded { found: usize, bound: usize },

    #[error("need at least {needed} terms, got {got}")]
    NotEnoughTerms { needed: usize, got: usize },

    #[error("sectioning modulus {modulus} exceeds the configured cap {cap}")]
    ModulusCapExceeded { modulus: String, cap: u64 },

    #[error("interpolated polynomial for residue {residue} mod {modulus} disagrees with the sequence at n = {index}")]
    InterpolationMismatch {
        residue: u64,
        modulus: u64,
        index: u64,
    },

    #[error("polynomial path produced the non-integer value {0}")]
    NonIntegerValue(String),

    #[error("interval arithmetic lost all precision (cap {cap} bits reached)")]
    PrecisionExhausted { cap: u32 },

    #[error("time budget exceeded after reaching index {reached} of {target}")]
    BudgetExceeded { reached: u64, target: u64 },

    #[error("power sum value at n = {index} does not enclose f(n) = {expected}")]
    ContainmentFailure { index: u64, expected: String },
}
