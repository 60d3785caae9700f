use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in Q(sqrt 2)")]
    DivisionByZero,

    #[error("gap must be a positive odd integer, got {0}")]
    InvalidGap(u64),

    #[error("legs {a} and {b} do not differ by {gap}")]
    GapMismatch { a: BigInt, b: BigInt, gap: u64 },

    #[error("({p}, {q}) is not a solution of p^2 - 2q^2 = +-{n}")]
    NotASolution { p: BigInt, q: BigInt, n: u64 },

    #[error("recurrence has no distinct real roots (A^2 + 4B = {0})")]
    DegenerateRecurrence(BigRational),

    #[error("recurrence with B = 0 cannot be run backward")]
    NotReversible,

    #[error("term a_{n} = {value} is not an integer")]
    NonIntegralTerm { n: i64, value: BigRational },

    #[error("closed form needs B = -1 and sqrt(A^2 - 4) in Q(sqrt 2)")]
    NoClosedForm,

    #[error("closed form for n = {n} left a non-integral value {value}")]
    ClosedFormInconsistent { n: i64, value: String },

    #[error("invalid recurrence seeds: need a1 > a0 >= 1, got a0 = {a0}, a1 = {a1}")]
    InvalidSeeds { a0: BigInt, a1: BigInt },
}

pub type Result<T> = std::result::Result<T, Error>;
