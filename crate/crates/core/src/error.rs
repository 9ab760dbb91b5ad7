use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field modulus {0}: must be a prime with 2 < p < 2^31")]
    InvalidField(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("{n} does not divide p - 1 = {group_order}")]
    NotADivisor { n: u64, group_order: u64 },
    #[error("element {omega} has order {actual}, expected {expected}")]
    WrongOrder {
        omega: u32,
        expected: u64,
        actual: u64,
    },
    #[error("bad radix schedule {radices:?} for n = {n}")]
    BadRadices { n: u64, radices: Vec<usize> },
    #[error("vector has length {actual}, plan expects {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("index {index} out of range for length {len}")]
    OutOfRange { index: usize, len: usize },
    #[error("residue {value} is not reduced modulo {p}")]
    Unreduced { value: u64, p: u32 },
    #[error(
        "operation count mismatch: measured {measured_mul} mul / {measured_add} add, \
         predicted {predicted_mul} mul / {predicted_add} add"
    )]
    CountMismatch {
        measured_mul: u64,
        measured_add: u64,
        predicted_mul: u64,
        predicted_add: u64,
    },
    #[error("malformed vector file, line {line}: {reason}")]
    Malformed { line: usize, reason: String },
}
