use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty sequence: at least one digit is required")]
    EmptySequence,

    #[error("sequence of {0} digits is too long (limit {limit})", limit = crate::sequence::MAX_LEN)]
    SequenceTooLong(usize),

    #[error("digit {value} at offset {offset} is not 0 or 1")]
    InvalidDigit { offset: usize, value: u8 },

    #[error("lower bound {c1}/{d1} must be strictly below upper bound {c2}/{d2}")]
    BoundsOrder { c1: i64, d1: i64, c2: i64, d2: i64 },

    #[error("density bound {num}/{den} must lie strictly between 0 and 1")]
    BoundsRange { num: i64, den: i64 },

    #[error(
        "denominator {den} of reduced bound {num}/{den} exceeds the sequence length {n}; \
         re-approximate the bound by a nearby fraction with denominator at most {n}"
    )]
    DenominatorTooLarge { num: u64, den: u64, n: usize },

    #[error("malformed fraction {0:?}: expected C/D with integers C and D")]
    BadFraction(String),

    #[error("substring [{a}, {b}] is out of range for a sequence of length {n}")]
    IndexRange { a: usize, b: usize, n: usize },

    #[error("key {key} is outside the admissible range [{lo}, {hi}]")]
    KeyRange { key: i128, lo: i128, hi: i128 },

    #[error("length constraint is invalid: min {min} max {max:?}")]
    LengthConstraint { min: usize, max: Option<usize> },

    #[error("input of length {n} exceeds the brute-force cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("malformed FASTA at line {line}: {reason}")]
    MalformedFasta { line: usize, reason: String },

    #[error("ambiguous residue {residue:?} at position {position}")]
    AmbiguousResidue { position: usize, residue: char },

    #[error("sequence too short for dinucleotide mapping: {0} residue(s)")]
    TooShort(usize),

    #[error("invalid bit {byte:?} at offset {offset}")]
    InvalidBit { offset: usize, byte: char },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
