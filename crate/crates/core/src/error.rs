use thiserror::Error;

/// Errors raised by semigroup construction and the exploration engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gap set is not co-additive: {a} + {b} = {} is a gap", a + b)]
    NotCoAdditive { a: u32, b: u32 },

    #[error("generators are not coprime (gcd = {gcd}); the monoid is not cofinite")]
    NotCoprime { gcd: u32 },

    #[error("at least one generator is required")]
    NoGenerators,

    #[error("0 is not allowed in a {what} list")]
    ZeroElement { what: &'static str },

    #[error("genus exceeds the representable limit of {limit}")]
    GenusLimit { limit: u32 },

    #[error("genus {requested} exceeds the configured bound {bound}")]
    GenusBoundExceeded { requested: u32, bound: u32 },

    #[error("count overflow at genus {genus}")]
    CountOverflow { genus: u32 },

    #[error("conductor {conductor} is out of range for a quasi-ordinary semigroup of genus {genus}")]
    OutOfRange { genus: u32, conductor: u32 },

    #[error("quasi-ordinarization number {q} is outside the high range for genus {genus}")]
    RangeViolation { genus: u32, q: u32 },

    #[error("member {member} <= genus - 1 is odd")]
    OddSmallMember { member: u32 },

    #[error("invalid closed set: {0}")]
    InvalidClosedSet(String),

    #[error("b-file line {line}: {message}")]
    BFile { line: usize, message: String },

    #[error("cannot parse semigroup `{0}`: expected `gaps: a,b,...` or `gens: a,b,...`")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
