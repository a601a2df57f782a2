use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("modulus {0:?} is not irreducible")]
    ReducibleModulus(Vec<u32>),

    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    #[error("basis exchange fails between {first:?} and {second:?}")]
    BasisExchangeViolation { first: Vec<String>, second: Vec<String> },

    #[error("matroid axiom {axiom} violated: {detail}")]
    MatroidAxiom { axiom: &'static str, detail: String },

    #[error("projective plane axiom violated: {0}")]
    AxiomViolation(String),

    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("basis elements have mixed degrees")]
    MixedDegrees,

    #[error("polynomial is not homogeneous")]
    Inhomogeneous,

    #[error("weight vector lies on a wall of the Groebner fan")]
    TiedWeight,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

/// Environment variable that lifts every size guard when set to a non-empty value.
pub const GUARD_OVERRIDE_VAR: &str = "MATGOR_GUARD_OVERRIDE";

pub(crate) fn guards_lifted() -> bool {
    std::env::var(GUARD_OVERRIDE_VAR)
        .map(|v| !v.is_empty() && v != "0")
        .unwrap_or(false)
}

/// Fails with `GuardExceeded` when `value > limit`, unless guards are lifted.
pub(crate) fn guard(what: &str, value: usize, limit: usize) -> Result<()> {
    if value > limit && !guards_lifted() {
        Err(Error::GuardExceeded(format!("{what} = {value} > {limit}")))
    } else {
        Ok(())
    }
}
