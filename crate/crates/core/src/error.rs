use thiserror::Error;

/// Everything that can go wrong while building or analysing a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generator {0} is not a positive integer")]
    NonPositive(i64),
    #[error("generators are not coprime (gcd > 1, gcd = {0})")]
    NotNumerical(i64),
    #[error("{0} is not an element of the semigroup")]
    NotMember(i64),
    #[error("modulus {0} is too large for an Apery table")]
    ModulusTooLarge(i64),
    #[error("the semigroup is all of N; pseudo-Frobenius numbers are undefined")]
    WholeSemigroup,
    #[error("integer overflow")]
    Overflow,
    #[error("expected exactly 3 minimal generators, found {0}")]
    NotThreeGenerated(usize),
    #[error("{0:?} is not an ordering of the minimal generators")]
    InvalidOrder([i64; 3]),
    #[error("{0} is not a minimal generator")]
    NotAGenerator(i64),
    #[error("the semigroup is symmetric; the exponent matrix is not defined")]
    SymmetricInput,
    #[error("balance relation {0} has more than one decomposition")]
    NonUniqueDecomposition(&'static str),
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error("beta' b = alpha a; no branch can be selected")]
    DegenerateBranch,
    #[error("lemma requires f' > f, but f' < f in this orientation")]
    BranchMismatch,
    #[error("{0} is odd; expected an even integer")]
    OddInput(i64),
    #[error("{0} is not a positive multiple of 12")]
    NotMultipleOf12(i64),
    #[error("invalid range: {0}")]
    RangeError(String),
    #[error("need at least 2 minimal generators, found {0}")]
    TooFewGenerators(usize),
    #[error("the semigroup is not simple")]
    NotSimple,
    #[error("the first generator {0} is not the least generator")]
    OrderViolation(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
