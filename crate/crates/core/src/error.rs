use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0:?} is not a monic irreducible polynomial of the requested degree")]
    NotIrreducible(Vec<u32>),
    #[error("no default modulus for p^r = {p}^{r}; pass one explicitly")]
    UnsupportedSize { p: u64, r: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("element code {code} is out of range for a field of order {q}")]
    ElementOutOfRange { code: u64, q: u64 },
    #[error("polynomial degree {degree} exceeds the configured bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("skew polynomials use different fields or twists")]
    ContextMismatch,
    #[error("division by the zero polynomial")]
    DivisorZero,
    #[error("enumeration of {size} candidates exceeds the cap {cap}")]
    EnumerationCap { size: u128, cap: u128 },
    #[error("polynomial is not a monic right divisor of x^n - lambda")]
    NotARightDivisor,
    #[error("constant term of the twisted cofactor vanishes")]
    SingularConstantTerm,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("the zero code has no minimum distance or generator polynomial")]
    ZeroCode,
    #[error("exhaustive search over {size} codewords exceeds the budget {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("code is not closed under the requested twisted shift")]
    NotSkewConstacyclic,
    #[error("operands live in different product rings")]
    RingMismatch,
    #[error("operation not supported for this automorphism: {0}")]
    ScopeRestriction(String),
    #[error("first component is not fixed by the {0}-th power of the cyclic shift")]
    NotQuasiCyclicIndexEll(usize),
    #[error("gcd(t, n) = {0}, expected 1")]
    CoprimalityViolated(usize),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("roots of unity are not pairwise distinct")]
    RootsNotDistinct,
    #[error("requirement not met: {0}")]
    DivisibilityViolated(String),
    #[error("M M^T is not a nonzero multiple of the identity")]
    NotScaledOrthogonal,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
