use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable x{index} out of range (ring has {nvars} variables)")]
    VarOutOfRange { index: usize, nvars: usize },
    #[error("z is not allowed here (position {pos})")]
    ZNotAllowed { pos: usize },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("{count} polynomials cannot be independent in {nvars} variables")]
    TooManyPolys { count: usize, nvars: usize },
    #[error("empty list")]
    EmptyList,
    #[error("every polynomial in the family is zero")]
    AllZero,
    #[error("empty point set")]
    EmptySet,
    #[error("the zero polynomial has no Newton polytope")]
    ZeroPolynomial,
    #[error("point is not in the set")]
    PointNotInSet,
    #[error("counit law fails for x{0}")]
    CounitFails(usize),
    #[error("coassociativity fails for x{index}: {lhs} != {rhs}")]
    CoassocFails { index: usize, lhs: String, rhs: String },
    #[error("D^k(x{index}) is still nonzero after {cap} steps")]
    NotLocallyNilpotentWithinCap { index: usize, cap: usize },
    #[error("automorphism pair does not compose to the identity ({0})")]
    NotInverse(String),
    #[error("image of x{0} is zero")]
    ZeroImage(usize),
    #[error("the homomorphism has no z-terms")]
    NoZTerms,
    #[error("star condition fails: {0}")]
    StarFails(String),
    #[error("precondition fails: {0}")]
    PreconditionFails(String),
    #[error("S has transcendence degree below {needed}")]
    SNotFullRank { needed: usize },
    #[error("the list of invariants is empty")]
    EmptyInvariantList,
    #[error("invalid witness: {0}")]
    WitnessInvalid(String),
    #[error("hypothesis fails: {0}")]
    HypothesisFails(String),
    #[error("postcondition violated: {0}")]
    PostconditionViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
