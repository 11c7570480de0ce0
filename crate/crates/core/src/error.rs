use thiserror::Error;

/// Every failure the library can report.
///
/// Variants group into three kinds: bad input (unsupported types, unknown
/// filters), violated mathematical preconditions (the longest element is not
/// central), and internal consistency failures that indicate a bug or corrupt
/// curated data.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("series quotient is not a polynomial of degree <= {expected_degree} (first bad coefficient at u^{at})")]
    NonPolynomialQuotient { expected_degree: usize, at: usize },
    #[error("denominator series has zero constant term")]
    ZeroConstantTerm,
    #[error("length generating function does not factor as a product of q-integers")]
    FactorizationFailure,
    #[error("root subset is not closed: {0}")]
    NotClosed(String),
    #[error("subgroup is not normal in the ambient group")]
    NotNormal,
    #[error("group of order {order} exceeds the character table bound {bound}")]
    TooLarge { order: usize, bound: usize },
    #[error("exact lifting of modular characters failed: {0}")]
    LiftFailure(String),
    #[error("element does not stabilize the root subset")]
    NotInStabilizer,
    #[error("two irreducibles match the labeling hint {0}")]
    AmbiguousLabel(String),
    #[error("irreducible character {0} matches no labeling hint")]
    UnmatchedIrreducible(usize),
    #[error("families do not partition Irr(W): {0}")]
    NotAPartition(String),
    #[error("family embedding is not injective: {0}")]
    EmbeddingNotInjective(String),
    #[error("special representation is not unique in family {0}")]
    SpecialNotUnique(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("sign twist of family {0} is not a family")]
    SignTwistNotAFamily(String),
    #[error("no solution of the sign relations for {0}")]
    NoSolution(String),
    #[error("the longest element does not act as -1 on the reflection representation of {0}")]
    W0NotCentral(String),
    #[error("family and M-element disagree: {0}")]
    MismatchedFamily(String),
    #[error("specialization {value} at q = {q} is not a positive integer ({context})")]
    NonIntegralDegree { q: u64, value: String, context: String },
    #[error("twisted Molien series does not match a product form: {0}")]
    ProductFormMismatch(String),
    #[error("unknown filter value: {0}")]
    UnknownFilter(String),
    #[error("curated data error: {0}")]
    DataIntegrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
