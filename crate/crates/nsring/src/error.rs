use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyInput,
    #[error("gcd of generators is {0}, expected 1")]
    GcdNotOne(i64),
    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),
    #[error("enumeration bound {0} exceeds safety cap {1}")]
    BoundTooLarge(i64, i64),
    #[error("ideal has no generators")]
    EmptyGenerators,
    #[error("ideals live over different semigroups")]
    MixedSemigroups,
    #[error("degree {0} is not a minimal generator")]
    NotAGenerator(i64),
    #[error("ideal is not contained in the ring")]
    NotInsideRing,
    #[error("semigroup does not have minimal multiplicity")]
    NotMinimalMultiplicity,
    #[error("ideal is principal")]
    PrincipalIdeal,
    #[error("operation is undefined for the DVR k[t]")]
    DvrInput,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("truncation cap {0} too small for degree {1}")]
    CapExceeded(i64, i64),
    #[error("matrix entry at ({0},{1}) is not homogeneous of the expected degree")]
    NotHomogeneous(usize, usize),
    #[error("presentation matrix is not minimal (unit entry)")]
    NotMinimal,
    #[error("ext tail certificate not found within depth {0}")]
    CertificateNotFound(usize),
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
