use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("coxeter matrix is empty")]
    EmptySystem,
    #[error("{what} must be a {rank}x{rank} matrix")]
    Shape { what: &'static str, rank: usize },
    #[error("coxeter matrix entry ({s}, {s}) must be 1")]
    DiagonalOrder { s: usize },
    #[error("coxeter matrix entries ({s}, {t}) and ({t}, {s}) differ")]
    AsymmetricOrder { s: usize, t: usize },
    #[error("unsupported coxeter order {m} at ({s}, {t}); expected 2, 3, 4, 6 or 0 for infinity")]
    UnsupportedOrder { s: usize, t: usize, m: u32 },
    #[error("cartan entries for ({s}, {t}) with m = {m} have no default and must be given")]
    CartanRequired { s: usize, t: usize, m: u32 },
    #[error("cartan entry ({s}, {s}) must be 2")]
    CartanDiagonal { s: usize },
    #[error("cartan entries a_{s}{t} = {a_st}, a_{t}{s} = {a_ts} are incompatible with m = {m}")]
    CartanMismatch { s: usize, t: usize, m: u32, a_st: i64, a_ts: i64 },
    #[error("generator index {index} is out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0} is not a root of this realization")]
    NotARoot(String),
    #[error("expression has {len} letters, above the enumeration guard of {guard}; use dim_delta for counts")]
    GuardExceeded { len: usize, guard: usize },
    #[error("subexpression bits must be 0 or 1")]
    InvalidBit,
    #[error("subexpressions are identical")]
    IdenticalSubexpressions,
    #[error("element with word {0:?} is not in the ideal")]
    NotInIdeal(Vec<usize>),
    #[error("the given set is not closed downward under the Bruhat order")]
    NotAnIdeal,
    #[error("prime {0} is not supported; the characteristic must be an odd prime")]
    InvalidPrime(u64),
    #[error("processing order is not a linear extension of the reverse Bruhat order on the ideal")]
    InvalidOrder,
    #[error("the positive roots of this system do not close up within {0} roots")]
    InfiniteRootSystem(usize),
    #[error("expected a vector in the {expected} basis")]
    BasisMismatch { expected: &'static str },
    #[error("laurent polynomial has a negative exponent where a polynomial was expected")]
    NotAPolynomial,
}
