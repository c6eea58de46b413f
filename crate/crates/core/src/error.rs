use num_bigint::BigInt;
use thiserror::Error;

/// Every failure the library can report.
///
/// The `Display` form always starts with the variant name so that callers
/// (the CLI in particular) can surface it verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("NotSquareFree: {0} has a repeated prime factor")]
    NotSquareFree(u64),
    #[error("NTooSmall: n = {n} but at least {min} is required")]
    NTooSmall { n: u64, min: u64 },
    #[error("NotOddSquareFree: {0} must be odd, square-free and > 1")]
    NotOddSquareFree(u64),
    #[error("BadResidueClass: {n} is not congruent to {expected} mod 4")]
    BadResidueClass { n: u64, expected: u64 },
    #[error("InternalInconsistency: {0}")]
    InternalInconsistency(String),
    #[error("SearchCapExceeded: no solution with v <= {cap} for n = {n}")]
    SearchCapExceeded { n: u64, cap: u64 },
    #[error("InvalidSymbolArguments: ({m}|{k}) is outside the supported domain")]
    InvalidSymbolArguments { m: i64, k: u64 },
    #[error("InexactDivision: nonzero remainder of degree {remainder_degree}")]
    InexactDivision { remainder_degree: usize },
    #[error("DivisionByZero: divisor polynomial is zero")]
    DivisionByZero,
    #[error("NonIntegerCoefficient: {k}*a_{k} = {sum} is not divisible by {k}")]
    NonIntegerCoefficient { k: usize, sum: BigInt },
    #[error("NonIntegerStep: n = {n}, step {k}: sum {sum} not divisible by {divisor}")]
    NonIntegerStep {
        n: u64,
        k: usize,
        sum: BigInt,
        divisor: u64,
    },
    #[error("MissingPowerSums: need {needed} power sums, got {available}")]
    MissingPowerSums { needed: usize, available: usize },
    #[error("BadRadius: radius {0} must exceed 1")]
    BadRadius(f64),
    #[error("NotAurifeuillianPoint: n*x = {0} is not the square of a positive rational")]
    NotAurifeuillianPoint(String),
    #[error("BadConstantTerm: series constant term is {0}, expected 1")]
    BadConstantTerm(String),
    #[error("NonIntegralOracle: n = {n}, coefficient {index} is {value}")]
    NonIntegralOracle { n: u64, index: usize, value: String },
    #[error("PrecisionTooLow: {given} bits given, at least {required} required")]
    PrecisionTooLow { given: u64, required: u64 },
    #[error("RoundingFailed: rounded value {candidate} does not divide F_n(x) = {value}")]
    RoundingFailed { candidate: BigInt, value: BigInt },
    #[error("InvalidArgument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// The bare variant name, e.g. `"NonIntegerStep"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotSquareFree(_) => "NotSquareFree",
            Error::NTooSmall { .. } => "NTooSmall",
            Error::NotOddSquareFree(_) => "NotOddSquareFree",
            Error::BadResidueClass { .. } => "BadResidueClass",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::SearchCapExceeded { .. } => "SearchCapExceeded",
            Error::InvalidSymbolArguments { .. } => "InvalidSymbolArguments",
            Error::InexactDivision { .. } => "InexactDivision",
            Error::DivisionByZero => "DivisionByZero",
            Error::NonIntegerCoefficient { .. } => "NonIntegerCoefficient",
            Error::NonIntegerStep { .. } => "NonIntegerStep",
            Error::MissingPowerSums { .. } => "MissingPowerSums",
            Error::BadRadius(_) => "BadRadius",
            Error::NotAurifeuillianPoint(_) => "NotAurifeuillianPoint",
            Error::BadConstantTerm(_) => "BadConstantTerm",
            Error::NonIntegralOracle { .. } => "NonIntegralOracle",
            Error::PrecisionTooLow { .. } => "PrecisionTooLow",
            Error::RoundingFailed { .. } => "RoundingFailed",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}
