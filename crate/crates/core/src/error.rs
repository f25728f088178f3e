use thiserror::Error;

/// Errors surfaced by the exact evaluation paths.
///
/// Values that are merely infinite are not errors; `ExtendedRational::Infinite`
/// is a legal result wherever the underlying quantity can diverge. Errors mark
/// violated preconditions or quantities that leave the exact representable
/// domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal {0:?} (expected \"p\", \"p/q\" or \"inf\")")]
    ParseRational(String),
    #[error("tail ratio must be nonnegative, got {0}")]
    NegativeRatio(String),
    #[error("exceptional index {index} is not below the tail start {tail_start}")]
    ExceptionalBeyondTail { index: u64, tail_start: u64 },
    #[error("exponent {0} exceeds the supported range")]
    ExponentOverflow(u64),
    #[error("negative term s({index}) = {value} in a sum that requires nonnegative terms")]
    NegativeTerm { index: u64, value: String },
    #[error("tail ratios {left} and {right} are incompatible for pointwise addition")]
    TailRatioMismatch { left: String, right: String },
    #[error("series diverges: {0}")]
    DivergentSeries(String),
    #[error("negative weight at atom {index}")]
    NegativeWeight { index: u64 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("vectors from different spaces in one computation")]
    MixedSpace,
    #[error("functional is not in the dual space expected here")]
    DualSpaceMismatch,
    #[error("functional is not in l1: sum of absolute entries is {0}")]
    NotL1Dual(String),
    #[error("sign enumeration capped at {cap} distinct terms, got {got}")]
    TermCapExceeded { cap: usize, got: usize },
    #[error("exact value is irrational (square root of {squared}); use approximate mode")]
    IrrationalNorm { squared: String },
    #[error("measure space is not locally determined: atom {atom} has infinite mass")]
    NotLocallyDetermined { atom: u64 },
    #[error("density is not locally Pettis integrable")]
    NotLocallyPettis,
    #[error("density is not locally Bochner integrable")]
    NotLocallyBochner,
    #[error("not Bochner integrable: the norm integral is {norm}")]
    NotBochnerIntegrable { norm: String },
    #[error("not Dunford integrable: the Dunford norm is {norm}")]
    NotDunford { norm: String },
    #[error("not Pettis integrable: candidate integral over {set} leaves the space")]
    NotPettis { set: String },
    #[error("set has infinite measure, outside the finite-measure delta-ring")]
    NotInSigmaF,
    #[error("multiplier is not integrable against the density measure")]
    NotNuIntegrable,
    #[error("partition enumeration capped at {cap} elements, got {size}")]
    TooLarge { size: usize, cap: usize },
    #[error("scenario is invalid: {0}")]
    Validation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
