//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be prime, got {0}")]
    NotPrime(u32),
    #[error("p = {0} exceeds the largest supported prime {max}", max = crate::field::MAX_PRIME)]
    PrimeTooLarge(u32),
    #[error("q = {q} is not a positive power of p = {p}")]
    NotPrimePower { p: u32, q: u64 },
    #[error("weight k must be at least 2, got {0}")]
    WeightTooSmall(u32),
    #[error("exponent overflow computing {p}^{m}")]
    ExponentOverflow { p: u32, m: u32 },
    #[error("mismatched prime fields: F_{0} vs F_{1}")]
    ModulusMismatch(u32, u32),
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not glissando: entry ({row},{col}) is not a scalar multiple of t^{col}")]
    NotGlissando { row: usize, col: usize },
    #[error("oracle refuses dimension {dim} (limit {max})")]
    OracleDimTooLarge { dim: usize, max: usize },
    #[error("precision must be at least 1")]
    ZeroPrecision,
    #[error("cannot invert a series that is not a unit at the current precision")]
    NonUnit,
    #[error("cannot divide by t^{shift}: valuation is only known to be >= {floor}")]
    ShiftBelowValuation { shift: u64, floor: u64 },
    #[error("insufficient precision: rerun with precision at least {needed}")]
    InsufficientPrecision { needed: u64 },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("weights must satisfy k1 = k2 mod p^m, got k1={k1}, k2={k2}, p^m={p_pow}")]
    IncongruentWeights { k1: u32, k2: u32, p_pow: u64 },
    #[error(
        "block congruence failed for k={k}, m={m}: {block} block, entry ({row},{col}) \
         differs modulo t^{p_pow}"
    )]
    BlockCongruence { k: u32, m: u32, block: &'static str, row: usize, col: usize, p_pow: u64 },
    #[error(
        "coefficient valuation bound failed: v_t(a_{n}) = {actual} < {bound} \
         for a scaled glissando matrix"
    )]
    ValuationBound { n: usize, actual: u64, bound: u64 },
    #[error(
        "perturbation bound failed for k={k}, m={m}, n={n}: \
         v_t(a_n - tilde_a_n) = {actual} < {bound}"
    )]
    PerturbationBound { k: u32, m: u32, n: usize, actual: u64, bound: u64 },
}

impl Error {
    /// True for errors caused by invalid caller-supplied parameters.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::NotPrime(_)
                | Error::PrimeTooLarge(_)
                | Error::NotPrimePower { .. }
                | Error::WeightTooSmall(_)
                | Error::ExponentOverflow { .. }
                | Error::ModulusMismatch(..)
                | Error::NotSquare { .. }
                | Error::NotGlissando { .. }
                | Error::OracleDimTooLarge { .. }
                | Error::ZeroPrecision
                | Error::IndexOutOfRange { .. }
                | Error::IncongruentWeights { .. }
        )
    }

    /// True for errors that would falsify a proved statement; verification
    /// sweeps must abort loudly on these.
    pub fn is_falsification(&self) -> bool {
        matches!(
            self,
            Error::BlockCongruence { .. }
                | Error::ValuationBound { .. }
                | Error::PerturbationBound { .. }
        )
    }

    /// True when the failure is a precision shortfall in truncated mode.
    pub fn is_precision(&self) -> bool {
        matches!(self, Error::InsufficientPrecision { .. } | Error::NonUnit)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
