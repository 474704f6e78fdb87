//! Error type shared by the whole toolkit.

use std::path::PathBuf;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("time step must be positive and finite, got {0}")]
    NonPositiveDt(f64),

    #[error("non-finite value {value} at index {index}")]
    NonFiniteValue { index: usize, value: f64 },

    #[error("empty request: {0}")]
    EmptyRequest(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported distribution tag `{0}` (expected gaussian, uniform or rademacher)")]
    UnsupportedDistribution(String),

    #[error("ensemble request of {requested} samples exceeds the cap of {cap} (override with {env_var})")]
    ResourceCap {
        requested: u64,
        cap: u64,
        env_var: &'static str,
    },

    #[error("switch window [{t_open}, {t_close}] contains no sample of the series")]
    DegenerateWindow { t_open: f64, t_close: f64 },

    #[error("insufficient data for {what}: need at least {needed}, got {got}")]
    InsufficientData {
        what: &'static str,
        needed: usize,
        got: usize,
    },

    #[error("too few paths for an ensemble statistic: need at least {needed}, got {got}")]
    StatisticalPower { needed: usize, got: usize },

    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),

    #[error("lag {tau} is not on the sampling grid with step {dt}")]
    OffGridLag { tau: f64, dt: f64 },

    #[error("log-log fit needs at least {needed} bins strictly inside ({band_lo}, {band_hi}), found {got}")]
    TooFewBins {
        band_lo: f64,
        band_hi: f64,
        needed: usize,
        got: usize,
    },

    #[error("non-positive spectral density in fit band at bins {bins:?}")]
    NonPositiveDensity { bins: Vec<usize> },

    #[error("column `{0}` not found in CSV header")]
    MissingColumn(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: timestamp {t} does not increase over the previous row")]
    NonMonotoneTimestamp { line: usize, t: f64 },

    #[error("line {line}: price {value} is not strictly positive (logarithm undefined)")]
    NonPositivePrice { line: usize, value: f64 },

    #[error("file {0} has fewer than 2 rows")]
    TooFewRows(PathBuf),

    #[error("segment length {0} is not a power of two")]
    SegmentNotPowerOfTwo(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
