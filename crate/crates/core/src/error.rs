//! Error type shared by the metric and graph layers.

use thiserror::Error;

/// Why a system description or metric request was rejected.
///
/// Each variant names the specific constraint that failed so callers can
/// surface precise diagnostics. [`Error::NoConfigurationFreedom`] is not
/// an input error: it marks the degenerate `p = n` system whose minimum
/// and maximum complexity coincide, leaving the efficiency undefined.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("system must contain at least one unit")]
    EmptySystem,

    #[error("region size must be at least one unit")]
    EmptyRegion,

    #[error("unit count {n} exceeds the supported maximum of {max} (exact integer arithmetic)")]
    TooManyUnits { n: u64, max: u64 },

    #[error("region count {r} must be between 1 and the unit count {n}")]
    RegionCountOutOfRange { n: u64, r: u64 },

    #[error("region count {r} must divide the unit count {n} evenly")]
    UnevenRegions { n: u64, r: u64 },

    #[error("regional violation count {p} exceeds the region size {x}")]
    ViolationsExceedRegionSize { p: u64, x: u64 },

    #[error("violation count {violations} exceeds the unit count {n}")]
    ViolationsExceedUnits { violations: u64, n: u64 },

    #[error("violation count must be at least 1 for this metric")]
    ZeroViolations,

    #[error("mean regional violation count {p} must be positive, finite, and at most the unit count {n}")]
    InvalidMeanViolations { p: f64, n: u64 },

    #[error("no configuration freedom: every unit is violational (p = n), so minimal and maximal complexity coincide")]
    NoConfigurationFreedom,

    #[error("duplicate unit id `{id}`")]
    DuplicateUnitId { id: String },

    #[error("no feasible region count: {p} violations per region cannot fit in any partition of {n} units")]
    NoFeasibleRegionCount { n: u64, p: u64 },
}
