//! Closed-form metrics over uniformly distributed encapsulated systems.
//!
//! A uniform system splits `n` program units into `r` regions of equal
//! size `x = n / r`, with exactly `p` units per region visible outside
//! it. Over that family the potential structural complexity — the count
//! of ordered potential dependencies the configuration permits — has
//! exact closed forms:
//!
//! - [`psc_max`]: `n(n - 1)`, every unit visible to every other;
//! - [`psc_uniform`]: `n(n/r - 1 + (r - 1)p)`, what the configuration
//!   actually permits;
//! - [`psc_min_closed`]: `n(2√(np) - 1 - p)`, the lower envelope over
//!   region counts, attained at the real-valued optimum `r = √(n/p)`.
//!
//! Configuration inefficiency locates the actual complexity between the
//! envelope endpoints, `(s - s_min) / (s_max - s_min)`, and configuration
//! efficiency is its complement. As a system grows with the region size
//! held at `x`, the efficiency approaches the limit `1 - p/x`, which for
//! `|h|` system-wide violational units equals `1 - |h|/n`. The limits are
//! exact rationals and are returned as such.
//!
//! P.S.C. values are exact integers; the efficiency fractions are IEEE
//! doubles with a documented comparison tolerance of 1e-12 relative.

use std::fmt;

use crate::error::Error;

/// Exact rational fraction used for the efficiency limits.
pub type Fraction = num_rational::Ratio<u64>;

/// Largest supported unit count.
///
/// Keeps every P.S.C. product below 2^63, so all integer metrics stay
/// exact in `u64` arithmetic.
pub const MAX_UNITS: u64 = 1_000_000_000;

/// An exact count of ordered potential dependencies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PscValue(u64);

impl PscValue {
    /// The raw dependency count.
    pub fn get(self) -> u64 {
        self.0
    }

    pub(crate) fn from_u128(value: u128) -> PscValue {
        PscValue(u64::try_from(value).expect("p.s.c. value exceeds u64 range"))
    }
}

impl fmt::Display for PscValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<PscValue> for u64 {
    fn from(value: PscValue) -> u64 {
        value.0
    }
}

/// A uniformly distributed encapsulated system: `n` units split into `r`
/// equal regions of `x = n/r` units, `p` of which are violational.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UniformSystem {
    n: u64,
    r: u64,
    p: u64,
}

impl UniformSystem {
    /// Validates the shape: `1 ≤ n ≤ MAX_UNITS`, `1 ≤ r ≤ n` with
    /// `r | n`, and `0 ≤ p ≤ n/r`.
    pub fn new(n: u64, r: u64, p: u64) -> Result<UniformSystem, Error> {
        if n == 0 {
            return Err(Error::EmptySystem);
        }
        if n > MAX_UNITS {
            return Err(Error::TooManyUnits { n, max: MAX_UNITS });
        }
        if r == 0 || r > n {
            return Err(Error::RegionCountOutOfRange { n, r });
        }
        if n % r != 0 {
            return Err(Error::UnevenRegions { n, r });
        }
        let x = n / r;
        if p > x {
            return Err(Error::ViolationsExceedRegionSize { p, x });
        }
        Ok(UniformSystem { n, r, p })
    }

    /// Total unit count `n`.
    pub fn n(self) -> u64 {
        self.n
    }

    /// Region count `r`.
    pub fn r(self) -> u64 {
        self.r
    }

    /// Violational units per region, `p`.
    pub fn p(self) -> u64 {
        self.p
    }

    /// Units per region, `x = n / r`.
    pub fn units_per_region(self) -> u64 {
        self.n / self.r
    }

    /// System-wide violation count `|h| = r·p`.
    pub fn total_violations(self) -> u64 {
        self.r * self.p
    }
}

impl fmt::Display for UniformSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "uniform(n={}, r={}, p={})", self.n, self.r, self.p)
    }
}

/// Maximum P.S.C. of an `n`-unit system: `n(n - 1)` ordered pairs.
pub fn psc_max(n: u64) -> Result<PscValue, Error> {
    if n == 0 {
        return Err(Error::EmptySystem);
    }
    if n > MAX_UNITS {
        return Err(Error::TooManyUnits { n, max: MAX_UNITS });
    }
    Ok(PscValue::from_u128(n as u128 * (n as u128 - 1)))
}

/// P.S.C. expressed by a uniform configuration: `n(n/r - 1 + (r - 1)p)`.
///
/// Always equals the definitional P.S.C. of the materialised graph
/// (`graph::psc_actual` of `graph::build_uniform_graph`).
pub fn psc_uniform(sys: &UniformSystem) -> PscValue {
    let n = sys.n as u128;
    let x = sys.units_per_region() as u128;
    let r = sys.r as u128;
    let p = sys.p as u128;
    PscValue::from_u128(n * (x - 1 + (r - 1) * p))
}

/// Closed-form lower bound on uniform P.S.C.: `n(2√(np) - 1 - p)`.
///
/// Real-valued because the optimal region count `√(n/p)` is rarely an
/// integer; the bound is attained exactly when it is an integer divisor
/// of `n`. Requires `1 ≤ p ≤ n`; a violation-free system has no
/// meaningful closed form here and is rejected.
pub fn psc_min_closed(n: u64, p: u64) -> Result<f64, Error> {
    if n == 0 {
        return Err(Error::EmptySystem);
    }
    if p == 0 {
        return Err(Error::ZeroViolations);
    }
    if p > n {
        return Err(Error::ViolationsExceedUnits { violations: p, n });
    }
    Ok(psc_min_formula(n as f64, p as f64))
}

/// [`psc_min_closed`] with a real-valued violation count.
///
/// Used to estimate a complexity floor for non-uniform graphs from their
/// mean regional violation count.
pub fn psc_min_closed_real(n: u64, p: f64) -> Result<f64, Error> {
    if n == 0 {
        return Err(Error::EmptySystem);
    }
    if !p.is_finite() || p <= 0.0 || p > n as f64 {
        return Err(Error::InvalidMeanViolations { p, n });
    }
    Ok(psc_min_formula(n as f64, p))
}

fn psc_min_formula(n: f64, p: f64) -> f64 {
    n * (2.0 * (n * p).sqrt() - 1.0 - p)
}

/// Configuration inefficiency `(n/r + rp - 2√(np)) / (n - 2√(np) + p)`.
///
/// Equals `(s - s_min) / (s_max - s_min)` for the three P.S.C. forms
/// above. Requires `p ≥ 1`; the degenerate `p = n` system (everything
/// public in a single region) has `s_max = s_min` and is reported as
/// [`Error::NoConfigurationFreedom`].
pub fn config_inefficiency(sys: &UniformSystem) -> Result<f64, Error> {
    if sys.p == 0 {
        return Err(Error::ZeroViolations);
    }
    if sys.p == sys.n {
        return Err(Error::NoConfigurationFreedom);
    }
    let n = sys.n as f64;
    let r = sys.r as f64;
    let p = sys.p as f64;
    let x = sys.units_per_region() as f64;
    let root = 2.0 * (n * p).sqrt();
    Ok(((x + r * p) - root) / ((n + p) - root))
}

/// Configuration efficiency, the complement `1 - c_i`.
///
/// Equals `(s_max - s) / (s_max - s_min)`; preconditions and the
/// degenerate case are as for [`config_inefficiency`].
pub fn config_efficiency(sys: &UniformSystem) -> Result<f64, Error> {
    Ok(1.0 - config_inefficiency(sys)?)
}

/// Efficiency limit of an indefinitely growing system whose regions hold
/// a fixed `x` units with `p` violations each: exactly `1 - p/x`.
pub fn ce_limit_fixed_size(p: u64, x: u64) -> Result<Fraction, Error> {
    if x == 0 {
        return Err(Error::EmptyRegion);
    }
    if p == 0 {
        return Err(Error::ZeroViolations);
    }
    if p > x {
        return Err(Error::ViolationsExceedRegionSize { p, x });
    }
    Ok(Fraction::new(x - p, x))
}

/// Efficiency limit expressed through the system-wide violation count:
/// exactly `1 - h_total/n`.
pub fn ce_limit_ihv(h_total: u64, n: u64) -> Result<Fraction, Error> {
    if n == 0 {
        return Err(Error::EmptySystem);
    }
    if h_total == 0 {
        return Err(Error::ZeroViolations);
    }
    if h_total > n {
        return Err(Error::ViolationsExceedUnits {
            violations: h_total,
            n,
        });
    }
    Ok(Fraction::new(n - h_total, n))
}

/// Real-valued region count minimising uniform P.S.C.: `√(n/p)`.
///
/// Reporting aid only; the integer minimiser is found by
/// `graph::brute_force_min_over_r`.
pub fn optimal_region_count(n: u64, p: u64) -> Result<f64, Error> {
    if n == 0 {
        return Err(Error::EmptySystem);
    }
    if p == 0 {
        return Err(Error::ZeroViolations);
    }
    Ok((n as f64 / p as f64).sqrt())
}
