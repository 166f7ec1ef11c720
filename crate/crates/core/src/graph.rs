//! Concrete unit graphs and definitional P.S.C.
//!
//! Where the [`crate::uniform`] module works on an idealised `(n, r, p)`
//! shape, this module works on explicit graphs: every unit carries its
//! region and a violational flag. Definitional P.S.C. generalises the
//! uniform closed form to arbitrary partitions — a unit can potentially
//! depend on every other unit in its own region plus every violational
//! unit elsewhere — and reduces to `n(n/r - 1 + (r - 1)p)` on uniform
//! graphs.
//!
//! The module also hosts the brute-force oracles used to validate the
//! closed forms: an independent ordered-pair walk for P.S.C. and an
//! exhaustive search over integer region counts for the minimum.

use std::collections::{BTreeMap, HashSet};

use crate::error::Error;
use crate::uniform::{self, PscValue, UniformSystem};

/// A program unit: a node of the encapsulated graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Unit {
    /// Unique identifier, e.g. a fully qualified type name.
    pub id: String,
    /// The encapsulated region the unit belongs to.
    pub region: String,
    /// Whether the unit is visible outside its region.
    pub violational: bool,
}

impl Unit {
    pub fn new(id: impl Into<String>, region: impl Into<String>, violational: bool) -> Unit {
        Unit {
            id: id.into(),
            region: region.into(),
            violational,
        }
    }
}

/// An encapsulated graph: a non-empty set of units with unique ids.
///
/// Unit order is presentation only — two graphs are equal when they hold
/// the same units, regardless of ordering. Serialisation (the manifest
/// writer) always emits a canonical ordering.
#[derive(Debug, Clone)]
pub struct UnitGraph {
    units: Vec<Unit>,
}

impl UnitGraph {
    /// Validates uniqueness of unit ids and rejects empty systems.
    pub fn new(units: Vec<Unit>) -> Result<UnitGraph, Error> {
        if units.is_empty() {
            return Err(Error::EmptySystem);
        }
        let mut seen = HashSet::with_capacity(units.len());
        for unit in &units {
            if !seen.insert(unit.id.as_str()) {
                return Err(Error::DuplicateUnitId {
                    id: unit.id.clone(),
                });
            }
        }
        Ok(UnitGraph { units })
    }

    /// The units in their stored order.
    pub fn units(&self) -> &[Unit] {
        &self.units
    }

    /// Total unit count `n`.
    pub fn unit_count(&self) -> u64 {
        self.units.len() as u64
    }

    /// Per-region size and violation counts, sorted by region id.
    pub fn region_summaries(&self) -> Vec<RegionSummary> {
        let mut regions: BTreeMap<&str, (u64, u64)> = BTreeMap::new();
        for unit in &self.units {
            let entry = regions.entry(unit.region.as_str()).or_insert((0, 0));
            entry.0 += 1;
            if unit.violational {
                entry.1 += 1;
            }
        }
        regions
            .into_iter()
            .map(|(region, (size, violations))| RegionSummary {
                region: region.to_string(),
                size,
                violations,
            })
            .collect()
    }
}

impl PartialEq for UnitGraph {
    fn eq(&self, other: &UnitGraph) -> bool {
        if self.units.len() != other.units.len() {
            return false;
        }
        let mut left: Vec<&Unit> = self.units.iter().collect();
        let mut right: Vec<&Unit> = other.units.iter().collect();
        left.sort_by(|a, b| a.id.cmp(&b.id));
        right.sort_by(|a, b| a.id.cmp(&b.id));
        left == right
    }
}

impl Eq for UnitGraph {}

/// Size and violation count of one encapsulated region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionSummary {
    pub region: String,
    pub size: u64,
    pub violations: u64,
}

/// Full metric report for a concrete graph.
///
/// `psc_min_estimate` uses the closed-form bound at the mean regional
/// violation count, clamped to at most `psc_actual`; for violation-free
/// graphs it is zero (singleton regions with nothing public have no
/// potential coupling). `config_efficiency` is `None` when the estimate
/// coincides with `psc_max` — no configuration freedom.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphMetrics {
    pub n: u64,
    pub region_count: u64,
    pub ihv_total: u64,
    pub mean_regional_ihv: f64,
    pub psc_actual: PscValue,
    pub psc_max: PscValue,
    pub psc_min_estimate: f64,
    pub config_efficiency: Option<f64>,
    pub config_inefficiency: Option<f64>,
    pub approx_config_efficiency: f64,
    pub uniform: bool,
}

/// Definitional P.S.C. of a graph.
///
/// Each unit can potentially depend on every other unit of its own
/// region plus every violational unit of every other region; summing per
/// region gives `Σ |K|(|K| - 1) + |K|(|h(G)| - |h(K)|)`.
pub fn psc_actual(graph: &UnitGraph) -> PscValue {
    let summaries = graph.region_summaries();
    let total_violations: u128 = summaries.iter().map(|s| s.violations as u128).sum();
    let mut acc: u128 = 0;
    for summary in &summaries {
        let size = summary.size as u128;
        acc += size * (size - 1) + size * (total_violations - summary.violations as u128);
    }
    PscValue::from_u128(acc)
}

/// Independent P.S.C. oracle: walk every ordered pair `(u, v)`, `u ≠ v`,
/// and count it when `v` shares `u`'s region or `v` is violational.
///
/// Quadratic; intended for graphs of up to a few thousand units.
pub fn psc_by_pair_enumeration(graph: &UnitGraph) -> PscValue {
    let units = graph.units();
    let mut count: u128 = 0;
    for (i, u) in units.iter().enumerate() {
        for (j, v) in units.iter().enumerate() {
            if i == j {
                continue;
            }
            if v.region == u.region || v.violational {
                count += 1;
            }
        }
    }
    PscValue::from_u128(count)
}

/// Materialises the uniform `(n, r, p)` shape as a concrete graph.
///
/// Deterministic: regions and units are numbered with zero-padded ids,
/// and the first `p` units of each region carry the violational flag.
pub fn build_uniform_graph(sys: &UniformSystem) -> UnitGraph {
    let region_width = digits(sys.r());
    let unit_width = digits(sys.units_per_region());
    let mut units = Vec::with_capacity(sys.n() as usize);
    for region_index in 1..=sys.r() {
        let region = format!("region-{region_index:0region_width$}");
        for unit_index in 1..=sys.units_per_region() {
            units.push(Unit {
                id: format!("{region}.unit-{unit_index:0unit_width$}"),
                region: region.clone(),
                violational: unit_index <= sys.p(),
            });
        }
    }
    UnitGraph::new(units).expect("constructed ids are unique and the system is non-empty")
}

fn digits(value: u64) -> usize {
    value.to_string().len()
}

/// System-wide information hiding violation `|h(G)|`: the number of
/// violational units.
pub fn total_ihv(graph: &UnitGraph) -> u64 {
    graph.units().iter().filter(|u| u.violational).count() as u64
}

/// Computes the full [`GraphMetrics`] report for a graph.
pub fn metrics_for_graph(graph: &UnitGraph) -> GraphMetrics {
    let n = graph.unit_count();
    let summaries = graph.region_summaries();
    let region_count = summaries.len() as u64;
    let ihv_total = total_ihv(graph);
    let mean_regional_ihv = ihv_total as f64 / region_count as f64;

    let actual = psc_actual(graph);
    let max = PscValue::from_u128(n as u128 * (n as u128 - 1));

    let raw_min = if ihv_total == 0 {
        0.0
    } else {
        uniform::psc_min_closed_real(n, mean_regional_ihv)
            .expect("0 < |h|/r ≤ n for a non-empty graph")
    };
    let psc_min_estimate = raw_min.min(actual.get() as f64);

    let denominator = max.get() as f64 - psc_min_estimate;
    let (config_efficiency, config_inefficiency) = if denominator == 0.0 {
        (None, None)
    } else {
        let ce = (max.get() as f64 - actual.get() as f64) / denominator;
        (Some(ce), Some(1.0 - ce))
    };

    let uniform = summaries
        .iter()
        .all(|s| s.size == summaries[0].size && s.violations == summaries[0].violations);

    GraphMetrics {
        n,
        region_count,
        ihv_total,
        mean_regional_ihv,
        psc_actual: actual,
        psc_max: max,
        psc_min_estimate,
        config_efficiency,
        config_inefficiency,
        approx_config_efficiency: 1.0 - ihv_total as f64 / n as f64,
        uniform,
    }
}

/// Exhaustive minimum of [`uniform::psc_uniform`] over every integer
/// region count: evaluates each divisor `r` of `n` with `p ≤ n/r` and
/// returns the minimising `(r, psc)` pair, ties broken toward smaller `r`.
pub fn brute_force_min_over_r(n: u64, p: u64) -> Result<(u64, PscValue), Error> {
    if n == 0 {
        return Err(Error::EmptySystem);
    }
    if n > uniform::MAX_UNITS {
        return Err(Error::TooManyUnits {
            n,
            max: uniform::MAX_UNITS,
        });
    }
    if p == 0 {
        return Err(Error::ZeroViolations);
    }
    if p > n {
        return Err(Error::NoFeasibleRegionCount { n, p });
    }
    let mut best: Option<(u64, PscValue)> = None;
    for r in divisors_ascending(n) {
        if p > n / r {
            continue;
        }
        let sys = UniformSystem::new(n, r, p).expect("divisor-derived shape is valid");
        let psc = uniform::psc_uniform(&sys);
        match best {
            Some((_, incumbent)) if psc >= incumbent => {}
            _ => best = Some((r, psc)),
        }
    }
    // r = 1 is always feasible once p ≤ n.
    Ok(best.expect("at least one feasible region count"))
}

fn divisors_ascending(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    for d in 1..=n.isqrt() {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
    }
    large.reverse();
    small.extend(large);
    small
}
