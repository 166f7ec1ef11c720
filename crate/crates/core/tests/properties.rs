//! Property tests for the metric identities and ingestion round-trips.

use proptest::prelude::*;

use encap_core::graph::{
    self, build_uniform_graph, psc_actual, psc_by_pair_enumeration, total_ihv, Unit, UnitGraph,
};
use encap_core::ingest::{read_manifest, write_manifest};
use encap_core::uniform::{self, Fraction, UniformSystem};

const TOLERANCE: f64 = 1e-12;

fn relatively_close(a: f64, b: f64, tolerance: f64) -> bool {
    a == b || (a - b).abs() <= tolerance * a.abs().max(b.abs())
}

/// Any valid uniform shape with n ≤ 160, including p = 0.
fn any_uniform_system() -> impl Strategy<Value = UniformSystem> {
    (1u64..=160)
        .prop_flat_map(|n| {
            let divisors: Vec<u64> = (1..=n).filter(|r| n % r == 0).collect();
            (Just(n), prop::sample::select(divisors))
        })
        .prop_flat_map(|(n, r)| (Just(n), Just(r), 0..=n / r))
        .prop_map(|(n, r, p)| UniformSystem::new(n, r, p).unwrap())
}

/// Uniform shapes on which the efficiency is defined: p ≥ 1 and p < n.
fn metric_uniform_system() -> impl Strategy<Value = UniformSystem> {
    any_uniform_system().prop_filter("efficiency needs 1 ≤ p < n", |sys| {
        sys.p() >= 1 && sys.p() < sys.n()
    })
}

/// Arbitrary small graphs: random region assignment and flags.
fn any_unit_graph() -> impl Strategy<Value = UnitGraph> {
    (1usize..=40)
        .prop_flat_map(|n| prop::collection::vec((0..n, any::<bool>()), n))
        .prop_map(|assignments| {
            let units = assignments
                .into_iter()
                .enumerate()
                .map(|(index, (region, violational))| {
                    Unit::new(
                        format!("u{index:03}"),
                        format!("g{region:03}"),
                        violational,
                    )
                })
                .collect();
            UnitGraph::new(units).unwrap()
        })
}

/// Graphs with awkward ids and regions that stress CSV quoting.
fn messy_unit_graph() -> impl Strategy<Value = UnitGraph> {
    let id = "[a-zA-Z0-9 ,;.'\"_-]{1,12}";
    let region = "[a-zA-Z0-9 ,\"]{1,8}";
    prop::collection::btree_set(id, 1..30)
        .prop_flat_map(move |ids| {
            let n = ids.len();
            (
                Just(ids),
                prop::collection::vec((region, any::<bool>()), n),
            )
        })
        .prop_map(|(ids, attributes)| {
            let units = ids
                .into_iter()
                .zip(attributes)
                .map(|(id, (region, violational))| Unit::new(id, region, violational))
                .collect();
            UnitGraph::new(units).unwrap()
        })
}

proptest! {
    /// c_e + c_i = 1 for every non-degenerate uniform system.
    #[test]
    fn complement_identity(sys in metric_uniform_system()) {
        let ce = uniform::config_efficiency(&sys).unwrap();
        let ci = uniform::config_inefficiency(&sys).unwrap();
        prop_assert!((ce + ci - 1.0).abs() <= TOLERANCE, "ce={ce} ci={ci} for {sys}");
    }

    /// c_e equals (s_max - s) / (s_max - s_min) computed from the three
    /// P.S.C. operations.
    #[test]
    fn ratio_identity(sys in metric_uniform_system()) {
        let ce = uniform::config_efficiency(&sys).unwrap();
        let s = uniform::psc_uniform(&sys).get() as f64;
        let s_max = uniform::psc_max(sys.n()).unwrap().get() as f64;
        let s_min = uniform::psc_min_closed(sys.n(), sys.p()).unwrap();
        let by_ratio = (s_max - s) / (s_max - s_min);
        prop_assert!(
            relatively_close(ce, by_ratio, TOLERANCE),
            "closed form {ce} vs ratio {by_ratio} for {sys}"
        );
    }

    /// s_min ≤ s ≤ s_max, hence both fractions stay inside [0, 1].
    #[test]
    fn bound_ordering(sys in metric_uniform_system()) {
        let s = uniform::psc_uniform(&sys).get() as f64;
        let s_max = uniform::psc_max(sys.n()).unwrap().get() as f64;
        let s_min = uniform::psc_min_closed(sys.n(), sys.p()).unwrap();
        prop_assert!(s_min <= s + 1e-9, "s_min={s_min} > s={s} for {sys}");
        prop_assert!(s <= s_max, "s={s} > s_max={s_max} for {sys}");
        let ce = uniform::config_efficiency(&sys).unwrap();
        let ci = uniform::config_inefficiency(&sys).unwrap();
        prop_assert!((0.0..=1.0).contains(&ce), "ce={ce} for {sys}");
        prop_assert!((0.0..=1.0).contains(&ci), "ci={ci} for {sys}");
    }

    /// 1 - p/x = 1 - rp/n = 1 - |h(G)|/n exactly in rationals.
    #[test]
    fn limit_chain_is_exact(sys in metric_uniform_system()) {
        let x = sys.units_per_region();
        let by_region_size = Fraction::new(x - sys.p(), x);
        let by_region_count = Fraction::new(sys.n() - sys.r() * sys.p(), sys.n());
        let h = total_ihv(&build_uniform_graph(&sys));
        let by_ihv = Fraction::new(sys.n() - h, sys.n());
        prop_assert_eq!(by_region_size, by_region_count);
        prop_assert_eq!(by_region_count, by_ihv);
        prop_assert_eq!(uniform::ce_limit_fixed_size(sys.p(), x).unwrap(), by_ihv);
        prop_assert_eq!(uniform::ce_limit_ihv(h, sys.n()).unwrap(), by_ihv);
    }

    /// The definitional sum agrees with the independent pair walk.
    #[test]
    fn pair_enumeration_equivalence(g in any_unit_graph()) {
        prop_assert_eq!(psc_actual(&g), psc_by_pair_enumeration(&g));
    }

    /// Materialised uniform graphs express exactly the closed-form P.S.C.
    #[test]
    fn uniform_consistency(sys in any_uniform_system()) {
        let g = build_uniform_graph(&sys);
        prop_assert_eq!(psc_actual(&g), uniform::psc_uniform(&sys));
        prop_assert_eq!(total_ihv(&g), sys.total_violations());
    }

    /// The exhaustive integer minimum never goes below the closed form.
    #[test]
    fn brute_force_respects_the_lower_bound(n in 1u64..=300, p_seed in 1u64..=300) {
        let p = (p_seed % n) + 1;
        let (_, best) = graph::brute_force_min_over_r(n, p).unwrap();
        let bound = uniform::psc_min_closed(n, p).unwrap();
        prop_assert!(best.get() as f64 >= bound - 1e-6, "bf={best} < bound={bound} at n={n} p={p}");
        // Equality exactly when sqrt(n/p) is an integer divisor of n.
        if n % p == 0 {
            let k = (n / p).isqrt();
            if k * k * p == n {
                prop_assert!(
                    (best.get() as f64 - bound).abs() <= 1e-9 * bound.max(1.0),
                    "expected tight bound at n={n} p={p}"
                );
            }
        }
    }

    /// metrics_for_graph agrees with the closed forms on uniform graphs.
    #[test]
    fn graph_metrics_match_uniform_metrics(sys in metric_uniform_system()) {
        let metrics = graph::metrics_for_graph(&build_uniform_graph(&sys));
        prop_assert!(metrics.uniform);
        prop_assert_eq!(metrics.region_count, sys.r());
        prop_assert_eq!(metrics.ihv_total, sys.total_violations());
        let expected_ce = uniform::config_efficiency(&sys).unwrap();
        let actual_ce = metrics.config_efficiency.expect("non-degenerate");
        prop_assert!(
            relatively_close(actual_ce, expected_ce, TOLERANCE),
            "graph ce {actual_ce} vs closed form {expected_ce} for {sys}"
        );
        // The approximation is the rational 1 - p/x, exactly.
        let limit = Fraction::new(sys.units_per_region() - sys.p(), sys.units_per_region());
        let as_float = 1.0 - metrics.ihv_total as f64 / metrics.n as f64;
        prop_assert_eq!(metrics.approx_config_efficiency, as_float);
        prop_assert_eq!(
            Fraction::new(sys.n() - metrics.ihv_total, sys.n()),
            limit
        );
    }

    /// Manifest write-then-read is the identity on unit graphs.
    #[test]
    fn manifest_round_trip(g in messy_unit_graph()) {
        let mut bytes = Vec::new();
        write_manifest(&g, &mut bytes).unwrap();
        let back = read_manifest(bytes.as_slice()).unwrap();
        prop_assert_eq!(back, g);
    }

    /// Construction and serialisation are deterministic byte-for-byte.
    #[test]
    fn uniform_graph_build_is_deterministic(sys in any_uniform_system()) {
        let mut first = Vec::new();
        write_manifest(&build_uniform_graph(&sys), &mut first).unwrap();
        let mut second = Vec::new();
        write_manifest(&build_uniform_graph(&sys), &mut second).unwrap();
        prop_assert_eq!(first, second);
    }
}
