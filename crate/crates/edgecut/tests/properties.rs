//! Property tests for the structural invariants: conductance symmetry,
//! contraction bookkeeping, the minimum-cut volume observation, push
//! monotonicity, and the residual flow bound.

use edgecut::graph::{conductance, MultiGraph, SimpleGraph};
use edgecut::mincut::{brute_force_mincut, exact_mincut_multigraph, ExactCut};
use edgecut::pagerank::{approximate_pagerank, InitialDistribution, TeleportParams};
use proptest::prelude::*;

/// Connected-ish random simple graph: n vertices, each candidate edge kept
/// with the given probability, rejecting empty draws.
fn arb_graph(n_range: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = SimpleGraph> {
    (n_range, 0.3f64..0.9, any::<u64>()).prop_filter_map("graph has edges", |(n, p, seed)| {
        edgecut::families::gnp(n, p, seed).ok()
    })
}

fn arb_connected(n_range: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = SimpleGraph> {
    arb_graph(n_range).prop_filter("connected", |g| g.is_connected())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_sum_is_twice_edge_count(g in arb_graph(3..=12)) {
        let total: u64 = (0..g.vertex_count() as u32).map(|v| g.degree(v) as u64).sum();
        prop_assert_eq!(total, 2 * g.edge_count() as u64);
    }

    #[test]
    fn conductance_equals_complement((g, mask) in arb_graph(3..=10)
        .prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), 1u64..(1 << n) - 1)
        }))
    {
        let side: Vec<u32> = (0..g.vertex_count() as u32)
            .filter(|&v| (mask >> v) & 1 == 1)
            .collect();
        let rest: Vec<u32> = (0..g.vertex_count() as u32)
            .filter(|&v| (mask >> v) & 1 == 0)
            .collect();
        prop_assume!(!side.is_empty() && !rest.is_empty());
        let a = conductance(&g, &side).unwrap();
        let b = conductance(&g, &rest).unwrap();
        prop_assert_eq!(&a.boundary, &b.boundary);
        prop_assert_eq!(a.small_volume, b.small_volume);
        prop_assert_eq!(a.conductance.to_bits(), b.conductance.to_bits());
    }

    #[test]
    fn contraction_preserves_respecting_cuts((g, group_mask) in arb_graph(4..=9)
        .prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), 0u64..(1 << n))
        }))
    {
        let group: Vec<u32> = (0..g.vertex_count() as u32)
            .filter(|&v| (group_mask >> v) & 1 == 1)
            .collect();
        prop_assume!(group.len() >= 2);
        let mg = MultiGraph::from_simple(&g);
        let contracted = mg.contract(&group).unwrap();
        let n = g.vertex_count();
        // every original bipartition whose sides fully contain or avoid each
        // merged member set keeps its exact boundary size
        for mask in 1u64..(1 << (n - 1)) {
            let respects = (0..contracted.vertex_count() as u32).all(|w| {
                let members = contracted.members(w);
                let inside = members.iter().filter(|&&v| (mask >> v) & 1 == 1).count();
                inside == 0 || inside == members.len()
            });
            if !respects {
                continue;
            }
            let orig: u64 = (0..g.edge_count() as u32)
                .filter(|&e| {
                    let (a, b) = g.edge_endpoints(e);
                    ((mask >> a) ^ (mask >> b)) & 1 == 1
                })
                .count() as u64;
            let mapped: u64 = contracted
                .edge_ids()
                .filter(|&e| {
                    let (a, b) = contracted.edge_endpoints(e).unwrap();
                    let a0 = contracted.members(a)[0];
                    let b0 = contracted.members(b)[0];
                    ((mask >> a0) ^ (mask >> b0)) & 1 == 1
                })
                .count() as u64;
            prop_assert_eq!(orig, mapped, "mask {}", mask);
        }
    }

    #[test]
    fn contraction_edge_accounting((g, group_mask) in arb_graph(4..=9)
        .prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), 0u64..(1 << n))
        }))
    {
        let group: Vec<u32> = (0..g.vertex_count() as u32)
            .filter(|&v| (group_mask >> v) & 1 == 1)
            .collect();
        prop_assume!(!group.is_empty());
        let mg = MultiGraph::from_simple(&g);
        let c = mg.contract(&group).unwrap();
        // surviving multiplicity sums to m minus the deleted internal edges
        let deleted: u64 = (0..g.edge_count() as u32)
            .filter(|&e| {
                let (a, b) = g.edge_endpoints(e);
                c.current_vertex_of(a) == c.current_vertex_of(b)
            })
            .count() as u64;
        prop_assert_eq!(c.edge_count(), g.edge_count() as u64 - deleted);
        // provenance is injective on the survivors
        let mut seen = std::collections::BTreeSet::new();
        for e in c.edge_ids() {
            prop_assert!(seen.insert(c.original_edge_of(e)));
        }
        // no multiplicity above delta, no self-loops, and regular vertices
        // keep their original degree (never below delta)
        for v in 0..c.vertex_count() as u32 {
            for w in 0..c.vertex_count() as u32 {
                if v != w {
                    prop_assert!(c.multiplicity(v, w) <= c.delta());
                }
            }
            prop_assert_eq!(c.multiplicity(v, v), 0);
            if !c.is_super(v) {
                prop_assert!(c.degree(v) >= c.delta());
                prop_assert_eq!(c.degree(v), g.degree(c.members(v)[0]));
            }
        }
    }

    #[test]
    fn min_cut_sides_obey_volume_observation(g in arb_connected(4..=10)) {
        // the smaller side of a min-cut is a single vertex, or has volume at
        // least delta^2 with conductance at most 1/delta
        let delta = g.min_degree() as u64;
        prop_assume!(delta >= 1);
        let brute = brute_force_mincut(&g).unwrap();
        let total = 2 * g.edge_count() as u64;
        for side in &brute.min_cut_sides {
            let cut = conductance(&g, side).unwrap();
            let (small_side_len, small_vol) = if 2 * cut.volume <= total {
                (side.len(), cut.volume)
            } else {
                (g.vertex_count() - side.len(), total - cut.volume)
            };
            if small_side_len == 1 {
                continue;
            }
            prop_assert!(
                small_vol >= delta * delta,
                "side {:?}: volume {} below delta^2 {}",
                side, small_vol, delta * delta
            );
            prop_assert!(cut.conductance <= 1.0 / delta as f64 + 1e-12);
        }
    }

    #[test]
    fn settled_mass_grows_as_eps_shrinks((g, v, alpha) in arb_connected(3..=9)
        .prop_flat_map(|g| {
            let n = g.vertex_count() as u32;
            (Just(g), 0..n, prop_oneof![Just(0.05f64), Just(0.1), Just(0.25)])
        }))
    {
        // halving the threshold extends the push process: domination is exact
        // up to accumulated float error
        let coarse = approximate_pagerank(
            &g,
            &InitialDistribution::point(v),
            TeleportParams::new(alpha, 0.02).unwrap(),
        );
        let fine = approximate_pagerank(
            &g,
            &InitialDistribution::point(v),
            TeleportParams::new(alpha, 0.02 / 4.0).unwrap(),
        );
        for u in 0..g.vertex_count() as u32 {
            prop_assert!(
                fine.settled(u) >= coarse.settled(u) - 1e-9,
                "vertex {}: fine {} < coarse {}",
                u, fine.settled(u), coarse.settled(u)
            );
        }
    }

    #[test]
    fn residual_bound_caps_later_flow((g, v) in arb_connected(4..=9)
        .prop_flat_map(|g| {
            let n = g.vertex_count() as u32;
            (Just(g), 0..n)
        }))
    {
        // once every residual density is below sigma, any further pushing
        // moves at most sigma/(2 alpha) net mass over any edge
        let alpha = 0.1;
        let eps1 = 0.05;
        let mut st = approximate_pagerank(
            &g,
            &InitialDistribution::point(v),
            TeleportParams::new(alpha, eps1).unwrap(),
        );
        let sigma = (0..g.vertex_count() as u32)
            .map(|u| st.residual(u) / g.degree(u).max(1) as f64)
            .fold(0.0f64, f64::max);
        let before = st.flow_ledger().to_vec();
        st.lower_eps(&g, eps1 / 64.0);
        let mut budget = u64::MAX;
        st.run_pushes(&g, &mut budget);
        for (e, prior) in before.iter().enumerate() {
            let delta = (st.flow_ledger()[e] - prior).abs();
            prop_assert!(
                delta <= sigma / (2.0 * alpha) + 1e-9,
                "edge {}: moved {} > {}",
                e, delta, sigma / (2.0 * alpha)
            );
        }
    }

    #[test]
    fn finisher_cap_fires_exactly_above_lambda((g, cap) in arb_connected(4..=9)
        .prop_flat_map(|g| (Just(g), 0u64..8)))
    {
        let mg = MultiGraph::from_simple(&g);
        let brute = brute_force_mincut(&mg).unwrap();
        match exact_mincut_multigraph(&mg, Some(cap)).unwrap() {
            ExactCut::AboveCap { lambda } => {
                prop_assert_eq!(lambda, brute.lambda);
                prop_assert!(brute.lambda > cap);
            }
            ExactCut::Found { lambda, cut } => {
                prop_assert_eq!(lambda, brute.lambda);
                prop_assert!(lambda <= cap);
                prop_assert_eq!(cut.boundary.len() as u64, lambda);
            }
        }
    }
}
