//! Kernelization rounds: gate on passive volume, cut and trim components down
//! to clusters, shave clusters to cores, contract the cores, repeat.

use super::config::PipelineConfig;
use super::probes::{recurse_step, ProbeOutcome};
use super::working::{ChargeLedger, WorkingSubgraph};
use crate::graph::{MultiGraph, SimpleGraph};
use crate::{Error, Result};
use serde::Serialize;

/// Per-round statistics for reports and the amortization checks.
#[derive(Debug, Clone, Serialize)]
pub struct RoundStats {
    pub round: usize,
    pub ledger: ChargeLedger,
    pub clusters: usize,
    pub cores_contracted: usize,
    pub cuts_applied: u64,
    pub strength_certificates: u64,
    pub edges_before: u64,
    pub edges_after: u64,
    pub vertices_after: usize,
}

#[derive(Debug, Clone)]
pub struct KernelOutput {
    pub kernel: MultiGraph,
    /// True when δ was at or below the fallback threshold and the input was
    /// passed through unchanged.
    pub fallback: bool,
    pub rounds: Vec<RoundStats>,
}

impl KernelOutput {
    pub fn super_vertices(&self) -> usize {
        (0..self.kernel.vertex_count() as u32)
            .filter(|&v| self.kernel.is_super(v))
            .count()
    }
}

/// Passive gate: done once the passive super vertices carry the configured
/// fraction of all edges; otherwise hand back the trimmed working subgraph.
pub enum GateOutcome<'g> {
    Done,
    Proceed(WorkingSubgraph<'g>, ChargeLedger),
}

pub fn remove_passive_and_gate<'g>(host: &'g MultiGraph, cfg: &PipelineConfig) -> GateOutcome<'g> {
    let m = host.edge_count();
    let delta_star = cfg.delta_star(host.delta());
    let mut passive = vec![false; host.vertex_count()];
    for v in 0..host.vertex_count() as u32 {
        passive[v as usize] = host.is_super(v) && (host.degree(v) as f64) < delta_star;
    }
    let mut passive_incident = 0u64;
    for e in host.edge_ids() {
        let (a, b) = host.edge_endpoints(e).expect("live edge");
        if passive[a as usize] || passive[b as usize] {
            passive_incident += 1;
        }
    }
    if cfg.passive_edge_fraction.at_least(passive_incident, m) {
        return GateOutcome::Done;
    }
    let (mut sub, passive_cut) = WorkingSubgraph::new(host, cfg);
    let trimmed = sub.trim(cfg);
    let ledger = ChargeLedger {
        passive_cut_edges: passive_cut,
        trimmed_edges: trimmed,
        ..Default::default()
    };
    GateOutcome::Proceed(sub, ledger)
}

/// Shave the loose vertices off a cluster and decide core vs scrap.
/// Returns the core vertex set (None when scrapped) plus the shaved/scrapped
/// H-edge counts.
pub fn shave_and_core(
    sub: &WorkingSubgraph<'_>,
    comp_idx: usize,
    cfg: &PipelineConfig,
) -> (Option<Vec<u32>>, u64, u64) {
    let host = sub.host();
    let comp = &sub.components()[comp_idx];
    if comp.verts.is_empty() {
        return (None, 0, 0);
    }
    let mut in_comp = vec![false; host.vertex_count()];
    for &v in &comp.verts {
        in_comp[v as usize] = true;
    }
    // Every host edge between two component vertices is H-alive, so the lost
    // degree counts exactly the host edges leaving the component.
    let m_h: u64 = sub.component_edges(comp_idx);
    let leaving: u64 = comp.verts.iter().map(|&v| sub.lost_degree(v) as u64).sum();
    let incident = m_h + leaving;

    let mut core: Vec<u32> = Vec::new();
    let mut in_core = vec![false; host.vertex_count()];
    for &v in &comp.verts {
        let loose = !host.is_super(v)
            && sub.lost_degree(v) as f64 >= host.degree(v) as f64 / 2.0 - cfg.loose_slack;
        if !loose {
            core.push(v);
            in_core[v as usize] = true;
        }
    }
    let mut internal_twice = 0u64;
    for &v in &core {
        for &(w, e) in host.neighbors(v) {
            if sub.edge_is_alive(e) && in_core[w as usize] {
                internal_twice += 1;
            }
        }
    }
    let internal = internal_twice / 2;
    if cfg.core_fraction.exceeds(internal, incident) {
        (Some(core), m_h - internal, 0)
    } else {
        (None, 0, m_h)
    }
}

/// Contract each non-empty core in the host. Cores must be pairwise disjoint.
pub fn contract_cores(host: &MultiGraph, cores: &[Vec<u32>]) -> Result<MultiGraph> {
    let mut seen = vec![false; host.vertex_count()];
    for core in cores {
        for &v in core {
            if seen[v as usize] {
                return Err(Error::InvalidParameter(format!(
                    "cores overlap at vertex {v}"
                )));
            }
            seen[v as usize] = true;
        }
    }
    host.contract_groups(cores)
}

/// Kernelize: contract cluster cores round by round until the passive gate
/// fires. Preserves every non-trivial minimum cut of the input. Inputs with
/// δ at or below the fallback threshold are passed through unchanged.
pub fn build_kernel(g: &SimpleGraph, cfg: &PipelineConfig) -> Result<KernelOutput> {
    cfg.validate()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let base = MultiGraph::from_simple(g);
    if (g.min_degree() as f64) <= cfg.fallback_delta {
        return Ok(KernelOutput {
            kernel: base,
            fallback: true,
            rounds: Vec::new(),
        });
    }
    let s0 = cfg.s0(base.delta());
    let mut bar = base;
    let mut rounds = Vec::new();
    let max_rounds = (2.0 * (g.edge_count().max(2) as f64).log2()).ceil() as usize + 2;
    for round in 1..=max_rounds {
        let edges_before = bar.edge_count();
        let (mut sub, mut ledger) = match remove_passive_and_gate(&bar, cfg) {
            GateOutcome::Done => break,
            GateOutcome::Proceed(sub, ledger) => (sub, ledger),
        };
        let mut cuts_applied = 0u64;
        let mut strength_certificates = 0u64;
        // drive every component down to the s0 strength floor
        while let Some(idx) = sub.next_above_strength(s0) {
            sub.sort_component(idx);
            let s = sub.components()[idx]
                .strength
                .min(sub.component_edges(idx) as f64);
            let outcome = {
                let view = sub.component_view(idx);
                recurse_step(&view, s, cfg)?
            };
            match outcome {
                ProbeOutcome::CutFound { cut, .. } => {
                    let (cut_edges, side_idx) = sub.cut_component(idx, &cut.side);
                    ledger.cut_edges += cut_edges;
                    cuts_applied += 1;
                    sub.set_strength(idx, s);
                    sub.set_strength(side_idx, s);
                    ledger.trimmed_edges += sub.trim(cfg);
                }
                ProbeOutcome::LargeSideHalved {
                    cut,
                    large_strength,
                } => {
                    let (cut_edges, side_idx) = sub.cut_component(idx, &cut.side);
                    ledger.cut_edges += cut_edges;
                    cuts_applied += 1;
                    strength_certificates += 1;
                    sub.set_strength(idx, large_strength);
                    sub.set_strength(side_idx, s);
                    ledger.trimmed_edges += sub.trim(cfg);
                }
                ProbeOutcome::StrengthHalved { new_strength } => {
                    strength_certificates += 1;
                    sub.set_strength(idx, new_strength);
                }
                other => unreachable!("recurse step yielded {other:?}"),
            }
        }
        // all components are clusters now; shave and contract the cores
        let mut cores = Vec::new();
        let mut clusters = 0usize;
        for idx in 0..sub.components().len() {
            if sub.components()[idx].verts.is_empty() {
                continue;
            }
            clusters += 1;
            let (core, shaved, scrapped) = shave_and_core(&sub, idx, cfg);
            ledger.shaved_edges += shaved;
            ledger.scrapped_edges += scrapped;
            if let Some(core) = core {
                if core.len() >= 2 {
                    cores.push(core);
                }
            }
        }
        let progressed = !cores.is_empty();
        if progressed {
            bar = contract_cores(&bar, &cores)?;
        }
        rounds.push(RoundStats {
            round,
            ledger,
            clusters,
            cores_contracted: cores.len(),
            cuts_applied,
            strength_certificates,
            edges_before,
            edges_after: bar.edge_count(),
            vertices_after: bar.vertex_count(),
        });
        if !progressed || bar.edge_count() >= edges_before {
            break;
        }
    }
    Ok(KernelOutput {
        kernel: bar,
        fallback: false,
        rounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::barbell;
    use crate::mincut::{brute_force_mincut, exact_mincut_multigraph, ExactCut};

    fn cfg() -> PipelineConfig {
        PipelineConfig::scaled()
    }

    #[test]
    fn low_degree_input_falls_back() {
        let edges: Vec<(u32, u32)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = SimpleGraph::from_edges(6, &edges).unwrap();
        let out = build_kernel(&g, &cfg()).unwrap();
        assert!(out.fallback);
        assert_eq!(out.kernel.vertex_count(), 6);
        assert!(out.rounds.is_empty());
    }

    #[test]
    fn barbell_kernel_preserves_bridge_count() {
        let (g, lambda) = barbell(12, 2);
        let out = build_kernel(&g, &cfg()).unwrap();
        assert!(!out.fallback);
        assert!(
            out.kernel.vertex_count() <= 6,
            "kernel too large: {} vertices",
            out.kernel.vertex_count()
        );
        match exact_mincut_multigraph(&out.kernel, None).unwrap() {
            ExactCut::Found { lambda: lk, .. } => assert_eq!(lk, lambda as u64),
            _ => panic!(),
        }
    }

    #[test]
    fn ledger_amortization_holds_per_round() {
        let (g, _) = barbell(10, 3);
        let out = build_kernel(&g, &cfg()).unwrap();
        for round in &out.rounds {
            assert!(
                round.ledger.amortization_holds(),
                "round {}: {:?}",
                round.round,
                round.ledger
            );
        }
    }

    #[test]
    fn kernel_safety_against_brute_force() {
        for seed in 0..30u64 {
            let g = match crate::families::gnp(10, 0.65, seed) {
                Ok(g) if g.is_connected() => g,
                _ => continue,
            };
            let brute = brute_force_mincut(&g).unwrap();
            let out = build_kernel(&g, &cfg()).unwrap();
            let kernel_lambda = if out.kernel.vertex_count() >= 2 {
                match exact_mincut_multigraph(&out.kernel, None).unwrap() {
                    ExactCut::Found { lambda, .. } => lambda,
                    ExactCut::AboveCap { lambda } => lambda,
                }
            } else {
                u64::MAX
            };
            assert_eq!(
                brute.lambda,
                kernel_lambda.min(g.min_degree() as u64),
                "kernel broke min-cut on seed {seed}"
            );
        }
    }

    #[test]
    fn gate_passes_plain_graphs_through() {
        let (g, _) = barbell(8, 1);
        let host = MultiGraph::from_simple(&g);
        match remove_passive_and_gate(&host, &cfg()) {
            GateOutcome::Proceed(sub, ledger) => {
                assert_eq!(ledger.passive_cut_edges, 0);
                assert!((0..16u32).all(|v| sub.is_alive(v)));
            }
            GateOutcome::Done => panic!("no super vertices, nothing to gate on"),
        }
    }

    #[test]
    fn gate_fires_when_passive_supers_carry_a_twentieth() {
        // contract one clique: its super vertex keeps only the bridge edges,
        // which are 2 of 30 > 1/20 of the remaining edges
        let (g, _) = barbell(6, 2);
        let host = MultiGraph::from_simple(&g);
        let contracted = host.contract(&(0u32..6).collect::<Vec<_>>()).unwrap();
        let sup = contracted.current_vertex_of(0);
        assert!(contracted.is_super(sup));
        assert!((contracted.degree(sup) as f64) < cfg().delta_star(contracted.delta()));
        assert!(matches!(
            remove_passive_and_gate(&contracted, &cfg()),
            GateOutcome::Done
        ));
    }

    #[test]
    fn active_super_vertex_is_retained() {
        // half of K16 contracted: the super vertex has 64 edges, above
        // delta* = 4*15 = 60
        let mut edges = Vec::new();
        for u in 0..16u32 {
            for v in u + 1..16 {
                edges.push((u, v));
            }
        }
        let g = SimpleGraph::from_edges(16, &edges).unwrap();
        let host = MultiGraph::from_simple(&g);
        let contracted = host.contract(&(0u32..8).collect::<Vec<_>>()).unwrap();
        let sup = contracted.current_vertex_of(0);
        assert!(contracted.degree(sup) as f64 >= cfg().delta_star(contracted.delta()));
        match remove_passive_and_gate(&contracted, &cfg()) {
            GateOutcome::Proceed(sub, ledger) => {
                assert!(sub.is_alive(sup), "active super vertex must stay");
                assert_eq!(ledger.passive_cut_edges, 0);
            }
            GateOutcome::Done => panic!("gate must not fire without passive supers"),
        }
    }

    #[test]
    fn complete_graph_kernel_keeps_trivial_connectivity() {
        let mut edges = Vec::new();
        for u in 0..8u32 {
            for v in u + 1..8 {
                edges.push((u, v));
            }
        }
        let g = SimpleGraph::from_edges(8, &edges).unwrap();
        let out = build_kernel(&g, &cfg()).unwrap();
        let kernel_lambda = if out.kernel.vertex_count() >= 2 {
            match exact_mincut_multigraph(&out.kernel, None).unwrap() {
                ExactCut::Found { lambda, .. } => lambda,
                ExactCut::AboveCap { lambda } => lambda,
            }
        } else {
            u64::MAX
        };
        assert_eq!(kernel_lambda.min(g.min_degree() as u64), 7);
    }

    #[test]
    fn shave_drops_exact_boundary_loose_vertex() {
        // K5 cluster {0..4}; vertex 4 has exactly d/2 - 1 = 2 edges leaving
        let mut edges = Vec::new();
        for u in 0..5u32 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        edges.extend_from_slice(&[(4, 5), (4, 6), (5, 6)]);
        let g = SimpleGraph::from_edges(7, &edges).unwrap();
        let host = MultiGraph::from_simple(&g);
        let test_cfg = cfg();
        let (mut sub, _) = WorkingSubgraph::new(&host, &test_cfg);
        let (cut_edges, side_idx) = sub.cut_component(0, &[0, 1, 2, 3, 4]);
        assert_eq!(cut_edges, 2);
        // vertex 4: host degree 6, lost 2 = 6/2 - 1 is not reached... it is
        // exactly d/2 - 1 = 2, so it is loose and shaved off
        let (core, shaved, scrapped) = shave_and_core(&sub, side_idx, &test_cfg);
        let core = core.expect("core survives");
        assert_eq!(core, vec![0, 1, 2, 3]);
        assert_eq!(shaved, 10 - 6, "K5 minus the K4 internal edges");
        assert_eq!(scrapped, 0);
    }

    #[test]
    fn component_with_no_leaving_edges_is_its_own_core() {
        let mut edges = Vec::new();
        for u in 0..6u32 {
            for v in u + 1..6 {
                edges.push((u, v));
            }
        }
        let g = SimpleGraph::from_edges(6, &edges).unwrap();
        let host = MultiGraph::from_simple(&g);
        let test_cfg = cfg();
        let (mut sub, _) = WorkingSubgraph::new(&host, &test_cfg);
        sub.trim(&test_cfg);
        let (core, shaved, scrapped) = shave_and_core(&sub, 0, &test_cfg);
        assert_eq!(core.unwrap(), (0..6).collect::<Vec<u32>>());
        assert_eq!(shaved + scrapped, 0);
    }

    #[test]
    fn undersized_core_is_scrapped() {
        // a star-ish cluster where shaving the leaves leaves too few internal
        // edges: core fraction 1/4 of incident edges is not met
        let g = SimpleGraph::from_edges(
            8,
            &[
                (0, 1),
                (0, 2),
                (1, 2), // small triangle cluster
                (0, 3),
                (0, 4),
                (1, 5),
                (1, 6),
                (2, 7),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 3),
            ],
        )
        .unwrap();
        let host = MultiGraph::from_simple(&g);
        let test_cfg = cfg();
        let (mut sub, _) = WorkingSubgraph::new(&host, &test_cfg);
        let (cut_edges, side_idx) = sub.cut_component(0, &[0, 1, 2]);
        assert_eq!(cut_edges, 6);
        // every triangle vertex has host degree 4 and lost 2 >= 4/2-1: loose
        let (core, shaved, scrapped) = shave_and_core(&sub, side_idx, &test_cfg);
        assert!(core.is_none());
        assert_eq!(shaved, 0);
        assert_eq!(scrapped, 3, "the whole triangle is scrapped");
    }
}
