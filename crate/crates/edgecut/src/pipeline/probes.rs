//! Capture probes and the level recursion step.
//!
//! A component certified s-strong is driven toward s/2 by a fixed recipe:
//! chunked per-vertex capture probes establish a large set X of uncaptured
//! vertices, a concentration guard rules out half-subsets of the probe set
//! hiding excess, and an endgame run from X either cuts, halves the large
//! side's level, or halves the component's level. Probes advance in fixed push
//! quanta and are interleaved round-robin; the first cut found wins.

use super::config::PipelineConfig;
use super::working::ComponentView;
use crate::graph::{CutView, GraphView};
use crate::pagerank::{
    BoundedNibbleRun, InitialDistribution, NibbleOutcome, NibbleRun, SomeSmallRun, StepResult,
};
use crate::Result;

/// Who pays for the probe's running time in the amortization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimeCharge {
    ChargedToSide,
    ChargedToComponent,
}

#[derive(Debug, Clone)]
pub enum ProbeOutcome {
    CutFound {
        cut: CutView,
        charge: TimeCharge,
    },
    NotCaptured {
        vertex: u32,
        s: f64,
    },
    BatchCertified {
        certified: Vec<u32>,
    },
    StrengthHalved {
        new_strength: f64,
    },
    /// Cut off `cut.side`; the remaining large side is s/2-strong.
    LargeSideHalved {
        cut: CutView,
        large_strength: f64,
    },
}

#[derive(Debug, Clone)]
pub enum GuardOutcome {
    CutFound(CutView),
    Guarded,
}

/// How probe mass is spread over a start set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StartMode {
    /// Equal mass per vertex; certified batches count vertices.
    Mass,
    /// Equal density per vertex; certified batches count volume.
    Density,
}

fn lg(x: f64) -> f64 {
    x.log2()
}

/// Point-mass capture probe from `v` at volume scale `s`: a cut around the
/// capturing set, or a certificate that `v` is not s-captured.
pub struct CapturedProbeRun<'v, V: GraphView + ?Sized> {
    inner: CapturedInner<'v, V>,
    vertex: u32,
    s: f64,
}

enum CapturedInner<'v, V: GraphView + ?Sized> {
    Bounded(BoundedNibbleRun<'v, V>),
    Plain(NibbleRun<'v, V>),
}

impl<'v, V: GraphView + ?Sized> CapturedProbeRun<'v, V> {
    pub fn new(view: &'v V, vertex: u32, s: f64, cfg: &PipelineConfig) -> Result<Self> {
        let m = view.edge_count() as f64;
        if !(s >= 1.0 && s <= m) {
            return Err(crate::Error::InvalidParameter(format!(
                "capture scale s={s} outside [1, m(C)={m}]"
            )));
        }
        let p0 = InitialDistribution::point(vertex);
        let quality = Some(cfg.probe_quality(view.origin_min_degree()));
        // three quarters of the mass stays in the capturing set; with the
        // 16s volume guarantee the tighter excess 1/2 applies
        let inner = if s <= m / 16.0 {
            CapturedInner::Bounded(BoundedNibbleRun::new(
                view, p0, 0.5, s, cfg.alpha0, quality,
            )?)
        } else {
            CapturedInner::Plain(NibbleRun::new(view, p0, 0.2, cfg.alpha0, quality)?)
        };
        Ok(CapturedProbeRun { inner, vertex, s })
    }

    pub fn step(&mut self, quantum: u64) -> StepResult {
        match &mut self.inner {
            CapturedInner::Bounded(r) => r.step(quantum),
            CapturedInner::Plain(r) => r.step(quantum),
        }
    }

    pub fn outcome(&self) -> Option<ProbeOutcome> {
        let nibble = match &self.inner {
            CapturedInner::Bounded(r) => r.outcome()?,
            CapturedInner::Plain(r) => r.outcome()?,
        };
        Some(match nibble {
            NibbleOutcome::CutFound { sweep, .. } => ProbeOutcome::CutFound {
                cut: sweep.cut.clone(),
                charge: TimeCharge::ChargedToSide,
            },
            NibbleOutcome::NoSuchSet { .. } => ProbeOutcome::NotCaptured {
                vertex: self.vertex,
                s: self.s,
            },
            other => unreachable!("capture probe yielded {other:?}"),
        })
    }
}

/// Run a capture probe to completion.
pub fn captured_probe<V: GraphView + ?Sized>(
    view: &V,
    vertex: u32,
    s: f64,
    cfg: &PipelineConfig,
) -> Result<ProbeOutcome> {
    let mut run = CapturedProbeRun::new(view, vertex, s, cfg)?;
    while run.step(u64::MAX) == StepResult::Pending {}
    Ok(run.outcome().expect("probe finished"))
}

/// Batch certification over a chunk Y_i: either a gate nibble from the whole
/// chunk finds a cut, or per-vertex probes certify at least half of the chunk
/// (by count for mass starts, by volume for density starts).
pub struct BatchRun<'v, V: GraphView + ?Sized> {
    view: &'v V,
    ys: Vec<u32>,
    s: f64,
    mode: StartMode,
    cfg: PipelineConfig,
    phase: BatchPhase<'v, V>,
}

enum BatchPhase<'v, V: GraphView + ?Sized> {
    Gate(NibbleRun<'v, V>),
    Probing {
        idx: usize,
        current: CapturedProbeRun<'v, V>,
        certified: Vec<u32>,
        first_cut: Option<CutView>,
    },
    Done(ProbeOutcome),
}

impl<'v, V: GraphView + ?Sized> BatchRun<'v, V> {
    pub fn new(
        view: &'v V,
        ys: Vec<u32>,
        s: f64,
        mode: StartMode,
        cfg: &PipelineConfig,
    ) -> Result<Self> {
        let phase = if ys.is_empty() {
            BatchPhase::Done(ProbeOutcome::BatchCertified {
                certified: Vec::new(),
            })
        } else {
            let gamma = cfg.floored_gamma(1.0 / (64.0 * lg(4.0 * s)));
            let p0 = match mode {
                StartMode::Mass => InitialDistribution::uniform_mass(view, &ys)?,
                StartMode::Density => InitialDistribution::uniform_density(view, &ys)?,
            };
            let quality = Some(cfg.probe_quality(view.origin_min_degree()));
            BatchPhase::Gate(NibbleRun::new(view, p0, gamma, cfg.alpha0, quality)?)
        };
        Ok(BatchRun {
            view,
            ys,
            s,
            mode,
            cfg: cfg.clone(),
            phase,
        })
    }

    pub fn step(&mut self, quantum: u64) -> Result<StepResult> {
        loop {
            match &mut self.phase {
                BatchPhase::Done(_) => return Ok(StepResult::Done),
                BatchPhase::Gate(run) => {
                    if run.step(quantum) == StepResult::Pending {
                        return Ok(StepResult::Pending);
                    }
                    match run.outcome().expect("gate finished") {
                        NibbleOutcome::CutFound { sweep, .. } => {
                            self.phase = BatchPhase::Done(ProbeOutcome::CutFound {
                                cut: sweep.cut.clone(),
                                charge: TimeCharge::ChargedToSide,
                            });
                        }
                        NibbleOutcome::NoSuchSet { .. } => {
                            let current =
                                CapturedProbeRun::new(self.view, self.ys[0], self.s, &self.cfg)?;
                            self.phase = BatchPhase::Probing {
                                idx: 0,
                                current,
                                certified: Vec::new(),
                                first_cut: None,
                            };
                        }
                        other => unreachable!("gate nibble yielded {other:?}"),
                    }
                }
                BatchPhase::Probing {
                    idx,
                    current,
                    certified,
                    first_cut,
                } => {
                    if current.step(quantum) == StepResult::Pending {
                        return Ok(StepResult::Pending);
                    }
                    match current.outcome().expect("probe finished") {
                        ProbeOutcome::NotCaptured { vertex, .. } => certified.push(vertex),
                        ProbeOutcome::CutFound { cut, .. } => {
                            if first_cut.is_none() {
                                *first_cut = Some(cut);
                            }
                        }
                        other => unreachable!("capture probe yielded {other:?}"),
                    }
                    *idx += 1;
                    if *idx < self.ys.len() {
                        *current =
                            CapturedProbeRun::new(self.view, self.ys[*idx], self.s, &self.cfg)?;
                        continue;
                    }
                    // chunk exhausted: certified half?
                    let enough = match self.mode {
                        StartMode::Mass => 2 * certified.len() >= self.ys.len(),
                        StartMode::Density => {
                            let cert_vol: u64 =
                                certified.iter().map(|&v| self.view.degree(v) as u64).sum();
                            let y_vol: u64 =
                                self.ys.iter().map(|&v| self.view.degree(v) as u64).sum();
                            2 * cert_vol >= y_vol
                        }
                    };
                    let outcome = if enough {
                        ProbeOutcome::BatchCertified {
                            certified: std::mem::take(certified),
                        }
                    } else {
                        ProbeOutcome::CutFound {
                            cut: first_cut
                                .take()
                                .expect("less than half certified means a cut was seen"),
                            charge: TimeCharge::ChargedToComponent,
                        }
                    };
                    self.phase = BatchPhase::Done(outcome);
                }
            }
        }
    }

    pub fn outcome(&self) -> Option<&ProbeOutcome> {
        match &self.phase {
            BatchPhase::Done(out) => Some(out),
            _ => None,
        }
    }
}

/// Run the batch certification to completion.
pub fn batch_non_captured<V: GraphView + ?Sized>(
    view: &V,
    ys: &[u32],
    s: f64,
    mode: StartMode,
    cfg: &PipelineConfig,
) -> Result<ProbeOutcome> {
    let mut run = BatchRun::new(view, ys.to_vec(), s, mode, cfg)?;
    while run.step(u64::MAX)? == StepResult::Pending {}
    Ok(run.outcome().expect("batch finished").clone())
}

/// Uniform-start nibble over Y ruling out half-subsets concentrating excess on
/// small sets.
pub struct GuardRun<'v, V: GraphView + ?Sized> {
    run: NibbleRun<'v, V>,
}

impl<'v, V: GraphView + ?Sized> GuardRun<'v, V> {
    pub fn new(view: &'v V, ys: &[u32], cfg: &PipelineConfig) -> Result<Self> {
        let m = view.edge_count() as f64;
        let gamma = cfg.floored_gamma(1.0 / (512.0 * lg(8.0 * m)));
        let p0 = InitialDistribution::uniform_mass(view, ys)?;
        let quality = Some(cfg.probe_quality(view.origin_min_degree()));
        Ok(GuardRun {
            run: NibbleRun::new(view, p0, gamma, cfg.alpha0, quality)?,
        })
    }

    pub fn step(&mut self, quantum: u64) -> StepResult {
        self.run.step(quantum)
    }

    pub fn outcome(&self) -> Option<GuardOutcome> {
        Some(match self.run.outcome()? {
            NibbleOutcome::CutFound { sweep, .. } => GuardOutcome::CutFound(sweep.cut.clone()),
            NibbleOutcome::NoSuchSet { .. } => GuardOutcome::Guarded,
            other => unreachable!("guard nibble yielded {other:?}"),
        })
    }
}

/// Run the concentration guard to completion.
pub fn half_concentration_guard<V: GraphView + ?Sized>(
    view: &V,
    ys: &[u32],
    cfg: &PipelineConfig,
) -> Result<GuardOutcome> {
    let mut run = GuardRun::new(view, ys, cfg)?;
    while run.step(u64::MAX) == StepResult::Pending {}
    Ok(run.outcome().expect("guard finished"))
}

/// Endgame probe from a certified-uncaptured set X: a cut, a halving of the
/// large side, or a halving of the whole component.
pub fn uncaptured_set_probe<V: GraphView + ?Sized>(
    view: &V,
    xs: &[u32],
    s: f64,
    mode: StartMode,
    cfg: &PipelineConfig,
) -> Result<ProbeOutcome> {
    let p0 = match mode {
        StartMode::Mass => InitialDistribution::uniform_mass(view, xs)?,
        StartMode::Density => InitialDistribution::uniform_density(view, xs)?,
    };
    let quality = Some(cfg.probe_quality(view.origin_min_degree()));
    let mut run = SomeSmallRun::new(view, p0, 0.5, cfg.alpha0, quality)?;
    while run.step(u64::MAX) == StepResult::Pending {}
    let outcome = run.into_outcome().expect("run finished")?;
    Ok(match outcome {
        NibbleOutcome::CutFound { sweep, .. } => ProbeOutcome::CutFound {
            cut: sweep.cut,
            charge: TimeCharge::ChargedToSide,
        },
        NibbleOutcome::EndgameCutAllLowDensity { sweep, .. } => ProbeOutcome::LargeSideHalved {
            cut: sweep.cut,
            large_strength: s / 2.0,
        },
        NibbleOutcome::NoLowDensityVertex { .. } => ProbeOutcome::StrengthHalved {
            new_strength: s / 2.0,
        },
        other => unreachable!("endgame yielded {other:?}"),
    })
}

/// One recursion step on a component certified s-strong: interleave batch
/// probes over the chunked probe set (plus the concentration guard in mass
/// mode), then run the endgame probe from the union of the certified sets.
/// Deterministic for a fixed configuration: tasks advance in fixed quanta and
/// fixed order, and the first cut found wins.
pub fn recurse_step(
    view: &ComponentView<'_, '_>,
    s: f64,
    cfg: &PipelineConfig,
) -> Result<ProbeOutcome> {
    let m_c = view.edge_count() as f64;
    let verts = view.ordered_vertices();
    let want = (128.0 * m_c / (s * cfg.alpha0)).ceil() as usize;
    let mass_mode = verts.len() >= want.max(1);
    let (ys, seg_divisor, mode) = if mass_mode {
        (&verts[..want.max(1)], 512.0, StartMode::Mass)
    } else {
        (verts, 256.0, StartMode::Density)
    };
    let mut seg = (m_c / (seg_divisor * s * lg(4.0 * s))).floor().max(1.0) as usize;
    if cfg.max_chunks > 0 {
        seg = seg.max(ys.len().div_ceil(cfg.max_chunks));
    }

    let mut batches: Vec<BatchRun<'_, ComponentView<'_, '_>>> = ys
        .chunks(seg)
        .map(|chunk| BatchRun::new(view, chunk.to_vec(), s, mode, cfg))
        .collect::<Result<_>>()?;
    let mut guard = if mass_mode {
        Some(GuardRun::new(view, ys, cfg)?)
    } else {
        None
    };

    // round-robin in fixed order; first cut wins
    let mut pending = true;
    while pending {
        pending = false;
        for batch in batches.iter_mut() {
            if batch.outcome().is_none() {
                if batch.step(cfg.quantum)? == StepResult::Pending {
                    pending = true;
                }
                if let Some(ProbeOutcome::CutFound { cut, charge }) = batch.outcome() {
                    return Ok(ProbeOutcome::CutFound {
                        cut: cut.clone(),
                        charge: *charge,
                    });
                }
            }
        }
        if let Some(g) = guard.as_mut() {
            if g.outcome().is_none() {
                if g.step(cfg.quantum) == StepResult::Pending {
                    pending = true;
                }
                if let Some(GuardOutcome::CutFound(cut)) = g.outcome() {
                    return Ok(ProbeOutcome::CutFound {
                        cut,
                        charge: TimeCharge::ChargedToSide,
                    });
                }
            }
        }
    }

    let mut xs: Vec<u32> = Vec::new();
    for batch in &batches {
        match batch.outcome().expect("all batches finished") {
            ProbeOutcome::BatchCertified { certified } => xs.extend_from_slice(certified),
            ProbeOutcome::CutFound { cut, charge } => {
                return Ok(ProbeOutcome::CutFound {
                    cut: cut.clone(),
                    charge: *charge,
                })
            }
            other => unreachable!("batch yielded {other:?}"),
        }
    }
    xs.sort_unstable();
    uncaptured_set_probe(view, &xs, s, mode, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::barbell;
    use crate::graph::{MultiGraph, SimpleGraph};
    use crate::mincut::enumerate_cuts_up_to;
    use crate::pipeline::working::WorkingSubgraph;

    fn cfg() -> PipelineConfig {
        PipelineConfig::scaled()
    }

    fn complete(n: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn captured_probe_cuts_around_the_capturing_clique() {
        let (g, _) = barbell(10, 1);
        let host = MultiGraph::from_simple(&g);
        let test_cfg = cfg();
        let (mut sub, _) = WorkingSubgraph::new(&host, &test_cfg);
        sub.trim(&test_cfg);
        sub.sort_component(0);
        let view = sub.component_view(0);
        let m_c = view.edge_count() as f64;
        match captured_probe(&view, 3, m_c, &test_cfg).unwrap() {
            ProbeOutcome::CutFound { cut, .. } => {
                assert!(cut.side.iter().all(|&v| v < 10), "side {:?}", cut.side);
                assert!(cut.conductance <= test_cfg.probe_quality(host.delta()));
            }
            other => panic!("expected a cut, got {other:?}"),
        }
    }

    #[test]
    fn captured_probe_certifies_inside_complete_graph() {
        let g = complete(12);
        let host = MultiGraph::from_simple(&g);
        let test_cfg = cfg();
        let (mut sub, _) = WorkingSubgraph::new(&host, &test_cfg);
        sub.trim(&test_cfg);
        sub.sort_component(0);
        let view = sub.component_view(0);
        let m_c = view.edge_count() as f64;
        let s0 = test_cfg.s0(host.delta());
        match captured_probe(&view, 0, m_c, &test_cfg).unwrap() {
            ProbeOutcome::NotCaptured { vertex, .. } => {
                // oracle: no ≤δ-boundary set of volume in [s0, m(C)] holds 3/4
                // of the vertex's edges
                let cuts = enumerate_cuts_up_to(&host, host.delta() as u64).unwrap();
                for (side, _) in cuts {
                    let vol: u64 = side.iter().map(|&v| view.degree(v) as u64).sum();
                    if (vol as f64) < s0 || vol > view.edge_count() {
                        continue;
                    }
                    if !side.contains(&vertex) {
                        continue;
                    }
                    let inside = side
                        .iter()
                        .flat_map(|&v| host.neighbors(v))
                        .filter(|&&(w, _)| w == vertex)
                        .count() as u64;
                    assert!(
                        !test_cfg
                            .capture_fraction
                            .at_least(inside, view.degree(vertex) as u64),
                        "oracle found a capturing set {side:?}"
                    );
                }
            }
            other => panic!("expected a certificate, got {other:?}"),
        }
    }

    #[test]
    fn small_scale_capture_carries_volume_and_excess_guarantees() {
        // K6 hanging off a K40 by one edge: the K6 side captures its vertices
        // at scale s = 40 <= m(C)/16, so the tighter excess branch applies
        let mut edges = Vec::new();
        for u in 0..6u32 {
            for v in u + 1..6 {
                edges.push((u, v));
            }
        }
        for u in 6..46u32 {
            for v in u + 1..46 {
                edges.push((u, v));
            }
        }
        edges.push((0, 6));
        let g = SimpleGraph::from_edges(46, &edges).unwrap();
        let host = MultiGraph::from_simple(&g);
        let test_cfg = cfg();
        let (mut sub, _) = WorkingSubgraph::new(&host, &test_cfg);
        sub.trim(&test_cfg);
        sub.sort_component(0);
        let view = sub.component_view(0);
        let s = 40.0;
        assert!(s <= view.edge_count() as f64 / 16.0);
        match captured_probe(&view, 3, s, &test_cfg).unwrap() {
            ProbeOutcome::CutFound { cut, .. } => {
                assert!(cut.side.iter().all(|&v| v < 6), "side {:?}", cut.side);
            }
            other => panic!("expected a capture cut, got {other:?}"),
        }
        // the underlying size-bounded run promises vol(T) <= 16s and settled
        // excess at least 1/(32 lg 4s)
        let out = crate::pagerank::bounded_nibble(
            &view,
            &crate::pagerank::InitialDistribution::point(3),
            0.5,
            s,
            crate::pagerank::TeleportParams::new(test_cfg.alpha0, 0.1).unwrap(),
            Some(test_cfg.probe_quality(host.delta())),
        )
        .unwrap();
        match out {
            crate::pagerank::NibbleOutcome::CutFound {
                sweep,
                excess_bound,
                settled_excess,
                ..
            } => {
                assert!(sweep.cut.volume as f64 <= 16.0 * s);
                let want = 1.0 / (32.0 * (4.0 * s).log2());
                assert!((excess_bound - want).abs() < 1e-12);
                assert!(settled_excess >= excess_bound - 1e-9);
            }
            other => panic!("expected a cut, got {other:?}"),
        }
    }

    #[test]
    fn batch_certifies_whole_chunk_in_clique() {
        let g = complete(12);
        let host = MultiGraph::from_simple(&g);
        let test_cfg = cfg();
        let (mut sub, _) = WorkingSubgraph::new(&host, &test_cfg);
        sub.trim(&test_cfg);
        sub.sort_component(0);
        let view = sub.component_view(0);
        let s = view.edge_count() as f64;
        match batch_non_captured(&view, &[0, 1, 2], s, StartMode::Mass, &test_cfg).unwrap() {
            ProbeOutcome::BatchCertified { certified } => {
                assert_eq!(certified, vec![0, 1, 2], "all probes certify");
            }
            other => panic!("expected a batch certificate, got {other:?}"),
        }
    }

    #[test]
    fn empty_chunk_is_vacuously_certified() {
        let g = complete(6);
        let host = MultiGraph::from_simple(&g);
        let test_cfg = cfg();
        let (mut sub, _) = WorkingSubgraph::new(&host, &test_cfg);
        sub.trim(&test_cfg);
        let view = sub.component_view(0);
        match batch_non_captured(&view, &[], 10.0, StartMode::Mass, &test_cfg).unwrap() {
            ProbeOutcome::BatchCertified { certified } => assert!(certified.is_empty()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn batch_straddling_a_planted_cut_finds_it() {
        let (g, _) = barbell(10, 1);
        let host = MultiGraph::from_simple(&g);
        let test_cfg = cfg();
        let (mut sub, _) = WorkingSubgraph::new(&host, &test_cfg);
        sub.trim(&test_cfg);
        sub.sort_component(0);
        let view = sub.component_view(0);
        let s = view.edge_count() as f64;
        // chunk with vertices from both cliques
        match batch_non_captured(&view, &[2, 3, 14, 15], s, StartMode::Mass, &test_cfg).unwrap() {
            ProbeOutcome::CutFound { cut, .. } => {
                let check = crate::graph::conductance(&view, &cut.side).unwrap();
                assert!(check.conductance <= test_cfg.probe_quality(host.delta()));
            }
            other => panic!("expected a cut, got {other:?}"),
        }
    }

    #[test]
    fn guard_is_quiet_on_complete_graph_and_loud_on_barbell() {
        let test_cfg = cfg();
        let g = complete(10);
        let host = MultiGraph::from_simple(&g);
        let (mut sub, _) = WorkingSubgraph::new(&host, &test_cfg);
        sub.trim(&test_cfg);
        sub.sort_component(0);
        let view = sub.component_view(0);
        assert!(matches!(
            half_concentration_guard(&view, &[0, 1, 2, 3, 4], &test_cfg).unwrap(),
            GuardOutcome::Guarded
        ));

        let (g, _) = barbell(10, 1);
        let host = MultiGraph::from_simple(&g);
        let (mut sub, _) = WorkingSubgraph::new(&host, &test_cfg);
        sub.trim(&test_cfg);
        sub.sort_component(0);
        let view = sub.component_view(0);
        let left: Vec<u32> = (0..10).collect();
        match half_concentration_guard(&view, &left, &test_cfg).unwrap() {
            GuardOutcome::CutFound(cut) => {
                assert!(cut.side.iter().all(|&v| v < 10));
            }
            GuardOutcome::Guarded => panic!("left clique concentrates"),
        }
    }

    #[test]
    fn uncaptured_probe_halves_strength_on_clique() {
        let g = complete(12);
        let host = MultiGraph::from_simple(&g);
        let test_cfg = cfg();
        let (mut sub, _) = WorkingSubgraph::new(&host, &test_cfg);
        sub.trim(&test_cfg);
        sub.sort_component(0);
        let view = sub.component_view(0);
        let all: Vec<u32> = (0..12).collect();
        let s = view.edge_count() as f64;
        match uncaptured_set_probe(&view, &all, s, StartMode::Density, &test_cfg).unwrap() {
            ProbeOutcome::StrengthHalved { new_strength } => {
                assert_eq!(new_strength, s / 2.0);
            }
            other => panic!("expected strength halving, got {other:?}"),
        }
    }

    #[test]
    fn recurse_step_cuts_barbell_and_halves_clique() {
        let test_cfg = cfg();
        let (g, _) = barbell(12, 2);
        let host = MultiGraph::from_simple(&g);
        let (mut sub, _) = WorkingSubgraph::new(&host, &test_cfg);
        sub.trim(&test_cfg);
        sub.sort_component(0);
        let s = sub.component_edges(0) as f64;
        let view = sub.component_view(0);
        match recurse_step(&view, s, &test_cfg).unwrap() {
            ProbeOutcome::CutFound { cut, .. } => {
                // the bridge cut: one clique on each side
                let left = cut.side.iter().filter(|&&v| v < 12).count();
                assert!(left == 0 || left == cut.side.len());
            }
            other => panic!("expected the bridge cut, got {other:?}"),
        }

        let g = complete(12);
        let host = MultiGraph::from_simple(&g);
        let (mut sub, _) = WorkingSubgraph::new(&host, &test_cfg);
        sub.trim(&test_cfg);
        sub.sort_component(0);
        let s = sub.component_edges(0) as f64;
        let view = sub.component_view(0);
        match recurse_step(&view, s, &test_cfg).unwrap() {
            ProbeOutcome::StrengthHalved { new_strength } => assert_eq!(new_strength, s / 2.0),
            other => panic!("expected strength halving, got {other:?}"),
        }
    }
}
