//! Conductance sweep over settled-density order.
//!
//! Candidates are the threshold sets of the settled density: suffix sets
//! V^p_{≥t} (high side) or prefix sets V^p_{<t} (low side). The scan walks only
//! vertices with positive settled mass; a low side is materialized as the
//! complement, so its zero-mass members are never visited individually during
//! the scan.

use super::MassState;
use crate::graph::{cmp_conductance, CutView, GraphView};
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepSide {
    /// Suffix set V^p_{≥t}: density at least the threshold.
    High,
    /// Prefix set V^p_{<t}: density strictly below the threshold.
    Low,
}

/// Interval of admissible thresholds t.
#[derive(Debug, Clone, Copy)]
pub struct DensityRange {
    pub lo: f64,
    pub lo_open: bool,
    pub hi: f64,
    pub hi_open: bool,
}

impl DensityRange {
    pub fn open_closed(lo: f64, hi: f64) -> Self {
        DensityRange {
            lo,
            lo_open: true,
            hi,
            hi_open: false,
        }
    }

    pub fn closed_open(lo: f64, hi: f64) -> Self {
        DensityRange {
            lo,
            lo_open: false,
            hi,
            hi_open: true,
        }
    }

    /// Every positive threshold.
    pub fn full() -> Self {
        DensityRange {
            lo: 0.0,
            lo_open: true,
            hi: f64::INFINITY,
            hi_open: false,
        }
    }

    /// Does this range intersect (lo_k, hi_k], the realization interval of a
    /// candidate threshold set?
    fn intersects_half_open(&self, lo_k: f64, hi_k: f64) -> bool {
        if hi_k <= lo_k {
            return false;
        }
        // need t with lo_k < t ≤ hi_k and self.lo (<|≤) t (<|≤) self.hi;
        // the candidate interval is open below, so the upper range bound must
        // clear lo_k strictly whether or not it is itself open
        let lower_ok = self.hi > lo_k;
        let upper_ok = if self.lo_open {
            hi_k > self.lo
        } else {
            hi_k >= self.lo
        };
        lower_ok && upper_ok
    }
}

/// Outcome of a sweep: the chosen threshold, side kind, and the cut.
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub threshold: f64,
    pub side_kind: SweepSide,
    pub cut: CutView,
}

/// Minimal-conductance suffix set V^p_{≥t} over thresholds in `range`.
/// Ties break toward the smaller side volume. Returns `None` when every
/// admissible threshold yields an empty or full side.
pub fn sweep_high<V: GraphView + ?Sized>(
    view: &V,
    state: &MassState,
    range: DensityRange,
) -> Option<SweepResult> {
    sweep(view, state, range, SweepSide::High)
}

/// Minimal-conductance prefix set V^p_{<t} over thresholds in `range`.
pub fn sweep_low<V: GraphView + ?Sized>(
    view: &V,
    state: &MassState,
    range: DensityRange,
) -> Option<SweepResult> {
    sweep(view, state, range, SweepSide::Low)
}

struct Candidate {
    threshold: f64,
    prefix_len: usize,
    boundary: u64,
    side_volume: u64,
    small_volume: u64,
}

fn sweep<V: GraphView + ?Sized>(
    view: &V,
    state: &MassState,
    range: DensityRange,
    side_kind: SweepSide,
) -> Option<SweepResult> {
    let mut order: Vec<(u32, f64)> = state
        .touched()
        .into_iter()
        .map(|v| (v, state.settled_density(view, v)))
        .filter(|&(_, d)| d > 0.0)
        .collect();
    order.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));

    let total_volume = view.total_volume();
    let n_view = view.vertex_count();
    let mut in_prefix = vec![false; view.vertex_id_bound()];
    let mut boundary = 0u64;
    let mut volume = 0u64;
    let mut best: Option<Candidate> = None;

    for k in 0..order.len() {
        let (v, density) = order[k];
        // extend the prefix by v
        let mut internal = 0u64;
        view.for_each_incident(v, &mut |w, _| {
            if in_prefix[w as usize] {
                internal += 1;
            }
        });
        in_prefix[v as usize] = true;
        let d = view.degree(v) as u64;
        boundary = boundary + d - 2 * internal;
        volume += d;

        // only group boundaries realize a threshold set
        let next_density = if k + 1 < order.len() {
            order[k + 1].1
        } else {
            0.0
        };
        if next_density == density {
            continue;
        }
        if !range.intersects_half_open(next_density, density) {
            continue;
        }
        let (side_volume, nonempty, proper) = match side_kind {
            SweepSide::High => (volume, k + 1 > 0, k + 1 < n_view),
            SweepSide::Low => (
                total_volume - volume,
                k + 1 < n_view,
                true, // excluding at least one vertex keeps the complement proper
            ),
        };
        if !nonempty || !proper {
            continue;
        }
        let small_volume = side_volume.min(total_volume - side_volume);
        let cand = Candidate {
            threshold: density,
            prefix_len: k + 1,
            boundary,
            side_volume,
            small_volume,
        };
        best = Some(match best {
            None => cand,
            Some(b) => match cmp_conductance(
                (cand.boundary, cand.small_volume),
                (b.boundary, b.small_volume),
            )
            .then_with(|| cand.side_volume.cmp(&b.side_volume))
            {
                Ordering::Less => cand,
                _ => b,
            },
        });
    }

    let best = best?;
    let side: Vec<u32> = match side_kind {
        SweepSide::High => {
            let mut s: Vec<u32> = order[..best.prefix_len].iter().map(|&(v, _)| v).collect();
            s.sort_unstable();
            s
        }
        SweepSide::Low => {
            let mut in_side = vec![true; view.vertex_id_bound()];
            for &(v, _) in &order[..best.prefix_len] {
                in_side[v as usize] = false;
            }
            let mut s = Vec::with_capacity(n_view - best.prefix_len);
            view.for_each_vertex(&mut |v| {
                if in_side[v as usize] {
                    s.push(v);
                }
            });
            s
        }
    };
    debug_assert!(!side.is_empty() && side.len() < n_view);
    let conductance = if best.small_volume == 0 {
        0.0
    } else {
        best.boundary as f64 / best.small_volume as f64
    };
    // recover boundary edge ids for the cut view
    let mut in_side = vec![false; view.vertex_id_bound()];
    for &v in &side {
        in_side[v as usize] = true;
    }
    let mut boundary_ids = Vec::new();
    for &v in &side {
        view.for_each_incident(v, &mut |w, e| {
            if !in_side[w as usize] {
                boundary_ids.push(e);
            }
        });
    }
    boundary_ids.sort_unstable();
    debug_assert_eq!(boundary_ids.len() as u64, best.boundary);
    Some(SweepResult {
        threshold: best.threshold,
        side_kind,
        cut: CutView {
            side,
            boundary: boundary_ids,
            volume: best.side_volume,
            small_volume: best.small_volume,
            conductance,
        },
    })
}
