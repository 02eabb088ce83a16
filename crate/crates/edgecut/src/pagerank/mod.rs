//! Approximate personalized PageRank: push machinery, density-bucket state,
//! conductance sweeps, and the nibble procedures built on them.
//!
//! Mass moves between a residual vector `r` and a settled vector `p`. A push at
//! `u` settles an α-fraction of the moved residual and spreads half of the rest
//! evenly over the incident edges (parallel edges each carry a share). The
//! approximate fixed point is reached when every residual density r(u)/d(u)
//! drops below the run's ε.

mod nibble;
mod sweep;

pub use nibble::{
    bounded_nibble, nibble, some_small, BoundedNibbleRun, NibbleOutcome, NibbleRun, SomeSmallRun,
    StepResult,
};
pub use sweep::{sweep_high, sweep_low, DensityRange, SweepResult, SweepSide};

use crate::graph::GraphView;
use crate::{Error, Result};
use std::collections::VecDeque;

/// Teleportation constant α and residual density threshold ε.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TeleportParams {
    pub alpha: f64,
    pub eps: f64,
}

impl TeleportParams {
    pub fn new(alpha: f64, eps: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0 / 3.0) {
            return Err(Error::InvalidParameter(format!(
                "alpha must be in (0, 1/3], got {alpha}"
            )));
        }
        Self::new_lenient(alpha, eps)
    }

    /// The push algebra itself is well-defined for any α in (0, 1); only the
    /// concentration analysis needs α ≤ 1/3. Experimentation entry points may
    /// take the full range.
    pub fn new_lenient(alpha: f64, eps: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "alpha must be in (0, 1), got {alpha}"
            )));
        }
        if eps <= 0.0 || eps.is_nan() {
            return Err(Error::InvalidParameter(format!(
                "eps must be positive, got {eps}"
            )));
        }
        Ok(TeleportParams { alpha, eps })
    }
}

/// Initial mass distribution, listed in order of non-increasing density
/// mass/d(v) as the push algorithm expects.
#[derive(Debug, Clone)]
pub struct InitialDistribution {
    entries: Vec<(u32, f64)>,
    total: f64,
}

impl InitialDistribution {
    /// Unit point mass on `v`.
    pub fn point(v: u32) -> Self {
        InitialDistribution {
            entries: vec![(v, 1.0)],
            total: 1.0,
        }
    }

    /// Mass 1/|X| on each vertex of `X`.
    pub fn uniform_mass<V: GraphView + ?Sized>(view: &V, xs: &[u32]) -> Result<Self> {
        if xs.is_empty() {
            return Err(Error::InvalidParameter(
                "uniform distribution over an empty set".into(),
            ));
        }
        let mass = 1.0 / xs.len() as f64;
        let mut entries: Vec<(u32, f64)> = xs.iter().map(|&v| (v, mass)).collect();
        // equal masses: non-increasing density == non-decreasing degree
        entries.sort_by_key(|&(v, _)| (view.degree(v), v));
        Ok(InitialDistribution {
            entries,
            total: 1.0,
        })
    }

    /// Density 1/vol(X) on each vertex of `X`, i.e. mass d(v)/vol(X).
    pub fn uniform_density<V: GraphView + ?Sized>(view: &V, xs: &[u32]) -> Result<Self> {
        if xs.is_empty() {
            return Err(Error::InvalidParameter(
                "uniform distribution over an empty set".into(),
            ));
        }
        let vol: u64 = xs.iter().map(|&v| view.degree(v) as u64).sum();
        if vol == 0 {
            return Err(Error::InvalidParameter(
                "uniform density over zero-volume set".into(),
            ));
        }
        let mut xs = xs.to_vec();
        xs.sort_unstable();
        let entries = xs
            .iter()
            .map(|&v| (v, view.degree(v) as f64 / vol as f64))
            .collect();
        Ok(InitialDistribution {
            entries,
            total: 1.0,
        })
    }

    pub fn entries(&self) -> &[(u32, f64)] {
        &self.entries
    }

    pub fn total(&self) -> f64 {
        self.total
    }
}

/// Settled/residual mass with the push-count bucket structure, the per-edge
/// net-flow ledger, and the work counter.
#[derive(Debug, Clone)]
pub struct MassState {
    alpha: f64,
    eps: f64,
    settled: Vec<f64>,
    residual: Vec<f64>,
    push_count: Vec<u32>,
    /// bucket[i] holds the vertices pushed exactly i times; under the
    /// fixed-amount push discipline their settled density is exactly i·εα.
    buckets: Vec<Vec<u32>>,
    bucket_slot: Vec<u32>,
    active: VecDeque<u32>,
    in_active: Vec<bool>,
    /// Signed net flow per edge id; positive direction is from the lower
    /// vertex id to the higher.
    flow: Vec<f64>,
    work: u64,
    pushes: u64,
    initial_total: f64,
}

impl MassState {
    pub fn new<V: GraphView + ?Sized>(
        view: &V,
        p0: &InitialDistribution,
        params: TeleportParams,
    ) -> Self {
        let nb = view.vertex_id_bound();
        let mut state = MassState {
            alpha: params.alpha,
            eps: params.eps,
            settled: vec![0.0; nb],
            residual: vec![0.0; nb],
            push_count: vec![0; nb],
            buckets: vec![Vec::new()],
            bucket_slot: vec![u32::MAX; nb],
            active: VecDeque::new(),
            in_active: vec![false; nb],
            flow: vec![0.0; view.edge_id_bound()],
            work: 0,
            pushes: 0,
            initial_total: p0.total(),
        };
        for &(v, mass) in p0.entries() {
            debug_assert!(view.contains_vertex(v));
            state.residual[v as usize] += mass;
        }
        // p0 is ordered by non-increasing density, so the queue starts densest
        // first; FIFO order afterwards keeps runs reproducible.
        for &(v, _) in p0.entries() {
            state.maybe_activate(view, v);
        }
        state
    }

    /// Build a state with prescribed settled mass and empty residual. Intended
    /// for driving the sweep directly in tests and experiments.
    pub fn from_settled<V: GraphView + ?Sized>(view: &V, settled: Vec<f64>, alpha: f64) -> Self {
        assert_eq!(settled.len(), view.vertex_id_bound());
        let nb = settled.len();
        let mut buckets = vec![Vec::new(), Vec::new()];
        let mut push_count = vec![0; nb];
        let mut bucket_slot = vec![u32::MAX; nb];
        let total = settled.iter().sum();
        for (v, &p) in settled.iter().enumerate() {
            if p > 0.0 {
                push_count[v] = 1;
                bucket_slot[v] = buckets[1].len() as u32;
                buckets[1].push(v as u32);
            }
        }
        MassState {
            alpha,
            eps: f64::INFINITY,
            settled,
            residual: vec![0.0; nb],
            push_count,
            buckets,
            bucket_slot,
            active: VecDeque::new(),
            in_active: vec![false; nb],
            flow: vec![0.0; view.edge_id_bound()],
            work: 0,
            pushes: 0,
            initial_total: total,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn settled(&self, v: u32) -> f64 {
        self.settled[v as usize]
    }

    pub fn residual(&self, v: u32) -> f64 {
        self.residual[v as usize]
    }

    pub fn settled_density<V: GraphView + ?Sized>(&self, view: &V, v: u32) -> f64 {
        let d = view.degree(v) as f64;
        if d == 0.0 {
            0.0
        } else {
            self.settled[v as usize] / d
        }
    }

    pub fn settled_total(&self) -> f64 {
        self.settled.iter().sum()
    }

    pub fn residual_total(&self) -> f64 {
        self.residual.iter().sum()
    }

    pub fn initial_total(&self) -> f64 {
        self.initial_total
    }

    /// Σ d(u) over executed pushes.
    pub fn work(&self) -> u64 {
        self.work
    }

    pub fn push_count_total(&self) -> u64 {
        self.pushes
    }

    pub fn push_count_of(&self, v: u32) -> u32 {
        self.push_count[v as usize]
    }

    pub fn flow_ledger(&self) -> &[f64] {
        &self.flow
    }

    /// Vertices with positive settled mass, gathered from the buckets in
    /// non-increasing push count order.
    pub fn touched(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for b in self.buckets.iter().skip(1).rev() {
            out.extend_from_slice(b);
        }
        out
    }

    /// Σ d(v) over view vertices with settled density ≥ `t`. For t > 0 only
    /// vertices with positive settled mass can qualify, so the scan is confined
    /// to the buckets.
    pub fn volume_at_least<V: GraphView + ?Sized>(&self, view: &V, t: f64) -> u64 {
        if t <= 0.0 {
            return view.total_volume();
        }
        self.touched()
            .iter()
            .filter(|&&v| self.settled_density(view, v) >= t)
            .map(|&v| view.degree(v) as u64)
            .sum()
    }

    pub fn volume_greater<V: GraphView + ?Sized>(&self, view: &V, t: f64) -> u64 {
        if t < 0.0 {
            return view.total_volume();
        }
        self.touched()
            .iter()
            .filter(|&&v| self.settled_density(view, v) > t)
            .map(|&v| view.degree(v) as u64)
            .sum()
    }

    /// Σ d(v) over view vertices with settled density < `t`.
    pub fn volume_less<V: GraphView + ?Sized>(&self, view: &V, t: f64) -> u64 {
        view.total_volume() - self.volume_at_least(view, t)
    }

    /// Σ d(v) over view vertices with settled density ≤ `t`.
    pub fn volume_at_most<V: GraphView + ?Sized>(&self, view: &V, t: f64) -> u64 {
        view.total_volume() - self.volume_greater(view, t)
    }

    /// excess(S) = p(S) − vol(S)/(2m). On a settled state this lower-bounds the
    /// limit excess.
    pub fn excess<V: GraphView + ?Sized>(&self, view: &V, set: &[u32]) -> f64 {
        let mass: f64 = set.iter().map(|&v| self.settled[v as usize]).sum();
        let vol: u64 = set.iter().map(|&v| view.degree(v) as u64).sum();
        mass - vol as f64 / view.total_volume() as f64
    }

    fn move_bucket(&mut self, v: u32) {
        let old = self.push_count[v as usize] as usize;
        let slot = self.bucket_slot[v as usize];
        if old > 0 || slot != u32::MAX {
            let bucket = &mut self.buckets[old];
            let last = bucket.len() as u32 - 1;
            let moved = bucket[last as usize];
            bucket.swap_remove(slot as usize);
            if moved != v {
                self.bucket_slot[moved as usize] = slot;
            }
        }
        let new = old + 1;
        if self.buckets.len() <= new {
            self.buckets.resize(new + 1, Vec::new());
        }
        self.push_count[v as usize] = new as u32;
        self.bucket_slot[v as usize] = self.buckets[new].len() as u32;
        self.buckets[new].push(v);
    }

    fn maybe_activate<V: GraphView + ?Sized>(&mut self, view: &V, v: u32) {
        if !self.in_active[v as usize]
            && self.residual[v as usize] >= self.eps * view.degree(v) as f64
            && view.degree(v) > 0
        {
            self.in_active[v as usize] = true;
            self.active.push_back(v);
        }
    }

    /// Push the full residual at `u`: settle α·r(u), spread (1−α)·r(u)/2 to the
    /// neighbors, halve-and-keep the rest. No-op when r(u) = 0.
    pub fn push<V: GraphView + ?Sized>(&mut self, view: &V, u: u32) {
        let r_u = self.residual[u as usize];
        if r_u <= 0.0 {
            return;
        }
        let d = view.degree(u) as f64;
        self.settled[u as usize] += self.alpha * r_u;
        let share = (1.0 - self.alpha) * r_u / (2.0 * d);
        self.spread(view, u, share);
        self.residual[u as usize] = (1.0 - self.alpha) * r_u / 2.0;
        self.finish_push(view, u);
    }

    /// Push a prescribed amount `q ≤ r(u)`: settle αq, spread (1−α)q/2, and
    /// take (1+α)q/2 out of the residual.
    pub fn push_amount<V: GraphView + ?Sized>(&mut self, view: &V, u: u32, q: f64) -> Result<()> {
        let r_u = self.residual[u as usize];
        if q <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "push amount must be positive, got {q}"
            )));
        }
        if q > r_u * (1.0 + 1e-12) {
            return Err(Error::InvalidParameter(format!(
                "push amount {q} exceeds residual {r_u}"
            )));
        }
        let d = view.degree(u) as f64;
        self.settled[u as usize] += self.alpha * q;
        let share = (1.0 - self.alpha) * q / (2.0 * d);
        self.spread(view, u, share);
        self.residual[u as usize] -= (1.0 + self.alpha) * q / 2.0;
        self.finish_push(view, u);
        Ok(())
    }

    fn spread<V: GraphView + ?Sized>(&mut self, view: &V, u: u32, share: f64) {
        let mut f = |w: u32, e: u32| {
            self.residual[w as usize] += share;
            self.flow[e as usize] += if u < w { share } else { -share };
            self.maybe_activate(view, w);
        };
        view.for_each_incident(u, &mut f);
    }

    fn finish_push<V: GraphView + ?Sized>(&mut self, view: &V, u: u32) {
        self.work += view.degree(u) as u64;
        self.pushes += 1;
        self.move_bucket(u);
        self.maybe_activate(view, u);
    }

    /// Run the fixed-amount push loop, executing at most `*budget` pushes and
    /// decrementing it. Returns true once no residual density reaches ε.
    pub fn run_pushes<V: GraphView + ?Sized>(&mut self, view: &V, budget: &mut u64) -> bool {
        while *budget > 0 {
            let u = match self.active.pop_front() {
                Some(u) => u,
                None => return true,
            };
            self.in_active[u as usize] = false;
            let d = view.degree(u) as f64;
            let q = self.eps * d;
            if self.residual[u as usize] >= q {
                self.settled[u as usize] += self.alpha * q;
                let share = (1.0 - self.alpha) * q / (2.0 * d);
                self.spread(view, u, share);
                self.residual[u as usize] -= (1.0 + self.alpha) * q / 2.0;
                self.finish_push(view, u);
                *budget -= 1;
            }
        }
        self.active.is_empty()
    }

    /// Lower the threshold to `eps` and re-scan for active vertices, allowing a
    /// finished run to be continued at higher precision.
    pub fn lower_eps<V: GraphView + ?Sized>(&mut self, view: &V, eps: f64) {
        self.eps = eps;
        let mut verts = Vec::new();
        view.for_each_vertex(&mut |v| verts.push(v));
        for v in verts {
            self.maybe_activate(view, v);
        }
    }
}

/// ApprPR': run fixed-amount pushes from `p0` until every residual density is
/// below `params.eps`. Each push settles exactly εα·d(u), so each push advances
/// its vertex one density bucket and the total work is at most total/(εα).
pub fn approximate_pagerank<V: GraphView + ?Sized>(
    view: &V,
    p0: &InitialDistribution,
    params: TeleportParams,
) -> MassState {
    let mut state = MassState::new(view, p0, params);
    let mut budget = u64::MAX;
    let done = state.run_pushes(view, &mut budget);
    debug_assert!(done);
    state
}
