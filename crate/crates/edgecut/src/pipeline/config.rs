//! Pipeline constants.
//!
//! Every named constant of the kernelization and certify machinery lives here
//! with two built-in profiles. The `paper` profile uses the polylog defaults,
//! which at desk scale route every input to the exact fallback (the required
//! minimum degree is unreachable for small n). The `scaled` profile replaces
//! the polylog terms with small fixed values so the pipeline machinery is
//! actually exercised; its certificates are heuristic-strength and are
//! validated against brute-force oracles in the test suite.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Exact rational threshold. Comparisons multiply through, so fraction
/// boundaries like "more than 3/5 of the degree" are decided in integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub num: u32,
    pub den: u32,
}

impl Ratio {
    pub const fn new(num: u32, den: u32) -> Self {
        Ratio { num, den }
    }

    /// amount > (num/den) · base
    pub fn exceeds(self, amount: u64, base: u64) -> bool {
        amount * self.den as u64 > self.num as u64 * base
    }

    /// amount ≥ (num/den) · base
    pub fn at_least(self, amount: u64, base: u64) -> bool {
        amount * self.den as u64 >= self.num as u64 * base
    }

    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct PipelineConfig {
    /// Profile name echoed in reports.
    pub profile: String,
    /// Teleportation constant α₀.
    pub alpha0: f64,
    /// Conductance threshold Φ₀ for pipeline cuts.
    pub phi0: f64,
    /// Active/passive super vertex cutoff: δ* = delta_star_factor · δ / α₀.
    pub delta_star_factor: f64,
    /// Cluster strength floor: s₀ = s0_factor · δ / α₀.
    pub s0_factor: f64,
    /// Trim a vertex once it lost more than this fraction of its host degree.
    pub trim_fraction: Ratio,
    /// Keep a core only if more than this fraction of the cluster's incident
    /// edges are internal to it.
    pub core_fraction: Ratio,
    /// Stop kernelizing once this fraction of edges touches passive supers.
    pub passive_edge_fraction: Ratio,
    /// A vertex is captured when this fraction of its edges stays inside the
    /// capturing set.
    pub capture_fraction: Ratio,
    /// Loose vertices have at least d(v)/2 − loose_slack edges leaving.
    pub loose_slack: f64,
    /// δ at or below this: skip kernelization, run the exact finisher.
    pub fallback_delta: f64,
    /// Minimum degree required by certify-or-cut.
    pub certify_min_degree: u32,
    /// Conductance bound a certify-or-cut verdict must meet.
    pub certify_phi: f64,
    /// Number of balanced-cut probe starts.
    pub balanced_probes: usize,
    /// Probe set size per volume scale: |U| = probe_set_factor · m / (α₀ s).
    pub probe_set_factor: f64,
    /// Excess target for the balanced probes.
    pub balanced_gamma: f64,
    /// Excess target for per-vertex small-side probes.
    pub small_start_gamma: f64,
    /// Floor applied to the log-scaled excess targets (0 disables). The
    /// γ ~ 1/log formulas cost 1/(γα) work per probe and sit below the
    /// α-retention noise at desk scale, so the scaled profile flattens them.
    pub gamma_floor: f64,
    /// Cap on probe chunks per recursion level (0 = follow the formula).
    pub max_chunks: usize,
    /// Scheduler quantum in pushes per probe step.
    pub quantum: u64,
    /// Mass conservation tolerance for runtime assertions.
    pub mass_tolerance: f64,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self::scaled()
    }
}

impl PipelineConfig {
    /// Desk-scale profile: fixed small constants chosen so the pipeline
    /// engages on graphs with δ of a dozen rather than 2^64.
    pub fn scaled() -> Self {
        PipelineConfig {
            profile: "scaled".into(),
            alpha0: 0.05,
            phi0: 0.1,
            delta_star_factor: 0.2, // δ* = 4δ
            s0_factor: 0.1,         // s₀ = 2δ
            trim_fraction: Ratio::new(3, 5),
            core_fraction: Ratio::new(1, 4),
            passive_edge_fraction: Ratio::new(1, 20),
            capture_fraction: Ratio::new(3, 4),
            loose_slack: 1.0,
            fallback_delta: 3.0,
            certify_min_degree: 2,
            certify_phi: 0.5,
            balanced_probes: 16,
            probe_set_factor: 4.0,
            balanced_gamma: 1.0 / 32.0,
            small_start_gamma: 0.2,
            // a start set keeps roughly a 2α-excess spike of its own mass, so
            // the floor must clear that or every gate nibble misfires
            gamma_floor: 0.125,
            max_chunks: 4,
            quantum: 64,
            mass_tolerance: 1e-9,
        }
    }

    /// Polylog profile resolved against the input size: α₀ = 1/lg⁵n,
    /// Φ₀ = 1/(20 lg m), δ* = (lg n)·δ/α₀, s₀ = 64δ/α₀, fallback δ ≤ lg⁵m.
    pub fn paper(n: usize, m: usize) -> Self {
        let lg_n = (n.max(2) as f64).log2();
        let lg_m = (m.max(2) as f64).log2();
        PipelineConfig {
            profile: "paper".into(),
            alpha0: (1.0 / lg_n.powi(5)).min(1.0 / 3.0),
            phi0: 1.0 / (20.0 * lg_m),
            delta_star_factor: lg_n,
            s0_factor: 64.0,
            trim_fraction: Ratio::new(3, 5),
            core_fraction: Ratio::new(1, 4),
            passive_edge_fraction: Ratio::new(1, 20),
            capture_fraction: Ratio::new(3, 4),
            loose_slack: 1.0,
            fallback_delta: lg_m.powi(5),
            certify_min_degree: lg_n.powi(6).ceil() as u32,
            certify_phi: 1.0 / (20.0 * lg_m),
            balanced_probes: 16,
            probe_set_factor: 4.0,
            balanced_gamma: 0.1,
            small_start_gamma: 0.2,
            gamma_floor: 0.0,
            max_chunks: 0,
            quantum: 64,
            mass_tolerance: 1e-9,
        }
    }

    /// Parse a TOML override file. Missing keys fall back to the scaled
    /// profile, so a custom file only lists what changes.
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let mut cfg: PipelineConfig = toml::from_str(text)
            .map_err(|e| Error::InvalidParameter(format!("config parse: {e}")))?;
        if cfg.profile == "scaled" {
            cfg.profile = "custom".into();
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha0 > 0.0 && self.alpha0 <= 1.0 / 3.0) {
            return Err(Error::InvalidParameter(format!(
                "alpha0 must be in (0, 1/3], got {}",
                self.alpha0
            )));
        }
        if !(self.phi0 > 0.0 && self.phi0 < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "phi0 must be in (0, 1), got {}",
                self.phi0
            )));
        }
        for (name, r) in [
            ("trim_fraction", self.trim_fraction),
            ("core_fraction", self.core_fraction),
            ("passive_edge_fraction", self.passive_edge_fraction),
            ("capture_fraction", self.capture_fraction),
        ] {
            if r.den == 0 || r.num == 0 || r.num >= r.den {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be a fraction in (0, 1), got {}/{}",
                    r.num, r.den
                )));
            }
        }
        if self.quantum == 0 {
            return Err(Error::InvalidParameter("quantum must be positive".into()));
        }
        Ok(())
    }

    /// Active/passive cutoff δ* for a host with minimum degree δ.
    pub fn delta_star(&self, delta: u32) -> f64 {
        self.delta_star_factor * delta as f64 / self.alpha0
    }

    /// Strength floor s₀ for a host with minimum degree δ.
    pub fn s0(&self, delta: u32) -> f64 {
        self.s0_factor * delta as f64 / self.alpha0
    }

    /// Apply the desk-scale floor to a log-scaled excess target.
    pub fn floored_gamma(&self, formula: f64) -> f64 {
        formula.max(self.gamma_floor).min(0.999)
    }

    /// Conductance at which a pipeline probe accepts a fired cut. A non-trivial
    /// min-cut side has conductance at most 1/δ, so nothing rejected here could
    /// ever be one; Φ₀ keeps the bar tight when δ is large.
    pub fn probe_quality(&self, delta: u32) -> f64 {
        self.phi0.max(1.0 / delta.max(2) as f64)
    }
}
