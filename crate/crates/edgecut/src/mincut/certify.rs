//! Standalone certify-or-cut: either certify that no non-trivial minimum cut
//! exists, or hand back a cut of low conductance.
//!
//! Stage one probes a handful of vertices against balanced min-cuts (both
//! sides of volume ≥ m/2). Stage two walks volume scales s = m/2, m/4, …
//! down to the δ² floor below which no non-trivial min-cut side can live;
//! at each scale it point-probes a spread of vertices and then runs the
//! endgame from the certified-outside set.

use crate::graph::{conductance, CutView, SimpleGraph};
use crate::pagerank::{
    bounded_nibble, nibble, some_small, InitialDistribution, NibbleOutcome, TeleportParams,
};
use crate::pipeline::PipelineConfig;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub enum CertifyOutcome {
    /// No non-trivial min-cut exists; every minimum-degree vertex is the side
    /// of a global minimum cut.
    Certified,
    /// A cut with conductance at or below the configured bound.
    Cut(CutView),
}

pub fn certify_or_cut(g: &SimpleGraph, cfg: &PipelineConfig) -> Result<CertifyOutcome> {
    cfg.validate()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let delta = g.min_degree();
    if delta < cfg.certify_min_degree {
        return Err(Error::InvalidParameter(format!(
            "certify-or-cut needs min degree {} (got {delta})",
            cfg.certify_min_degree
        )));
    }
    let params = TeleportParams::new(cfg.alpha0, 1.0)?;
    let m = g.edge_count() as f64;
    let n = g.vertex_count();
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_by_key(|&v| (g.degree(v), v));

    // stage one: balanced cuts, where all but a few vertices keep most
    // neighbors on their own side
    for &v in order.iter().take(cfg.balanced_probes) {
        let out = nibble(
            g,
            &InitialDistribution::point(v),
            cfg.balanced_gamma,
            params,
            Some(cfg.certify_phi),
        )?;
        if let Some(cut) = accept(g, &out, cfg) {
            return Ok(CertifyOutcome::Cut(cut));
        }
    }
    // The count of probed vertices is what certifies the balanced case: fewer
    // than 16 vertices can sit on many cut edges, so probing 16 always hits a
    // good start vertex -- unless the whole graph has fewer than 16 vertices.
    // There the pigeonhole is void and point starts cannot split symmetric
    // ties, so run the endgame from every vertex pair instead: any non-trivial
    // cut leaves at least one pair fully outside its small side.
    if n <= cfg.balanced_probes {
        for a in 0..n as u32 {
            for b in a + 1..n as u32 {
                let p0 = InitialDistribution::uniform_mass(g, &[a, b])?;
                let out = some_small(g, &p0, 0.5, params, Some(cfg.certify_phi))?;
                if let Some(cut) = accept(g, &out, cfg) {
                    return Ok(CertifyOutcome::Cut(cut));
                }
            }
        }
    }

    // stage two: halving volume schedule for the smaller side
    let scales = (m / (delta as f64 * delta as f64)).log2().ceil() as i32;
    for i in 1..=scales.max(0) {
        let s = m / (2f64.powi(i));
        let u_count = ((cfg.probe_set_factor * m / (cfg.alpha0 * s)).ceil() as usize).min(n);
        let us = &order[..u_count.max(1)];
        for &v in us {
            let gamma = cfg.small_start_gamma;
            let out = if s <= gamma * m / 8.0 && s >= 1.0 {
                bounded_nibble(
                    g,
                    &InitialDistribution::point(v),
                    gamma,
                    s,
                    params,
                    Some(cfg.certify_phi),
                )?
            } else {
                nibble(
                    g,
                    &InitialDistribution::point(v),
                    gamma,
                    params,
                    Some(cfg.certify_phi),
                )?
            };
            if let Some(cut) = accept(g, &out, cfg) {
                return Ok(CertifyOutcome::Cut(cut));
            }
        }
        // every probe certified: U avoids any min-cut side at this scale, so
        // spreading mass on U starves such a side in the limit
        let p0 = InitialDistribution::uniform_mass(g, us)?;
        let out = some_small(g, &p0, 0.5, params, Some(cfg.certify_phi))?;
        if let Some(cut) = accept(g, &out, cfg) {
            return Ok(CertifyOutcome::Cut(cut));
        }
    }
    Ok(CertifyOutcome::Certified)
}

/// Keep a nibble cut only when its independently recomputed conductance meets
/// the configured bound.
fn accept(g: &SimpleGraph, out: &NibbleOutcome, cfg: &PipelineConfig) -> Option<CutView> {
    let sweep = out.cut()?;
    let check = conductance(g, &sweep.cut.side).ok()?;
    if check.conductance <= cfg.certify_phi {
        Some(check)
    } else {
        None
    }
}
