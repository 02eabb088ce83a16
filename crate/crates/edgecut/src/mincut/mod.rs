//! Top-level minimum-cut computation, exact finishers, and oracles.

mod brute;
mod certificate;
mod certify;
mod stoer_wagner;

pub use brute::{brute_force_mincut, enumerate_cuts_up_to, BruteForceResult};
pub use certificate::sparse_certificate;
pub use certify::{certify_or_cut, CertifyOutcome};
pub use stoer_wagner::{exact_mincut_multigraph, ExactCut};

use crate::graph::{conductance, CutView, MultiGraph, SimpleGraph};
use crate::pipeline::{build_kernel, KernelOutput, PipelineConfig};
use crate::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CutKind {
    Trivial,
    NonTrivial,
}

/// How the result was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// δ was at or below the fallback threshold; the exact finisher ran on the
    /// input directly. Also used for disconnected inputs (λ = 0).
    FallbackExact,
    /// The kernel's exact cut won against the trivial bound.
    KernelExact,
    /// The kernel certified that only trivial min-cuts remain.
    CertifiedTrivial,
}

/// Edge connectivity λ with a concrete witness cut over the input graph.
#[derive(Debug, Clone)]
pub struct MinCutResult {
    pub lambda: u64,
    pub cut: CutView,
    pub kind: CutKind,
    pub provenance: Provenance,
    /// Kernelization trace when the pipeline ran.
    pub kernel: Option<KernelOutput>,
}

/// Compute λ and a minimum cut: kernelize, run the exact finisher capped at δ,
/// and compare with the trivial cut around a minimum-degree vertex.
pub fn minimum_cut(g: &SimpleGraph, cfg: &PipelineConfig) -> Result<MinCutResult> {
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices {
            need: 2,
            got: g.vertex_count(),
        });
    }
    if !g.is_connected() {
        // λ = 0 with one component as the witness side
        let comp = &g.components()[0];
        let cut = conductance(g, comp)?;
        return Ok(MinCutResult {
            lambda: 0,
            kind: kind_of(g, &cut),
            cut,
            provenance: Provenance::FallbackExact,
            kernel: None,
        });
    }
    let delta = g.min_degree() as u64;
    let kernel = build_kernel(g, cfg)?;
    let fallback = kernel.fallback;
    let finisher_input = &kernel.kernel;
    let exact = if finisher_input.vertex_count() >= 2 {
        Some(exact_mincut_multigraph(finisher_input, Some(delta))?)
    } else {
        None
    };
    match exact {
        Some(ExactCut::Found { lambda, cut }) if lambda < delta => {
            let mapped = finisher_input.map_cut_to_original(&cut, g);
            debug_assert_eq!(mapped.boundary.len() as u64, lambda);
            Ok(MinCutResult {
                lambda,
                kind: kind_of(g, &mapped),
                cut: mapped,
                provenance: if fallback {
                    Provenance::FallbackExact
                } else {
                    Provenance::KernelExact
                },
                kernel: Some(kernel),
            })
        }
        Some(ExactCut::Found { cut, .. }) if cut.boundary.len() as u64 == delta => {
            // λ = δ; report the finisher's witness (it is already minimum)
            let mapped = finisher_input.map_cut_to_original(&cut, g);
            Ok(MinCutResult {
                lambda: delta,
                kind: kind_of(g, &mapped),
                cut: mapped,
                provenance: if fallback {
                    Provenance::FallbackExact
                } else {
                    Provenance::KernelExact
                },
                kernel: Some(kernel),
            })
        }
        _ => {
            // Above the cap or single-vertex kernel: only trivial cuts remain.
            let v = (0..g.vertex_count() as u32)
                .min_by_key(|&v| (g.degree(v), v))
                .expect("nonempty graph");
            let cut = conductance(g, &[v])?;
            debug_assert_eq!(cut.boundary.len() as u64, delta);
            Ok(MinCutResult {
                lambda: delta,
                kind: CutKind::Trivial,
                cut,
                provenance: Provenance::CertifiedTrivial,
                kernel: Some(kernel),
            })
        }
    }
}

fn kind_of(g: &SimpleGraph, cut: &CutView) -> CutKind {
    let n = g.vertex_count();
    if cut.side.len() == 1 || cut.side.len() + 1 == n {
        CutKind::Trivial
    } else {
        CutKind::NonTrivial
    }
}

/// Kernel with the vertex-count bootstrap: kernelize the δ-sparse certificate,
/// then contract the endpoints of every edge outside the certificate.
pub fn kernel_vertex_bound(g: &SimpleGraph, cfg: &PipelineConfig) -> Result<MultiGraph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let delta = g.min_degree();
    let (h, edge_map) = sparse_certificate(g, delta.max(1))?;
    let out = build_kernel(&h, cfg)?;
    let mut kernel = out.kernel;
    // translate the kernel's edge ids back into g's
    kernel.compose_provenance(&edge_map);
    // contract endpoints of the leftover edges; no min-cut of g crosses them
    let mut in_h = vec![false; g.edge_count()];
    for &e in &edge_map {
        in_h[e as usize] = true;
    }
    let mut groups: Vec<Vec<u32>> = Vec::new();
    for e in 0..g.edge_count() as u32 {
        if !in_h[e as usize] {
            let (u, v) = g.edge_endpoints(e);
            let (cu, cv) = (kernel.current_vertex_of(u), kernel.current_vertex_of(v));
            if cu != cv {
                groups.push(vec![cu, cv]);
            }
        }
    }
    if !groups.is_empty() {
        kernel = kernel.contract_groups(&groups)?;
        // repeat until no leftover edge spans two kernel vertices
        loop {
            let mut more: Vec<Vec<u32>> = Vec::new();
            for e in 0..g.edge_count() as u32 {
                if !in_h[e as usize] {
                    let (u, v) = g.edge_endpoints(e);
                    let (cu, cv) = (kernel.current_vertex_of(u), kernel.current_vertex_of(v));
                    if cu != cv {
                        more.push(vec![cu, cv]);
                    }
                }
            }
            if more.is_empty() {
                break;
            }
            kernel = kernel.contract_groups(&more)?;
        }
    }
    Ok(kernel)
}
