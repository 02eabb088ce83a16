//! Deterministic graph family generators for benches and tests.

use crate::graph::SimpleGraph;
use crate::{Error, Result};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Two k-cliques joined by a matching of `bridges` edges. Vertices 0..k form
/// the left clique, k..2k the right; bridge i joins i to k+i.
/// Returns the graph and its edge connectivity min(bridges, k-1).
pub fn barbell(k: usize, bridges: usize) -> (SimpleGraph, u32) {
    assert!(k >= 2 && bridges <= k);
    let mut edges = Vec::new();
    for side in 0..2 {
        let base = (side * k) as u32;
        for u in 0..k as u32 {
            for v in u + 1..k as u32 {
                edges.push((base + u, base + v));
            }
        }
    }
    for i in 0..bridges as u32 {
        edges.push((i, k as u32 + i));
    }
    let g = SimpleGraph::from_edges(2 * k, &edges).expect("barbell is simple");
    (g, bridges.min(k - 1) as u32)
}

/// Erdős–Rényi G(n, p) from a fixed seed. Errors when the draw has no edges.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<SimpleGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    if edges.is_empty() {
        return Err(Error::EmptyGraph);
    }
    SimpleGraph::from_edges(n, &edges)
}

/// First `count` connected G(n, p) draws scanning seeds upward from
/// `base_seed`. Returns (seed, graph) pairs; optionally require min degree.
pub fn connected_gnp_corpus(
    n: usize,
    p: f64,
    count: usize,
    base_seed: u64,
    min_degree: u32,
) -> Vec<(u64, SimpleGraph)> {
    let mut out = Vec::with_capacity(count);
    let mut seed = base_seed;
    while out.len() < count {
        if let Ok(g) = gnp(n, p, seed) {
            if g.vertex_count() == n && g.is_connected() && g.min_degree() >= min_degree {
                out.push((seed, g));
            }
        }
        seed += 1;
    }
    out
}

/// Two G(n, p) blobs joined by `bridges` random bridge edges. Seeds are
/// advanced until both blobs are connected with min degree above `bridges`,
/// so the planted bridge cut is the unique candidate of its size.
pub fn planted_cut(n1: usize, n2: usize, p: f64, bridges: usize, seed: u64) -> SimpleGraph {
    let mut attempt = seed;
    loop {
        let mut rng = ChaCha8Rng::seed_from_u64(attempt ^ 0x9e3779b97f4a7c15);
        let mut edges = Vec::new();
        let mut ok = true;
        for (offset, size) in [(0usize, n1), (n1, n2)] {
            let mut deg = vec![0u32; size];
            let mut blob = Vec::new();
            for u in 0..size as u32 {
                for v in u + 1..size as u32 {
                    if rng.random_bool(p) {
                        blob.push((offset as u32 + u, offset as u32 + v));
                        deg[u as usize] += 1;
                        deg[v as usize] += 1;
                    }
                }
            }
            if blob.is_empty() || deg.iter().any(|&d| d <= bridges as u32) {
                ok = false;
                break;
            }
            edges.extend_from_slice(&blob);
        }
        if ok {
            let mut chosen = std::collections::BTreeSet::new();
            while chosen.len() < bridges {
                let u = rng.random_range(0..n1 as u32);
                let v = n1 as u32 + rng.random_range(0..n2 as u32);
                chosen.insert((u, v));
            }
            edges.extend(chosen.iter().copied());
            if let Ok(g) = SimpleGraph::from_edges(n1 + n2, &edges) {
                if g.is_connected() {
                    return g;
                }
            }
        }
        attempt += 1;
    }
}
