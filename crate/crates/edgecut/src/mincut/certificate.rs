//! Sparse k-certificates by scan-first search.
//!
//! One pass assigns every edge to a forest index: scanning vertices in order
//! of non-increasing assigned-edge count r(v), each edge (u, v) to an
//! unscanned v gets index r(v)+1. The edges of index ≤ k form
//! F₁ ∪ … ∪ F_k where F_i is a maximal spanning forest of the graph minus the
//! earlier forests; every cut of size ≤ k keeps its exact size.

use crate::graph::SimpleGraph;
use crate::{Error, Result};

/// The union F₁ ∪ … ∪ F_k and the map from its edge ids back to the input's.
pub fn sparse_certificate(g: &SimpleGraph, k: u32) -> Result<(SimpleGraph, Vec<u32>)> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut forest_index = vec![0u32; m];
    let mut r = vec![0u32; n];
    let mut scanned = vec![false; n];

    // bucket queue over r values; stale entries are skipped on pop
    let mut buckets: Vec<Vec<u32>> = vec![(0..n as u32).collect()];
    let mut top = 0usize;
    let mut remaining = n;
    while remaining > 0 {
        let u = loop {
            while buckets[top].is_empty() {
                top -= 1;
            }
            let v = buckets[top].pop().unwrap();
            if !scanned[v as usize] && r[v as usize] as usize == top {
                break v;
            }
        };
        scanned[u as usize] = true;
        remaining -= 1;
        for &(v, e) in g.neighbors(u) {
            if !scanned[v as usize] {
                let idx = r[v as usize] + 1;
                forest_index[e as usize] = idx;
                r[v as usize] = idx;
                if buckets.len() <= idx as usize {
                    buckets.resize(idx as usize + 1, Vec::new());
                }
                buckets[idx as usize].push(v);
                if (idx as usize) > top {
                    top = idx as usize;
                }
            }
        }
    }

    let mut kept_edges = Vec::new();
    let mut edge_map = Vec::new();
    for e in 0..m as u32 {
        if forest_index[e as usize] <= k {
            kept_edges.push(g.edge_endpoints(e));
            edge_map.push(e);
        }
    }
    let h = SimpleGraph::from_edges_labeled(g.labels().to_vec(), &kept_edges)?;
    Ok((h, edge_map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mincut::brute_force_mincut;

    #[test]
    fn tree_is_its_own_certificate() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (1, 3), (1, 4)]).unwrap();
        for k in 1..4 {
            let (h, map) = sparse_certificate(&g, k).unwrap();
            assert_eq!(h.edge_count(), g.edge_count());
            assert_eq!(map.len(), g.edge_count());
        }
    }

    #[test]
    fn k4_with_k2_keeps_connectivity_two() {
        let g =
            SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (h, _) = sparse_certificate(&g, 2).unwrap();
        assert!(h.edge_count() <= 2 * 3);
        let res = brute_force_mincut(&h).unwrap();
        assert!(res.lambda >= 2);
    }

    #[test]
    fn edge_budget_holds() {
        let g = crate::families::gnp(12, 0.6, 5).unwrap();
        for k in 1..=4u32 {
            let (h, _) = sparse_certificate(&g, k).unwrap();
            assert!(h.edge_count() <= k as usize * (g.vertex_count() - 1));
        }
    }

    #[test]
    fn certificate_preserves_lambda_at_k_delta() {
        for seed in 0..30u64 {
            let g = match crate::families::gnp(9, 0.5, seed) {
                Ok(g) if g.is_connected() && g.min_degree() >= 1 => g,
                _ => continue,
            };
            let (h, _) = sparse_certificate(&g, g.min_degree()).unwrap();
            let lg = brute_force_mincut(&g).unwrap().lambda;
            let lh = brute_force_mincut(&h).unwrap().lambda;
            assert_eq!(lg, lh, "seed {seed}");
        }
    }

    #[test]
    fn small_cuts_keep_exact_size() {
        // every cut of size ≤ k has identical size in the certificate
        for seed in [1u64, 4, 9] {
            let g = match crate::families::gnp(8, 0.5, seed) {
                Ok(g) => g,
                Err(_) => continue,
            };
            let k = g.min_degree().max(1);
            let (h, _) = sparse_certificate(&g, k).unwrap();
            let n = g.vertex_count();
            for mask in 1u64..(1 << (n - 1)) {
                let weight = |g: &SimpleGraph| -> u64 {
                    let mut w = 0;
                    for e in 0..g.edge_count() as u32 {
                        let (a, b) = g.edge_endpoints(e);
                        if ((mask >> a) ^ (mask >> b)) & 1 == 1 {
                            w += 1;
                        }
                    }
                    w
                };
                let wg = weight(&g);
                if wg <= k as u64 {
                    assert_eq!(wg, weight(&h), "seed {seed} mask {mask}");
                }
            }
        }
    }

    #[test]
    fn min_degree_is_preserved_up_to_k() {
        let g = crate::families::gnp(10, 0.6, 2).unwrap();
        let (h, _) = sparse_certificate(&g, 3).unwrap();
        for v in 0..g.vertex_count() as u32 {
            assert!(h.degree(v) >= g.degree(v).min(3));
        }
    }
}
