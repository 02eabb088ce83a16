//! Exhaustive cut enumeration, the ground-truth oracle for small graphs.

use crate::graph::GraphView;
use crate::{Error, Result};

const ENUM_LIMIT: usize = 20;

/// λ together with every side achieving it.
#[derive(Debug, Clone)]
pub struct BruteForceResult {
    pub lambda: u64,
    /// Each minimum bipartition once, as the sorted side not containing the
    /// highest-id vertex.
    pub min_cut_sides: Vec<Vec<u32>>,
}

fn collect_edges<V: GraphView + ?Sized>(view: &V) -> (Vec<u32>, Vec<(usize, usize)>) {
    let mut verts = Vec::new();
    view.for_each_vertex(&mut |v| verts.push(v));
    let index: std::collections::BTreeMap<u32, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges = Vec::new();
    for &v in &verts {
        view.for_each_incident(v, &mut |w, _| {
            if v < w {
                edges.push((index[&v], index[&w]));
            }
        });
    }
    (verts, edges)
}

/// Enumerate all 2^(n-1) bipartitions; exact λ and the full list of minimum
/// cuts. Only for n ≤ 20.
pub fn brute_force_mincut<V: GraphView + ?Sized>(view: &V) -> Result<BruteForceResult> {
    let n = view.vertex_count();
    if n > ENUM_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: ENUM_LIMIT,
        });
    }
    if n < 2 {
        return Err(Error::TooFewVertices { need: 2, got: n });
    }
    let (verts, edges) = collect_edges(view);
    let mut lambda = u64::MAX;
    let mut sides: Vec<u64> = Vec::new();
    for mask in 1u64..(1 << (n - 1)) {
        let mut w = 0u64;
        for &(a, b) in &edges {
            if ((mask >> a) ^ (mask >> b)) & 1 == 1 {
                w += 1;
            }
        }
        match w.cmp(&lambda) {
            std::cmp::Ordering::Less => {
                lambda = w;
                sides.clear();
                sides.push(mask);
            }
            std::cmp::Ordering::Equal => sides.push(mask),
            std::cmp::Ordering::Greater => {}
        }
    }
    let min_cut_sides = sides
        .into_iter()
        .map(|mask| {
            (0..n)
                .filter(|&i| (mask >> i) & 1 == 1)
                .map(|i| verts[i])
                .collect()
        })
        .collect();
    Ok(BruteForceResult {
        lambda,
        min_cut_sides,
    })
}

/// All bipartition sides (not containing the highest-id vertex) whose cut
/// weight is at most `bound`, with the weights.
pub fn enumerate_cuts_up_to<V: GraphView + ?Sized>(
    view: &V,
    bound: u64,
) -> Result<Vec<(Vec<u32>, u64)>> {
    let n = view.vertex_count();
    if n > ENUM_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: ENUM_LIMIT,
        });
    }
    if n < 2 {
        return Err(Error::TooFewVertices { need: 2, got: n });
    }
    let (verts, edges) = collect_edges(view);
    let mut out = Vec::new();
    for mask in 1u64..(1 << (n - 1)) {
        let mut w = 0u64;
        for &(a, b) in &edges {
            if ((mask >> a) ^ (mask >> b)) & 1 == 1 {
                w += 1;
            }
        }
        if w <= bound {
            let side: Vec<u32> = (0..n)
                .filter(|&i| (mask >> i) & 1 == 1)
                .map(|i| verts[i])
                .collect();
            out.push((side, w));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    #[test]
    fn k4_has_four_trivial_min_cuts() {
        let g =
            SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let res = brute_force_mincut(&g).unwrap();
        assert_eq!(res.lambda, 3);
        assert_eq!(res.min_cut_sides.len(), 4);
        for side in &res.min_cut_sides {
            assert!(side.len() == 1 || side.len() == 3);
        }
    }

    #[test]
    fn p3_has_two_min_cuts() {
        let g = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let res = brute_force_mincut(&g).unwrap();
        assert_eq!(res.lambda, 1);
        assert_eq!(res.min_cut_sides.len(), 2);
    }

    #[test]
    fn c4_min_cuts_are_singletons_and_adjacent_pairs() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let res = brute_force_mincut(&g).unwrap();
        assert_eq!(res.lambda, 2);
        // 4 trivial cuts and 2 adjacent-pair bipartitions; each bipartition is
        // listed once as the side avoiding vertex 3, so {3} shows up as {0,1,2}
        let mut sizes: Vec<usize> = res.min_cut_sides.iter().map(|s| s.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 2, 2, 3]);
        assert!(
            !res.min_cut_sides.contains(&vec![0, 2]),
            "antipodal pair cuts 4 edges"
        );
    }

    #[test]
    fn too_large_is_rejected() {
        let edges: Vec<(u32, u32)> = (0..21).map(|i| (i, (i + 1) % 22)).collect();
        let g = SimpleGraph::from_edges(22, &edges).unwrap();
        assert!(matches!(
            brute_force_mincut(&g),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn disconnected_graph_has_lambda_zero() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let res = brute_force_mincut(&g).unwrap();
        assert_eq!(res.lambda, 0);
    }
}
