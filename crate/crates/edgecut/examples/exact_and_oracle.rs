//! The exact finisher against the exhaustive oracle, and the sparse
//! certificate's cut preservation.
//!
//! Run with: cargo run --example exact_and_oracle

use edgecut::families::gnp;
use edgecut::graph::MultiGraph;
use edgecut::mincut::{brute_force_mincut, exact_mincut_multigraph, sparse_certificate, ExactCut};

fn main() {
    let mut agreements = 0;
    for seed in 0..50u64 {
        let g = match gnp(9, 0.55, seed) {
            Ok(g) => g,
            Err(_) => continue,
        };
        let mg = MultiGraph::from_simple(&g);
        let brute = brute_force_mincut(&mg).unwrap();
        let sw = match exact_mincut_multigraph(&mg, None).unwrap() {
            ExactCut::Found { lambda, .. } => lambda,
            ExactCut::AboveCap { .. } => unreachable!(),
        };
        assert_eq!(brute.lambda, sw, "seed {seed}");
        agreements += 1;
    }
    println!("maximum-adjacency finisher agreed with brute force on {agreements} graphs");

    let g = gnp(10, 0.6, 4).unwrap();
    println!(
        "\nsparse certificates of a G(10, 0.6) draw with m={}:",
        g.edge_count()
    );
    let full = brute_force_mincut(&g).unwrap().lambda;
    for k in 1..=g.min_degree() {
        let (h, _) = sparse_certificate(&g, k).unwrap();
        let lh = brute_force_mincut(&h).unwrap().lambda;
        println!(
            "  k={k}: {} edges (budget {}), connectivity {} vs {} in the input",
            h.edge_count(),
            k as usize * (g.vertex_count() - 1),
            lh,
            full
        );
    }
    println!("at k = min degree the certificate preserves every minimum cut exactly");
}
