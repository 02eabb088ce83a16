//! Kernelize a barbell: watch the rounds cut, trim, shave and contract until
//! only the bridge structure remains.
//!
//! Run with: cargo run --example kernelize

use edgecut::families::barbell;
use edgecut::mincut::{exact_mincut_multigraph, ExactCut};
use edgecut::pipeline::{build_kernel, PipelineConfig};

fn main() {
    let (g, lambda) = barbell(16, 3);
    let cfg = PipelineConfig::scaled();
    println!(
        "barbell(16,3): n={} m={} min_degree={} (edge connectivity {lambda})",
        g.vertex_count(),
        g.edge_count(),
        g.min_degree()
    );
    let out = build_kernel(&g, &cfg).unwrap();
    println!("fallback: {}", out.fallback);
    for r in &out.rounds {
        println!(
            "round {}: cut={} passive={} trimmed={} shaved={} scrapped={} | {} clusters, {} cores, edges {} -> {}",
            r.round,
            r.ledger.cut_edges,
            r.ledger.passive_cut_edges,
            r.ledger.trimmed_edges,
            r.ledger.shaved_edges,
            r.ledger.scrapped_edges,
            r.clusters,
            r.cores_contracted,
            r.edges_before,
            r.edges_after
        );
        assert!(r.ledger.amortization_holds(), "trim+shave+scrap <= 4 cut");
    }
    println!(
        "kernel: {} vertices ({} super), {} edges",
        out.kernel.vertex_count(),
        out.super_vertices(),
        out.kernel.edge_count()
    );
    for v in 0..out.kernel.vertex_count() as u32 {
        println!(
            "  vertex {v}: degree {} members {:?}",
            out.kernel.degree(v),
            out.kernel.members(v)
        );
    }
    match exact_mincut_multigraph(&out.kernel, None).unwrap() {
        ExactCut::Found { lambda: lk, .. } => {
            println!(
                "exact min-cut of the kernel: {lk} (preserved: {})",
                lk == lambda as u64
            )
        }
        ExactCut::AboveCap { .. } => unreachable!("no cap"),
    }

    // the vertex-count bootstrap: kernelize the sparse certificate instead,
    // then contract the endpoints of every leftover edge
    let boot = edgecut::mincut::kernel_vertex_bound(&g, &cfg).unwrap();
    println!(
        "bootstrapped kernel: {} vertices, {} edges",
        boot.vertex_count(),
        boot.edge_count()
    );
    match exact_mincut_multigraph(&boot, None).unwrap() {
        ExactCut::Found { lambda: lk, .. } => {
            println!("exact min-cut of the bootstrapped kernel: {lk}")
        }
        ExactCut::AboveCap { .. } => unreachable!("no cap"),
    }
}
