//! Push mechanics on a small graph: conservation, the per-edge net-flow
//! ledger, and the exact work bound.
//!
//! Run with: cargo run --example pagerank_push

use edgecut::families::barbell;
use edgecut::graph::SimpleGraph;
use edgecut::pagerank::{approximate_pagerank, InitialDistribution, TeleportParams};

fn main() {
    let g = SimpleGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
    let params = TeleportParams::new(0.2, 0.05).unwrap();
    let state = approximate_pagerank(&g, &InitialDistribution::point(0), params);
    println!("triangle, point start at 0, alpha=0.2, eps=0.05:");
    for v in 0..3 {
        println!(
            "  vertex {v}: settled={:.6} residual={:.6}",
            state.settled(v),
            state.residual(v)
        );
    }
    let total = state.settled_total() + state.residual_total();
    println!("  conservation: settled + residual = {total:.12}");
    println!(
        "  pushes={} work={} (bound 1/(eps*alpha) = {})",
        state.push_count_total(),
        state.work(),
        (1.0 / (0.05 * 0.2)) as u64
    );

    // the ledger ties net flow to the settled density difference
    let alpha = params.alpha;
    println!("  per-edge net flow vs (1-a)/(2a) * density difference:");
    for e in 0..g.edge_count() as u32 {
        let (u, v) = g.edge_endpoints(e);
        let expected = (1.0 - alpha) / (2.0 * alpha)
            * (state.settled_density(&g, u) - state.settled_density(&g, v));
        println!(
            "    edge {u}-{v}: ledger={:+.6} expected={:+.6}",
            state.flow_ledger()[e as usize],
            expected
        );
    }

    // a larger run: mass leaks only slowly across a narrow bridge
    let (bar, _) = barbell(10, 1);
    let state = approximate_pagerank(
        &bar,
        &InitialDistribution::point(2),
        TeleportParams::new(0.05, 1e-4).unwrap(),
    );
    let left: f64 = (0..10).map(|v| state.settled(v) + state.residual(v)).sum();
    println!("barbell(10,1), start in left clique: mass on left side = {left:.4}");
}
