//! Run approximate PageRank and sweep the settled-density order for the
//! lowest-conductance threshold cut.
//!
//! Run with: cargo run --example sweep_cut

use edgecut::families::planted_cut;
use edgecut::graph::conductance;
use edgecut::pagerank::{
    approximate_pagerank, sweep_high, sweep_low, DensityRange, InitialDistribution, TeleportParams,
};

fn main() {
    let g = planted_cut(10, 10, 0.75, 2, 7);
    println!(
        "planted two-blob graph: n={} m={} min_degree={}",
        g.vertex_count(),
        g.edge_count(),
        g.min_degree()
    );
    let state = approximate_pagerank(
        &g,
        &InitialDistribution::point(0),
        TeleportParams::new(0.05, 1e-4).unwrap(),
    );
    println!(
        "pushed {} times, settled {:.4} of the mass",
        state.push_count_total(),
        state.settled_total()
    );

    match sweep_high(&g, &state, DensityRange::full()) {
        Some(res) => {
            let check = conductance(&g, &res.cut.side).unwrap();
            println!(
                "high sweep: side={:?}\n  threshold={:.6} conductance={:.6} (recheck {:.6})",
                res.cut.side, res.threshold, res.cut.conductance, check.conductance
            );
        }
        None => println!("high sweep: no proper threshold set"),
    }

    // the complement view of the same scan
    match sweep_low(
        &g,
        &state,
        DensityRange {
            lo: 0.0,
            lo_open: true,
            hi: 1.0 / (2.0 * g.edge_count() as f64),
            hi_open: true,
        },
    ) {
        Some(res) => println!(
            "low sweep below stationary density: side={:?} conductance={:.6}",
            res.cut.side, res.cut.conductance
        ),
        None => println!("low sweep: no side below the stationary density"),
    }
}
