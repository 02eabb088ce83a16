//! Certify-or-cut on three shapes: a complete graph (certified), a barbell
//! (cut), and a cycle pair-cut that only the small-n pair probes can split.
//!
//! Run with: cargo run --example certify_or_cut

use edgecut::families::barbell;
use edgecut::graph::SimpleGraph;
use edgecut::mincut::{certify_or_cut, CertifyOutcome};
use edgecut::pipeline::PipelineConfig;

fn show(name: &str, g: &SimpleGraph, cfg: &PipelineConfig) {
    match certify_or_cut(g, cfg) {
        Ok(CertifyOutcome::Certified) => {
            println!("{name}: certified -- every min-cut is a single-vertex cut")
        }
        Ok(CertifyOutcome::Cut(cut)) => println!(
            "{name}: cut with conductance {:.5}, side {:?}",
            cut.conductance, cut.side
        ),
        Err(e) => println!("{name}: {e}"),
    }
}

fn main() {
    let cfg = PipelineConfig::scaled();

    let mut edges = Vec::new();
    for u in 0..8u32 {
        for v in u + 1..8 {
            edges.push((u, v));
        }
    }
    let k8 = SimpleGraph::from_edges(8, &edges).unwrap();
    show("K8", &k8, &cfg);

    let (bar, _) = barbell(8, 1);
    show("barbell(8,1)", &bar, &cfg);

    let c4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    show("C4", &c4, &cfg);
}
