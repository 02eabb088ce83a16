//! Parse the two supported formats and show strict vs dedupe handling.
//!
//! Run with: cargo run --example parse_graphs

use edgecut::graph::{parse_graph, GraphFormat, ParseMode};

fn main() {
    let edge_list = "# a triangle with noise\n1 2\n2 3\n3 1\n3 1\n4 4\n2 4\n";
    let dimacs =
        "c complete graph on four vertices\np edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";

    match parse_graph(edge_list, GraphFormat::EdgeList, ParseMode::Strict) {
        Err(e) => println!("strict mode rejects the noisy list: {e}"),
        Ok(_) => unreachable!(),
    }

    let (g, report) = parse_graph(edge_list, GraphFormat::EdgeList, ParseMode::Dedupe).unwrap();
    println!(
        "dedupe mode: n={} m={} (dropped {} duplicates, {} self-loops)",
        g.vertex_count(),
        g.edge_count(),
        report.dropped_duplicates,
        report.dropped_self_loops
    );

    let (k4, _) = parse_graph(dimacs, GraphFormat::Dimacs, ParseMode::Strict).unwrap();
    println!(
        "dimacs: n={} m={} min_degree={} connected={}",
        k4.vertex_count(),
        k4.edge_count(),
        k4.min_degree(),
        k4.is_connected()
    );
    for v in 0..k4.vertex_count() as u32 {
        let neighbors: Vec<u64> = k4.neighbors(v).iter().map(|&(w, _)| k4.label(w)).collect();
        println!("  vertex {}: neighbors {neighbors:?}", k4.label(v));
    }
}
