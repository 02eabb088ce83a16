//! The three nibble procedures: a bridge cut out of a barbell, a certificate
//! on a complete graph, and the endgame on a starved clique.
//!
//! Run with: cargo run --example nibble_barbell

use edgecut::families::barbell;
use edgecut::graph::{conductance, SimpleGraph};
use edgecut::pagerank::{
    bounded_nibble, nibble, some_small, InitialDistribution, NibbleOutcome, TeleportParams,
};

fn describe(g: &SimpleGraph, label: &str, out: &NibbleOutcome) {
    match out {
        NibbleOutcome::CutFound {
            sweep,
            settled_excess,
            eps,
            work,
            ..
        } => {
            let check = conductance(g, &sweep.cut.side).unwrap();
            println!(
                "{label}: cut of {} vertices, conductance {:.5}, excess {:.4}, eps {:.6}, work {work}",
                sweep.cut.side.len(),
                check.conductance,
                settled_excess,
                eps
            );
        }
        NibbleOutcome::NoSuchSet { gamma, work, .. } => {
            println!("{label}: certified no set with excess >= {gamma} (work {work})")
        }
        NibbleOutcome::EndgameCutAllLowDensity { sweep, work, .. } => println!(
            "{label}: endgame cut of {} vertices holding every starved vertex (work {work})",
            sweep.cut.side.len()
        ),
        NibbleOutcome::NoLowDensityVertex { gamma, work } => {
            println!(
                "{label}: certified no vertex of limit density <= (1-{gamma})/(2m) (work {work})"
            )
        }
    }
}

fn main() {
    let params = TeleportParams::new(0.05, 0.1).unwrap();

    let (g, _) = barbell(20, 1);
    let vol_left: f64 = (0..20u32).map(|v| g.degree(v) as f64).sum();
    let out = bounded_nibble(
        &g,
        &InitialDistribution::point(3),
        0.2,
        vol_left.min(g.edge_count() as f64),
        params,
        Some(0.1),
    )
    .unwrap();
    describe(
        &g,
        "bounded nibble on barbell(20,1) from the left clique",
        &out,
    );

    let mut edges = Vec::new();
    for u in 0..12u32 {
        for v in u + 1..12 {
            edges.push((u, v));
        }
    }
    let k12 = SimpleGraph::from_edges(12, &edges).unwrap();
    let out = bounded_nibble(
        &k12,
        &InitialDistribution::point(0),
        0.5,
        k12.edge_count() as f64 / 8.0,
        params,
        Some(0.1),
    )
    .unwrap();
    describe(&k12, "bounded nibble on K12", &out);

    let (g, _) = barbell(12, 2);
    let out = nibble(&g, &InitialDistribution::point(0), 0.2, params, Some(0.1)).unwrap();
    describe(&g, "plain nibble on barbell(12,2)", &out);

    // starve the left clique: all start mass on the right
    let right: Vec<u32> = (12..24).collect();
    let p0 = InitialDistribution::uniform_mass(&g, &right).unwrap();
    let out = some_small(&g, &p0, 0.5, params, Some(0.1)).unwrap();
    describe(&g, "endgame from the right clique", &out);
}
