// Both backbones checked on supergraphs between the backbone and the graph.

use ctrl_backbone::distance::PathPolicy;
use ctrl_backbone::experiment;
use ctrl_backbone::graph::{er_random_graph, random_supergraph_between, rng_from_seed};
use ctrl_backbone::{distance, zero_forcing, Graph, LeaderSet, Result};

pub fn run_example() -> Result<()> {
    let g = er_random_graph(30, 0.15, 4)?;
    let leaders = LeaderSet::random(30, 6, &mut rng_from_seed(4))?;

    let zfs = zero_forcing::zfs_backbone(&g, &leaders)?;
    let zfs_graph = zfs.as_graph(&g)?;
    for s in 0..5 {
        let h = random_supergraph_between(&zfs_graph, &g, 0.5, s)?;
        assert!(zero_forcing::zeta(&h, &leaders)? >= zfs.preserved_bound);
    }

    let report = experiment::verify(&g, &leaders, &[], PathPolicy::Reuse, 10, 0)?;
    println!(
        "zeta = {}, delta = {}, {} supergraphs checked, {} violations",
        report.zeta,
        report.delta,
        report.supergraphs_checked,
        report.violations.len()
    );

    // on a path led from one end every edge is needed; drop one and the
    // backbone no longer preserves delta
    let p4 = Graph::path(4);
    let end = LeaderSet::for_graph(&p4, [0])?;
    let seq = distance::longest_pmi_greedy(&p4, &end)?;
    let mut broken = distance::distance_backbone(&p4, &end, &seq, PathPolicy::Reuse)?;
    broken.edges.remove(&(2, 3));
    let r = experiment::verify(&p4, &end, &[broken], PathPolicy::Reuse, 10, 0)?;
    println!("path without (2, 3): {} violations, first: {}", r.violations.len(), r.violations[0]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
