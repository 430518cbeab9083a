// Sampled controllability rank against the combinatorial lower bounds.

use ctrl_backbone::oracle::{self, InputMatrix, PatternMatrix, PRIME};
use ctrl_backbone::{distance, zero_forcing, Graph, LeaderSet, Result};

pub fn run_example() -> Result<()> {
    let g = ctrl_backbone::graph::er_random_graph(16, 0.2, 11)?;
    let leaders = LeaderSet::for_graph(&g, [0, 5, 9])?;
    let zeta = zero_forcing::zeta(&g, &leaders)?;
    let delta = distance::delta(&g, &leaders)?;
    let ranks: Vec<usize> = oracle::sample_ranks(&g, &leaders, 10, 1)?.iter().map(|s| s.rank).collect();
    println!("zeta = {zeta}, delta = {delta}, sampled ranks {ranks:?}");
    let gamma = oracle::gamma_bounds(&g, &leaders, 10, 1)?;
    println!("{} <= gamma <= {}", gamma.lower, gamma.upper_estimate);

    // The distance bound needs generic weights. On C4 led from vertex 0 the
    // two shortest paths to vertex 2 cancel when one edge weight is -1.
    let c4 = Graph::cycle(4);
    let l = LeaderSet::for_graph(&c4, [0])?;
    let m = PatternMatrix::from_weights(&c4, &[0; 4], &[1, 1, 1, PRIME - 1])?;
    let rank = oracle::controllability_rank(&m, &InputMatrix::from_leaders(&l))?;
    println!("C4: delta = {}, rank with a -1 weight = {rank}", distance::delta(&c4, &l)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
