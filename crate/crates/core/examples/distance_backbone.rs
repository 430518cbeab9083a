// Distance-to-leader vectors, a longest PMI sequence and the distance
// backbone on a five-vertex, two-leader network.

use ctrl_backbone::distance::{self, PathPolicy};
use ctrl_backbone::{Graph, LeaderSet, Result};

pub fn run_example() -> Result<()> {
    let g = Graph::new(5, [(0, 1), (0, 3), (0, 4), (1, 2), (1, 4)])?;
    let leaders = LeaderSet::for_graph(&g, [0, 1])?;

    let dl = distance::dl_matrix(&g, &leaders)?;
    for v in 0..g.n() {
        println!("D_{v} = {:?}", dl.row(v));
    }

    let seq = distance::longest_pmi_greedy(&g, &leaders)?;
    println!("PMI sequence {:?}, anchors {:?}, delta = {}", seq.vertices(), seq.pi(), seq.len());
    seq.check_against(&dl)?;

    let bounds = distance::backbone_edge_bounds(seq.len(), leaders.len())?;
    for policy in [PathPolicy::Reuse, PathPolicy::FirstFound] {
        let backbone = distance::distance_backbone(&g, &leaders, &seq, policy)?;
        assert!(bounds.contains(backbone.len()));
        println!("{policy:?}: {} edges {:?}", backbone.len(), backbone.edges);
    }
    println!("edge bounds [{}, {}]", bounds.lower, bounds.upper);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
