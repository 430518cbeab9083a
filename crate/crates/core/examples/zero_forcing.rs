// Zero forcing on a small tree: derived set, backbone, and which backbone
// edges every forcing order must use.

use ctrl_backbone::zero_forcing::{self, ForceOrder};
use ctrl_backbone::{Graph, LeaderSet, Result};

pub fn run_example() -> Result<()> {
    // a star centre 2 with a two-edge tail: 0 - 2 - 3 - 4, 1 - 2
    let g = Graph::new(5, [(0, 2), (1, 2), (2, 3), (3, 4)])?;
    let leaders = LeaderSet::for_graph(&g, [0, 1])?;

    let chronicle = zero_forcing::derived_set(&g, &leaders)?;
    println!("derived set {:?}, zeta = {}", chronicle.derived(), chronicle.zeta());
    for f in &chronicle.forces {
        println!("  {} forces {}", f.forcer, f.forced);
    }

    let backbone = zero_forcing::zfs_backbone(&g, &leaders)?;
    assert_eq!(backbone.len(), chronicle.zeta() - leaders.len());
    println!("backbone {:?}", backbone.edges);

    // either leader may be the one that forces 2
    let other = zero_forcing::zfs_backbone_with(&g, &leaders, ForceOrder::Shuffled(3))?;
    println!("shuffled order backbone {:?}", other.edges);

    let classes = zero_forcing::classify_edges_exhaustive(&g, &leaders)?;
    println!("necessary {:?}", classes.necessary);
    println!("contingent {:?}", classes.contingent);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
