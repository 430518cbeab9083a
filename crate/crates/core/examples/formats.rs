// Edge-list and JSON round trips, a backbone file and a DOT rendering.

use ctrl_backbone::io::{self, GraphDocument};
use ctrl_backbone::{zero_forcing, Result};

const GRAPH: &str = "\
# a 4-cycle with a pendant
5 5
0 1
1 2
2 3
0 3
3 4
leaders: 0 1
";

pub fn run_example() -> Result<()> {
    let doc = io::parse_edge_list(GRAPH)?;
    let g = doc.graph()?;
    let leaders = doc.leader_set()?.expect("file lists leaders");

    let json = doc.to_json()?;
    assert_eq!(GraphDocument::from_json(&json)?, doc);
    assert_eq!(io::parse_edge_list(&io::to_edge_list(&doc))?, doc);

    let backbone = zero_forcing::zfs_backbone(&g, &leaders)?;
    let text = io::write_backbone(g.n(), &backbone);
    print!("{text}");
    assert_eq!(io::parse_backbone(&text)?.edges, backbone.edges);

    print!("{}", io::to_dot(&g, &backbone)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
