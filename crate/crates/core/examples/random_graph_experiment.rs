// A small Erdős–Rényi sweep written as CSV.
//
// `cargo run --release --example random_graph_experiment -- full` runs the
// 50-vertex, 12-leader, 200-graph-per-p configuration.

use ctrl_backbone::experiment::{run_experiment, ExperimentConfig};
use ctrl_backbone::Result;

fn config(full: bool) -> ExperimentConfig {
    if full {
        ExperimentConfig::default()
    } else {
        ExperimentConfig {
            n: 20,
            m: 4,
            p_grid: vec![0.1, 0.2, 0.3],
            graphs_per_p: 10,
            oracle_trials: 5,
            ..ExperimentConfig::default()
        }
    }
}

fn sweep(full: bool) -> Result<()> {
    let output = run_experiment(&config(full))?;
    for s in &output.summaries {
        println!("{s}");
    }
    if full {
        print!("{}", output.to_csv()?);
    }
    Ok(())
}

pub fn run_example() -> Result<()> {
    sweep(false)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    sweep(std::env::args().nth(1).as_deref() == Some("full"))
}
