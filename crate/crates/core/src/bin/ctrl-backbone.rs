use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ctrl_backbone::distance::{self, PathPolicy};
use ctrl_backbone::experiment::{self, ExperimentConfig};
use ctrl_backbone::io::{self, GraphDocument};
use ctrl_backbone::{oracle, zero_forcing, Backbone, Error, Graph, LeaderSet, Result};

#[derive(Parser)]
#[command(name = "ctrl-backbone", version, about = "Controllability backbones of leader-follower networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Input {
    /// Edge-list file (`.json` for the JSON mirror).
    #[arg(long)]
    graph: PathBuf,
    /// Comma-separated leader ids; defaults to the file's `leaders:` line.
    #[arg(long, value_delimiter = ',')]
    leaders: Vec<usize>,
}

#[derive(clap::Args)]
struct Outputs {
    /// Write the backbone edge list here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write a DOT rendering with the backbone highlighted here.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Zero-forcing backbone and necessary/contingent edge counts.
    ZfsBackbone {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        outputs: Outputs,
        /// Certify contingent edges by exploring every forcing order (n <= 12).
        #[arg(long)]
        exhaustive: bool,
    },
    /// Distance-based backbone from a longest PMI sequence.
    DistBackbone {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        outputs: Outputs,
        #[arg(long, default_value = "reuse")]
        policy: PathPolicy,
    },
    /// ζ, δ, backbone edge bounds and the sampled rank range.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check backbone preservation and the rank bounds; nonzero exit on any violation.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "reuse")]
        policy: PathPolicy,
        /// Backbone files to check instead of the computed ones.
        #[arg(long)]
        backbone: Vec<PathBuf>,
    },
    /// Run the Erdős–Rényi experiment described by a JSON config.
    Experiment {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// CSV destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate an Erdős–Rényi graph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also draw this many random leaders.
        #[arg(long)]
        leaders: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(input: &Input) -> Result<(Graph, LeaderSet)> {
    let text = read(&input.graph)?;
    let doc = if input.graph.extension().is_some_and(|e| e == "json") {
        GraphDocument::from_json(&text)?
    } else {
        io::parse_edge_list(&text)?
    };
    let g = doc.graph()?;
    let leaders = if input.leaders.is_empty() {
        doc.leader_set()?.ok_or(Error::EmptyLeaderSet)?
    } else {
        LeaderSet::for_graph(&g, input.leaders.iter().copied())?
    };
    Ok((g, leaders))
}

fn save(outputs: &Outputs, g: &Graph, backbone: &Backbone) -> Result<()> {
    if let Some(path) = &outputs.out {
        std::fs::write(path, io::write_backbone(g.n(), backbone))?;
    }
    if let Some(path) = &outputs.dot {
        std::fs::write(path, io::to_dot(g, backbone)?)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::ZfsBackbone { input, outputs, exhaustive } => {
            let (g, leaders) = load(&input)?;
            let backbone = zero_forcing::zfs_backbone(&g, &leaders)?;
            let classes = if exhaustive {
                zero_forcing::classify_edges_exhaustive(&g, &leaders)?
            } else {
                zero_forcing::classify_edges(&g, &leaders)?
            };
            save(&outputs, &g, &backbone)?;
            println!(
                "zeta={} edges={} necessary={} contingent={}",
                backbone.preserved_bound,
                backbone.len(),
                classes.necessary.len(),
                classes.contingent.len()
            );
        }
        Command::DistBackbone { input, outputs, policy } => {
            let (g, leaders) = load(&input)?;
            let seq = distance::longest_pmi_greedy(&g, &leaders)?;
            let backbone = distance::distance_backbone(&g, &leaders, &seq, policy)?;
            let bounds = distance::backbone_edge_bounds(seq.len(), leaders.len())?;
            save(&outputs, &g, &backbone)?;
            println!(
                "delta={} edges={} bound_lower={} bound_upper={}",
                seq.len(),
                backbone.len(),
                bounds.lower,
                bounds.upper
            );
        }
        Command::Bounds { input, trials, seed } => {
            let (g, leaders) = load(&input)?;
            let zeta = zero_forcing::zeta(&g, &leaders)?;
            let delta = distance::delta(&g, &leaders)?;
            let edges = distance::backbone_edge_bounds(delta, leaders.len())?;
            let gamma = oracle::gamma_bounds(&g, &leaders, trials, seed)?;
            println!(
                "n={} m={} zeta={zeta} delta={delta} e_bz={} e_bd_lower={} e_bd_upper={} gamma_lower={} gamma_upper_estimate={}",
                g.n(),
                leaders.len(),
                zeta - leaders.len(),
                edges.lower,
                edges.upper,
                gamma.lower,
                gamma.upper_estimate
            );
        }
        Command::Verify { input, trials, seed, policy, backbone } => {
            let (g, leaders) = load(&input)?;
            let backbones = backbone
                .iter()
                .map(|p| io::parse_backbone(&read(p)?))
                .collect::<Result<Vec<_>>>()?;
            let report = experiment::verify(&g, &leaders, &backbones, policy, trials, seed)?;
            println!(
                "zeta={} delta={} zfs={} backbones={} supergraphs={} rank_samples={} violations={}",
                report.zeta,
                report.delta,
                report.is_zfs,
                report.backbones_checked,
                report.supergraphs_checked,
                report.rank_samples,
                report.violations.len()
            );
            for v in &report.violations {
                println!("violation: {v}");
            }
            report.into_result()?;
        }
        Command::Experiment { config, seed, out } => {
            let mut config = match config {
                Some(path) => ExperimentConfig::from_json(&read(&path)?)?,
                None => ExperimentConfig::default(),
            };
            if let Some(seed) = seed {
                config.seed = seed;
            }
            let output = experiment::run_experiment(&config)?;
            write_or_print(out.as_deref(), &output.to_csv()?)?;
            for s in &output.summaries {
                eprintln!("mean {s}");
            }
        }
        Command::Gen { n, p, seed, leaders, out, json } => {
            let g = ctrl_backbone::graph::er_random_graph(n, p, seed)?;
            let leaders = leaders
                .map(|m| LeaderSet::random(n, m, &mut ctrl_backbone::graph::rng_from_seed(seed.wrapping_add(1))))
                .transpose()?;
            let doc = GraphDocument::from_graph(&g, leaders.as_ref());
            let text = if json { doc.to_json()? + "\n" } else { io::to_edge_list(&doc) };
            write_or_print(out.as_deref(), &text)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::VerificationFailure { .. } => ExitCode::from(2),
                _ => ExitCode::FAILURE,
            }
        }
    }
}
