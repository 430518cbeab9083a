//! Random-graph experiment harness and the end-to-end verification routine.

use std::fmt::{self, Write as _};

use rand::Rng as _;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::backbone::{Backbone, BackboneKind};
use crate::distance::{self, backbone_edge_bounds, PathPolicy};
use crate::error::{Error, Result};
use crate::graph::{er_random_graph, random_supergraph_between, rng_from_seed, Edge, Graph, LeaderSet};
use crate::io::{write_csv, ResultRow};
use crate::oracle;
use crate::zero_forcing;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeaderPolicy {
    /// `m` distinct vertices drawn uniformly for every graph.
    #[default]
    Random,
    /// The same leaders for every graph.
    Given(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub n: usize,
    pub m: usize,
    pub p_grid: Vec<f64>,
    pub graphs_per_p: usize,
    pub oracle_trials: usize,
    pub seed: u64,
    pub leader_policy: LeaderPolicy,
    pub pmi_path_policy: PathPolicy,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            n: 50,
            m: 12,
            p_grid: vec![0.05, 0.10, 0.15, 0.20],
            graphs_per_p: 200,
            oracle_trials: 20,
            seed: 1,
            leader_policy: LeaderPolicy::Random,
            pmi_path_policy: PathPolicy::Reuse,
        }
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: Self = serde_json::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.m == 0 || self.m > self.n {
            return bad(format!("m={} must be in 1..={}", self.m, self.n));
        }
        if self.p_grid.is_empty() {
            return bad("p_grid is empty".into());
        }
        if let Some(p) = self.p_grid.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return bad(format!("probability {p} outside [0, 1]"));
        }
        if self.graphs_per_p == 0 || self.oracle_trials == 0 {
            return bad("graphs_per_p and oracle_trials must be at least 1".into());
        }
        if let LeaderPolicy::Given(ids) = &self.leader_policy {
            if ids.len() != self.m {
                return bad(format!("{} given leaders but m={}", ids.len(), self.m));
            }
            LeaderSet::new(self.n, ids.iter().copied()).map_err(|e| Error::InvalidConfig(e.to_string()))?;
        }
        Ok(())
    }
}

/// Bounds, backbones and oracle result for one graph and leader set.
#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub zeta: usize,
    pub delta: usize,
    pub zfs_backbone: Backbone,
    pub distance_backbone: Backbone,
    pub edge_bounds: distance::EdgeBounds,
    pub min_sampled_rank: usize,
}

pub fn analyze(
    g: &Graph,
    leaders: &LeaderSet,
    policy: PathPolicy,
    oracle_trials: usize,
    oracle_seed: u64,
) -> Result<InstanceReport> {
    let zfs_backbone = zero_forcing::zfs_backbone(g, leaders)?;
    let seq = distance::longest_pmi_greedy(g, leaders)?;
    let distance_backbone = distance::distance_backbone(g, leaders, &seq, policy)?;
    let edge_bounds = backbone_edge_bounds(seq.len(), leaders.len())?;
    let min_sampled_rank = oracle::sample_ranks(g, leaders, oracle_trials, oracle_seed)?
        .iter()
        .map(|s| s.rank)
        .min()
        .unwrap_or(g.n());
    Ok(InstanceReport {
        zeta: zfs_backbone.preserved_bound,
        delta: seq.len(),
        zfs_backbone,
        distance_backbone,
        edge_bounds,
        min_sampled_rank,
    })
}

fn cell_seed(seed: u64, p_index: usize, graph_index: usize) -> u64 {
    rng_from_seed(seed ^ ((p_index as u64) << 40) ^ graph_index as u64).gen()
}

fn run_cell(config: &ExperimentConfig, p: f64, seed: u64) -> Result<ResultRow> {
    let g = er_random_graph(config.n, p, seed)?;
    let mut rng = rng_from_seed(seed.wrapping_add(1));
    let leaders = match &config.leader_policy {
        LeaderPolicy::Random => LeaderSet::random(config.n, config.m, &mut rng)?,
        LeaderPolicy::Given(ids) => LeaderSet::new(config.n, ids.iter().copied())?,
    };
    let report = analyze(&g, &leaders, config.pmi_path_policy, config.oracle_trials, rng.gen())?;
    let row = ResultRow {
        n: config.n,
        p,
        seed,
        m: config.m,
        zeta: report.zeta,
        delta: report.delta,
        e_bz: report.zfs_backbone.len(),
        e_bd: report.distance_backbone.len(),
        bound_lower: report.edge_bounds.lower,
        bound_upper: report.edge_bounds.upper,
        min_sampled_rank: report.min_sampled_rank,
    };
    row.check()?;
    Ok(row)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Summary {
    pub p: f64,
    pub graphs: usize,
    pub mean_zeta: f64,
    pub mean_delta: f64,
    pub mean_e_bz: f64,
    pub mean_e_bd: f64,
    pub mean_bound_lower: f64,
    pub mean_bound_upper: f64,
    pub mean_min_sampled_rank: f64,
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p={} graphs={} zeta={:.3} delta={:.3} e_bz={:.3} e_bd={:.3} bound_lower={:.3} bound_upper={:.3} min_sampled_rank={:.3}",
            self.p,
            self.graphs,
            self.mean_zeta,
            self.mean_delta,
            self.mean_e_bz,
            self.mean_e_bd,
            self.mean_bound_lower,
            self.mean_bound_upper,
            self.mean_min_sampled_rank
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentOutput {
    /// Sorted by p, then seed.
    pub rows: Vec<ResultRow>,
    /// One entry per p, in grid order.
    pub summaries: Vec<Summary>,
}

impl ExperimentOutput {
    pub fn summary_for(&self, p: f64) -> Option<&Summary> {
        self.summaries.iter().find(|s| s.p == p)
    }

    /// Row CSV followed by one `# mean ...` comment line per p.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = write_csv(&self.rows)?;
        for s in &self.summaries {
            let _ = writeln!(out, "# mean {s}");
        }
        Ok(out)
    }
}

fn summarize(p: f64, rows: &[&ResultRow]) -> Summary {
    let k = rows.len() as f64;
    let mean = |f: fn(&ResultRow) -> usize| rows.iter().map(|r| f(r) as f64).sum::<f64>() / k;
    Summary {
        p,
        graphs: rows.len(),
        mean_zeta: mean(|r| r.zeta),
        mean_delta: mean(|r| r.delta),
        mean_e_bz: mean(|r| r.e_bz),
        mean_e_bd: mean(|r| r.e_bd),
        mean_bound_lower: mean(|r| r.bound_lower),
        mean_bound_upper: mean(|r| r.bound_upper),
        mean_min_sampled_rank: mean(|r| r.min_sampled_rank),
    }
}

/// Runs every (p, graph) cell in parallel. The output depends only on the
/// config.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentOutput> {
    config.validate()?;
    let cells: Vec<(usize, f64, u64)> = config
        .p_grid
        .iter()
        .enumerate()
        .flat_map(|(pi, &p)| (0..config.graphs_per_p).map(move |gi| (pi, p, cell_seed(config.seed, pi, gi))))
        .collect();
    let mut rows: Vec<(usize, ResultRow)> = cells
        .into_par_iter()
        .map(|(pi, p, seed)| run_cell(config, p, seed).map(|r| (pi, r)))
        .collect::<Result<_>>()?;
    rows.sort_by(|a, b| a.1.p.total_cmp(&b.1.p).then(a.1.seed.cmp(&b.1.seed)).then(a.0.cmp(&b.0)));
    let summaries = config
        .p_grid
        .iter()
        .enumerate()
        .map(|(pi, &p)| {
            let group: Vec<&ResultRow> = rows.iter().filter(|(i, _)| *i == pi).map(|(_, r)| r).collect();
            summarize(p, &group)
        })
        .collect();
    Ok(ExperimentOutput {
        rows: rows.into_iter().map(|(_, r)| r).collect(),
        summaries,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: String,
    /// Edge set of the offending supergraph, if any.
    pub supergraph: Option<Vec<Edge>>,
    pub sample_seed: Option<u64>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)?;
        if let Some(seed) = self.sample_seed {
            write!(f, " (sample seed {seed})")?;
        }
        if let Some(edges) = &self.supergraph {
            write!(f, " supergraph edges {edges:?}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub zeta: usize,
    pub delta: usize,
    pub is_zfs: bool,
    pub backbones_checked: usize,
    pub supergraphs_checked: usize,
    pub rank_samples: usize,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<Self> {
        match self.violations.first() {
            None => Ok(self),
            Some(v) => Err(Error::VerificationFailure {
                count: self.violations.len(),
                first: v.to_string(),
            }),
        }
    }
}

fn bound_of(kind: BackboneKind, g: &Graph, leaders: &LeaderSet) -> Result<usize> {
    match kind {
        BackboneKind::Zfs => zero_forcing::zeta(g, leaders),
        BackboneKind::Distance => distance::delta(g, leaders),
    }
}

/// Checks backbones of `g` end to end.
///
/// With `backbones` empty, both backbones are computed with `policy`.
/// For each backbone the supergraphs tried are: the backbone itself, `g`
/// minus each single non-backbone edge, and `trials` random supergraphs.
/// Each must keep the backbone's bound at least at its value on `g`. The
/// rank oracle is sampled `trials` times on `g` (rank ≥ max(ζ, δ), and
/// rank = n when the leaders are a zero forcing set) and once on every
/// random supergraph.
pub fn verify(
    g: &Graph,
    leaders: &LeaderSet,
    backbones: &[Backbone],
    policy: PathPolicy,
    trials: usize,
    seed: u64,
) -> Result<VerifyReport> {
    leaders.check_graph(g)?;
    let zeta = zero_forcing::zeta(g, leaders)?;
    let seq = distance::longest_pmi_greedy(g, leaders)?;
    let delta = seq.len();
    let is_zfs = zeta == g.n();
    let mut report = VerifyReport { zeta, delta, is_zfs, ..Default::default() };

    for sample in oracle::sample_ranks(g, leaders, trials, seed)? {
        report.rank_samples += 1;
        let need = if is_zfs { g.n() } else { zeta.max(delta) };
        if sample.rank < need {
            report.violations.push(Violation {
                check: "rank".into(),
                supergraph: None,
                sample_seed: Some(sample.seed),
                detail: format!("sampled rank {} below {need} (zeta={zeta}, delta={delta})", sample.rank),
            });
        }
    }

    let computed;
    let backbones = if backbones.is_empty() {
        computed = [
            zero_forcing::zfs_backbone(g, leaders)?,
            distance::distance_backbone(g, leaders, &seq, policy)?,
        ];
        &computed[..]
    } else {
        backbones
    };

    let mut rng = rng_from_seed(seed.wrapping_add(0x5eed));
    for backbone in backbones {
        if backbone.leaders != *leaders {
            return Err(Error::InvalidArguments(format!(
                "backbone was built for leaders {:?}, not {:?}",
                backbone.leaders.as_slice(),
                leaders.as_slice()
            )));
        }
        report.backbones_checked += 1;
        let target = match backbone.kind {
            BackboneKind::Zfs => zeta,
            BackboneKind::Distance => delta,
        };
        let lower = backbone.as_graph(g)?;
        let mut candidates = vec![(lower.clone(), None)];
        for e in g.edges().filter(|e| !backbone.edges.contains(e)) {
            candidates.push((g.without_edge(e), None));
        }
        for _ in 0..trials {
            let sub = random_supergraph_between(&lower, g, 0.5, rng.gen())?;
            candidates.push((sub, Some(rng.gen::<u64>())));
        }
        for (sub, rank_seed) in candidates {
            report.supergraphs_checked += 1;
            let got = bound_of(backbone.kind, &sub, leaders)?;
            if got < target {
                report.violations.push(Violation {
                    check: format!("{} backbone preservation", backbone.kind),
                    supergraph: Some(sub.edges().collect()),
                    sample_seed: None,
                    detail: format!("bound {got} on supergraph, {target} on the graph"),
                });
                continue;
            }
            if let Some(s) = rank_seed {
                report.rank_samples += 1;
                let sample = oracle::sample_rank(&sub, leaders, s)?;
                if sample.rank < got {
                    report.violations.push(Violation {
                        check: "supergraph rank".into(),
                        supergraph: Some(sub.edges().collect()),
                        sample_seed: Some(s),
                        detail: format!("sampled rank {} below bound {got}", sample.rank),
                    });
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_defaults_and_validation() {
        let c = ExperimentConfig::from_json("{}").unwrap();
        assert_eq!(c, ExperimentConfig::default());
        assert!(ExperimentConfig::from_json(r#"{"m": 0}"#).is_err());
        assert!(ExperimentConfig::from_json(r#"{"p_grid": [1.5]}"#).is_err());
        assert!(ExperimentConfig::from_json(r#"{"graphs_per_p": 0}"#).is_err());
        assert!(ExperimentConfig::from_json(r#"{"bogus": 1}"#).is_err());
        let given = ExperimentConfig::from_json(
            r#"{"n": 5, "m": 2, "leader_policy": {"given": [0, 4]}, "pmi_path_policy": "first_found"}"#,
        )
        .unwrap();
        assert_eq!(given.leader_policy, LeaderPolicy::Given(vec![0, 4]));
        assert_eq!(given.pmi_path_policy, PathPolicy::FirstFound);
        assert!(ExperimentConfig::from_json(r#"{"n": 5, "m": 2, "leader_policy": {"given": [0, 0]}}"#).is_err());
    }

    #[test]
    fn edgeless_graphs() {
        let config = ExperimentConfig {
            p_grid: vec![0.0],
            graphs_per_p: 1,
            oracle_trials: 2,
            ..Default::default()
        };
        let out = run_experiment(&config).unwrap();
        let r = &out.rows[0];
        assert_eq!((r.zeta, r.delta, r.e_bz, r.e_bd), (12, 12, 0, 0));
        assert_eq!(r.min_sampled_rank, 12);
    }

    #[test]
    fn experiment_is_reproducible() {
        let config = ExperimentConfig {
            n: 20,
            m: 4,
            p_grid: vec![0.2, 0.1],
            graphs_per_p: 6,
            oracle_trials: 2,
            seed: 77,
            ..Default::default()
        };
        let a = run_experiment(&config).unwrap();
        let b = run_experiment(&config).unwrap();
        assert_eq!(a.to_csv().unwrap(), b.to_csv().unwrap());
        assert_eq!(a.rows.len(), 12);
        assert!(a.rows.windows(2).all(|w| (w[0].p, w[0].seed) <= (w[1].p, w[1].seed)));
        assert_eq!(a.summaries[0].p, 0.2);
        assert_eq!(a.summaries[0].graphs, 6);
    }

    #[test]
    fn verify_passes_on_computed_backbones() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 3)]).unwrap();
        let l = LeaderSet::new(6, [0, 4]).unwrap();
        let report = verify(&g, &l, &[], PathPolicy::Reuse, 8, 3).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert_eq!(report.backbones_checked, 2);
    }

    #[test]
    fn verify_catches_a_dropped_necessary_edge() {
        let p4 = Graph::path(4);
        let l = LeaderSet::new(4, [0]).unwrap();
        let mut b = zero_forcing::zfs_backbone(&p4, &l).unwrap();
        b.edges.remove(&(1, 2));
        let report = verify(&p4, &l, &[b], PathPolicy::Reuse, 4, 0).unwrap();
        assert!(!report.passed());
        let err = report.into_result().unwrap_err();
        assert!(matches!(err, Error::VerificationFailure { .. }));
    }
}
