//! On-disk formats.
//!
//! Edge-list text (the canonical fixture format), 0-based ids:
//!
//! ```text
//! # comment lines start with '#'
//! 3 2
//! 0 1
//! 1 2
//! labels: a b c
//! leaders: 0
//! ```
//!
//! The first non-comment line is `n m_edges`; `labels:` and `leaders:` are
//! optional. [`GraphDocument`] also has a JSON mirror with the same fields.
//! Backbone files are edge lists of the backbone's edges preceded by a
//! `# backbone kind=<zfs|distance> preserved_bound=<k>` line.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::backbone::{Backbone, BackboneKind};
use crate::error::{Error, Result};
use crate::graph::{canonical, Edge, Graph, LeaderSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leaders: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph, leaders: Option<&LeaderSet>) -> Self {
        Self {
            n: g.n(),
            edges: g.edges().collect(),
            leaders: leaders.map(|l| l.as_slice().to_vec()),
            labels: None,
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied())
    }

    pub fn leader_set(&self) -> Result<Option<LeaderSet>> {
        self.leaders
            .as_ref()
            .map(|ids| LeaderSet::new(self.n, ids.iter().copied()))
            .transpose()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Parses and validates the JSON mirror; edges come back canonicalised.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(text)?;
        doc.validated()
    }

    fn validated(mut self) -> Result<Self> {
        let g = self.graph()?;
        self.edges = g.edges().collect();
        self.leader_set()?;
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(Error::InvalidArguments(format!(
                    "{} labels for {} vertices",
                    labels.len(),
                    self.n
                )));
            }
        }
        Ok(self)
    }
}

fn parse_ids(line: usize, text: &str, n: usize) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            let v: usize = t.parse().map_err(|_| Error::Parse {
                line,
                message: format!("`{t}` is not a vertex id"),
            })?;
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            Ok(v)
        })
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<GraphDocument> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    let mut leaders = None;
    let mut labels = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let Some((n, _)) = header else {
            let fields: Vec<&str> = content.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                [a, b] => a.parse().ok().zip(b.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| Error::Parse {
                line,
                message: format!("expected header `n m_edges`, found `{content}`"),
            })?);
            continue;
        };
        if let Some(rest) = content.strip_prefix("leaders:") {
            leaders = Some(parse_ids(line, rest, n)?);
        } else if let Some(rest) = content.strip_prefix("labels:") {
            labels = Some(rest.split_whitespace().map(str::to_owned).collect());
        } else {
            let ids = parse_ids(line, content, n)?;
            let [u, v] = ids[..] else {
                return Err(Error::Parse {
                    line,
                    message: format!("expected an edge `u v`, found `{content}`"),
                });
            };
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = canonical(u, v);
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            edges.push(e);
        }
    }
    let Some((n, m_edges)) = header else {
        return Err(Error::Parse { line: 0, message: "missing header `n m_edges`".into() });
    };
    if edges.len() != m_edges {
        return Err(Error::Parse {
            line: 1,
            message: format!("header announces {m_edges} edges, found {}", edges.len()),
        });
    }
    GraphDocument { n, edges, leaders, labels }.validated()
}

/// Canonical text: edges sorted, labels then leaders as footers.
pub fn to_edge_list(doc: &GraphDocument) -> String {
    let mut edges: Vec<Edge> = doc.edges.iter().map(|&(u, v)| canonical(u, v)).collect();
    edges.sort_unstable();
    let mut out = format!("{} {}\n", doc.n, edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    if let Some(labels) = &doc.labels {
        let _ = writeln!(out, "labels: {}", labels.join(" "));
    }
    if let Some(leaders) = &doc.leaders {
        let ids: Vec<String> = leaders.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "leaders: {}", ids.join(" "));
    }
    out
}

pub fn write_backbone(n: usize, backbone: &Backbone) -> String {
    let doc = GraphDocument {
        n,
        edges: backbone.edges.iter().copied().collect(),
        leaders: Some(backbone.leaders.as_slice().to_vec()),
        labels: None,
    };
    format!(
        "# backbone kind={} preserved_bound={}\n{}",
        backbone.kind,
        backbone.preserved_bound,
        to_edge_list(&doc)
    )
}

pub fn parse_backbone(text: &str) -> Result<Backbone> {
    let (line, meta) = text
        .lines()
        .enumerate()
        .find_map(|(i, l)| l.trim().strip_prefix("# backbone").map(|rest| (i + 1, rest)))
        .ok_or_else(|| Error::Parse { line: 0, message: "missing `# backbone` line".into() })?;
    let mut kind = None;
    let mut bound = None;
    for field in meta.split_whitespace() {
        match field.split_once('=') {
            Some(("kind", k)) => kind = Some(k.parse::<BackboneKind>()?),
            Some(("preserved_bound", b)) => {
                bound = Some(b.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("bad preserved_bound `{b}`"),
                })?)
            }
            _ => {}
        }
    }
    let doc = parse_edge_list(text)?;
    let leaders = doc
        .leader_set()?
        .ok_or_else(|| Error::Parse { line, message: "backbone file has no leaders".into() })?;
    match (kind, bound) {
        (Some(kind), Some(preserved_bound)) => Ok(Backbone {
            kind,
            edges: doc.edges.into_iter().collect(),
            preserved_bound,
            leaders,
        }),
        _ => Err(Error::Parse { line, message: "backbone line needs kind= and preserved_bound=".into() }),
    }
}

/// Undirected DOT. Leaders are filled black, followers unfilled, backbone
/// edges red.
pub fn to_dot(g: &Graph, backbone: &Backbone) -> Result<String> {
    if let Some(&(u, v)) = backbone.edges.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Err(Error::NotASubgraph(u, v));
    }
    let mut out = String::from("graph backbone {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        if backbone.leaders.contains(v) {
            let _ = writeln!(out, "  {v} [style=filled, fillcolor=black, fontcolor=white];");
        } else {
            let _ = writeln!(out, "  {v} [style=solid];");
        }
    }
    for (u, v) in g.edges() {
        if backbone.edges.contains(&(u, v)) {
            let _ = writeln!(out, "  {u} -- {v} [color=red, penwidth=2];");
        } else {
            let _ = writeln!(out, "  {u} -- {v} [color=gray];");
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// One experiment cell: a sampled graph with its bounds and backbone sizes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub m: usize,
    pub zeta: usize,
    pub delta: usize,
    pub e_bz: usize,
    pub e_bd: usize,
    pub bound_lower: usize,
    pub bound_upper: usize,
    pub min_sampled_rank: usize,
}

pub const CSV_HEADER: &str = "n,p,seed,m,zeta,delta,e_bz,e_bd,bound_lower,bound_upper,min_sampled_rank";

impl ResultRow {
    pub fn check(&self) -> Result<()> {
        if self.zeta < self.m || self.e_bz != self.zeta - self.m {
            return Err(Error::InvariantViolation(format!(
                "seed {}: e_bz={} but zeta-m={}-{}",
                self.seed, self.e_bz, self.zeta, self.m
            )));
        }
        if !(self.bound_lower <= self.e_bd && self.e_bd <= self.bound_upper) {
            return Err(Error::InvariantViolation(format!(
                "seed {}: e_bd={} outside [{}, {}]",
                self.seed, self.e_bd, self.bound_lower, self.bound_upper
            )));
        }
        Ok(())
    }
}

/// Header plus one line per row; refuses rows that break their invariants.
pub fn write_csv(rows: &[ResultRow]) -> Result<String> {
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for row in rows {
        row.check()?;
        writer.serialize(row)?;
    }
    let body = writer.into_inner().map_err(|e| e.into_error())?;
    let mut out = format!("{CSV_HEADER}\n");
    out.push_str(std::str::from_utf8(&body).expect("csv output is utf-8"));
    Ok(out)
}

/// Reads rows written by [`write_csv`]; `#` lines are skipped.
pub fn parse_csv(text: &str) -> Result<Vec<ResultRow>> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    reader
        .deserialize()
        .map(|r| r.map_err(Error::from))
        .collect()
}
