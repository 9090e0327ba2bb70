//! Tree containment: the exact backtracking oracle, the greedy and
//! decomposition-driven heuristics, and witness validation.
//!
//! Only an exhaustive search (or a capacity certificate) may report
//! [`Verdict::NotEmbedded`]; heuristics that fail report [`Verdict::Unknown`].

mod exact;
mod forest;
mod greedy;
mod strategy;

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, TreeGraph};

pub use exact::{exact_embed, exact_embed_with, ExactOptions};
pub use forest::{forest_embed_component, CapacityCertificate, RootedForest};
pub use greedy::greedy_min_degree_embed;
pub use strategy::{feasibility_interval, strategy_embed, PipelineCase, StrategyInfo};

/// Injective map from tree vertices to host vertices; `map[t]` is the image of `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map.iter().copied().enumerate()
    }
}

/// Why a map fails to be an embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    WrongLength { expected: usize, got: usize },
    OutOfRange { tree_vertex: usize, host_vertex: usize },
    Collision { first: usize, second: usize, host_vertex: usize },
    MissingEdge { tree_edge: (usize, usize), image: (usize, usize) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongLength { expected, got } => {
                write!(f, "map covers {got} tree vertices, tree has {expected}")
            }
            Violation::OutOfRange { tree_vertex, host_vertex } => {
                write!(f, "tree vertex {tree_vertex} maps to missing host vertex {host_vertex}")
            }
            Violation::Collision { first, second, host_vertex } => {
                write!(f, "tree vertices {first} and {second} both map to {host_vertex}")
            }
            Violation::MissingEdge { tree_edge, image } => write!(
                f,
                "tree edge {}-{} maps to non-edge {}-{}",
                tree_edge.0, tree_edge.1, image.0, image.1
            ),
        }
    }
}

/// Checks that `map` is total, injective and edge-preserving; reports the
/// first violation found.
pub fn validate_embedding(t: &TreeGraph, g: &SimpleGraph, map: &[usize]) -> std::result::Result<(), Violation> {
    if map.len() != t.n() {
        return Err(Violation::WrongLength {
            expected: t.n(),
            got: map.len(),
        });
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (v, &h) in map.iter().enumerate() {
        if h >= g.n() {
            return Err(Violation::OutOfRange {
                tree_vertex: v,
                host_vertex: h,
            });
        }
        if owner[h] != usize::MAX {
            return Err(Violation::Collision {
                first: owner[h],
                second: v,
                host_vertex: h,
            });
        }
        owner[h] = v;
    }
    for (u, v) in t.graph().edges() {
        if !g.has_edge(map[u], map[v]) {
            return Err(Violation::MissingEdge {
                tree_edge: (u, v),
                image: (map[u], map[v]),
            });
        }
    }
    Ok(())
}

/// Per-vertex sets of admissible images.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EmbedConstraints {
    pub required_images: BTreeMap<usize, Vec<usize>>,
}

impl EmbedConstraints {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn require(mut self, tree_vertex: usize, hosts: Vec<usize>) -> Self {
        self.required_images.insert(tree_vertex, hosts);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.required_images.is_empty()
    }

    pub fn get(&self, tree_vertex: usize) -> Option<&[usize]> {
        self.required_images.get(&tree_vertex).map(Vec::as_slice)
    }

    pub(crate) fn validate(&self, tree_n: usize, host_n: usize) -> Result<()> {
        for (&v, hosts) in &self.required_images {
            if v >= tree_n {
                return Err(Error::InvalidConstraints(format!(
                    "tree vertex {v} does not exist (tree has {tree_n})"
                )));
            }
            if hosts.is_empty() {
                return Err(Error::InvalidConstraints(format!(
                    "empty image set for tree vertex {v}"
                )));
            }
            if let Some(&h) = hosts.iter().find(|&&h| h >= host_n) {
                return Err(Error::InvalidConstraints(format!(
                    "host vertex {h} required for tree vertex {v} does not exist (host has {host_n})"
                )));
            }
        }
        Ok(())
    }

    /// Membership masks over host vertices, one per constrained tree vertex.
    pub(crate) fn masks(&self, tree_n: usize, host_n: usize) -> Vec<Option<Vec<bool>>> {
        let mut out = vec![None; tree_n];
        for (&v, hosts) in &self.required_images {
            let mut mask = vec![false; host_n];
            for &h in hosts {
                mask[h] = true;
            }
            out[v] = Some(mask);
        }
        out
    }
}

/// Search limits. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn time(limit: Duration) -> Self {
        Budget {
            max_nodes: None,
            time_limit: Some(limit),
        }
    }

    pub fn nodes(max: u64) -> Self {
        Budget {
            max_nodes: Some(max),
            time_limit: None,
        }
    }

    pub fn with_nodes(mut self, max: u64) -> Self {
        self.max_nodes = Some(max);
        self
    }

    /// What is left after spending `elapsed` and `nodes`.
    pub fn remaining(&self, elapsed: Duration, nodes: u64) -> Budget {
        Budget {
            max_nodes: self.max_nodes.map(|m| m.saturating_sub(nodes)),
            time_limit: self.time_limit.map(|t| t.saturating_sub(elapsed)),
        }
    }

    /// The tighter of two budgets, field by field.
    pub fn min(&self, other: Budget) -> Budget {
        fn pick<T: Ord>(a: Option<T>, b: Option<T>) -> Option<T> {
            match (a, b) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, None) => x,
                (None, y) => y,
            }
        }
        Budget {
            max_nodes: pick(self.max_nodes, other.max_nodes),
            time_limit: pick(self.time_limit, other.time_limit),
        }
    }

    pub fn is_exhausted(&self) -> bool {
        self.max_nodes == Some(0) || self.time_limit == Some(Duration::ZERO)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Embedded(Embedding),
    NotEmbedded,
    Unknown,
    Timeout,
}

/// Verdict without the witness, for reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictKind {
    Embedded,
    NotEmbedded,
    Unknown,
    Timeout,
}

impl VerdictKind {
    /// Reporting precedence: Embedded > NotEmbedded > Timeout > Unknown.
    pub fn strength(self) -> u8 {
        match self {
            VerdictKind::Embedded => 3,
            VerdictKind::NotEmbedded => 2,
            VerdictKind::Timeout => 1,
            VerdictKind::Unknown => 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Embedded => "Embedded",
            VerdictKind::NotEmbedded => "NotEmbedded",
            VerdictKind::Unknown => "Unknown",
            VerdictKind::Timeout => "Timeout",
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which solver produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    Greedy,
    Strategy,
    Exact,
    Forest,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EmbedVerdict {
    pub verdict: Verdict,
    pub elapsed: Duration,
    pub nodes_explored: u64,
    pub stage: Stage,
    pub strategy: Option<StrategyInfo>,
    pub certificate: Option<CapacityCertificate>,
}

impl EmbedVerdict {
    pub(crate) fn new(verdict: Verdict, stage: Stage, started: Instant, nodes: u64) -> Self {
        EmbedVerdict {
            verdict,
            elapsed: started.elapsed(),
            nodes_explored: nodes,
            stage,
            strategy: None,
            certificate: None,
        }
    }

    pub fn kind(&self) -> VerdictKind {
        match self.verdict {
            Verdict::Embedded(_) => VerdictKind::Embedded,
            Verdict::NotEmbedded => VerdictKind::NotEmbedded,
            Verdict::Unknown => VerdictKind::Unknown,
            Verdict::Timeout => VerdictKind::Timeout,
        }
    }

    pub fn witness(&self) -> Option<&Embedding> {
        match &self.verdict {
            Verdict::Embedded(e) => Some(e),
            _ => None,
        }
    }

    pub fn is_embedded(&self) -> bool {
        matches!(self.verdict, Verdict::Embedded(_))
    }
}

/// Greedy, then the decomposition strategy, then the exact oracle on whatever
/// budget is left.
pub fn auto_embed(t: &TreeGraph, g: &SimpleGraph, budget: Budget) -> Result<EmbedVerdict> {
    let started = Instant::now();
    let greedy = greedy_min_degree_embed(t, g);
    let mut nodes = greedy.nodes_explored;
    if greedy.is_embedded() {
        return Ok(EmbedVerdict {
            elapsed: started.elapsed(),
            ..greedy
        });
    }
    let mut strategy_info = None;
    let left = budget.remaining(started.elapsed(), nodes);
    if t.edge_count() > 0 && !left.is_exhausted() {
        let s = strategy_embed(t, g, t.edge_count(), left)?;
        nodes += s.nodes_explored;
        if s.is_embedded() {
            return Ok(EmbedVerdict {
                elapsed: started.elapsed(),
                nodes_explored: nodes,
                ..s
            });
        }
        strategy_info = s.strategy;
    }
    let left = budget.remaining(started.elapsed(), nodes);
    if left.is_exhausted() {
        let mut v = EmbedVerdict::new(Verdict::Timeout, Stage::Exact, started, nodes);
        v.strategy = strategy_info;
        return Ok(v);
    }
    let e = exact_embed(t, g, &EmbedConstraints::none(), left)?;
    Ok(EmbedVerdict {
        elapsed: started.elapsed(),
        nodes_explored: nodes + e.nodes_explored,
        strategy: strategy_info,
        ..e
    })
}
