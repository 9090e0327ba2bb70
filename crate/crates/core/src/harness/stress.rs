//! Random search for counterexamples near the min/max-degree thresholds.
//!
//! Trials are independent: trial `i` draws everything from
//! `mix_seed(master, i)`, runs in parallel, and rows come back in index order.
//! Without `with_timings`, output depends only on the configuration.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::embedding::{auto_embed, exact_embed, Budget, EmbedConstraints, Stage, VerdictKind};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, TreeGraph};
use crate::rational::{int, Rational};

use super::random::{degree_targets, mix_seed, random_host, random_tree_capped, trial_rng};

const HOST_ATTEMPTS: usize = 10_000;
const TREE_ATTEMPTS: usize = 100_000;

#[derive(Clone, Debug)]
pub struct StressConfig {
    pub k: usize,
    pub n: usize,
    pub alpha: Rational,
    pub trials: usize,
    pub seed: u64,
    pub max_tree_degree: Option<usize>,
    /// Search nodes per solver call; a node cap keeps verdicts reproducible.
    pub max_nodes: u64,
    pub with_timings: bool,
}

impl StressConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n < self.k + 1 {
            return Err(Error::InvalidParams(format!(
                "n = {} is below k + 1 = {}: no tree with k edges fits",
                self.n,
                self.k + 1
            )));
        }
        if self.alpha < int(0) || self.alpha >= Rational::new(1, 3) {
            return Err(Error::InvalidParams(format!("alpha must lie in [0, 1/3), got {}", self.alpha)));
        }
        let (min_deg, hub_deg) = degree_targets(self.k, self.alpha);
        if hub_deg > self.n - 1 {
            return Err(Error::InvalidParams(format!(
                "2(1−α)k rounds up to {hub_deg} > n − 1 = {}: no vertex can reach the maximum-degree bound",
                self.n - 1
            )));
        }
        if min_deg > self.n - 1 {
            return Err(Error::InvalidParams(format!(
                "(1+α)k/2 rounds up to {min_deg} > n − 1 = {}",
                self.n - 1
            )));
        }
        Ok(())
    }
}

/// One JSONL row.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstanceReport {
    pub instance_id: String,
    pub family: String,
    pub params: StressParams,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    #[serde(rename = "Delta")]
    pub max_degree: usize,
    pub k: usize,
    pub verdict: VerdictKind,
    pub stage: Stage,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    pub tree_edges: Vec<(usize, usize)>,
    pub nodes_explored: u64,
    pub seed: u64,
    pub counterexample: bool,
    /// Host edges, kept only for counterexample rows.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub host_edges: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StressParams {
    pub alpha: String,
    pub trial: usize,
    pub master_seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_tree_degree: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StressSummary {
    pub embedded: usize,
    pub counterexamples: usize,
    pub inconclusive: usize,
    /// NotEmbedded verdicts that a fresh exact run did not confirm.
    pub unconfirmed: usize,
}

/// Tree and host of trial `index`.
pub fn trial_instance(cfg: &StressConfig, index: usize) -> Result<(TreeGraph, SimpleGraph)> {
    let mut rng = trial_rng(cfg.seed, index as u64);
    let host = random_host(cfg.n, cfg.k, cfg.alpha, &mut rng, HOST_ATTEMPTS)?;
    let tree = random_tree_capped(cfg.k, cfg.max_tree_degree, &mut rng, TREE_ATTEMPTS)?;
    Ok((tree, host))
}

fn run_trial(cfg: &StressConfig, index: usize) -> Result<(InstanceReport, bool)> {
    let (tree, host) = trial_instance(cfg, index)?;
    let budget = Budget::nodes(cfg.max_nodes);
    let v = auto_embed(&tree, &host, budget)?;
    let mut counterexample = false;
    let mut unconfirmed = false;
    if v.kind() == VerdictKind::NotEmbedded {
        let again = exact_embed(&tree, &host, &EmbedConstraints::none(), budget)?;
        counterexample = again.kind() == VerdictKind::NotEmbedded;
        unconfirmed = !counterexample;
        if unconfirmed {
            log::error!("trial {index}: NotEmbedded not reproduced by a fresh exact run ({})", again.kind());
        }
    }
    let stats = host.degree_stats()?;
    let report = InstanceReport {
        instance_id: format!("stress-{}-{index}", cfg.seed),
        family: "gnp-planted-hub".into(),
        params: StressParams {
            alpha: cfg.alpha.to_string(),
            trial: index,
            master_seed: cfg.seed,
            max_tree_degree: cfg.max_tree_degree,
        },
        n: host.n(),
        m: host.edge_count(),
        delta: stats.min,
        max_degree: stats.max,
        k: cfg.k,
        verdict: if unconfirmed { VerdictKind::Unknown } else { v.kind() },
        stage: v.stage,
        witness: v.witness().map(|w| w.map.clone()),
        tree_edges: tree.graph().edges(),
        nodes_explored: v.nodes_explored,
        seed: mix_seed(cfg.seed, index as u64),
        counterexample,
        host_edges: counterexample.then(|| host.edges()),
        elapsed_ms: cfg.with_timings.then_some(v.elapsed.as_millis() as u64),
    };
    Ok((report, unconfirmed))
}

pub fn run_stress(cfg: &StressConfig) -> Result<(Vec<InstanceReport>, StressSummary)> {
    cfg.validate()?;
    let results: Vec<Result<(InstanceReport, bool)>> =
        (0..cfg.trials).into_par_iter().map(|i| run_trial(cfg, i)).collect();
    let mut rows = Vec::with_capacity(cfg.trials);
    let mut summary = StressSummary::default();
    for r in results {
        let (row, unconfirmed) = r?;
        match row.verdict {
            VerdictKind::Embedded => summary.embedded += 1,
            VerdictKind::NotEmbedded => summary.counterexamples += 1,
            _ => summary.inconclusive += 1,
        }
        summary.unconfirmed += usize::from(unconfirmed);
        rows.push(row);
    }
    Ok((rows, summary))
}

pub fn write_jsonl<W: Write>(rows: &[InstanceReport], mut out: W) -> Result<()> {
    for row in rows {
        serde_json::to_writer(&mut out, row)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
