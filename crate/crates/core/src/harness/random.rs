//! Seeded random instances: Prüfer trees and near-threshold hosts with a
//! planted hub.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, TreeGraph};
use crate::rational::{int, Rational};

/// Per-trial seed: the SplitMix64 finalizer applied to
/// `master + (index + 1)·0x9E3779B97F4A7C15`. Depends only on its inputs, so
/// trial streams do not depend on scheduling.
pub fn mix_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn trial_rng(master: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix_seed(master, index))
}

/// Uniform labelled tree on `n` vertices via a random Prüfer sequence.
pub fn random_prufer_tree<R: Rng>(n: usize, rng: &mut R) -> Result<TreeGraph> {
    if n == 0 {
        return Err(Error::InvalidParams("tree needs at least one vertex".into()));
    }
    if n <= 2 {
        return Ok(TreeGraph::path(n - 1));
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    TreeGraph::from_edges(n, &decode_prufer(n, &seq))
}

/// Edges of the tree with Prüfer sequence `seq` (length `n − 2`).
pub fn decode_prufer(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// A uniform tree with `k` edges, resampled until its maximum degree is at
/// most `max_degree`.
pub fn random_tree_capped<R: Rng>(
    k: usize,
    max_degree: Option<usize>,
    rng: &mut R,
    max_attempts: usize,
) -> Result<TreeGraph> {
    if let Some(d) = max_degree {
        if k >= 2 && d < 2 || k == 1 && d < 1 {
            return Err(Error::InvalidParams(format!(
                "no tree with {k} edges has maximum degree <= {d}"
            )));
        }
    }
    for _ in 0..max_attempts.max(1) {
        let t = random_prufer_tree(k + 1, rng)?;
        if max_degree.is_none_or(|d| t.max_degree() <= d) {
            return Ok(t);
        }
    }
    Err(Error::Infeasible(format!(
        "no tree with {k} edges and maximum degree <= {max_degree:?} in {max_attempts} attempts"
    )))
}

/// Degree bounds a stress host must meet: `⌈(1+α)k/2⌉` and `⌈2(1−α)k⌉`.
pub fn degree_targets(k: usize, alpha: Rational) -> (usize, usize) {
    let min = ((int(1) + alpha) * int(k) / 2).ceil().to_integer();
    let max = ((int(1) - alpha) * int(2 * k)).ceil().to_integer();
    (min.max(0) as usize, max.max(0) as usize)
}

/// Binomial random graph on `n` vertices whose vertex 0 is re-wired to
/// exactly `⌈2(1−α)k⌉` random neighbors, resampled until the minimum degree
/// reaches `⌈(1+α)k/2⌉`.
///
/// The edge probability puts the expected degree about two standard
/// deviations above the minimum-degree bound.
pub fn random_host<R: Rng>(n: usize, k: usize, alpha: Rational, rng: &mut R, max_attempts: usize) -> Result<SimpleGraph> {
    let (min_deg, hub_deg) = degree_targets(k, alpha);
    if n < 2 || hub_deg > n - 1 || min_deg > n - 1 {
        return Err(Error::InvalidParams(format!(
            "degree bounds δ >= {min_deg}, Δ >= {hub_deg} cannot hold on {n} vertices (max degree {})",
            n.saturating_sub(1)
        )));
    }
    let target = min_deg as f64 + 2.0 * (min_deg as f64).sqrt() + 1.0;
    let p = (target / (n - 1) as f64).min(1.0);
    let others: Vec<usize> = (1..n).collect();
    for _ in 0..max_attempts.max(1) {
        let mut edges = Vec::new();
        for u in 1..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        edges.extend(others.choose_multiple(rng, hub_deg).map(|&v| (0, v)));
        let g = SimpleGraph::new(n, &edges)?;
        let stats = g.degree_stats()?;
        if stats.min >= min_deg && stats.max >= hub_deg {
            return Ok(g);
        }
    }
    Err(Error::Infeasible(format!(
        "no host with δ >= {min_deg} and Δ >= {hub_deg} on {n} vertices in {max_attempts} attempts"
    )))
}
