//! Decomposition-driven heuristic: split the tree at its centroid `z` and
//! distribute the pieces over the two components of `G − x` that the hub `x`
//! sees most, following the min/max-degree embedding argument.
//!
//! Every failure (a stalled placement, an infeasible split, a capacity
//! overflow inside one component) ends in `Unknown`, never `NotEmbedded`.

use std::cmp::Reverse;
use std::time::Instant;

use serde::Serialize;

use crate::decomposition::{
    even_distance_set, find_separator, group_components_case1, partition_two, rooted_components,
    v0_weights,
};
use crate::error::{Error, Result};
use crate::graph::{Component, SimpleGraph, TreeGraph};
use crate::rational::{int, Rational};

use super::forest::{embed_forest_anywhere, forest_embed_component, RootedForest};
use super::greedy::{greedy_min_degree_embed, UNPLACED};
use super::{validate_embedding, Budget, EmbedConstraints, EmbedVerdict, Embedding, Stage, Verdict};

/// Node cap for each exact fallback inside the pipeline.
const INNER_NODE_CAP: u64 = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PipelineCase {
    /// `δ(G) ≥ k`: plain greedy suffices.
    DirectGreedy,
    /// No α satisfies both degree bounds; the pipeline does not apply.
    EmptyInterval,
    /// `x` sees fewer than two components of `G − x`.
    FewComponents,
    /// `|V₀| < (1+α)k/2`: `z` goes onto `x`.
    SmallV0,
    /// Every piece carries at most `αk` of `V₀`.
    Case1,
    /// Some piece `F*` carries more than `αk` of `V₀`; its root goes onto `x`.
    Case2,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StrategyInfo {
    pub hub: usize,
    #[serde(serialize_with = "ser_rational")]
    pub alpha_eff: Rational,
    /// `[1 − Δ/(2k), 2δ/k − 1]`; empty when the left end exceeds the right.
    #[serde(serialize_with = "ser_interval")]
    pub interval: (Rational, Rational),
    pub case: PipelineCase,
    /// The placement plan failed and the witness (if any) came from the final
    /// greedy pass.
    pub fell_back: bool,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_interval<S: serde::Serializer>(
    r: &(Rational, Rational),
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq([r.0.to_string(), r.1.to_string()])
}

impl StrategyInfo {
    pub fn interval_is_empty(&self) -> bool {
        self.interval.0 > self.interval.1
    }
}

/// `[1 − Δ/(2k), 2δ/k − 1]` for a host with the given degree extremes.
pub fn feasibility_interval(min_degree: usize, max_degree: usize, k: usize) -> (Rational, Rational) {
    let k = int(k.max(1));
    (
        int(1) - int(max_degree) / (int(2) * k),
        int(2 * min_degree) / k - int(1),
    )
}

pub fn strategy_embed(t: &TreeGraph, g: &SimpleGraph, k: usize, budget: Budget) -> Result<EmbedVerdict> {
    if t.edge_count() != k {
        return Err(Error::InvalidParams(format!(
            "tree has {} edges, expected k = {k}",
            t.edge_count()
        )));
    }
    let started = Instant::now();
    if g.n() == 0 || k == 0 {
        let mut v = greedy_min_degree_embed(t, g);
        v.stage = Stage::Strategy;
        return Ok(v);
    }
    let stats = g.degree_stats()?;
    let interval = feasibility_interval(stats.min, stats.max, k);
    let mut info = StrategyInfo {
        hub: stats.argmax,
        alpha_eff: interval.0.max(int(0)),
        interval,
        case: PipelineCase::DirectGreedy,
        fell_back: false,
    };
    let mut nodes = 0;
    let mut map = None;
    if stats.min >= k {
        let v = greedy_min_degree_embed(t, g);
        nodes += v.nodes_explored;
        map = v.witness().map(|e| e.map.clone());
    } else if info.interval_is_empty() {
        info.case = PipelineCase::EmptyInterval;
    } else {
        let plan = Plan::new(t, g, k, &info, budget, started)?;
        info.case = plan.case;
        nodes += plan.nodes;
        map = plan.map.filter(|m| validate_embedding(t, g, m).is_ok());
        if map.is_none() {
            let v = greedy_min_degree_embed(t, g);
            nodes += v.nodes_explored;
            map = v.witness().map(|e| e.map.clone());
            info.fell_back = map.is_some();
        }
    }
    let verdict = match map {
        Some(map) => Verdict::Embedded(Embedding { map }),
        None => Verdict::Unknown,
    };
    let mut v = EmbedVerdict::new(verdict, Stage::Strategy, started, nodes);
    v.strategy = Some(info);
    Ok(v)
}

struct Plan {
    case: PipelineCase,
    map: Option<Vec<usize>>,
    nodes: u64,
}

/// Where a group of tree pieces should go.
struct Target<'a> {
    comp: &'a Component,
    /// Side receiving the pieces' roots, when the component is bipartite.
    side: Option<usize>,
    root_images: Vec<usize>,
}

impl Plan {
    fn new(
        t: &TreeGraph,
        g: &SimpleGraph,
        k: usize,
        info: &StrategyInfo,
        budget: Budget,
        started: Instant,
    ) -> Result<Plan> {
        let x = info.hub;
        let alpha = info.alpha_eff;
        let keep: Vec<bool> = (0..g.n()).map(|v| v != x).collect();
        let x_deg = |c: &Component| g.neighbors(x).iter().filter(|&&v| c.contains(v)).count();
        let mut comps: Vec<Component> = g
            .components_within(&keep)
            .into_iter()
            .filter(|c| x_deg(c) > 0)
            .collect();
        comps.sort_by_key(|c| (Reverse(x_deg(c)), c.vertices[0]));
        let mut plan = Plan {
            case: PipelineCase::FewComponents,
            map: None,
            nodes: 0,
        };
        if comps.len() < 2 {
            return Ok(plan);
        }
        let target = |c: &'_ Component| -> (Option<usize>, Vec<usize>) {
            let nx: Vec<usize> = g.neighbors(x).iter().copied().filter(|&v| c.contains(v)).collect();
            match &c.bipartition {
                Some(bp) => {
                    let on = |s| nx.iter().filter(|&&v| bp.side_of(v) == Some(s)).count();
                    let side = usize::from(on(1) > on(0));
                    let images = nx.into_iter().filter(|&v| bp.side_of(v) == Some(side)).collect();
                    (Some(side), images)
                }
                None => (None, nx),
            }
        };
        let (side1, images1) = target(&comps[0]);
        let first = Target {
            comp: &comps[0],
            side: side1,
            root_images: images1,
        };
        let second = Target {
            comp: &comps[1],
            side: None,
            root_images: g.neighbors(x).iter().copied().filter(|&v| comps[1].contains(v)).collect(),
        };

        let z = find_separator(t)?.separator;
        let pieces = rooted_components(t, z);
        let verts: Vec<Vec<usize>> = pieces.iter().map(|(_, vs)| vs.clone()).collect();
        let v0 = even_distance_set(t, z)?;
        let weights = v0_weights(&verts, &v0);
        let half = (int(1) + alpha) * int(k) / 2;
        let mut map = vec![UNPLACED; t.n()];
        let pick = |idx: &[usize]| -> Vec<(usize, Vec<usize>)> { idx.iter().map(|&i| pieces[i].clone()).collect() };

        let groups: [Vec<(usize, Vec<usize>)>; 2] = if int(v0.len()) < half {
            plan.case = PipelineCase::SmallV0;
            let sizes: Vec<usize> = verts.iter().map(Vec::len).collect();
            let Ok(split) = partition_two(&sizes, k) else {
                return Ok(plan);
            };
            map[z] = x;
            [pick(&split.j1), pick(&split.j2)]
        } else if weights.iter().all(|&w| int(w) <= alpha * int(k)) {
            plan.case = PipelineCase::Case1;
            let Ok((f1, f2)) = group_components_case1(&weights, k, alpha) else {
                return Ok(plan);
            };
            map[z] = x;
            [pick(&f1), pick(&f2)]
        } else {
            plan.case = PipelineCase::Case2;
            let heaviest = (0..weights.len())
                .max_by_key(|&i| (weights[i], Reverse(i)))
                .expect("a tree with an edge has a piece");
            let r_star = pieces[heaviest].0;
            map[r_star] = x;
            let mut with_z = vec![z];
            for (i, vs) in verts.iter().enumerate() {
                if i != heaviest {
                    with_z.extend(vs);
                }
            }
            let below: Vec<(usize, Vec<usize>)> =
                rooted_components(t, r_star).into_iter().filter(|(r, _)| *r != z).collect();
            [vec![(z, with_z)], below]
        };

        for (group, tgt) in groups.iter().zip([&first, &second]) {
            if group.is_empty() {
                continue;
            }
            if tgt.root_images.is_empty() {
                return Ok(plan);
            }
            let forest = RootedForest::from_subtrees(t, group)?;
            let mut targets = EmbedConstraints::none();
            for &r in forest.roots() {
                targets = targets.require(r, tgt.root_images.clone());
            }
            let inner = budget
                .remaining(started.elapsed(), plan.nodes)
                .min(Budget::nodes(INNER_NODE_CAP));
            let v = match tgt.side {
                Some(side) => forest_embed_component(&forest, tgt.comp, side, &targets, inner)?,
                None => embed_forest_anywhere(&forest, tgt.comp, &targets, inner)?,
            };
            plan.nodes += v.nodes_explored;
            let Some(w) = v.witness() else {
                return Ok(plan);
            };
            for (i, &h) in w.map.iter().enumerate() {
                map[forest.labels()[i]] = h;
            }
        }
        if map.iter().all(|&h| h != UNPLACED) {
            plan.map = Some(map);
        }
        Ok(plan)
    }
}
