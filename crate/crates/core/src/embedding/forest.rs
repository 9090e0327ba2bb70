//! Embedding a rooted forest into one component of the host, with roots sent
//! to prescribed sets and (for bipartite components) depth parity fixing the
//! side of every vertex.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Component, SimpleGraph, TreeGraph};

use super::exact::{exact_embed_with, ExactOptions};
use super::greedy::{place_in_order, UNPLACED};
use super::{Budget, EmbedConstraints, EmbedVerdict, Embedding, Stage, Verdict};

/// A forest with one designated root per component. `labels[i]` is the
/// caller's name for local vertex `i` (a tree vertex, typically).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedForest {
    graph: SimpleGraph,
    roots: Vec<usize>,
    labels: Vec<usize>,
}

/// Pigeonhole witness: some depth class of the forest is larger than the
/// side of the host component it must occupy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CapacityCertificate {
    /// Sizes of the even-depth and odd-depth classes.
    pub class_sizes: [usize; 2],
    /// Sizes of the host sides receiving class 0 and class 1.
    pub side_sizes: [usize; 2],
    pub overflowing_class: usize,
}

impl RootedForest {
    pub fn new(graph: SimpleGraph, roots: Vec<usize>) -> Result<Self> {
        let labels = (0..graph.n()).collect();
        Self::checked(graph, roots, labels)
    }

    /// The forest induced by disjoint vertex sets of `t`, each given with its
    /// root. Local ids follow the concatenation order of the parts.
    pub fn from_subtrees(t: &TreeGraph, parts: &[(usize, Vec<usize>)]) -> Result<Self> {
        let labels: Vec<usize> = parts.iter().flat_map(|(_, vs)| vs.iter().copied()).collect();
        let mut local = vec![UNPLACED; t.n()];
        for (i, &v) in labels.iter().enumerate() {
            t.graph().check_vertex(v)?;
            if local[v] != UNPLACED {
                return Err(Error::InvalidParams(format!("vertex {v} appears in two parts")));
            }
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in labels.iter().enumerate() {
            for &w in t.graph().neighbors(v) {
                if local[w] != UNPLACED && i < local[w] {
                    edges.push((i, local[w]));
                }
            }
        }
        let graph = SimpleGraph::new(labels.len(), &edges)?;
        let roots = parts
            .iter()
            .map(|(r, _)| {
                Some(local[*r]).filter(|&l| l != UNPLACED).ok_or_else(|| {
                    Error::InvalidParams(format!("root {r} is not in its part"))
                })
            })
            .collect::<Result<_>>()?;
        Self::checked(graph, roots, labels)
    }

    fn checked(graph: SimpleGraph, roots: Vec<usize>, labels: Vec<usize>) -> Result<Self> {
        for &r in &roots {
            graph.check_vertex(r)?;
        }
        let comps = graph.components();
        if graph.edge_count() + comps.len() != graph.n() {
            return Err(Error::NotATree("forest contains a cycle".into()));
        }
        for c in &comps {
            let inside = roots.iter().filter(|&&r| c.contains(r)).count();
            if inside != 1 {
                return Err(Error::InvalidParams(format!(
                    "forest component containing {} has {inside} roots",
                    c.vertices[0]
                )));
            }
        }
        Ok(RootedForest { graph, roots, labels })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Level order from the roots, the parent of each vertex, and its depth.
    fn levels(&self) -> (Vec<usize>, Vec<Option<usize>>, Vec<usize>) {
        let n = self.n();
        let mut parent = vec![None; n];
        let mut depth = vec![UNPLACED; n];
        let mut order = self.roots.clone();
        for &r in &self.roots {
            depth[r] = 0;
        }
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in self.graph.neighbors(u) {
                if depth[w] == UNPLACED {
                    depth[w] = depth[u] + 1;
                    parent[w] = Some(u);
                    order.push(w);
                }
            }
        }
        (order, parent, depth)
    }

    /// Sizes of the even- and odd-depth classes.
    pub fn class_sizes(&self) -> [usize; 2] {
        let (_, _, depth) = self.levels();
        let odd = depth.iter().filter(|&&d| d % 2 == 1).count();
        [self.n() - odd, odd]
    }
}

/// Embeds `forest` into the bipartite component `comp`, sending even-depth
/// vertices to side `class0_side` and odd-depth vertices to the other side.
/// `targets` is keyed by forest-local ids and lists host ids of `comp`.
///
/// Tries a level-order greedy first, then the exact search restricted to
/// `comp`. A class larger than its side yields `NotEmbedded` with a
/// [`CapacityCertificate`]; an exhausted budget yields `Unknown`.
pub fn forest_embed_component(
    forest: &RootedForest,
    comp: &Component,
    class0_side: usize,
    targets: &EmbedConstraints,
    budget: Budget,
) -> Result<EmbedVerdict> {
    let started = Instant::now();
    let bp = comp.bipartition.as_ref().ok_or_else(|| {
        Error::InvalidParams("forest_embed_component needs a bipartite component".into())
    })?;
    if class0_side > 1 {
        return Err(Error::InvalidParams(format!("side must be 0 or 1, got {class0_side}")));
    }
    let class_sizes = forest.class_sizes();
    let side_sizes = [bp.side(class0_side).len(), bp.side(1 - class0_side).len()];
    if let Some(overflowing_class) = (0..2).find(|&c| class_sizes[c] > side_sizes[c]) {
        let mut v = EmbedVerdict::new(Verdict::NotEmbedded, Stage::Forest, started, 0);
        v.certificate = Some(CapacityCertificate {
            class_sizes,
            side_sizes,
            overflowing_class,
        });
        return Ok(v);
    }
    embed_forest(forest, comp, Some(class0_side), targets, budget, started)
}

/// Same placement without side rules; works for any component.
pub(crate) fn embed_forest_anywhere(
    forest: &RootedForest,
    comp: &Component,
    targets: &EmbedConstraints,
    budget: Budget,
) -> Result<EmbedVerdict> {
    embed_forest(forest, comp, None, targets, budget, Instant::now())
}

fn embed_forest(
    forest: &RootedForest,
    comp: &Component,
    class0_side: Option<usize>,
    targets: &EmbedConstraints,
    budget: Budget,
    started: Instant,
) -> Result<EmbedVerdict> {
    let fn_ = forest.n();
    let cn = comp.order();
    targets.validate(fn_, usize::MAX)?;
    let mut local_targets = EmbedConstraints::none();
    for (&v, hosts) in &targets.required_images {
        let local: Vec<usize> = hosts
            .iter()
            .map(|&h| {
                comp.local_id(h).ok_or_else(|| {
                    Error::InvalidConstraints(format!("target {h} lies outside the component"))
                })
            })
            .collect::<Result<_>>()?;
        local_targets = local_targets.require(v, local);
    }
    if fn_ > cn {
        return Ok(EmbedVerdict::new(Verdict::NotEmbedded, Stage::Forest, started, 0));
    }

    // side of each local host vertex, relative to the side receiving class 0
    let host_class: Option<Vec<usize>> = class0_side.map(|s| {
        let bp = comp.bipartition.as_ref().expect("checked by caller");
        comp.vertices
            .iter()
            .map(|&h| usize::from(bp.side_of(h) != Some(s)))
            .collect()
    });
    let (order, parent, depth) = forest.levels();
    let masks = local_targets.masks(fn_, cn);
    let admits = |v: usize, h: usize| {
        host_class.as_ref().is_none_or(|hc| hc[h] == depth[v] % 2)
            && masks[v].as_ref().is_none_or(|m| m[h])
            && comp.induced.degree(h) >= forest.graph.degree(v)
    };
    let anchors = |v: usize| match local_targets.get(v) {
        Some(hs) => {
            let mut hs = hs.to_vec();
            hs.sort_unstable();
            hs
        }
        None => (0..cn).collect(),
    };

    let host = &comp.induced;
    let mut used = vec![false; cn];
    let mut map = vec![UNPLACED; fn_];
    if let Some(placed) = place_in_order(host, &order, &parent, &anchors, &admits, &mut used, &mut map) {
        let map = map.iter().map(|&h| comp.vertices[h]).collect();
        return Ok(EmbedVerdict::new(
            Verdict::Embedded(Embedding { map }),
            Stage::Forest,
            started,
            placed,
        ));
    }

    // Exact fallback: a virtual root joined to every forest root, mapped onto
    // a virtual host vertex joined to every admissible root image.
    let rho = fn_;
    let mut tree_edges = forest.graph.edges();
    tree_edges.extend(forest.roots.iter().map(|&r| (r, rho)));
    let tree = TreeGraph::from_edges(fn_ + 1, &tree_edges)?;
    let rho_img = cn;
    let root_images: Vec<bool> = (0..cn).map(|h| forest.roots.iter().any(|&r| admits(r, h))).collect();
    let mut host_edges = host.edges();
    host_edges.extend((0..cn).filter(|&h| root_images[h]).map(|h| (h, rho_img)));
    let host_ext = SimpleGraph::new(cn + 1, &host_edges)?;
    let mut constraints = EmbedConstraints::none().require(rho, vec![rho_img]);
    for (v, mask) in masks.iter().enumerate().take(fn_) {
        if class0_side.is_some() || mask.is_some() {
            let allowed: Vec<usize> = (0..cn).filter(|&h| admits(v, h)).collect();
            if allowed.is_empty() {
                return Ok(EmbedVerdict::new(Verdict::NotEmbedded, Stage::Forest, started, 0));
            }
            constraints = constraints.require(v, allowed);
        }
    }
    let exact = exact_embed_with(
        &tree,
        &host_ext,
        &constraints,
        ExactOptions {
            budget: budget.remaining(started.elapsed(), 0),
            ..Default::default()
        },
    )?;
    let verdict = match exact.verdict {
        Verdict::Embedded(e) => Verdict::Embedded(Embedding {
            map: e.map[..fn_].iter().map(|&h| comp.vertices[h]).collect(),
        }),
        Verdict::NotEmbedded => Verdict::NotEmbedded,
        Verdict::Timeout | Verdict::Unknown => Verdict::Unknown,
    };
    Ok(EmbedVerdict::new(verdict, Stage::Forest, started, exact.nodes_explored))
}
