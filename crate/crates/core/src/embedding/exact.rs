//! Complete backtracking search for an injective, edge-preserving map.
//!
//! Tree vertices are placed in BFS order from a centroid, each one onto a
//! neighbor of its parent's image. Host candidates are tried in descending
//! degree, then ascending id. Pruning:
//!
//! * host degree must cover tree degree, and constraint sets are honoured;
//! * the root's host component must be large enough, side by side when it is
//!   bipartite;
//! * consecutive leaf siblings (same parent, same constraints) take ascending
//!   host ids;
//! * after every placement, the not-yet-placed children of placed vertices
//!   must admit a system of distinct representatives among the free
//!   neighbors of their parents' images (checked by bipartite matching).

use std::time::Instant;

use crate::decomposition::find_separator;
use crate::error::Result;
use crate::graph::{SimpleGraph, TreeGraph};

use super::{Budget, EmbedConstraints, EmbedVerdict, Embedding, Stage, Verdict};

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug)]
pub struct ExactOptions {
    pub budget: Budget,
    /// Force ascending images on interchangeable leaf siblings.
    pub symmetry_breaking: bool,
    /// Run the frontier matching check after each placement.
    pub frontier_matching: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            budget: Budget::unlimited(),
            symmetry_breaking: true,
            frontier_matching: true,
        }
    }
}

pub fn exact_embed(
    t: &TreeGraph,
    g: &SimpleGraph,
    constraints: &EmbedConstraints,
    budget: Budget,
) -> Result<EmbedVerdict> {
    exact_embed_with(
        t,
        g,
        constraints,
        ExactOptions {
            budget,
            ..Default::default()
        },
    )
}

pub fn exact_embed_with(
    t: &TreeGraph,
    g: &SimpleGraph,
    constraints: &EmbedConstraints,
    opts: ExactOptions,
) -> Result<EmbedVerdict> {
    constraints.validate(t.n(), g.n())?;
    let started = Instant::now();
    if t.n() > g.n() {
        return Ok(EmbedVerdict::new(Verdict::NotEmbedded, Stage::Exact, started, 0));
    }
    let root = if t.n() == 1 { 0 } else { find_separator(t)?.separator };
    let mut search = Search::new(t, g, constraints, root, opts, started);
    let found = search.extend(0);
    let verdict = if found {
        let mut map = vec![0; t.n()];
        for (i, &v) in search.order.iter().enumerate() {
            map[v] = search.img[i];
        }
        Verdict::Embedded(Embedding { map })
    } else if search.aborted {
        Verdict::Timeout
    } else {
        Verdict::NotEmbedded
    };
    Ok(EmbedVerdict::new(verdict, Stage::Exact, started, search.nodes))
}

struct Search<'a> {
    host: &'a SimpleGraph,
    order: Vec<usize>,
    parent_pos: Vec<usize>,
    need_deg: Vec<usize>,
    masks: Vec<Option<Vec<bool>>>,
    prev_leaf: Vec<Option<usize>>,
    /// Positions `i+1 .. frontier_end[i]` are exactly the unplaced vertices
    /// whose parent is placed once positions `0..=i` are.
    frontier_end: Vec<usize>,
    by_degree: Vec<Vec<usize>>,
    root_cands: Vec<usize>,
    comp_of: Vec<usize>,
    comp_size: Vec<usize>,
    comp_sides: Vec<Option<[usize; 2]>>,
    side_of: Vec<usize>,
    parity_counts: [usize; 2],
    used: Vec<bool>,
    img: Vec<usize>,
    matched: Vec<usize>,
    seen: Vec<u32>,
    stamp: u32,
    opts: ExactOptions,
    started: Instant,
    nodes: u64,
    aborted: bool,
}

impl<'a> Search<'a> {
    fn new(
        t: &TreeGraph,
        host: &'a SimpleGraph,
        constraints: &EmbedConstraints,
        root: usize,
        opts: ExactOptions,
        started: Instant,
    ) -> Self {
        let tn = t.n();
        let hn = host.n();
        let (order, parent) = t.bfs_from(root);
        let mut pos = vec![0; tn];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let parent_pos: Vec<usize> = order
            .iter()
            .map(|&v| parent[v].map_or(NONE, |p| pos[p]))
            .collect();
        let need_deg = order.iter().map(|&v| t.graph().degree(v)).collect();
        let vertex_masks = constraints.masks(tn, hn);
        let masks = order.iter().map(|&v| vertex_masks[v].clone()).collect();

        let mut prev_leaf = vec![None; tn];
        let mut last_leaf_child = vec![NONE; tn];
        for i in 1..tn {
            let v = order[i];
            if t.graph().degree(v) != 1 {
                continue;
            }
            let p = parent_pos[i];
            let j = last_leaf_child[p];
            if j != NONE && constraints.get(order[j]) == constraints.get(v) {
                prev_leaf[i] = Some(j);
            }
            last_leaf_child[p] = i;
        }

        let mut frontier_end = vec![0; tn];
        let mut last_child = 0;
        for (i, end) in frontier_end.iter_mut().enumerate() {
            while last_child + 1 < tn && parent_pos[last_child + 1] <= i {
                last_child += 1;
            }
            *end = (last_child + 1).max(i + 1);
        }

        let key = |h: &usize| (std::cmp::Reverse(host.degree(*h)), *h);
        let by_degree = (0..hn)
            .map(|h| {
                let mut l = host.neighbors(h).to_vec();
                l.sort_by_key(key);
                l
            })
            .collect();
        let mut root_cands: Vec<usize> = (0..hn).collect();
        root_cands.sort_by_key(key);

        let comps = host.components();
        let mut comp_of = vec![0; hn];
        let mut side_of = vec![0; hn];
        let mut comp_size = Vec::new();
        let mut comp_sides = Vec::new();
        for (ci, c) in comps.iter().enumerate() {
            for &v in &c.vertices {
                comp_of[v] = ci;
            }
            comp_size.push(c.order());
            comp_sides.push(c.bipartition.as_ref().map(|bp| {
                for &v in &bp.side1 {
                    side_of[v] = 1;
                }
                [bp.side0.len(), bp.side1.len()]
            }));
        }

        let depth = t.graph().distance_bfs(root).expect("root is a tree vertex");
        let mut parity_counts = [0; 2];
        for d in depth.into_iter().flatten() {
            parity_counts[d % 2] += 1;
        }

        Search {
            host,
            order,
            parent_pos,
            need_deg,
            masks,
            prev_leaf,
            frontier_end,
            by_degree,
            root_cands,
            comp_of,
            comp_size,
            comp_sides,
            side_of,
            parity_counts,
            used: vec![false; hn],
            img: vec![NONE; tn],
            matched: vec![NONE; hn],
            seen: vec![0; hn],
            stamp: 0,
            opts,
            started,
            nodes: 0,
            aborted: false,
        }
    }

    fn out_of_budget(&self) -> bool {
        if let Some(max) = self.opts.budget.max_nodes {
            if self.nodes > max {
                return true;
            }
        }
        if let Some(limit) = self.opts.budget.time_limit {
            if self.nodes % 256 == 1 && self.started.elapsed() >= limit {
                return true;
            }
        }
        false
    }

    fn root_fits(&self, h: usize) -> bool {
        let c = self.comp_of[h];
        if self.comp_size[c] < self.order.len() {
            return false;
        }
        match self.comp_sides[c] {
            Some(sides) => {
                let s = self.side_of[h];
                self.parity_counts[0] <= sides[s] && self.parity_counts[1] <= sides[1 - s]
            }
            None => true,
        }
    }

    fn admissible(&self, i: usize, h: usize) -> bool {
        !self.used[h]
            && self.host.degree(h) >= self.need_deg[i]
            && self.masks[i].as_ref().is_none_or(|m| m[h])
    }

    fn extend(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let count = if i == 0 {
            self.root_cands.len()
        } else {
            self.by_degree[self.img[self.parent_pos[i]]].len()
        };
        for idx in 0..count {
            let h = if i == 0 {
                self.root_cands[idx]
            } else {
                self.by_degree[self.img[self.parent_pos[i]]][idx]
            };
            if !self.admissible(i, h) {
                continue;
            }
            if self.opts.symmetry_breaking {
                if let Some(j) = self.prev_leaf[i] {
                    if h < self.img[j] {
                        continue;
                    }
                }
            }
            if i == 0 && !self.root_fits(h) {
                continue;
            }
            self.nodes += 1;
            if self.out_of_budget() {
                self.aborted = true;
                return false;
            }
            self.used[h] = true;
            self.img[i] = h;
            if (!self.opts.frontier_matching || self.frontier_ok(i)) && self.extend(i + 1) {
                return true;
            }
            self.used[h] = false;
            self.img[i] = NONE;
            if self.aborted {
                return false;
            }
        }
        false
    }

    /// Can every unplaced child of a placed vertex still get its own free
    /// neighbor of its parent's image?
    fn frontier_ok(&mut self, i: usize) -> bool {
        let slots = (i + 1)..self.frontier_end[i];
        if slots.is_empty() {
            return true;
        }
        let mut touched = Vec::new();
        let mut ok = true;
        for s in slots {
            self.stamp = self.stamp.wrapping_add(1);
            if self.stamp == 0 {
                self.seen.iter_mut().for_each(|x| *x = 0);
                self.stamp = 1;
            }
            if !self.augment(s, &mut touched) {
                ok = false;
                break;
            }
        }
        for h in touched {
            self.matched[h] = NONE;
        }
        ok
    }

    fn augment(&mut self, slot: usize, touched: &mut Vec<usize>) -> bool {
        let anchor = self.img[self.parent_pos[slot]];
        for idx in 0..self.host.degree(anchor) {
            let h = self.host.neighbors(anchor)[idx];
            if self.seen[h] == self.stamp || !self.admissible(slot, h) {
                continue;
            }
            self.seen[h] = self.stamp;
            let holder = self.matched[h];
            if holder == NONE || self.augment(holder, touched) {
                if holder == NONE {
                    touched.push(h);
                }
                self.matched[h] = slot;
                return true;
            }
        }
        false
    }
}
