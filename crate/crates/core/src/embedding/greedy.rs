//! The folklore greedy: with minimum degree at least `k`, every vertex's
//! image always has a free neighbor left for the next child.

use std::time::Instant;

use crate::decomposition::find_separator;
use crate::graph::{SimpleGraph, TreeGraph};

use super::{EmbedVerdict, Embedding, Stage, Verdict};

pub(crate) const UNPLACED: usize = usize::MAX;

/// Places `order` (every vertex after its parent) without backtracking.
/// A vertex whose parent is `None` takes the first free host in
/// `anchors(v)`; any other vertex takes the smallest-id free neighbor of its
/// parent's image that `admits(v, h)`. Returns the number of placements, or
/// `None` on a stall (leaving `map`/`used` partially filled).
pub(crate) fn place_in_order(
    g: &SimpleGraph,
    order: &[usize],
    parent: &[Option<usize>],
    anchors: &dyn Fn(usize) -> Vec<usize>,
    admits: &dyn Fn(usize, usize) -> bool,
    used: &mut [bool],
    map: &mut [usize],
) -> Option<u64> {
    let mut placed = 0;
    for &v in order {
        let pick = match parent[v] {
            None => anchors(v).into_iter().find(|&h| !used[h] && admits(v, h)),
            Some(p) => {
                let hp = map[p];
                debug_assert_ne!(hp, UNPLACED, "parent placed first");
                g.neighbors(hp).iter().copied().find(|&h| !used[h] && admits(v, h))
            }
        }?;
        used[pick] = true;
        map[v] = pick;
        placed += 1;
    }
    Some(placed)
}

/// BFS from the tree's centroid; each vertex goes to the smallest-id free
/// neighbor of its parent's image. Host roots are tried in descending degree,
/// then ascending id. Never reports `NotEmbedded`.
pub fn greedy_min_degree_embed(t: &TreeGraph, g: &SimpleGraph) -> EmbedVerdict {
    let started = Instant::now();
    if t.n() > g.n() {
        return EmbedVerdict::new(Verdict::Unknown, Stage::Greedy, started, 0);
    }
    let root = match find_separator(t) {
        Ok(s) => s.separator,
        Err(_) => 0,
    };
    let (order, parent) = t.bfs_from(root);
    let mut hosts: Vec<usize> = (0..g.n()).collect();
    hosts.sort_by_key(|&h| (std::cmp::Reverse(g.degree(h)), h));
    let need = t.graph().degree(root);

    let mut nodes = 0;
    let mut used = vec![false; g.n()];
    let mut map = vec![UNPLACED; t.n()];
    for &r in hosts.iter().take_while(|&&r| g.degree(r) >= need) {
        used.iter_mut().for_each(|u| *u = false);
        map.iter_mut().for_each(|m| *m = UNPLACED);
        let anchors = |_| vec![r];
        match place_in_order(g, &order, &parent, &anchors, &|_, _| true, &mut used, &mut map) {
            Some(placed) => {
                nodes += placed;
                let verdict = Verdict::Embedded(Embedding { map });
                return EmbedVerdict::new(verdict, Stage::Greedy, started, nodes);
            }
            None => nodes += map.iter().filter(|&&m| m != UNPLACED).count() as u64,
        }
    }
    EmbedVerdict::new(Verdict::Unknown, Stage::Greedy, started, nodes)
}
