//! Exact vertex connectivity through unit-capacity flows on the split graph.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Residual network in which every vertex `v` is split into `v_in = 2v` and
/// `v_out = 2v + 1` joined by a unit arc, so that arc-disjoint paths in the
/// network are internally vertex-disjoint paths in the graph.
struct SplitNetwork {
    // (head, residual capacity, index of reverse arc)
    arcs: Vec<Vec<(usize, u32, usize)>>,
}

impl SplitNetwork {
    fn new(g: &SimpleGraph, s: usize, t: usize) -> Self {
        let big = g.n() as u32 + 1;
        let mut net = SplitNetwork {
            arcs: vec![Vec::new(); 2 * g.n()],
        };
        for v in 0..g.n() {
            let cap = if v == s || v == t { big } else { 1 };
            net.add_arc(2 * v, 2 * v + 1, cap);
        }
        for (u, v) in g.edges() {
            net.add_arc(2 * u + 1, 2 * v, big);
            net.add_arc(2 * v + 1, 2 * u, big);
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push((to, cap, rev_from));
        self.arcs[to].push((from, 0, rev_to));
    }

    /// Augments along shortest paths until the flow reaches `cap` or no path remains.
    fn max_flow(&mut self, source: usize, sink: usize, cap: usize) -> usize {
        let mut flow = 0;
        while flow < cap {
            let mut pred: Vec<Option<(usize, usize)>> = vec![None; self.arcs.len()];
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            while let Some(u) = queue.pop_front() {
                for (i, &(w, c, _)) in self.arcs[u].iter().enumerate() {
                    if c > 0 && w != source && pred[w].is_none() {
                        pred[w] = Some((u, i));
                        if w == sink {
                            reached = true;
                            break;
                        }
                        queue.push_back(w);
                    }
                }
                if reached {
                    break;
                }
            }
            if !reached {
                break;
            }
            let mut w = sink;
            while let Some((u, i)) = pred[w] {
                let rev = self.arcs[u][i].2;
                self.arcs[u][i].1 -= 1;
                self.arcs[w][rev].1 += 1;
                w = u;
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths for non-adjacent
/// `s != t`, capped at `cap`.
pub fn local_connectivity(g: &SimpleGraph, s: usize, t: usize, cap: usize) -> Result<usize> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t || g.has_edge(s, t) {
        return Err(Error::InvalidParams(format!(
            "local connectivity needs distinct non-adjacent vertices, got {s} and {t}"
        )));
    }
    Ok(SplitNetwork::new(g, s, t).max_flow(2 * s + 1, 2 * t, cap))
}

/// Vertex connectivity κ(G), with κ(K_n) = n − 1.
///
/// Uses Even's reduction: some vertex among the first κ+1 lies outside a
/// minimum separator, so only pairs whose first member is one of those need a
/// flow computation.
pub fn vertex_connectivity(g: &SimpleGraph) -> Result<usize> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidParams(format!(
            "vertex connectivity needs n >= 2, got {n}"
        )));
    }
    let mut best = n - 1;
    let mut i = 0;
    while i <= best && i < n {
        for j in 0..n {
            if j == i || g.has_edge(i, j) {
                continue;
            }
            let k = local_connectivity(g, i, j, best)?;
            best = best.min(k);
            if best == 0 {
                return Ok(0);
            }
        }
        i += 1;
    }
    Ok(best)
}
