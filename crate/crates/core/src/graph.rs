//! Undirected simple graphs with dense `0..n` vertex ids, and the elementary
//! computations the rest of the crate is built on.
//!
//! Neighbor lists are kept sorted ascending and every iteration order in this
//! module is ascending, so all downstream traces are deterministic.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Role label attached to a vertex by the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    #[serde(rename = "hub")]
    Hub,
    A1,
    B1,
    A2,
    B2,
    #[serde(rename = "clique")]
    Clique,
    #[serde(rename = "path")]
    Path,
    #[serde(rename = "leaf")]
    Leaf,
    #[serde(rename = "untagged")]
    Untagged,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Hub => "hub",
            Role::A1 => "A1",
            Role::B1 => "B1",
            Role::A2 => "A2",
            Role::B2 => "B2",
            Role::Clique => "clique",
            Role::Path => "path",
            Role::Leaf => "leaf",
            Role::Untagged => "untagged",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    tags: BTreeMap<usize, Role>,
}

/// Minimum degree, maximum degree and the smallest vertex attaining the maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub argmax: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    /// The side containing the smallest vertex of the component.
    pub side0: Vec<usize>,
    pub side1: Vec<usize>,
}

impl Bipartition {
    pub fn side_of(&self, v: usize) -> Option<usize> {
        if self.side0.binary_search(&v).is_ok() {
            Some(0)
        } else if self.side1.binary_search(&v).is_ok() {
            Some(1)
        } else {
            None
        }
    }

    pub fn side(&self, which: usize) -> &[usize] {
        if which == 0 {
            &self.side0
        } else {
            &self.side1
        }
    }
}

/// A connected component. `vertices` are ids of the parent graph (ascending);
/// `induced` is re-indexed so that local id `i` is `vertices[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub induced: SimpleGraph,
    pub bipartition: Option<Bipartition>,
}

impl Component {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn local_id(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }
}

/// Result of [`SimpleGraph::induced_subgraph`].
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: SimpleGraph,
    /// `new_to_old[i]` is the parent-graph id of local vertex `i`.
    pub new_to_old: Vec<usize>,
    old_to_new: Vec<Option<usize>>,
}

impl InducedSubgraph {
    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }
}

impl SimpleGraph {
    /// Builds a graph on `0..n` from an edge list. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(SimpleGraph {
            adj,
            tags: BTreeMap::new(),
        })
    }

    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            tags: BTreeMap::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        SimpleGraph {
            adj: (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect(),
            tags: BTreeMap::new(),
        }
    }

    pub fn path(edges: usize) -> Self {
        let list: Vec<_> = (0..edges).map(|i| (i, i + 1)).collect();
        SimpleGraph::new(edges + 1, &list).expect("path edges are in range")
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParams(format!("cycle needs n >= 3, got {n}")));
        }
        let list: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::new(n, &list)
    }

    pub fn with_tags(mut self, tags: BTreeMap<usize, Role>) -> Result<Self> {
        if let Some((&v, _)) = tags.iter().find(|(&v, _)| v >= self.n()) {
            return Err(Error::VertexOutOfRange { v, n: self.n() });
        }
        self.tags = tags;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn tags(&self) -> &BTreeMap<usize, Role> {
        &self.tags
    }

    pub fn tag(&self, v: usize) -> Role {
        self.tags.get(&v).copied().unwrap_or(Role::Untagged)
    }

    pub fn vertices_with_tag(&self, role: Role) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.tag(v) == role).collect()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange { v, n: self.n() })
        } else {
            Ok(())
        }
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut stats = DegreeStats {
            min: usize::MAX,
            max: 0,
            argmax: 0,
        };
        for v in 0..self.n() {
            let d = self.degree(v);
            stats.min = stats.min.min(d);
            if d > stats.max {
                stats.max = d;
                stats.argmax = v;
            }
        }
        Ok(stats)
    }

    pub fn components(&self) -> Vec<Component> {
        self.components_within(&vec![true; self.n()])
    }

    /// Connected components of the subgraph induced by `{v : keep[v]}`,
    /// ordered by smallest vertex id. Vertex ids in the result are ids of `self`.
    pub fn components_within(&self, keep: &[bool]) -> Vec<Component> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut color = vec![0u8; n];
        let mut out = Vec::new();
        for start in 0..n {
            if !keep[start] || seen[start] {
                continue;
            }
            let mut verts = vec![start];
            let mut bipartite = true;
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !keep[w] {
                        continue;
                    }
                    if !seen[w] {
                        seen[w] = true;
                        color[w] = 1 - color[u];
                        verts.push(w);
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        bipartite = false;
                    }
                }
            }
            verts.sort_unstable();
            let bipartition = bipartite.then(|| {
                let (side0, side1) = verts.iter().partition(|&&v| color[v] == color[start]);
                Bipartition { side0, side1 }
            });
            let induced = self
                .induced_subgraph(&verts)
                .expect("component vertices are in range")
                .graph;
            out.push(Component {
                vertices: verts,
                induced,
                bipartition,
            });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Shortest-path edge counts from `src`; `None` marks unreachable vertices.
    pub fn distance_bfs(&self, src: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(src)?;
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Subgraph induced by `subset` (any order, duplicates ignored). Local ids
    /// follow ascending parent id; tags are carried over.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<InducedSubgraph> {
        let n = self.n();
        let mut keep: Vec<usize> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&v) = keep.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { v, n });
        }
        let mut old_to_new = vec![None; n];
        for (i, &v) in keep.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| old_to_new[w])
                    .collect::<Vec<_>>()
            })
            .collect();
        let tags = self
            .tags
            .iter()
            .filter_map(|(&v, &r)| old_to_new[v].map(|i| (i, r)))
            .collect();
        Ok(InducedSubgraph {
            graph: SimpleGraph { adj, tags },
            new_to_old: keep,
            old_to_new,
        })
    }

    /// Graph obtained by adding the given edges (deduplicated).
    pub fn with_extra_edges(&self, extra: &[(usize, usize)]) -> Result<Self> {
        let mut edges = self.edges();
        edges.extend_from_slice(extra);
        let g = SimpleGraph::new(self.n(), &edges)?;
        Ok(SimpleGraph {
            adj: g.adj,
            tags: self.tags.clone(),
        })
    }
}

/// A simple graph certified connected and acyclic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeGraph {
    graph: SimpleGraph,
    root: Option<usize>,
}

impl TreeGraph {
    pub fn new(graph: SimpleGraph, root: Option<usize>) -> Result<Self> {
        let n = graph.n();
        if n == 0 {
            return Err(Error::NotATree("no vertices".into()));
        }
        if graph.edge_count() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} edges on {} vertices",
                graph.edge_count(),
                n
            )));
        }
        if !graph.is_connected() {
            return Err(Error::NotATree("disconnected".into()));
        }
        if let Some(r) = root {
            graph.check_vertex(r)?;
        }
        Ok(TreeGraph { graph, root })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        TreeGraph::new(SimpleGraph::new(n, edges)?, None)
    }

    pub fn path(edges: usize) -> Self {
        TreeGraph {
            graph: SimpleGraph::path(edges),
            root: None,
        }
    }

    pub fn star(leaves: usize) -> Self {
        let list: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        TreeGraph {
            graph: SimpleGraph::new(leaves + 1, &list).expect("star edges are in range"),
            root: Some(0),
        }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn into_graph(self) -> SimpleGraph {
        self.graph
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Number of edges (the `k` of a k-edge tree).
    pub fn edge_count(&self) -> usize {
        self.graph.n() - 1
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.graph.degree(v)).max().unwrap_or(0)
    }

    /// BFS order from `root` together with the parent of each vertex
    /// (`None` for the root). Children are visited in ascending id order.
    pub fn bfs_from(&self, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
        let n = self.n();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in self.graph.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        (order, parent)
    }
}
