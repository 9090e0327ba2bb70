//! Deterministic generators for the extremal host graphs and the trees they
//! exclude.
//!
//! Vertex ids are laid out in fixed blocks: the hub `x` is vertex 0, followed
//! by `A1, B1, A2, B2` (or `A1, B1, C`), each block in ascending order. Every
//! generator re-derives δ and Δ from the built graph and compares them with the
//! closed form it is supposed to realize; a mismatch is reported as
//! [`Error::GeneratorBug`] instead of returning the graph.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Role, SimpleGraph, TreeGraph};
use crate::rational::{int, Rational};

/// Parameters `(ℓ, c, k)` of the extremal families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtremalParams {
    pub ell: usize,
    pub c: usize,
    pub k: usize,
}

impl ExtremalParams {
    pub fn new(ell: usize, c: usize, k: usize) -> Result<Self> {
        let fail = |msg: String| Err(Error::InvalidParams(msg));
        if ell < 3 || ell.is_multiple_of(2) {
            return fail(format!("ell must be odd and >= 3, got {ell}"));
        }
        if k == 0 || !k.is_multiple_of(ell) {
            return fail(format!("ell = {ell} must divide k = {k}"));
        }
        // Part sizes contain k/2; odd k would make them fractional.
        if !k.is_multiple_of(2) {
            return fail(format!("k must be even, got {k}"));
        }
        if c == 0 || c * ell * (ell + 1) > k {
            return fail(format!(
                "need 1 <= c <= k/(ell(ell+1)) = {}/{}, got c = {c}",
                k,
                ell * (ell + 1)
            ));
        }
        Ok(ExtremalParams { ell, c, k })
    }

    /// The canonical choice `k = c·ℓ(ℓ+1)`.
    pub fn with_c(ell: usize, c: usize) -> Result<Self> {
        ExtremalParams::new(ell, c, c * ell * (ell + 1))
    }

    /// `|A_i| = (ℓ−1)(k/ℓ − 1)`.
    pub fn a_size(&self) -> usize {
        (self.ell - 1) * (self.k / self.ell - 1)
    }

    /// `|B_i| = k/2 + (c−1)(ℓ+1)/2 − 1`.
    pub fn b_size(&self) -> usize {
        self.min_degree_closed_form() - 1
    }

    /// `|A_i|` for the matching variant: `(ℓ−1)(k/ℓ − 2)`.
    pub fn a_size_matched(&self) -> usize {
        (self.ell - 1) * (self.k / self.ell - 2)
    }

    pub fn clique_order(&self) -> usize {
        self.min_degree_closed_form()
    }

    /// `δ(H) = k/2 + (c−1)(ℓ+1)/2`, shared by the H and G families.
    pub fn min_degree_closed_form(&self) -> usize {
        self.k / 2 + (self.c - 1) * (self.ell + 1) / 2
    }

    /// `Δ(H) = 2(ℓ−1)(k/ℓ − 1)`.
    pub fn h_max_degree_closed_form(&self) -> usize {
        2 * self.a_size()
    }

    /// The published closed form for Δ of the G family,
    /// `(3ℓ−2)k/(2ℓ) + (c−3)(ℓ+1)/2 − 2`. It disagrees with the degree of the
    /// hub in the construction (`|A_1| + |C|`); kept only for reporting.
    pub fn g_max_degree_published(&self) -> Rational {
        let ell = self.ell as i64;
        Rational::new((3 * ell - 2) * self.k as i64, 2 * ell)
            + Rational::new((self.c as i64 - 3) * (ell + 1), 2)
            - 2
    }

    /// Δ of the G family as built: `deg(x) = |A_1| + |C|`.
    pub fn g_max_degree(&self) -> usize {
        self.a_size() + self.clique_order()
    }
}

/// Metadata describing how a graph file was produced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMeta {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parts: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stars: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leaf_counts: Option<Vec<usize>>,
}

impl GraphMeta {
    pub fn family(name: &str) -> Self {
        GraphMeta {
            family: name.to_string(),
            ..Default::default()
        }
    }

    fn extremal(name: &str, p: ExtremalParams, parts: &[(&str, usize)]) -> Self {
        GraphMeta {
            family: name.to_string(),
            ell: Some(p.ell),
            c: Some(p.c),
            k: Some(p.k),
            parts: parts.iter().map(|&(s, n)| (s.to_string(), n)).collect(),
            ..Default::default()
        }
    }

    pub fn params(&self) -> Option<ExtremalParams> {
        match (self.ell, self.c, self.k) {
            (Some(ell), Some(c), Some(k)) => ExtremalParams::new(ell, c, k).ok(),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedGraph {
    pub graph: SimpleGraph,
    pub meta: GraphMeta,
}

/// Consecutive id blocks with a role each.
struct Blocks {
    next: usize,
    tags: BTreeMap<usize, Role>,
}

impl Blocks {
    fn new() -> Self {
        Blocks {
            next: 0,
            tags: BTreeMap::new(),
        }
    }

    fn take(&mut self, len: usize, role: Role) -> std::ops::Range<usize> {
        let r = self.next..self.next + len;
        for v in r.clone() {
            self.tags.insert(v, role);
        }
        self.next += len;
        r
    }
}

fn complete_between(
    edges: &mut Vec<(usize, usize)>,
    left: std::ops::Range<usize>,
    right: std::ops::Range<usize>,
) {
    for u in left {
        edges.extend(right.clone().map(|v| (u, v)));
    }
}

fn clique_on(edges: &mut Vec<(usize, usize)>, block: std::ops::Range<usize>) {
    for u in block.clone() {
        edges.extend((u + 1..block.end).map(|v| (u, v)));
    }
}

fn check_degrees(graph: &SimpleGraph, family: &str, min: usize, max: usize) -> Result<()> {
    let stats = graph.degree_stats()?;
    if stats.min != min || stats.max != max {
        return Err(Error::GeneratorBug(format!(
            "{family}: built graph has (δ, Δ) = ({}, {}), closed form says ({min}, {max})",
            stats.min, stats.max
        )));
    }
    Ok(())
}

type Wings = (Blocks, Vec<(usize, usize)>, [std::ops::Range<usize>; 4]);

fn two_wings(a: usize, b: usize) -> Wings {
    let mut blocks = Blocks::new();
    let x = blocks.take(1, Role::Hub).start;
    let a1 = blocks.take(a, Role::A1);
    let b1 = blocks.take(b, Role::B1);
    let a2 = blocks.take(a, Role::A2);
    let b2 = blocks.take(b, Role::B2);
    let mut edges = Vec::new();
    edges.extend(a1.clone().chain(a2.clone()).map(|v| (x, v)));
    complete_between(&mut edges, a1.clone(), b1.clone());
    complete_between(&mut edges, a2.clone(), b2.clone());
    (blocks, edges, [a1, b1, a2, b2])
}

/// The host `H_{k,ℓ,c}`: two complete bipartite wings `(A_i, B_i)` and a hub
/// joined to `A_1 ∪ A_2`.
pub fn gen_h(p: ExtremalParams) -> Result<TaggedGraph> {
    let (a, b) = (p.a_size(), p.b_size());
    let (blocks, edges, _) = two_wings(a, b);
    let graph = SimpleGraph::new(blocks.next, &edges)?.with_tags(blocks.tags)?;
    check_degrees(&graph, "H", p.min_degree_closed_form(), p.h_max_degree_closed_form())?;
    Ok(TaggedGraph {
        graph,
        meta: GraphMeta::extremal("h", p, &[("A1", a), ("B1", b), ("A2", a), ("B2", b)]),
    })
}

/// `H'_{k,ℓ,c}`: the H construction with `|A_i| = (ℓ−1)(k/ℓ−2)` and the
/// matching `B_1[i]–B_2[i]`.
pub fn gen_h_prime(p: ExtremalParams) -> Result<TaggedGraph> {
    if p.k / p.ell < 3 {
        return Err(Error::InvalidParams(format!(
            "matched variant needs k/ell >= 3, got {}",
            p.k / p.ell
        )));
    }
    let (a, b) = (p.a_size_matched(), p.b_size());
    let (blocks, mut edges, [_, b1, _, b2]) = two_wings(a, b);
    edges.extend(b1.zip(b2));
    let graph = SimpleGraph::new(blocks.next, &edges)?.with_tags(blocks.tags)?;
    // hub: 2|A|, A-vertices: |B| + 1, B-vertices: |A| + 1
    let min = (a + 1).min(b + 1);
    let max = (2 * a).max(b + 1).max(a + 1);
    check_degrees(&graph, "H'", min, max)?;
    for v in graph.vertices_with_tag(Role::B1).into_iter().chain(graph.vertices_with_tag(Role::B2)) {
        if graph.degree(v) != a + 1 {
            return Err(Error::GeneratorBug(format!(
                "H': B-vertex {v} has degree {}, expected {}",
                graph.degree(v),
                a + 1
            )));
        }
    }
    Ok(TaggedGraph {
        graph,
        meta: GraphMeta::extremal("hprime", p, &[("A1", a), ("B1", b), ("A2", a), ("B2", b)]),
    })
}

/// `G_{k,ℓ,c}`: one wing `(A_1, B_1)`, a clique `C` of order `k/2 + (c−1)(ℓ+1)/2`,
/// and a hub joined to `A_1 ∪ C`.
pub fn gen_g(p: ExtremalParams) -> Result<TaggedGraph> {
    let (a, b, c) = (p.a_size(), p.b_size(), p.clique_order());
    let mut blocks = Blocks::new();
    let x = blocks.take(1, Role::Hub).start;
    let a1 = blocks.take(a, Role::A1);
    let b1 = blocks.take(b, Role::B1);
    let cl = blocks.take(c, Role::Clique);
    let mut edges: Vec<(usize, usize)> = a1.clone().chain(cl.clone()).map(|v| (x, v)).collect();
    complete_between(&mut edges, a1, b1);
    clique_on(&mut edges, cl);
    let graph = SimpleGraph::new(blocks.next, &edges)?.with_tags(blocks.tags)?;
    check_degrees(&graph, "G", p.min_degree_closed_form(), p.g_max_degree())?;
    Ok(TaggedGraph {
        graph,
        meta: GraphMeta::extremal("g", p, &[("A1", a), ("B1", b), ("C", c)]),
    })
}

/// Stars of the given orders whose centres are joined to a new root `v = 0`.
/// Centres get ids `1..=m`, then the leaves of each star in turn.
pub fn gen_broom(star_orders: &[usize]) -> Result<TreeGraph> {
    if star_orders.is_empty() {
        return Err(Error::InvalidParams("broom needs at least one star".into()));
    }
    if let Some(i) = star_orders.iter().position(|&o| o < 2) {
        return Err(Error::InvalidParams(format!(
            "star {i} has order {} < 2",
            star_orders[i]
        )));
    }
    let m = star_orders.len();
    let n = 1 + star_orders.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize)> = (1..=m).map(|c| (0, c)).collect();
    let mut tags = BTreeMap::from([(0, Role::Hub)]);
    let mut next = m + 1;
    for (i, &order) in star_orders.iter().enumerate() {
        for leaf in next..next + order - 1 {
            edges.push((i + 1, leaf));
            tags.insert(leaf, Role::Leaf);
        }
        next += order - 1;
    }
    let graph = SimpleGraph::new(n, &edges)?.with_tags(tags)?;
    TreeGraph::new(graph, Some(0))
}

/// `T_{k,ℓ}`: ℓ stars of order k/ℓ under a common root.
pub fn gen_broom_uniform(k: usize, ell: usize) -> Result<TreeGraph> {
    if ell == 0 || !k.is_multiple_of(ell) {
        return Err(Error::InvalidParams(format!("ell = {ell} must divide k = {k}")));
    }
    gen_broom(&vec![k / ell; ell])
}

/// `K_{n1,n2}` with the `n1` side first (tagged A1) and the `n2` side tagged B1.
pub fn gen_complete_bipartite(n1: usize, n2: usize) -> Result<TaggedGraph> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidParams(format!(
            "both sides must be nonempty, got ({n1}, {n2})"
        )));
    }
    let mut blocks = Blocks::new();
    let left = blocks.take(n1, Role::A1);
    let right = blocks.take(n2, Role::B1);
    let mut edges = Vec::new();
    complete_between(&mut edges, left, right);
    let graph = SimpleGraph::new(blocks.next, &edges)?.with_tags(blocks.tags)?;
    check_degrees(&graph, "K_{n1,n2}", n1.min(n2), n1.max(n2))?;
    let mut meta = GraphMeta::family("kbip");
    meta.parts = BTreeMap::from([("A1".into(), n1), ("B1".into(), n2)]);
    Ok(TaggedGraph { graph, meta })
}

/// A universal vertex (id 0) over `num_cliques` disjoint cliques of order
/// `clique_order`.
pub fn gen_cliques_apex(clique_order: usize, num_cliques: usize) -> Result<TaggedGraph> {
    if clique_order == 0 || num_cliques == 0 {
        return Err(Error::InvalidParams(format!(
            "clique order and count must be positive, got ({clique_order}, {num_cliques})"
        )));
    }
    let mut blocks = Blocks::new();
    let apex = blocks.take(1, Role::Hub).start;
    let mut edges = Vec::new();
    for _ in 0..num_cliques {
        let block = blocks.take(clique_order, Role::Clique);
        edges.extend(block.clone().map(|v| (apex, v)));
        clique_on(&mut edges, block);
    }
    let graph = SimpleGraph::new(blocks.next, &edges)?.with_tags(blocks.tags)?;
    check_degrees(&graph, "apex over cliques", clique_order, clique_order * num_cliques)?;
    let mut meta = GraphMeta::family("apex");
    meta.parts = BTreeMap::from([
        ("clique_order".into(), clique_order),
        ("num_cliques".into(), num_cliques),
    ]);
    Ok(TaggedGraph { graph, meta })
}

/// Path `v_0 … v_p` (ids `0..=p`) with `leaf_counts[i]` pendant leaves on `v_i`.
pub fn gen_caterpillar(path_edges: usize, leaf_counts: &[usize]) -> Result<TreeGraph> {
    if leaf_counts.len() != path_edges + 1 {
        return Err(Error::InvalidParams(format!(
            "need {} leaf counts for a path with {path_edges} edges, got {}",
            path_edges + 1,
            leaf_counts.len()
        )));
    }
    let mut edges: Vec<(usize, usize)> = (0..path_edges).map(|i| (i, i + 1)).collect();
    let mut tags: BTreeMap<usize, Role> = (0..=path_edges).map(|v| (v, Role::Path)).collect();
    let mut next = path_edges + 1;
    for (i, &count) in leaf_counts.iter().enumerate() {
        for leaf in next..next + count {
            edges.push((i, leaf));
            tags.insert(leaf, Role::Leaf);
        }
        next += count;
    }
    let graph = SimpleGraph::new(next, &edges)?.with_tags(tags)?;
    TreeGraph::new(graph, None)
}

/// A tree, its extremal host, and the parameters used.
#[derive(Clone, Debug)]
pub struct ExtremalInstance {
    pub tree: TreeGraph,
    pub host: TaggedGraph,
    pub params: ExtremalParams,
}

fn ceil_ratio(r: Rational) -> usize {
    r.ceil().to_integer() as usize
}

/// Witness for the "δ = k/2 is not enough" regime: `ℓ = 2⌈1/α⌉ − 1`,
/// `k = ℓ(ℓ+1)`, `c = 1`. Checks `δ(H) = k/2` and `Δ(H) ≥ 2(1−α)k` on the
/// built graph.
pub fn instance_for_alpha(alpha: Rational) -> Result<ExtremalInstance> {
    if alpha <= int(0) || alpha > Rational::new(1, 2) {
        return Err(Error::InvalidParams(format!("alpha must lie in (0, 1/2], got {alpha}")));
    }
    let ell = 2 * ceil_ratio(alpha.recip()) - 1;
    let params = ExtremalParams::new(ell, 1, ell * (ell + 1))?;
    let host = gen_h(params)?;
    let stats = host.graph.degree_stats()?;
    let k = params.k;
    if 2 * stats.min != k {
        return Err(Error::GeneratorBug(format!("δ = {} differs from k/2 = {k}/2", stats.min)));
    }
    if int(stats.max) < (int(1) - alpha) * int(2 * k) {
        return Err(Error::GeneratorBug(format!(
            "Δ = {} below 2(1 − {alpha})·{k}",
            stats.max
        )));
    }
    Ok(ExtremalInstance {
        tree: gen_broom_uniform(k, ell)?,
        host,
        params,
    })
}

/// Witness for the `(1 + 1/ℓ − γ)k/2`, `2(1 − 1/ℓ − γ)k` regime with the
/// smallest `c` such that `1/(cℓ) ≤ γ`, and `k = cℓ(ℓ+1)`.
pub fn instance_for_gamma(ell: usize, gamma: Rational) -> Result<ExtremalInstance> {
    if ell < 3 || ell.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("ell must be odd and >= 3, got {ell}")));
    }
    let inv_ell = Rational::new(1, ell as i64);
    if gamma <= int(0) || gamma > inv_ell {
        return Err(Error::InvalidParams(format!(
            "gamma must lie in (0, 1/{ell}], got {gamma}"
        )));
    }
    let c = ceil_ratio((gamma * int(ell)).recip());
    let params = ExtremalParams::with_c(ell, c)?;
    let host = gen_h(params)?;
    let stats = host.graph.degree_stats()?;
    let k = int(params.k);
    let min_needed = (int(1) + inv_ell - gamma) * k / 2;
    let max_needed = (int(1) - inv_ell - gamma) * k * 2;
    if int(stats.min) < min_needed || int(stats.max) < max_needed {
        return Err(Error::GeneratorBug(format!(
            "(δ, Δ) = ({}, {}) misses ({min_needed}, {max_needed})",
            stats.min, stats.max
        )));
    }
    Ok(ExtremalInstance {
        tree: gen_broom_uniform(params.k, ell)?,
        host,
        params,
    })
}

/// All valid `(ℓ, c, k)` with `k ≤ max_k`.
pub fn valid_params_up_to(max_k: usize) -> Vec<ExtremalParams> {
    let mut out = Vec::new();
    for ell in (3..=max_k).step_by(2) {
        for k in (ell..=max_k).step_by(ell) {
            for c in 1..=k / (ell * (ell + 1)) {
                if let Ok(p) = ExtremalParams::new(ell, c, k) {
                    out.push(p);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ell: usize, c: usize, k: usize) -> ExtremalParams {
        ExtremalParams::new(ell, c, k).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(ExtremalParams::new(4, 1, 20).is_err());
        assert!(ExtremalParams::new(3, 1, 13).is_err());
        assert!(ExtremalParams::new(3, 2, 12).is_err());
        assert!(ExtremalParams::new(3, 0, 12).is_err());
        assert!(ExtremalParams::new(3, 1, 15).is_err());
        assert!(ExtremalParams::new(3, 1, 12).is_ok());
    }

    #[test]
    fn h_small_cases() {
        let h = gen_h(p(3, 1, 12)).unwrap();
        assert_eq!(h.graph.n(), 23);
        assert_eq!(h.graph.edge_count(), 72);
        let s = h.graph.degree_stats().unwrap();
        assert_eq!((s.min, s.max, s.argmax), (6, 12, 0));
        assert_eq!((h.meta.parts["A1"], h.meta.parts["B1"]), (6, 5));

        let h = gen_h(p(3, 2, 24)).unwrap();
        let s = h.graph.degree_stats().unwrap();
        assert_eq!((h.graph.n(), s.min, s.max), (55, 14, 28));
        assert_eq!((h.meta.parts["A1"], h.meta.parts["B1"]), (14, 13));

        let q = p(5, 1, 30);
        let h = gen_h(q).unwrap();
        let s = h.graph.degree_stats().unwrap();
        assert_eq!((q.a_size(), q.b_size(), s.min, s.max), (20, 14, 15, 40));
    }

    #[test]
    fn h_sweep_and_shape() {
        let all = valid_params_up_to(200);
        assert!(all.len() > 20);
        for q in all {
            let h = gen_h(q).unwrap();
            let g = &h.graph;
            let s = g.degree_stats().unwrap();
            assert_eq!(s.min, q.min_degree_closed_form());
            assert_eq!(s.max, q.h_max_degree_closed_form());
            let mut hub_side = g.vertices_with_tag(Role::A1);
            hub_side.extend(g.vertices_with_tag(Role::A2));
            assert_eq!(g.neighbors(0), &hub_side[..]);
            for (u, v) in g.edges() {
                let wing = |r: Role| match r {
                    Role::A1 | Role::B1 => 1,
                    Role::A2 | Role::B2 => 2,
                    _ => 0,
                };
                let (a, b) = (wing(g.tag(u)), wing(g.tag(v)));
                assert!(a == 0 || b == 0 || a == b, "edge {u}-{v} joins the wings");
            }
        }
    }

    #[test]
    fn g_family() {
        let q = p(3, 1, 12);
        let g = gen_g(q).unwrap();
        let s = g.graph.degree_stats().unwrap();
        assert_eq!(g.graph.n(), 18);
        assert_eq!((g.meta.parts["A1"], g.meta.parts["B1"], g.meta.parts["C"]), (6, 5, 6));
        assert_eq!((s.min, s.max, s.argmax), (6, 12, 0));
        // the published closed form evaluates to 8 here
        assert_eq!(q.g_max_degree_published(), int(8));

        let g = gen_g(p(5, 1, 30)).unwrap();
        assert_eq!(g.meta.parts["C"], 15);
        assert_eq!(g.graph.degree_stats().unwrap().min, 15);
    }

    #[test]
    fn h_prime_family() {
        let h = gen_h_prime(p(3, 1, 12)).unwrap();
        assert_eq!(h.graph.n(), 19);
        assert_eq!((h.meta.parts["A1"], h.meta.parts["B1"]), (4, 5));
        let b1 = h.graph.vertices_with_tag(Role::B1);
        let b2 = h.graph.vertices_with_tag(Role::B2);
        let matching: Vec<_> = h
            .graph
            .edges()
            .into_iter()
            .filter(|&(u, v)| b1.contains(&u) && b2.contains(&v))
            .collect();
        assert_eq!(matching.len(), 5);
        let mut ends: Vec<_> = matching.iter().map(|e| e.1).collect();
        ends.sort();
        ends.dedup();
        assert_eq!(ends, b2);
        assert_eq!(h.graph.degree_stats().unwrap().min, 5);

        let h = gen_h_prime(p(3, 2, 24)).unwrap();
        assert_eq!((h.meta.parts["A1"], h.meta.parts["B1"]), (12, 13));
        let s = h.graph.degree_stats().unwrap();
        assert_eq!(s.min, 13);
        assert!(h.graph.vertices_with_tag(Role::B1).iter().all(|&v| h.graph.degree(v) == 13));
    }

    #[test]
    fn brooms() {
        let t = gen_broom(&[4, 4, 4]).unwrap();
        assert_eq!((t.n(), t.edge_count()), (13, 12));
        assert_eq!(t.graph().degree(0), 3);
        assert!((1..=3).all(|c| t.graph().degree(c) == 4));

        let t = gen_broom(&[2]).unwrap();
        assert_eq!(t.graph().edges(), vec![(0, 1), (1, 2)]);

        let t = gen_broom(&[6; 5]).unwrap();
        assert_eq!((t.n(), t.edge_count()), (31, 30));

        assert!(gen_broom(&[4, 1]).is_err());
        assert!(gen_broom(&[]).is_err());
    }

    #[test]
    fn uniform_broom_shape() {
        for (k, ell) in [(12, 3), (30, 5), (56, 7), (24, 3)] {
            let t = gen_broom_uniform(k, ell).unwrap();
            assert_eq!(t.edge_count(), k);
            assert_eq!(t.max_degree(), ell.max(k / ell));
            let keep: Vec<bool> = (0..t.n()).map(|v| v != 0).collect();
            let comps = t.graph().components_within(&keep);
            assert_eq!(comps.len(), ell);
            assert!(comps.iter().all(|c| c.order() == k / ell));
        }
    }

    #[test]
    fn bipartite_and_apex() {
        let b = gen_complete_bipartite(3, 3).unwrap();
        let s = b.graph.degree_stats().unwrap();
        assert_eq!((s.min, s.max, b.graph.edge_count()), (3, 3, 9));
        let b = gen_complete_bipartite(5, 20).unwrap();
        assert_eq!(b.graph.degree_stats().unwrap().min, 5);
        let b = gen_complete_bipartite(1, 1).unwrap();
        assert_eq!(b.graph.edges(), vec![(0, 1)]);
        assert!(gen_complete_bipartite(0, 2).is_err());

        let a = gen_cliques_apex(5, 3).unwrap();
        let s = a.graph.degree_stats().unwrap();
        assert_eq!((a.graph.n(), s.min, s.max), (16, 5, 15));
        let a = gen_cliques_apex(1, 2).unwrap();
        assert_eq!(a.graph.edges(), vec![(0, 1), (0, 2)]);
        let a = gen_cliques_apex(2, 4).unwrap();
        assert_eq!(a.graph.degree_stats().unwrap().max, 8);
        assert!(gen_cliques_apex(0, 2).is_err());
    }

    #[test]
    fn caterpillars() {
        let t = gen_caterpillar(4, &[0; 5]).unwrap();
        assert_eq!(t.graph().edges(), TreeGraph::path(4).graph().edges());
        let t = gen_caterpillar(6, &[1, 0, 1, 0, 1, 0, 1]).unwrap();
        assert_eq!(t.edge_count(), 10);
        let t = gen_caterpillar(2, &[3, 0, 3]).unwrap();
        assert_eq!(t.edge_count(), 8);
        assert!(gen_caterpillar(2, &[1, 1]).is_err());
    }

    #[test]
    fn alpha_instances() {
        let inst = instance_for_alpha(Rational::new(1, 2)).unwrap();
        assert_eq!((inst.params.ell, inst.params.k), (3, 12));
        let s = inst.host.graph.degree_stats().unwrap();
        assert_eq!((s.min, s.max), (6, 12));

        let inst = instance_for_alpha(Rational::new(3, 10)).unwrap();
        assert_eq!((inst.params.ell, inst.params.k), (7, 56));

        let inst = instance_for_alpha(Rational::new(49, 100)).unwrap();
        assert_eq!((inst.params.ell, inst.params.k), (5, 30));
        assert_eq!(inst.host.graph.degree_stats().unwrap().max, 40);

        assert!(instance_for_alpha(int(0)).is_err());
        assert!(instance_for_alpha(Rational::new(3, 5)).is_err());
    }

    #[test]
    fn gamma_instances() {
        let inst = instance_for_gamma(3, Rational::new(1, 10)).unwrap();
        assert_eq!((inst.params.c, inst.params.k), (4, 48));
        let s = inst.host.graph.degree_stats().unwrap();
        assert_eq!((s.min, s.max), (30, 60));

        let inst = instance_for_gamma(3, Rational::new(1, 3)).unwrap();
        assert_eq!((inst.params.c, inst.params.k), (1, 12));

        let inst = instance_for_gamma(5, Rational::new(1, 20)).unwrap();
        assert_eq!((inst.params.c, inst.params.k), (4, 120));

        assert!(instance_for_gamma(4, Rational::new(1, 10)).is_err());
        assert!(instance_for_gamma(3, Rational::new(1, 2)).is_err());
        assert!(instance_for_gamma(3, int(0)).is_err());
    }

    #[test]
    fn generators_are_deterministic() {
        let q = p(5, 2, 60);
        assert_eq!(gen_h(q).unwrap(), gen_h(q).unwrap());
        assert_eq!(gen_g(q).unwrap().graph.edges(), gen_g(q).unwrap().graph.edges());
        assert_eq!(gen_h_prime(q).unwrap(), gen_h_prime(q).unwrap());
    }
}
