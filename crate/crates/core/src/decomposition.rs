//! Tree-side bookkeeping for the embedding strategy: centroid separators,
//! balanced grouping of component sizes, and the even-distance class.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::TreeGraph;
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorResult {
    pub separator: usize,
    /// Components of `T − z`, each sorted, ordered by smallest vertex.
    pub components: Vec<Vec<usize>>,
    pub max_component_order: usize,
}

/// Largest component order of `T − v` for every vertex `v`, from subtree sizes
/// of a traversal rooted at 0.
pub fn max_component_orders(t: &TreeGraph) -> Vec<usize> {
    let n = t.n();
    let (order, parent) = t.bfs_from(0);
    let mut size = vec![1usize; n];
    let mut worst = vec![0usize; n];
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            size[p] += size[v];
            worst[p] = worst[p].max(size[v]);
        }
    }
    for v in 0..n {
        worst[v] = worst[v].max(n - size[v]);
    }
    worst
}

/// A centroid of `T`: the smallest-id vertex minimizing the largest component
/// of `T − z`. That order is always at most `⌈t/2⌉` for a tree with `t` edges.
pub fn find_separator(t: &TreeGraph) -> Result<SeparatorResult> {
    let edges = t.edge_count();
    if edges == 0 {
        return Err(Error::InvalidParams("single-vertex tree has no separator".into()));
    }
    let worst = max_component_orders(t);
    let (separator, &max_component_order) = worst
        .iter()
        .enumerate()
        .min_by_key(|&(v, &w)| (w, v))
        .expect("tree is nonempty");
    let bound = edges.div_ceil(2);
    if max_component_order > bound {
        return Err(Error::Internal(format!(
            "centroid {separator} leaves a component of order {max_component_order} > {bound}"
        )));
    }
    let keep: Vec<bool> = (0..t.n()).map(|v| v != separator).collect();
    let components = t
        .graph()
        .components_within(&keep)
        .into_iter()
        .map(|c| c.vertices)
        .collect();
    Ok(SeparatorResult {
        separator,
        components,
        max_component_order,
    })
}

/// A two-way split `{J₁, J₂}` of `0..m` with `ΣJ₂ ≤ ΣJ₁ ≤ 2t/3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqPartition2 {
    pub j1: Vec<usize>,
    pub j2: Vec<usize>,
    pub sum1: usize,
    pub sum2: usize,
}

/// A three-way split with `ΣI₃ ≤ ΣI₂ ≤ ΣI₁ ≤ ⌈t/2⌉`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqPartition3 {
    pub parts: [Vec<usize>; 3],
    pub sums: [usize; 3],
}

fn check_sequence(a: &[usize], t: usize) -> Result<()> {
    let cap = t.div_ceil(2);
    for (index, &x) in a.iter().enumerate() {
        if x == 0 || x > cap {
            return Err(Error::Precondition {
                index,
                msg: format!("a[{index}] = {x} must lie in 1..={cap}"),
            });
        }
    }
    let total: usize = a.iter().sum();
    if total > t {
        return Err(Error::Precondition {
            index: a.len().saturating_sub(1),
            msg: format!("sum {total} exceeds t = {t}"),
        });
    }
    Ok(())
}

/// Indices sorted by value descending, ties by index ascending.
fn decreasing(a: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..a.len()).collect();
    idx.sort_by_key(|&i| (std::cmp::Reverse(a[i]), i));
    idx
}

/// Greedy split: items in decreasing order each go to the currently lighter
/// side; the heavier side is reported as `J₁`.
///
/// For `t = 1` the only admissible input is `a = (1)`, which has no split with
/// `ΣJ₁ ≤ 2/3`; that case is reported as [`Error::Infeasible`].
pub fn partition_two(a: &[usize], t: usize) -> Result<SeqPartition2> {
    check_sequence(a, t)?;
    let mut sides: [(Vec<usize>, usize); 2] = Default::default();
    for i in decreasing(a) {
        let lighter = usize::from(sides[1].1 < sides[0].1);
        sides[lighter].0.push(i);
        sides[lighter].1 += a[i];
    }
    if sides[1].1 > sides[0].1 {
        sides.swap(0, 1);
    }
    let [(mut j1, sum1), (mut j2, sum2)] = sides;
    j1.sort_unstable();
    j2.sort_unstable();
    if 3 * sum1 > 2 * t {
        return if t == 1 {
            Err(Error::Infeasible(format!(
                "no split of {a:?} keeps the heavier side within 2t/3 for t = 1"
            )))
        } else {
            Err(Error::Internal(format!(
                "greedy split of {a:?} has heavier side {sum1} > 2·{t}/3"
            )))
        };
    }
    Ok(SeqPartition2 { j1, j2, sum1, sum2 })
}

/// First-fit decreasing into three bins of capacity `⌈t/2⌉`, bins then
/// ordered by load, heaviest first.
pub fn partition_three(a: &[usize], t: usize) -> Result<SeqPartition3> {
    check_sequence(a, t)?;
    let cap = t.div_ceil(2);
    let mut bins: [(Vec<usize>, usize); 3] = Default::default();
    for i in decreasing(a) {
        let bin = bins
            .iter_mut()
            .find(|b| b.1 + a[i] <= cap)
            .ok_or_else(|| Error::Internal(format!("first-fit found no bin for a[{i}] in {a:?}")))?;
        bin.0.push(i);
        bin.1 += a[i];
    }
    // stable: equal loads keep bin order
    bins.sort_by_key(|b| std::cmp::Reverse(b.1));
    let sums = [bins[0].1, bins[1].1, bins[2].1];
    let parts = bins.map(|(mut v, _)| {
        v.sort_unstable();
        v
    });
    Ok(SeqPartition3 { parts, sums })
}

/// Vertices at positive even distance from `z` in `T`.
pub fn even_distance_set(t: &TreeGraph, z: usize) -> Result<Vec<usize>> {
    let dist = t.graph().distance_bfs(z)?;
    Ok((0..t.n())
        .filter(|&v| matches!(dist[v], Some(d) if d > 0 && d % 2 == 0))
        .collect())
}

/// Splits a component family by `V₀`-weight: `𝓕₁` is grown greedily in the
/// given order while its total weight stays at most `(1+α)k/2`; `𝓕₂` gets the
/// rest. Requires every weight to be at most `αk`.
///
/// Whenever the total weight reaches `(1+α)k/2`, the result also satisfies
/// `weight(𝓕₁) ≥ (1−α)k/2`; this is checked before returning.
pub fn group_components_case1(
    weights: &[usize],
    k: usize,
    alpha: Rational,
) -> Result<(Vec<usize>, Vec<usize>)> {
    let ak = alpha * int(k);
    if let Some(index) = weights.iter().position(|&w| int(w) > ak) {
        return Err(Error::Case1Hypothesis {
            index,
            weight: weights[index],
        });
    }
    let cap = (int(1) + alpha) * int(k) / 2;
    let (mut f1, mut f2) = (Vec::new(), Vec::new());
    let mut taken = 0usize;
    for (i, &w) in weights.iter().enumerate() {
        if int(taken + w) <= cap {
            taken += w;
            f1.push(i);
        } else {
            f2.push(i);
        }
    }
    let total: usize = weights.iter().sum();
    let floor = (int(1) - alpha) * int(k) / 2;
    if int(total) >= cap && int(taken) < floor {
        return Err(Error::Internal(format!(
            "case 1 grouping took weight {taken} < (1−α)k/2 = {floor}"
        )));
    }
    Ok((f1, f2))
}

/// `|V(F) ∩ V₀|` for each component.
pub fn v0_weights(components: &[Vec<usize>], v0: &[usize]) -> Vec<usize> {
    components
        .iter()
        .map(|c| c.iter().filter(|v| v0.binary_search(v).is_ok()).count())
        .collect()
}

/// Subtrees hanging off `z`, each with the neighbor of `z` it contains.
pub fn rooted_components(t: &TreeGraph, z: usize) -> Vec<(usize, Vec<usize>)> {
    let n = t.n();
    let mut owner = vec![usize::MAX; n];
    owner[z] = z;
    let mut out = Vec::new();
    for &r in t.graph().neighbors(z) {
        let mut verts = vec![r];
        owner[r] = r;
        let mut queue = VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            for &w in t.graph().neighbors(u) {
                if owner[w] == usize::MAX {
                    owner[w] = r;
                    verts.push(w);
                    queue.push_back(w);
                }
            }
        }
        verts.sort_unstable();
        out.push((r, verts));
    }
    out
}
