//! Brute-force references shared by the property suites and the acceptance
//! harness. Nothing here calls into the library's search code.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use treex_core::decomposition::{find_separator, partition_three, partition_two};
use treex_core::embedding::{exact_embed, validate_embedding, Budget, EmbedConstraints, VerdictKind};
use treex_core::harness::random::random_prufer_tree;
use treex_core::{Error, SimpleGraph, TreeGraph};

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, &edges).unwrap()
}

/// Tries every injective map and only then checks edges.
pub fn naive_embeds(t: &TreeGraph, g: &SimpleGraph, allowed: &dyn Fn(usize, usize) -> bool) -> bool {
    fn rec(
        i: usize,
        map: &mut Vec<usize>,
        used: &mut [bool],
        t: &TreeGraph,
        g: &SimpleGraph,
        allowed: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        if i == t.n() {
            return t.graph().edges().iter().all(|&(u, v)| g.has_edge(map[u], map[v]));
        }
        for h in 0..g.n() {
            if used[h] || !allowed(i, h) {
                continue;
            }
            used[h] = true;
            map.push(h);
            let found = rec(i + 1, map, used, t, g, allowed);
            map.pop();
            used[h] = false;
            if found {
                return true;
            }
        }
        false
    }
    rec(0, &mut Vec::new(), &mut vec![false; g.n()], t, g, allowed)
}

/// Runs `pairs` seeded (tree ≤ 7, host ≤ 7) instances through the exact
/// solver and the naive reference. Returns how many embedded.
pub fn oracle_matches_naive(pairs: usize, seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut embedded = 0;
    for i in 0..pairs {
        let tn = rng.gen_range(1..=7);
        let hn = rng.gen_range(1..=7);
        let t = random_prufer_tree(tn, &mut rng).unwrap();
        let p = [0.3, 0.5, 0.7][rng.gen_range(0..3)];
        let g = random_graph(&mut rng, hn, p);
        let v = exact_embed(&t, &g, &EmbedConstraints::none(), Budget::unlimited()).map_err(|e| e.to_string())?;
        if let Some(w) = v.witness() {
            validate_embedding(&t, &g, &w.map).map_err(|e| format!("pair {i}: bad witness: {e}"))?;
        }
        let expected = naive_embeds(&t, &g, &|_, _| true);
        let agrees = match v.kind() {
            VerdictKind::Embedded => expected,
            VerdictKind::NotEmbedded => !expected,
            _ => false,
        };
        if !agrees {
            return Err(format!(
                "pair {i}: solver {} but naive {expected} (tree {:?}, host n={hn} {:?})",
                v.kind(),
                t.graph().edges(),
                g.edges()
            ));
        }
        embedded += usize::from(expected);
    }
    Ok(embedded)
}

/// Every sequence of length 1..=max_len over 1..=⌈t/2⌉ with sum at most t.
pub fn sequences(t: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, left: usize, cap: usize, max_len: usize, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_len {
            return;
        }
        for x in 1..=cap.min(left) {
            cur.push(x);
            rec(cur, left - x, cap, max_len, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), t, t.div_ceil(2), max_len, &mut out);
    out
}

pub fn two_way_exists(a: &[usize], t: usize) -> bool {
    let total: usize = a.iter().sum();
    (0u32..1 << a.len()).any(|mask| {
        let s: usize = a.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, x)| x).sum();
        3 * s.max(total - s) <= 2 * t
    })
}

pub fn three_way_exists(a: &[usize], t: usize) -> bool {
    let cap = t.div_ceil(2);
    (0..3usize.pow(a.len() as u32)).any(|mut code| {
        let mut sums = [0; 3];
        for x in a {
            sums[code % 3] += x;
            code /= 3;
        }
        sums.iter().all(|&s| s <= cap)
    })
}

fn is_partition(parts: &[&[usize]], m: usize) -> bool {
    let mut all: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    all.sort_unstable();
    all == (0..m).collect::<Vec<_>>()
}

/// Both partition routines over every sequence with `t ≤ max_t`,
/// `m ≤ max_len`. Returns the number of sequences checked.
pub fn partitions_meet_bounds(max_t: usize, max_len: usize) -> Result<usize, String> {
    let mut checked = 0;
    for t in 1..=max_t {
        let cap = t.div_ceil(2);
        for a in sequences(t, max_len) {
            let sum_of = |idx: &[usize]| idx.iter().map(|&i| a[i]).sum::<usize>();
            match partition_two(&a, t) {
                Ok(p) => {
                    let ok = is_partition(&[&p.j1, &p.j2], a.len())
                        && (sum_of(&p.j1), sum_of(&p.j2)) == (p.sum1, p.sum2)
                        && p.sum2 <= p.sum1
                        && 3 * p.sum1 <= 2 * t;
                    if !ok {
                        return Err(format!("two-way {a:?} t={t}: {p:?}"));
                    }
                }
                // only the single unit weight at t = 1 has no split
                Err(Error::Infeasible(_)) if !two_way_exists(&a, t) && t == 1 => {}
                Err(e) => return Err(format!("two-way {a:?} t={t}: {e}")),
            }
            match partition_three(&a, t) {
                Ok(p) => {
                    let [i1, i2, i3] = &p.parts;
                    let sums_ok = p.parts.iter().zip(&p.sums).all(|(part, &s)| sum_of(part) == s);
                    let ok = is_partition(&[i1, i2, i3], a.len())
                        && sums_ok
                        && p.sums[2] <= p.sums[1]
                        && p.sums[1] <= p.sums[0]
                        && p.sums[0] <= cap;
                    if !ok {
                        return Err(format!("three-way {a:?} t={t}: {p:?}"));
                    }
                }
                Err(e) => {
                    return Err(format!(
                        "three-way {a:?} t={t}: {e} (brute force split exists: {})",
                        three_way_exists(&a, t)
                    ))
                }
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Largest component of `T − v`, by deleting `v` and flood-filling.
pub fn worst_component_after_removing(t: &TreeGraph, v: usize) -> usize {
    let n = t.n();
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut worst = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut stack = vec![s];
        seen[s] = true;
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for &w in t.graph().neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        worst = worst.max(size);
    }
    worst
}

/// Seeded random trees with 1..=max_edges edges: the separator leaves
/// components of order at most ⌈t/2⌉ and is the smallest-id centroid.
pub fn separators_are_centroids(trees: usize, max_edges: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..trees {
        let edges = rng.gen_range(1..=max_edges);
        let t = random_prufer_tree(edges + 1, &mut rng).unwrap();
        let s = find_separator(&t).map_err(|e| e.to_string())?;
        let worst: Vec<usize> = (0..t.n()).map(|v| worst_component_after_removing(&t, v)).collect();
        let best = *worst.iter().min().unwrap();
        let mut covered: Vec<usize> = s.components.iter().flatten().copied().collect();
        covered.push(s.separator);
        covered.sort_unstable();
        let ok = s.max_component_order <= edges.div_ceil(2)
            && s.max_component_order == best
            && Some(s.separator) == worst.iter().position(|&w| w == best)
            && covered == (0..t.n()).collect::<Vec<_>>()
            && s.components.iter().map(Vec::len).max() == Some(best);
        if !ok {
            return Err(format!("tree {i} ({edges} edges): {s:?}, best {best}"));
        }
    }
    Ok(())
}
