//! Structural vocabulary around a hub vertex `x`: θ-seeing, (k,θ)-smallness,
//! and a component-level check of the "special" shape of `G − x`, plus the
//! pigeonhole certificate that the broom tree misses `H_{k,ℓ,c}`.
//!
//! The shape check runs on the actual components of `G − x`; no regularity
//! partition is involved, and one θ serves every threshold.

use std::cmp::Reverse;

use serde::Serialize;

use crate::constructions::ExtremalParams;
use crate::error::{Error, Result};
use crate::graph::{Component, SimpleGraph};
use crate::rational::{int, Rational};

/// `deg(x, U) ≥ θ|U|`, exactly.
pub fn theta_sees(g: &SimpleGraph, x: usize, u: &[usize], theta: Rational) -> Result<bool> {
    g.check_vertex(x)?;
    if theta <= int(0) || theta > int(1) {
        return Err(Error::InvalidParams(format!("theta must lie in (0, 1], got {theta}")));
    }
    let mut set = u.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.binary_search(&x).is_ok() {
        return Err(Error::InvalidParams(format!("x = {x} lies in U")));
    }
    if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    let hits = g.neighbors(x).iter().filter(|v| set.binary_search(v).is_ok()).count();
    Ok(int(hits) >= theta * int(set.len()))
}

/// `(k,θ)`-small: order below `(1+θ)k`, or for a bipartite component, the
/// larger side below `(1+θ)k`.
pub fn is_small(c: &Component, k: usize, theta: Rational) -> bool {
    small_at(c, int(k), theta)
}

fn small_at(c: &Component, k: Rational, theta: Rational) -> bool {
    let size = match &c.bipartition {
        Some(bp) => bp.side0.len().max(bp.side1.len()),
        None => c.order(),
    };
    int(size) < (int(1) + theta) * k
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentFacts {
    pub component: Component,
    pub order: usize,
    pub bipartite: bool,
    /// `(larger, smaller)` side sizes.
    pub side_sizes: Option<(usize, usize)>,
    pub x_degree_into: usize,
    /// x-degree into the larger and the smaller side.
    pub x_degree_by_side: Option<(usize, usize)>,
    pub small_at_k: bool,
    pub small_at_two_thirds_k: bool,
}

impl ComponentFacts {
    fn new(g: &SimpleGraph, x: usize, component: Component, k: usize, theta: Rational) -> Self {
        let in_comp = |v: &&usize| component.contains(**v);
        let x_degree_into = g.neighbors(x).iter().filter(in_comp).count();
        let (side_sizes, x_degree_by_side) = match &component.bipartition {
            Some(bp) => {
                let hits = |s: &[usize]| g.neighbors(x).iter().filter(|v| s.binary_search(v).is_ok()).count();
                let (s0, s1) = (&bp.side0, &bp.side1);
                let (d0, d1) = (hits(s0), hits(s1));
                // equal sides: the one x sees more, then the one holding the smallest id
                let zero_larger = (s0.len(), d0) >= (s1.len(), d1);
                let (large, small, dl, ds) = if zero_larger {
                    (s0.len(), s1.len(), d0, d1)
                } else {
                    (s1.len(), s0.len(), d1, d0)
                };
                (Some((large, small)), Some((dl, ds)))
            }
            None => (None, None),
        };
        let small_at_k = small_at(&component, int(k), theta);
        let small_at_two_thirds_k = small_at(&component, Rational::new(2 * k as i64, 3), theta);
        ComponentFacts {
            order: component.order(),
            bipartite: component.is_bipartite(),
            component,
            side_sizes,
            x_degree_into,
            x_degree_by_side,
            small_at_k,
            small_at_two_thirds_k,
        }
    }
}

/// Flags (i)–(iv) of the special shape.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ShapeConditions {
    /// Every component is (k,θ)-small.
    pub all_small: bool,
    /// Exactly two seen components, and no x-edges anywhere else.
    pub two_seen_only: bool,
    /// The more-seen component is bipartite, (2k/3,θ)-large, and x only
    /// touches its larger side.
    pub main_bipartite_large: bool,
    /// The other seen component is (2k/3,θ)-small if non-bipartite, or x
    /// touches only one of its sides if bipartite.
    pub other_constrained: bool,
}

impl ShapeConditions {
    pub fn all(&self) -> bool {
        self.all_small && self.two_seen_only && self.main_bipartite_large && self.other_constrained
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub hub: usize,
    pub k: usize,
    pub theta: Rational,
    /// One entry per component of `G − x`, ordered by smallest vertex.
    pub facts: Vec<ComponentFacts>,
    /// Indices into `facts` of the components x θ-sees, most-seen first
    /// (x-degree descending, then smallest vertex).
    pub seen_components: Vec<usize>,
    /// x has no edges into unseen components.
    pub untouched_ok: bool,
    pub conditions: ShapeConditions,
    pub special_shaped: bool,
}

pub fn classify_apex_structure(g: &SimpleGraph, x: usize, k: usize, theta: Rational) -> Result<StructureReport> {
    g.check_vertex(x)?;
    let keep: Vec<bool> = (0..g.n()).map(|v| v != x).collect();
    let facts: Vec<ComponentFacts> = g
        .components_within(&keep)
        .into_iter()
        .map(|c| ComponentFacts::new(g, x, c, k, theta))
        .collect();
    let mut seen_components = Vec::new();
    for (i, f) in facts.iter().enumerate() {
        if theta_sees(g, x, &f.component.vertices, theta)? {
            seen_components.push(i);
        }
    }
    seen_components.sort_by_key(|&i| (Reverse(facts[i].x_degree_into), facts[i].component.vertices[0]));
    let untouched_ok = facts
        .iter()
        .enumerate()
        .all(|(i, f)| f.x_degree_into == 0 || seen_components.contains(&i));

    let mut conditions = ShapeConditions {
        all_small: facts.iter().all(|f| f.small_at_k),
        two_seen_only: seen_components.len() == 2 && untouched_ok,
        ..Default::default()
    };
    if let Some(&main) = seen_components.first() {
        let f = &facts[main];
        conditions.main_bipartite_large =
            f.bipartite && !f.small_at_two_thirds_k && f.x_degree_by_side.is_some_and(|(_, ds)| ds == 0);
    }
    if let Some(&other) = seen_components.get(1) {
        let f = &facts[other];
        conditions.other_constrained = match f.x_degree_by_side {
            Some((dl, ds)) => dl == 0 || ds == 0,
            None => f.small_at_two_thirds_k,
        };
    }
    Ok(StructureReport {
        hub: x,
        k,
        theta,
        facts,
        seen_components,
        untouched_ok,
        special_shaped: conditions.all(),
        conditions,
    })
}

/// The two counting inequalities showing `T_{k,ℓ}` cannot fit in
/// `H_{k,ℓ,c}`: the leaves of `(ℓ+1)/2` stars overflow a `B`-side, and the
/// centres of the other stars plus the root overflow an `A`-side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BroomCertificate {
    /// `(ℓ+1)/2 · (k/ℓ − 1)`.
    pub leaves_lhs: usize,
    pub b_size: usize,
    /// `(ℓ−1)(k/ℓ − 1) + 1`.
    pub centres_lhs: usize,
    pub a_size: usize,
    pub holds: bool,
}

pub fn verify_broom_obstruction(p: ExtremalParams) -> Result<BroomCertificate> {
    let p = ExtremalParams::new(p.ell, p.c, p.k)?;
    let leaves_per_star = p.k / p.ell - 1;
    let leaves_lhs = p.ell.div_ceil(2) * leaves_per_star;
    let centres_lhs = (p.ell - 1) * leaves_per_star + 1;
    let (a_size, b_size) = (p.a_size(), p.b_size());
    Ok(BroomCertificate {
        leaves_lhs,
        b_size,
        centres_lhs,
        a_size,
        holds: leaves_lhs > b_size && centres_lhs > a_size,
    })
}
