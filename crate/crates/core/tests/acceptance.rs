//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Each criterion carries its own wall-clock limit.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use treex_core::connectivity::vertex_connectivity;
use treex_core::constructions::{
    gen_broom_uniform, gen_cliques_apex, gen_complete_bipartite, gen_g, gen_h, gen_h_prime, instance_for_alpha,
    instance_for_gamma, ExtremalParams,
};
use treex_core::decomposition::find_separator;
use treex_core::embedding::{exact_embed, validate_embedding, Budget, EmbedConstraints, VerdictKind};
use treex_core::harness::stress::{run_stress, write_jsonl, StressConfig};
use treex_core::rational::Rational;
use treex_core::structure::{classify_apex_structure, verify_broom_obstruction};
use treex_core::{SimpleGraph, TreeGraph};

type Outcome = Result<String, String>;

/// Name, wall-clock limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

const GRID: [(usize, usize); 9] = [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (5, 3), (7, 1), (7, 2), (7, 3)];

fn min_max_degree(g: &SimpleGraph) -> (usize, usize) {
    let degs: Vec<usize> = (0..g.n()).map(|v| g.neighbors(v).len()).collect();
    (*degs.iter().min().unwrap(), *degs.iter().max().unwrap())
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn ri(n: usize) -> Rational {
    Rational::from_integer(n as i64)
}

/// Exact search with a wall-clock cap; anything but the expected verdict fails.
fn expect_verdict(t: &TreeGraph, g: &SimpleGraph, want: VerdictKind, limit: Duration) -> Outcome {
    let v = exact_embed(t, g, &EmbedConstraints::none(), Budget::time(limit)).map_err(|e| e.to_string())?;
    if let Some(w) = v.witness() {
        validate_embedding(t, g, &w.map).map_err(|e| format!("invalid witness: {e}"))?;
    }
    let detail = format!("{} after {} nodes", v.kind(), v.nodes_explored);
    if v.kind() == want {
        Ok(detail)
    } else {
        Err(format!("expected {want}, got {detail}"))
    }
}

fn generator_formulas() -> Outcome {
    for (ell, c) in GRID {
        let k = c * ell * (ell + 1);
        let p = ExtremalParams::new(ell, c, k).map_err(|e| e.to_string())?;
        let (min, max) = min_max_degree(&gen_h(p).map_err(|e| e.to_string())?.graph);
        let want = (k / 2 + (c - 1) * (ell + 1) / 2, 2 * (ell - 1) * (k / ell - 1));
        if (min, max) != want {
            return Err(format!("(ℓ,c,k)=({ell},{c},{k}): got (δ,Δ)=({min},{max}), want {want:?}"));
        }
    }
    Ok("9/9 cases match".into())
}

fn broom_misses(ell: usize, c: usize, family: &str, limit: Duration) -> Outcome {
    let p = ExtremalParams::with_c(ell, c).map_err(|e| e.to_string())?;
    let host = match family {
        "H" => gen_h(p),
        "G" => gen_g(p),
        _ => gen_h_prime(p),
    }
    .map_err(|e| e.to_string())?
    .graph;
    let tree = gen_broom_uniform(p.k, ell).map_err(|e| e.to_string())?;
    let detail = expect_verdict(&tree, &host, VerdictKind::NotEmbedded, limit)?;
    Ok(format!("{family} on {} vertices: {detail}", host.n()))
}

fn broom_misses_h() -> Outcome {
    let oracle = broom_misses(3, 1, "H", Duration::from_secs(60))?;
    let cert = verify_broom_obstruction(ExtremalParams::with_c(3, 1).unwrap()).map_err(|e| e.to_string())?;
    let counts = (cert.leaves_lhs, cert.b_size, cert.centres_lhs, cert.a_size);
    if !cert.holds || counts != (6, 5, 7, 6) {
        return Err(format!("certificate disagrees: {cert:?}"));
    }
    Ok(format!("{oracle}; certificate holds"))
}

fn companion_hosts() -> Outcome {
    let g = broom_misses(3, 1, "G", Duration::from_secs(60))?;
    let hp = broom_misses(3, 1, "H'", Duration::from_secs(60))?;
    for (text, n) in [(&g, 18), (&hp, 19)] {
        if !text.contains(&format!("on {n} vertices")) {
            return Err(format!("unexpected host order: {text}"));
        }
    }
    Ok(format!("{g}; {hp}"))
}

fn path_into_h() -> Outcome {
    let host = gen_h(ExtremalParams::with_c(3, 1).unwrap()).unwrap().graph;
    expect_verdict(&TreeGraph::path(12), &host, VerdictKind::Embedded, Duration::from_secs(10))
}

fn bipartite_and_apex_obstructions() -> Outcome {
    let mut notes = Vec::new();
    let p8 = TreeGraph::path(8);
    for n2 in [5, 20] {
        let host = gen_complete_bipartite(3, n2).map_err(|e| e.to_string())?.graph;
        let started = Instant::now();
        let d = expect_verdict(&p8, &host, VerdictKind::NotEmbedded, Duration::from_secs(5))?;
        if started.elapsed() > Duration::from_secs(5) {
            return Err(format!("K_3,{n2} took {:?}", started.elapsed()));
        }
        notes.push(format!("K_3,{n2}: {d}"));
    }
    let p12 = TreeGraph::path(12);
    let sep = find_separator(&p12).map_err(|e| e.to_string())?;
    if sep.max_component_order != 6 {
        return Err(format!("separator leaves {} vertices", sep.max_component_order));
    }
    let apex = gen_cliques_apex(5, 3).map_err(|e| e.to_string())?.graph;
    notes.push(format!("apex: {}", expect_verdict(&p12, &apex, VerdictKind::NotEmbedded, Duration::from_secs(60))?));
    Ok(notes.join("; "))
}

fn degree_witnesses() -> Outcome {
    let half = r(1, 2);
    let a = instance_for_alpha(half).map_err(|e| e.to_string())?;
    let (min, max) = min_max_degree(&a.host.graph);
    let k = a.params.k;
    if (a.params.ell, k) != (3, 12) || 2 * min != k || ri(max) < ri(2 * k) * (ri(1) - half) {
        return Err(format!("alpha instance: ℓ={} k={k} δ={min} Δ={max}", a.params.ell));
    }
    let gamma = r(1, 10);
    let b = instance_for_gamma(3, gamma).map_err(|e| e.to_string())?;
    let (min, max) = min_max_degree(&b.host.graph);
    let k = ri(b.params.k);
    let min_needed = (ri(1) + r(1, 3) - gamma) * k / ri(2);
    let max_needed = ri(2) * (ri(1) - r(1, 3) - gamma) * k;
    let ok = (b.params.c, b.params.k, min, max) == (4, 48, 30, 60)
        && min_needed == r(148, 5)
        && max_needed == r(272, 5)
        && ri(min) >= min_needed
        && ri(max) >= max_needed;
    if !ok {
        return Err(format!("gamma instance: c={} k={} δ={min} Δ={max}", b.params.c, b.params.k));
    }
    Ok(format!("α=1/2: (ℓ,k)=(3,12); γ=1/10: (c,k)=(4,48), δ=30 ≥ {min_needed}, Δ=60 ≥ {max_needed}"))
}

fn decomposition_suites() -> Outcome {
    common::separators_are_centroids(1000, 200, 0x5EED)?;
    let checked = common::partitions_meet_bounds(12, 8)?;
    Ok(format!("1000 separators centroid-optimal; {checked} sequences partitioned within bounds"))
}

fn oracle_completeness() -> Outcome {
    let pairs = 10_000;
    let embedded = common::oracle_matches_naive(pairs, 0xA11CE)?;
    Ok(format!("{pairs} pairs agree ({embedded} embedded, {} not)", pairs - embedded))
}

fn classifier_shapes() -> Outcome {
    let theta = r(1, 10);
    for (ell, c) in GRID {
        let p = ExtremalParams::with_c(ell, c).unwrap();
        let g = gen_h(p).unwrap().graph;
        let rep = classify_apex_structure(&g, 0, p.k, theta).map_err(|e| e.to_string())?;
        if rep.facts.len() != 2 || rep.seen_components.len() != 2 {
            return Err(format!("{p:?}: {} components", rep.facts.len()));
        }
        for f in &rep.facts {
            let bp = f.component.bipartition.as_ref().ok_or(format!("{p:?}: non-bipartite component"))?;
            let larger = if bp.side0.len() >= bp.side1.len() { &bp.side0 } else { &bp.side1 };
            let stray = g.neighbors(0).iter().any(|v| f.component.contains(*v) && !larger.contains(v));
            if stray {
                return Err(format!("{p:?}: hub reaches a smaller side"));
            }
        }
        let cnd = rep.conditions;
        if !(cnd.all_small && cnd.two_seen_only && cnd.other_constrained) {
            return Err(format!("{p:?}: {cnd:?}"));
        }
    }
    let apex = gen_cliques_apex(5, 3).unwrap().graph;
    let rep = classify_apex_structure(&apex, 0, 12, theta).map_err(|e| e.to_string())?;
    if rep.conditions.two_seen_only {
        return Err("apex over three cliques passes the two-component condition".into());
    }
    Ok("9/9 extremal hosts two-sided with (i),(ii),(iv); apex fails (ii)".into())
}

fn connectivity_of_matched_variant() -> Outcome {
    let g = gen_h_prime(ExtremalParams::with_c(3, 2).unwrap()).unwrap().graph;
    let kappa = vertex_connectivity(&g).map_err(|e| e.to_string())?;
    if g.n() != 51 || kappa < 12 {
        return Err(format!("n={} κ={kappa}", g.n()));
    }
    Ok(format!("κ = {kappa} ≥ 12 on {} vertices", g.n()))
}

fn stress_soundness() -> Outcome {
    let cfg = StressConfig {
        k: 10,
        n: 24,
        alpha: r(0, 1),
        trials: 200,
        seed: 7,
        max_tree_degree: None,
        max_nodes: 2_000_000,
        with_timings: false,
    };
    let run = || -> Result<_, String> {
        let (rows, summary) = run_stress(&cfg).map_err(|e| e.to_string())?;
        let mut buf = Vec::new();
        write_jsonl(&rows, &mut buf).map_err(|e| e.to_string())?;
        Ok((rows, summary, buf))
    };
    let (rows, summary, first) = run()?;
    let (_, _, second) = run()?;
    if first != second {
        return Err("reruns differ".into());
    }
    if rows.len() != 200 {
        return Err(format!("{} rows", rows.len()));
    }
    for row in rows.iter().filter(|r| r.counterexample) {
        let tree = TreeGraph::from_edges(row.k + 1, &row.tree_edges).map_err(|e| e.to_string())?;
        let edges = row.host_edges.as_ref().ok_or(format!("{} lacks host edges", row.instance_id))?;
        let host = SimpleGraph::new(row.n, edges).map_err(|e| e.to_string())?;
        let v = exact_embed(&tree, &host, &EmbedConstraints::none(), Budget::unlimited()).map_err(|e| e.to_string())?;
        if row.verdict != VerdictKind::NotEmbedded || v.kind() != VerdictKind::NotEmbedded {
            return Err(format!("{} is not a re-verified non-embedding", row.instance_id));
        }
    }
    Ok(format!(
        "deterministic; embedded={} counterexamples={} inconclusive={}",
        summary.embedded, summary.counterexamples, summary.inconclusive
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("generator closed forms", 1, generator_formulas),
        ("broom misses H (oracle and certificate)", 60, broom_misses_h),
        ("broom misses G and H'", 120, companion_hosts),
        ("path embeds in H", 10, path_into_h),
        ("bipartite and apex obstructions", 70, bipartite_and_apex_obstructions),
        ("degree regime witnesses", 5, degree_witnesses),
        ("separator and partition suites", 30, decomposition_suites),
        ("oracle completeness", 120, oracle_completeness),
        ("structure classifier", 5, classifier_shapes),
        ("connectivity of matched variant", 60, connectivity_of_matched_variant),
        ("stress soundness", 600, stress_soundness),
    ];
    let mut failed = 0;
    for (i, (name, limit_s, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let mut outcome = check();
        let elapsed = started.elapsed();
        if outcome.is_ok() && elapsed > Duration::from_secs(*limit_s) {
            outcome = Err(format!("took {elapsed:?}, limit {limit_s} s"));
        }
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failed += usize::from(outcome.is_err());
        println!("{tag} {:>2} {name} [{} ms]: {detail}", i + 1, elapsed.as_millis());
    }

    // not part of the pass/fail tally
    let started = Instant::now();
    for family in ["H", "G", "H'"] {
        let line = match broom_misses(3, 2, family, Duration::from_secs(600)) {
            Ok(d) => format!("confirmed, {d}"),
            Err(d) => format!("not confirmed, {d}"),
        };
        println!("INFO stretch (ℓ,c,k)=(3,2,24) {family}: {line}");
    }
    println!("INFO stretch total {} ms", started.elapsed().as_millis());

    if failed == 0 {
        println!("acceptance: all 11 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 11 criteria fail");
        ExitCode::FAILURE
    }
}
