//! Oracle confirmation that the broom tree misses each extremal host.

use std::fmt::Write as _;

use crate::constructions::{gen_broom_uniform, gen_g, gen_h, gen_h_prime, ExtremalParams};
use crate::embedding::{exact_embed, validate_embedding, Budget, EmbedConstraints, EmbedVerdict, VerdictKind};
use crate::error::Result;
use crate::structure::{verify_broom_obstruction, BroomCertificate};

use super::sweep::ExtremalFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Confirmed,
    Refuted,
    Inconclusive,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Confirmed => 0,
            Outcome::Refuted => 1,
            Outcome::Inconclusive => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExampleCheck {
    pub family: ExtremalFamily,
    pub params: ExtremalParams,
    pub host_order: usize,
    pub certificate: Option<BroomCertificate>,
    pub oracle: EmbedVerdict,
    pub outcome: Outcome,
}

impl ExampleCheck {
    /// `certificate holds; oracle: NotEmbedded; CONFIRMED` and similar.
    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        if let Some(c) = &self.certificate {
            parts.push(if c.holds { "certificate holds" } else { "certificate fails" }.to_string());
        }
        parts.push(format!("oracle: {}", self.oracle.kind()));
        parts.push(
            match self.outcome {
                Outcome::Confirmed => "CONFIRMED",
                Outcome::Refuted => "REFUTED",
                Outcome::Inconclusive if self.certificate.is_some_and(|c| c.holds) => {
                    "INCONCLUSIVE (certificate-only confirmation)"
                }
                Outcome::Inconclusive => "INCONCLUSIVE",
            }
            .to_string(),
        );
        parts.join("; ")
    }

    /// One line per check, then the overall outcome.
    pub fn render(&self) -> String {
        let p = self.params;
        let mut s = String::new();
        writeln!(
            s,
            "instance: T_{{{k},{l}}} into {}_{{{k},{l},{c}}} ({} host vertices)",
            self.family.name(),
            self.host_order,
            k = p.k,
            l = p.ell,
            c = p.c
        )
        .unwrap();
        if let Some(c) = &self.certificate {
            writeln!(
                s,
                "certificate: leaves {} > |B| = {}: {}; centres {} > |A| = {}: {}; holds: {}",
                c.leaves_lhs,
                c.b_size,
                c.leaves_lhs > c.b_size,
                c.centres_lhs,
                c.a_size,
                c.centres_lhs > c.a_size,
                c.holds
            )
            .unwrap();
        }
        writeln!(
            s,
            "oracle: {} ({} nodes, {} ms)",
            self.oracle.kind(),
            self.oracle.nodes_explored,
            self.oracle.elapsed.as_millis()
        )
        .unwrap();
        writeln!(s, "{}", self.summary()).unwrap();
        s
    }
}

pub fn run_verify_example(family: ExtremalFamily, ell: usize, c: usize, budget: Budget) -> Result<ExampleCheck> {
    let params = ExtremalParams::with_c(ell, c)?;
    let host = match family {
        ExtremalFamily::H => gen_h(params)?,
        ExtremalFamily::G => gen_g(params)?,
        ExtremalFamily::Hprime => gen_h_prime(params)?,
    };
    let tree = gen_broom_uniform(params.k, ell)?;
    let certificate = match family {
        ExtremalFamily::H => Some(verify_broom_obstruction(params)?),
        _ => None,
    };
    let oracle = exact_embed(&tree, &host.graph, &EmbedConstraints::none(), budget)?;
    if let Some(w) = oracle.witness() {
        validate_embedding(&tree, &host.graph, &w.map)
            .map_err(|v| crate::error::Error::Internal(format!("oracle witness invalid: {v}")))?;
    }
    let cert_ok = certificate.is_none_or(|c| c.holds);
    let outcome = match oracle.kind() {
        VerdictKind::NotEmbedded if cert_ok => Outcome::Confirmed,
        VerdictKind::NotEmbedded | VerdictKind::Embedded => Outcome::Refuted,
        VerdictKind::Timeout | VerdictKind::Unknown => Outcome::Inconclusive,
    };
    Ok(ExampleCheck {
        family,
        params,
        host_order: host.graph.n(),
        certificate,
        oracle,
        outcome,
    })
}
