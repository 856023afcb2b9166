//! Structural consequences of membership, checked arc by arc.

use serde::{Deserialize, Serialize};

use super::{check_family_f, h_sets_unchecked, FamilyFLabeling, HSets};
use crate::digraph::{strong_diameter, Digraph};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropositionResult {
    pub id: String,
    pub statement: String,
    pub pass: bool,
    /// Offending vertices or arcs, one entry per failure.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropositionsReport {
    pub h_sets: HSets,
    pub items: Vec<PropositionResult>,
}

impl PropositionsReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|p| p.pass)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.items
            .iter()
            .filter(|p| !p.pass)
            .map(|p| p.id.as_str())
            .collect()
    }
}

/// Checks every proposition on a verified member.
pub fn verify_f_propositions(
    graph: &Digraph,
    labeling: &FamilyFLabeling,
) -> Result<PropositionsReport> {
    if !check_family_f(graph, labeling)?.member {
        return Err(Error::NotAMember);
    }
    evaluate_f_propositions(graph, labeling)
}

/// Evaluates the propositions without first requiring membership.
pub fn evaluate_f_propositions(
    graph: &Digraph,
    labeling: &FamilyFLabeling,
) -> Result<PropositionsReport> {
    labeling.check_range(graph.n())?;
    let l = labeling;
    let h = h_sets_unchecked(graph, l);
    let arc = |u: usize, v: usize| graph.has_arc(u, v);
    let mut items = Vec::new();

    let mut item = |id: &str, statement: &str, failures: Vec<String>| {
        items.push(PropositionResult {
            id: id.into(),
            statement: statement.into(),
            pass: failures.is_empty(),
            failures,
        });
    };

    let mut f = Vec::new();
    f.extend(
        h.h_a
            .iter()
            .filter(|&&v| !arc(v, l.a))
            .map(|v| format!("{v}->a missing")),
    );
    f.extend(
        h.h_b
            .iter()
            .filter(|&&v| !arc(v, l.b))
            .map(|v| format!("{v}->b missing")),
    );
    item(
        "h_a_to_a",
        "every v in H_a has v->a; every v in H_b has v->b",
        f,
    );

    let mut f = Vec::new();
    f.extend(
        h.h_a
            .iter()
            .filter(|&&v| arc(v, l.b))
            .map(|v| format!("{v}->b present")),
    );
    f.extend(
        h.h_b
            .iter()
            .filter(|&&v| arc(v, l.a))
            .map(|v| format!("{v}->a present")),
    );
    item(
        "h_a_not_to_b",
        "no v in H_a has v->b; no v in H_b has v->a",
        f,
    );

    let mut f = Vec::new();
    for &v in &h.h_ab {
        if !arc(l.a, v) {
            f.push(format!("a->{v} missing"));
        }
        if !arc(l.b, v) {
            f.push(format!("b->{v} missing"));
        }
    }
    item("ab_to_h_ab", "every v in H_ab has a->v and b->v", f);

    let f = h
        .h_c
        .iter()
        .filter(|&&v| !arc(v, l.a) && !arc(v, l.b))
        .map(|v| format!("{v} reaches neither a nor b directly"))
        .collect();
    item("h_c_to_a_or_b", "every v in H_c has v->a or v->b", f);

    let mut f = Vec::new();
    for &vc in &h.h_c {
        for &va in h.h_a.iter().chain(&h.h_b) {
            if arc(va, vc) {
                f.push(format!("{va}->{vc} present"));
            }
        }
    }
    item("no_h_ab_side_to_h_c", "no arc from H_a or H_b into H_c", f);

    let f = if arc(l.c, l.a) || arc(l.c, l.b) {
        Vec::new()
    } else {
        vec!["neither c->a nor c->b".to_string()]
    };
    item("c_to_a_or_b", "c->a or c->b", f);

    let mut f = Vec::new();
    if !arc(l.c, l.a) && !arc(l.b, l.a) {
        f.push("c->a and b->a both missing".to_string());
    }
    if !arc(l.c, l.b) && !arc(l.a, l.b) {
        f.push("c->b and a->b both missing".to_string());
    }
    item(
        "missing_c_arc_forces_ab_arc",
        "c-/->a implies b->a; c-/->b implies a->b",
        f,
    );

    let mut core: Vec<usize> = h.h_ab.clone();
    core.push(l.r);
    core.sort_unstable();
    let sub = graph.induced_subgraph(&core)?;
    let f = match strong_diameter(&sub) {
        Some(d) if d <= 2 => Vec::new(),
        Some(d) => vec![format!("induced strong diameter {d}")],
        None => vec!["induced subgraph not strongly connected".to_string()],
    };
    item(
        "h_ab_root_diameter_two",
        "H_ab + r induces strong diameter at most 2",
        f,
    );

    Ok(PropositionsReport { h_sets: h, items })
}
