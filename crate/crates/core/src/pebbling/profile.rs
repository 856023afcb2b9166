use serde::{Deserialize, Serialize};

use super::number::{classify_with, unsolvable_configurations, PebblingClass};
use super::solver::SolveOptions;
use super::Configuration;
use crate::digraph::{canonical_form, strong_connectivity, strong_diameter, Digraph};
use crate::error::Result;

/// Vertices grouped by pebble count: 0, 1, 2 and 3 or more.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigurationProfile {
    pub a0_vertices: Vec<usize>,
    pub a1_vertices: Vec<usize>,
    pub a2_vertices: Vec<usize>,
    pub a3plus_vertices: Vec<usize>,
    pub zero_count: usize,
}

pub fn profile(config: &Configuration) -> ConfigurationProfile {
    let mut p = ConfigurationProfile {
        a0_vertices: Vec::new(),
        a1_vertices: Vec::new(),
        a2_vertices: Vec::new(),
        a3plus_vertices: Vec::new(),
        zero_count: 0,
    };
    for (v, &c) in config.counts().iter().enumerate() {
        match c {
            0 => p.a0_vertices.push(v),
            1 => p.a1_vertices.push(v),
            2 => p.a2_vertices.push(v),
            _ => p.a3plus_vertices.push(v),
        }
    }
    p.zero_count = p.a0_vertices.len();
    p
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Two3No2Violation {
    pub root: usize,
    pub config: Configuration,
    pub reasons: Vec<String>,
}

/// Structure of size-`n` unsolvable configurations on 2-strongly-connected,
/// diameter-2, Class-1 oriented graphs: no vertex with 2 pebbles, exactly
/// two with 3, none with 4 or more, exactly four empty (root included).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Two3No2Report {
    pub applicable: bool,
    /// Why the hypotheses fail, when not applicable.
    pub scope_note: Option<String>,
    pub pass: bool,
    pub checked_configurations: usize,
    pub violations: Vec<Two3No2Violation>,
}

impl Two3No2Report {
    fn out_of_scope(note: impl Into<String>) -> Self {
        Two3No2Report {
            applicable: false,
            scope_note: Some(note.into()),
            pass: true,
            checked_configurations: 0,
            violations: Vec::new(),
        }
    }
}

pub fn verify_two3no2(graph: &Digraph) -> Result<Two3No2Report> {
    verify_two3no2_with(graph, SolveOptions::default())
}

pub fn verify_two3no2_with(graph: &Digraph, options: SolveOptions) -> Result<Two3No2Report> {
    let n = graph.n();
    if !graph.is_oriented() {
        return Ok(Two3No2Report::out_of_scope("not oriented"));
    }
    if n < 2 || strong_diameter(graph) != Some(2) {
        return Ok(Two3No2Report::out_of_scope("strong diameter is not 2"));
    }
    if strong_connectivity(graph)? < 2 {
        return Ok(Two3No2Report::out_of_scope("strong connectivity below 2"));
    }
    if n == 3 && canonical_form(graph)? == canonical_form(&Digraph::directed_cycle(3)?)? {
        return Ok(Two3No2Report::out_of_scope("directed 3-cycle"));
    }
    if classify_with(graph, options)? != PebblingClass::Class1 {
        return Ok(Two3No2Report::out_of_scope("not Class-1"));
    }

    let mut checked = 0;
    let mut violations = Vec::new();
    for root in 0..n {
        for config in unsolvable_configurations(graph, root, n, options)? {
            checked += 1;
            let p = profile(&config);
            let mut reasons = Vec::new();
            if !p.a2_vertices.is_empty() {
                reasons.push(format!("|A_2| = {}", p.a2_vertices.len()));
            }
            let threes = config.counts().iter().filter(|&&c| c == 3).count();
            if threes != 2 {
                reasons.push(format!("|A_3| = {threes}"));
            }
            if let Some(v) = config.counts().iter().position(|&c| c >= 4) {
                reasons.push(format!("vertex {v} holds {} pebbles", config.get(v)));
            }
            if p.zero_count != 4 {
                reasons.push(format!("{} empty vertices", p.zero_count));
            }
            if !reasons.is_empty() {
                violations.push(Two3No2Violation {
                    root,
                    config,
                    reasons,
                });
            }
        }
    }
    Ok(Two3No2Report {
        applicable: true,
        scope_note: None,
        pass: violations.is_empty(),
        checked_configurations: checked,
        violations,
    })
}
