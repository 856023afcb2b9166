//! Theorem checks over census records. Each theorem's hypotheses select the
//! records in scope; its conclusion is then asserted per record.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{read_records, CensusRecord};
use crate::constructions::bound_dboundupper;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::family_f::find_labeling;
use crate::pebbling::{
    max_unsolvable_with, pebbling_number_with, verify_two3no2_with, Configuration, PebblingClass,
    SolveOptions, Solver,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Prop3OrLess,
    NoBiNPlus1,
    Mixed2Bound,
    Two3No2,
    FamilyFSoundness,
    FamilyFCompleteness,
    DBoundUpper,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::Prop3OrLess,
        TheoremId::NoBiNPlus1,
        TheoremId::Mixed2Bound,
        TheoremId::Two3No2,
        TheoremId::FamilyFSoundness,
        TheoremId::FamilyFCompleteness,
        TheoremId::DBoundUpper,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Prop3OrLess => "prop_3orless",
            TheoremId::NoBiNPlus1 => "thm_noBiN+1",
            TheoremId::Mixed2Bound => "thm_mixed2_bound",
            TheoremId::Two3No2 => "thm_two3no2",
            TheoremId::FamilyFSoundness => "family_f_soundness",
            TheoremId::FamilyFCompleteness => "family_f_completeness",
            TheoremId::DBoundUpper => "thm_dboundupper",
        }
    }

    fn scope(&self) -> &'static str {
        match self {
            TheoremId::Prop3OrLess => "strong diameter 2; every root's maximum unsolvable configuration",
            TheoremId::NoBiNPlus1 => "oriented, strong diameter 2",
            TheoremId::Mixed2Bound => "strong diameter 2",
            TheoremId::Two3No2 => {
                "oriented, strong diameter 2, strong connectivity >= 2, Class1, not the directed 3-cycle; \
                 every unsolvable configuration of size n"
            }
            TheoremId::FamilyFSoundness => "oriented, strong diameter 2, strong connectivity >= 2, admits a family labelling",
            TheoremId::FamilyFCompleteness => "oriented, strong diameter 2, strong connectivity >= 2, Class1",
            TheoremId::DBoundUpper => "strongly connected, strong diameter >= 1",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremViolation {
    pub canonical_form: String,
    /// Graph file contents, accepted by `parse_digraph`.
    pub graph: String,
    pub detail: String,
    pub reproduce: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub scope: String,
    pub checked_count: usize,
    pub violations: Vec<TheoremViolation>,
    pub pass: bool,
}

/// Outcome for one record: out of scope, or in scope with its violations.
type Verdict = Option<Vec<String>>;

fn reproduce(id: TheoremId, graph: &Digraph) -> String {
    let command = match id {
        TheoremId::Two3No2 | TheoremId::FamilyFSoundness | TheoremId::FamilyFCompleteness => {
            "classify"
        }
        _ => "number",
    };
    format!(
        "echo '{}' > g.json && dipebble {command} --graph g.json",
        graph.to_graph_file().trim_end()
    )
}

fn pi_of(record: &CensusRecord, graph: &Digraph, options: SolveOptions) -> Result<u32> {
    match record.pi {
        Some(pi) => Ok(pi),
        None => Ok(pebbling_number_with(graph, options)?.pi),
    }
}

fn class_of(
    record: &CensusRecord,
    graph: &Digraph,
    options: SolveOptions,
) -> Result<PebblingClass> {
    Ok(PebblingClass::from_pi(
        pi_of(record, graph, options)?,
        graph.n(),
    ))
}

fn is_three_cycle(g: &Digraph) -> bool {
    g.n() == 3 && g.arc_count() == 3 && g.is_strongly_connected()
}

fn check_record(
    id: TheoremId,
    r: &CensusRecord,
    g: &Digraph,
    options: SolveOptions,
) -> Result<Verdict> {
    let d2 = r.strong_diameter == Some(2);
    let core = r.oriented && d2 && r.strong_connectivity >= 2;
    let n = r.n;
    Ok(match id {
        TheoremId::NoBiNPlus1 => (r.oriented && d2)
            .then(|| -> Result<_> {
                let pi = pi_of(r, g, options)?;
                Ok(((pi as usize) > n + 1)
                    .then(|| format!("pi = {pi} exceeds n + 1 = {}", n + 1))
                    .into_iter()
                    .collect())
            })
            .transpose()?,

        TheoremId::Mixed2Bound => d2
            .then(|| -> Result<_> {
                let pi = pi_of(r, g, options)?;
                Ok((2 * (pi as usize) >= 3 * n)
                    .then(|| format!("pi = {pi} is not below 3n/2 = {}/2", 3 * n))
                    .into_iter()
                    .collect())
            })
            .transpose()?,

        TheoremId::Prop3OrLess => {
            if !d2 {
                return Ok(None);
            }
            let mut found = Vec::new();
            if let Some(w) = &r.witness_config {
                if let Some(v) = w.counts().iter().position(|&c| c > 3) {
                    found.push(format!(
                        "recorded witness {w} holds {} on vertex {v}",
                        w.get(v)
                    ));
                }
            }
            // Without the 2^dist shortcut the cap of 3 is not assumed.
            let plain = SolveOptions {
                shortcuts: false,
                ..options
            };
            for root in 0..n {
                let w = max_unsolvable_with(g, root, options)?;
                if let Some(v) = w.counts().iter().position(|&c| c > 3) {
                    found.push(format!(
                        "root {root}: witness {w} holds {} on vertex {v}",
                        w.get(v)
                    ));
                }
                let solver = Solver::new(g, root, plain)?;
                for v in (0..n).filter(|&v| v != root) {
                    let four = Configuration::single(n, v, 4)?;
                    if !solver.solve(&four)?.solvable {
                        found.push(format!(
                            "root {root}: 4 pebbles on vertex {v} are unsolvable"
                        ));
                    }
                }
            }
            Some(found)
        }

        TheoremId::Two3No2 => {
            if !core || is_three_cycle(g) || class_of(r, g, options)? != PebblingClass::Class1 {
                return Ok(None);
            }
            match verify_two3no2_with(g, options) {
                Ok(report) => Some(
                    report
                        .violations
                        .iter()
                        .map(|v| {
                            format!("root {}: {} ({})", v.root, v.config, v.reasons.join(", "))
                        })
                        .collect(),
                ),
                Err(Error::BudgetExceeded(b)) => {
                    Some(vec![format!("budget-exceeded after {b} states")])
                }
                Err(e) => return Err(e),
            }
        }

        TheoremId::FamilyFSoundness => {
            if !core {
                return Ok(None);
            }
            match find_labeling(g)? {
                None => None,
                Some(l) => {
                    let class = class_of(r, g, options)?;
                    Some(
                        (class != PebblingClass::Class1)
                            .then(|| format!("member under labelling {l} is {class}"))
                            .into_iter()
                            .collect(),
                    )
                }
            }
        }

        TheoremId::FamilyFCompleteness => {
            if !core || class_of(r, g, options)? != PebblingClass::Class1 {
                return Ok(None);
            }
            Some(
                find_labeling(g)?
                    .is_none()
                    .then(|| "Class1 graph admits no family labelling".to_string())
                    .into_iter()
                    .collect(),
            )
        }

        TheoremId::DBoundUpper => match r.strong_diameter {
            Some(d) if d >= 1 => {
                let pi = pi_of(r, g, options)?;
                let bound = bound_dboundupper(n, d as usize)?;
                Some(
                    (BigInt::from(pi) > bound.ceil)
                        .then(|| {
                            format!("pi = {pi} exceeds ceil({}) = {}", bound.value, bound.ceil)
                        })
                        .into_iter()
                        .collect(),
                )
            }
            _ => None,
        },
    })
}

/// Checks one theorem over in-memory records.
pub fn verify_records(
    records: &[CensusRecord],
    id: TheoremId,
    options: SolveOptions,
) -> Result<TheoremReport> {
    let verdicts = records
        .par_iter()
        .map(|r| {
            let g = r.digraph()?;
            let verdict = check_record(id, r, &g, options)?;
            Ok((r, g, verdict))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut checked = 0;
    let mut violations = Vec::new();
    for (r, g, verdict) in verdicts {
        let Some(found) = verdict else { continue };
        checked += 1;
        for detail in found {
            violations.push(TheoremViolation {
                canonical_form: r.canonical_form.clone(),
                graph: g.to_graph_file().trim_end().to_string(),
                detail,
                reproduce: reproduce(id, &g),
            });
        }
    }
    let mut scope = id.scope().to_string();
    if checked == 0 {
        scope.push_str(" (vacuous: no record in scope)");
    }
    Ok(TheoremReport {
        theorem_id: id.as_str().to_string(),
        scope,
        checked_count: checked,
        pass: violations.is_empty(),
        violations,
    })
}

/// Reads a census file and checks one theorem over it.
pub fn verify_theorem(path: &Path, id: &str) -> Result<TheoremReport> {
    let id: TheoremId = id.parse()?;
    let records = read_records(path)?;
    verify_records(&records, id, SolveOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{census_records, CensusFilter};

    fn census(n: usize, oriented: bool) -> Vec<CensusRecord> {
        census_records(
            n,
            oriented,
            &[CensusFilter::StronglyConnected],
            false,
            SolveOptions::default(),
        )
        .unwrap()
    }

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert!(matches!(
            "thm_nope".parse::<TheoremId>(),
            Err(Error::UnknownTheorem(_))
        ));
    }

    #[test]
    fn n5_oriented_theorems_pass() {
        let recs = census(5, true);
        for id in [
            TheoremId::NoBiNPlus1,
            TheoremId::Prop3OrLess,
            TheoremId::DBoundUpper,
        ] {
            let report = verify_records(&recs, id, SolveOptions::default()).unwrap();
            assert!(report.pass, "{id}: {:?}", report.violations);
            assert!(report.checked_count > 0);
        }
    }

    #[test]
    fn n4_oriented_diameter_two_is_vacuous() {
        let recs = census(4, true);
        let report = verify_records(&recs, TheoremId::NoBiNPlus1, SolveOptions::default()).unwrap();
        assert!(report.pass);
        assert_eq!(report.checked_count, 0);
    }

    #[test]
    fn n3_general_mixed2_bound() {
        let report = verify_records(
            &census(3, false),
            TheoremId::Mixed2Bound,
            SolveOptions::default(),
        )
        .unwrap();
        assert!(report.pass);
        assert!(report.checked_count > 0);
    }

    #[test]
    fn violation_carries_reproducible_graph() {
        let mut recs = census(3, true);
        for r in &mut recs {
            if r.pi.is_some() {
                r.pi = Some(99);
            }
        }
        let report = verify_records(&recs, TheoremId::NoBiNPlus1, SolveOptions::default()).unwrap();
        assert!(!report.pass);
        for v in &report.violations {
            crate::digraph::parse_digraph(&v.graph).unwrap();
            assert!(v.reproduce.contains("dipebble number"));
        }
    }

    #[test]
    fn vacuous_scope_is_flagged() {
        let report = verify_records(&[], TheoremId::Two3No2, SolveOptions::default()).unwrap();
        assert!(report.pass);
        assert_eq!(report.checked_count, 0);
        assert!(report.scope.contains("vacuous"));
    }

    #[test]
    fn tiny_budget_is_a_violation() {
        let member = crate::family_f::search_family_f(6, Some(1))
            .unwrap()
            .remove(0);
        let class = crate::digraph::GraphClass {
            form: member.form.clone(),
            graph: member.graph.clone(),
        };
        let record = CensusRecord::from_class(&class, SolveOptions::default()).unwrap();
        let tight = SolveOptions {
            node_budget: 1,
            shortcuts: true,
        };
        let report = verify_records(&[record], TheoremId::Two3No2, tight).unwrap();
        assert!(!report.pass);
        assert!(report.violations[0].detail.starts_with("budget-exceeded"));
    }
}
