mod common;

use std::collections::BTreeSet;
use std::fs;

use common::oracle_solvable;
use dipebble::census::*;
use dipebble::digraph::parse_digraph;
use dipebble::pebbling::{PebblingClass, SolveOptions};
use dipebble::Error;

fn sc_d2() -> Vec<CensusFilter> {
    CensusFilter::parse_list("strongly-connected,diameter=2").unwrap()
}

#[test]
fn census_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    let na = run_census(4, false, &[CensusFilter::StronglyConnected], false, &a).unwrap();
    let nb = run_census(4, false, &[CensusFilter::StronglyConnected], false, &b).unwrap();
    assert_eq!(na, nb);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    // re-running over an existing file overwrites it identically
    run_census(4, false, &[CensusFilter::StronglyConnected], false, &a).unwrap();
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(fs::read_to_string(&a).unwrap().lines().count(), na);
}

#[test]
fn small_census_examples() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.jsonl");
    assert_eq!(run_census(3, true, &sc_d2(), false, &out).unwrap(), 1);
    let recs = read_records(&out).unwrap();
    assert_eq!(recs[0].pi, Some(4));
    assert_eq!(recs[0].class, Some(PebblingClass::Class1));

    assert_eq!(run_census(2, false, &[], false, &out).unwrap(), 3);
    let recs = read_records(&out).unwrap();
    let strong: Vec<_> = recs.iter().filter(|r| r.pi.is_some()).collect();
    assert_eq!(strong.len(), 1);
    assert_eq!(
        (strong[0].pi, strong[0].class),
        (Some(2), Some(PebblingClass::Class0))
    );
    assert!(recs
        .iter()
        .filter(|r| r.pi.is_none())
        .all(|r| r.strong_diameter.is_none() && r.witness_config.is_none()));
}

#[test]
fn witnesses_are_unsolvable_by_oracle() {
    let recs = census_records(
        4,
        false,
        &[CensusFilter::StronglyConnected],
        false,
        SolveOptions::default(),
    )
    .unwrap();
    for r in &recs {
        let g = r.digraph().unwrap();
        let w = r.witness_config.as_ref().unwrap();
        assert!(!oracle_solvable(&g, w.counts(), r.witness_root.unwrap()));
        assert_eq!(w.size() + 1, r.pi.unwrap() as u64);
    }
}

#[test]
fn forms_are_unique_and_sorted() {
    let recs = census_records(5, true, &[], false, SolveOptions::default()).unwrap();
    assert_eq!(recs.len(), 582);
    let forms: Vec<_> = recs.iter().map(|r| r.canonical_form.clone()).collect();
    let set: BTreeSet<_> = forms.iter().cloned().collect();
    assert_eq!(set.len(), forms.len());
    assert_eq!(set.into_iter().collect::<Vec<_>>(), forms);
}

#[test]
fn census_orders_do_not_share_classes() {
    let four: BTreeSet<_> = census_records(4, false, &[], false, SolveOptions::default())
        .unwrap()
        .into_iter()
        .map(|r| r.canonical_form)
        .collect();
    for n in [3, 5] {
        let other = census_records(n, true, &[], false, SolveOptions::default()).unwrap();
        assert!(other.iter().all(|r| !four.contains(&r.canonical_form)));
    }
}

#[test]
fn verify_theorem_examples() {
    let dir = tempfile::tempdir().unwrap();
    let general = dir.path().join("g4.jsonl");
    run_census(
        4,
        false,
        &[CensusFilter::StronglyConnected],
        false,
        &general,
    )
    .unwrap();
    for id in ["thm_mixed2_bound", "prop_3orless", "thm_dboundupper"] {
        let report = verify_theorem(&general, id).unwrap();
        assert!(report.pass, "{id}");
        assert!(report.checked_count > 0, "{id}");
        assert_eq!(report.theorem_id, id);
    }
    let oriented = dir.path().join("o4.jsonl");
    run_census(4, true, &sc_d2(), false, &oriented).unwrap();
    let report = verify_theorem(&oriented, "thm_noBiN+1").unwrap();
    assert!(report.pass && report.violations.is_empty());
}

#[test]
fn verify_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.jsonl");
    fs::write(&path, "not json\n").unwrap();
    assert!(matches!(
        verify_theorem(&path, "thm_noBiN+1"),
        Err(Error::MalformedRecord { line: 1, .. })
    ));
    assert!(matches!(
        verify_theorem(&path, "thm_unknown"),
        Err(Error::UnknownTheorem(_))
    ));
    assert!(matches!(
        verify_theorem(&dir.path().join("missing"), "thm_noBiN+1"),
        Err(Error::Io { .. })
    ));
    assert!(run_census(4, false, &[], false, &dir.path().join("no/such/dir/out")).is_err());
    assert!(run_census(8, false, &[], true, &path).is_err());
}

#[test]
fn failing_report_carries_parseable_graphs() {
    let mut recs = census_records(3, false, &sc_d2(), false, SolveOptions::default()).unwrap();
    for r in &mut recs {
        r.pi = Some(100);
    }
    let report = verify_records(&recs, TheoremId::Mixed2Bound, SolveOptions::default()).unwrap();
    assert!(!report.pass);
    assert_eq!(report.violations.len(), recs.len());
    for v in &report.violations {
        parse_digraph(&v.graph).unwrap();
        assert!(v.reproduce.starts_with("echo '"));
    }
}

#[test]
fn family_theorems_on_six_vertex_census() {
    let filters = CensusFilter::parse_list("diameter=2,connectivity=2").unwrap();
    let recs = census_records(6, true, &filters, false, SolveOptions::default()).unwrap();
    for id in [
        TheoremId::FamilyFSoundness,
        TheoremId::FamilyFCompleteness,
        TheoremId::Two3No2,
    ] {
        let report = verify_records(&recs, id, SolveOptions::default()).unwrap();
        assert!(report.pass, "{id}: {:?}", report.violations);
        assert_eq!(report.checked_count, 4, "{id}");
    }
}
