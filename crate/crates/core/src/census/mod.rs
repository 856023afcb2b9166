//! Exhaustive small-graph censuses persisted as line-delimited JSON, and
//! theorem-level verification over them.

mod verify;

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::digraph::{
    enumerate_digraphs, strong_connectivity, strong_diameter, Digraph, GraphClass,
};
use crate::error::{Error, Result};
use crate::pebbling::{pebbling_number_with, Configuration, PebblingClass, SolveOptions};

pub use verify::{verify_records, verify_theorem, TheoremId, TheoremReport, TheoremViolation};

/// One isomorphism class with its invariants. Field order is the on-disk
/// order. Pebbling fields are null for graphs that are not strongly
/// connected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusRecord {
    pub canonical_form: String,
    pub n: usize,
    pub arc_count: usize,
    pub oriented: bool,
    pub strong_diameter: Option<u32>,
    pub strong_connectivity: usize,
    pub pi: Option<u32>,
    pub per_root_pi: Option<Vec<u32>>,
    pub class: Option<PebblingClass>,
    pub witness_root: Option<usize>,
    pub witness_config: Option<Configuration>,
    pub graph: Vec<[usize; 2]>,
}

impl CensusRecord {
    pub fn from_class(class: &GraphClass, options: SolveOptions) -> Result<Self> {
        let g = &class.graph;
        let n = g.n();
        let diameter = strong_diameter(g);
        let connectivity = if n >= 2 { strong_connectivity(g)? } else { 0 };
        let mut record = CensusRecord {
            canonical_form: class.form.to_hex(),
            n,
            arc_count: g.arc_count(),
            oriented: g.is_oriented(),
            strong_diameter: diameter,
            strong_connectivity: connectivity,
            pi: None,
            per_root_pi: None,
            class: None,
            witness_root: None,
            witness_config: None,
            graph: g.arc_list(),
        };
        if diameter.is_some() {
            let result = pebbling_number_with(g, options)?;
            let extremal = result.extremal_root();
            record.pi = Some(result.pi);
            record.per_root_pi = Some(result.per_root.iter().map(|r| r.rooted_pi).collect());
            record.class = Some(PebblingClass::from_pi(result.pi, n));
            record.witness_root = Some(extremal.root);
            record.witness_config = Some(extremal.max_unsolvable_witness.clone());
        }
        Ok(record)
    }

    pub fn digraph(&self) -> Result<Digraph> {
        Digraph::from_arcs(self.n, self.graph.iter().map(|&[u, v]| (u, v)))
    }

    /// Compact single-line JSON.
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }
}

/// A census scope restriction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusFilter {
    StronglyConnected,
    Diameter(u32),
    /// Strong connectivity at least the given value.
    MinConnectivity(usize),
}

impl CensusFilter {
    pub fn accepts(&self, g: &Digraph) -> bool {
        match *self {
            CensusFilter::StronglyConnected => g.is_strongly_connected(),
            CensusFilter::Diameter(d) => strong_diameter(g) == Some(d),
            CensusFilter::MinConnectivity(k) => {
                k == 0 || (g.n() >= 2 && strong_connectivity(g).is_ok_and(|c| c >= k))
            }
        }
    }

    /// Parses a comma-separated list such as
    /// `strongly-connected,diameter=2,connectivity=2`.
    pub fn parse_list(text: &str) -> Result<Vec<Self>> {
        text.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl FromStr for CensusFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (key, value) = match s.split_once('=') {
            Some((k, v)) => (k.trim(), Some(v.trim())),
            None => (s.trim(), None),
        };
        let bad = || Error::InvalidParameter(format!("bad filter `{s}`"));
        match (key, value) {
            ("strongly-connected", None | Some("true")) => Ok(CensusFilter::StronglyConnected),
            ("diameter", Some(v)) => v.parse().map(CensusFilter::Diameter).map_err(|_| bad()),
            ("connectivity", Some(v)) => v
                .parse()
                .map(CensusFilter::MinConnectivity)
                .map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

/// Census records in canonical-form order.
pub fn census_records(
    n: usize,
    oriented_only: bool,
    filters: &[CensusFilter],
    long_running: bool,
    options: SolveOptions,
) -> Result<Vec<CensusRecord>> {
    let classes = enumerate_digraphs(n, oriented_only, long_running, |g| {
        filters.iter().all(|f| f.accepts(g))
    })?;
    classes
        .par_iter()
        .map(|c| CensusRecord::from_class(c, options))
        .collect()
}

pub fn write_records<W: Write>(records: &[CensusRecord], mut out: W) -> std::io::Result<()> {
    for r in records {
        writeln!(out, "{}", r.to_line())?;
    }
    out.flush()
}

/// Runs a census and writes it to `out`, replacing any previous content.
/// Returns the number of records written.
pub fn run_census(
    n: usize,
    oriented_only: bool,
    filters: &[CensusFilter],
    long_running: bool,
    out: &Path,
) -> Result<usize> {
    let records = census_records(
        n,
        oriented_only,
        filters,
        long_running,
        SolveOptions::default(),
    )?;
    let file = File::create(out).map_err(|e| Error::io(out, e))?;
    write_records(&records, BufWriter::new(file)).map_err(|e| Error::io(out, e))?;
    Ok(records.len())
}

pub fn parse_records<R: BufRead>(input: R) -> Result<Vec<CensusRecord>> {
    let mut records = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::MalformedRecord {
            line: i + 1,
            message: e.to_string(),
        })?;
        if line.trim().is_empty() {
            continue;
        }
        let record: CensusRecord =
            serde_json::from_str(&line).map_err(|e| Error::MalformedRecord {
                line: i + 1,
                message: e.to_string(),
            })?;
        record.digraph().map_err(|e| Error::MalformedRecord {
            line: i + 1,
            message: e.to_string(),
        })?;
        records.push(record);
    }
    Ok(records)
}

pub fn read_records(path: &Path) -> Result<Vec<CensusRecord>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    parse_records(BufReader::new(file))
}
