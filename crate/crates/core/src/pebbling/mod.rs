//! The pebbling game: configurations, solvability, pebbling numbers.
//!
//! A pebbling move along `u -> v` removes two pebbles from `u` and adds one
//! to `v`. A configuration is `r`-solvable when some sequence of moves puts a
//! pebble on the root `r`.

mod number;
mod profile;
mod solver;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub use number::{
    classify, classify_with, max_unsolvable, max_unsolvable_with, pebbling_number,
    pebbling_number_rooted, pebbling_number_with, unsolvable_configurations, vertex_caps,
    PebblingClass, PebblingNumberResult, RootPebbling,
};
pub use profile::{
    profile, verify_two3no2, verify_two3no2_with, ConfigurationProfile, Two3No2Report,
    Two3No2Violation,
};
pub use solver::{
    is_solvable, node_budget_from_env, SolveOptions, Solver, DEFAULT_NODE_BUDGET, NODE_BUDGET_ENV,
};

/// Pebble counts per vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Configuration(Vec<u32>);

impl Configuration {
    pub fn new(counts: Vec<u32>) -> Self {
        Configuration(counts)
    }

    pub fn zeros(n: usize) -> Self {
        Configuration(vec![0; n])
    }

    /// `count` pebbles on `vertex`, nothing elsewhere.
    pub fn single(n: usize, vertex: usize, count: u32) -> Result<Self> {
        if vertex >= n {
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        let mut c = Configuration::zeros(n);
        c.0[vertex] = count;
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of pebbles.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_counts(self) -> Vec<u32> {
        self.0
    }

    /// Copy with one more pebble on `v`.
    pub fn with_added(&self, v: usize) -> Self {
        let mut c = self.clone();
        c.0[v] += 1;
        c
    }

    /// Pointwise `self <= other`.
    pub fn is_dominated_by(&self, other: &Configuration) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Parses either a JSON array (`[0,3,0]`) or the shorthand `1:3,2:1`
    /// (vertex:count pairs, unmentioned vertices get 0).
    pub fn parse_spec(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        let counts: Vec<u32> = if text.starts_with('[') {
            serde_json::from_str(text).map_err(|e| Error::MalformedConfiguration(e.to_string()))?
        } else {
            let mut counts = vec![0u32; n];
            let mut seen = vec![false; n];
            for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let (v, c) = part.split_once(':').ok_or_else(|| {
                    Error::MalformedConfiguration(format!("`{part}` is not vertex:count"))
                })?;
                let v: usize = v.trim().parse().map_err(|_| {
                    Error::MalformedConfiguration(format!("bad vertex in `{part}`"))
                })?;
                let c: u32 = c
                    .trim()
                    .parse()
                    .map_err(|_| Error::MalformedConfiguration(format!("bad count in `{part}`")))?;
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if seen[v] {
                    return Err(Error::MalformedConfiguration(format!(
                        "vertex {v} given more than once"
                    )));
                }
                seen[v] = true;
                counts[v] = c;
            }
            counts
        };
        if counts.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: counts.len(),
            });
        }
        Ok(Configuration(counts))
    }
}

impl From<Vec<u32>> for Configuration {
    fn from(counts: Vec<u32>) -> Self {
        Configuration(counts)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// One pebbling move along the arc `from -> to`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Move {
    pub from: usize,
    pub to: usize,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.from, self.to)
    }
}

/// Verdict plus, when solvable, a move sequence that puts a pebble on the
/// root. The witness is empty for unsolvable configurations.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SolveResult {
    pub solvable: bool,
    pub witness: Vec<Move>,
}

/// Applies `moves` to `config`, checking every move is legal. Returns the
/// final configuration.
pub fn replay(graph: &Digraph, config: &Configuration, moves: &[Move]) -> Result<Configuration> {
    check_dimensions(graph, config)?;
    let mut counts = config.0.clone();
    for (i, m) in moves.iter().enumerate() {
        if !graph.has_arc(m.from, m.to) {
            return Err(Error::InvalidParameter(format!(
                "move {i} ({m}) uses a missing arc"
            )));
        }
        if counts[m.from] < 2 {
            return Err(Error::InvalidParameter(format!(
                "move {i} ({m}) needs two pebbles on {}",
                m.from
            )));
        }
        counts[m.from] -= 2;
        counts[m.to] += 1;
    }
    Ok(Configuration(counts))
}

pub(crate) fn check_dimensions(graph: &Digraph, config: &Configuration) -> Result<()> {
    if config.len() != graph.n() {
        return Err(Error::DimensionMismatch {
            expected: graph.n(),
            got: config.len(),
        });
    }
    Ok(())
}

pub(crate) fn check_vertex(graph: &Digraph, v: usize) -> Result<()> {
    if v >= graph.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: graph.n(),
        });
    }
    Ok(())
}
