//! Maximum unsolvable configurations and pebbling numbers.
//!
//! Unsolvable configurations form a down-set, so every unsolvable
//! configuration of size `k + 1` is one pebble above some unsolvable
//! configuration of size `k`; in fact all of its one-pebble-smaller
//! neighbours are unsolvable. The search grows the down-set level by level
//! from the empty configuration, only calling the solver on candidates whose
//! every lower neighbour is already known to be unsolvable.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::solver::{SolveOptions, Solver};
use super::{check_vertex, Configuration};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Per-vertex ceiling for unsolvable configurations rooted at `root`: a
/// vertex at distance `l` holds at most `2^l - 1` pebbles (the root 0).
/// Vertices that cannot reach the root are unbounded.
pub fn vertex_caps(graph: &Digraph, root: usize) -> Result<Vec<Option<u32>>> {
    check_vertex(graph, root)?;
    let dist = crate::digraph::DistanceMatrix::new(graph).column(root);
    Ok(dist
        .iter()
        .map(|d| d.map(|d| 1u32.checked_shl(d).map_or(u32::MAX, |t| t - 1)))
        .collect())
}

/// Levels `0..=K` of the unsolvable down-set, each sorted ascending, where
/// `K` is the largest unsolvable size (or `stop_at`, whichever is smaller).
fn unsolvable_levels(
    graph: &Digraph,
    root: usize,
    options: SolveOptions,
    stop_at: Option<usize>,
) -> Result<Vec<Vec<Vec<u32>>>> {
    if !graph.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let caps: Vec<u32> = vertex_caps(graph, root)?
        .into_iter()
        .map(|c| c.expect("strongly connected"))
        .collect();
    let solver = Solver::new(graph, root, options)?;
    let n = graph.n();
    let mut levels = vec![vec![vec![0u32; n]]];
    loop {
        let size = levels.len();
        if stop_at.is_some_and(|s| size > s) {
            break;
        }
        let current = levels.last().expect("non-empty");
        let known: HashSet<&[u32]> = current.iter().map(Vec::as_slice).collect();
        let mut candidates: Vec<Vec<u32>> = Vec::new();
        let mut queued: HashSet<Vec<u32>> = HashSet::new();
        for c in current {
            for v in 0..n {
                if c[v] >= caps[v] {
                    continue;
                }
                let mut next = c.clone();
                next[v] += 1;
                if queued.contains(&next) {
                    continue;
                }
                let mut lower = next.clone();
                let all_lower_unsolvable = (0..n).filter(|&w| next[w] > 0).all(|w| {
                    lower[w] -= 1;
                    let hit = known.contains(lower.as_slice());
                    lower[w] += 1;
                    hit
                });
                if all_lower_unsolvable {
                    queued.insert(next.clone());
                    candidates.push(next);
                }
            }
        }
        let mut level = Vec::new();
        for c in candidates {
            if !solver.solve(&Configuration::new(c.clone()))?.solvable {
                level.push(c);
            }
        }
        if level.is_empty() {
            break;
        }
        level.sort_unstable();
        levels.push(level);
    }
    Ok(levels)
}

/// A largest `root`-unsolvable configuration; ties go to the
/// lexicographically smallest count vector.
pub fn max_unsolvable(graph: &Digraph, root: usize) -> Result<Configuration> {
    max_unsolvable_with(graph, root, SolveOptions::default())
}

pub fn max_unsolvable_with(
    graph: &Digraph,
    root: usize,
    options: SolveOptions,
) -> Result<Configuration> {
    let levels = unsolvable_levels(graph, root, options, None)?;
    let top = levels
        .last()
        .expect("the empty configuration is unsolvable");
    Ok(Configuration::new(top[0].clone()))
}

/// Every `root`-unsolvable configuration with exactly `size` pebbles, sorted.
pub fn unsolvable_configurations(
    graph: &Digraph,
    root: usize,
    size: usize,
    options: SolveOptions,
) -> Result<Vec<Configuration>> {
    let mut levels = unsolvable_levels(graph, root, options, Some(size))?;
    if levels.len() <= size {
        return Ok(Vec::new());
    }
    Ok(levels
        .swap_remove(size)
        .into_iter()
        .map(Configuration::new)
        .collect())
}

/// `1 +` the size of a maximum unsolvable configuration for `root`.
pub fn pebbling_number_rooted(graph: &Digraph, root: usize) -> Result<u32> {
    let witness = max_unsolvable(graph, root)?;
    Ok(witness.size() as u32 + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootPebbling {
    pub root: usize,
    pub rooted_pi: u32,
    pub max_unsolvable_witness: Configuration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PebblingNumberResult {
    pub pi: u32,
    pub per_root: Vec<RootPebbling>,
}

impl PebblingNumberResult {
    /// The first root attaining the pebbling number.
    pub fn extremal_root(&self) -> &RootPebbling {
        self.per_root
            .iter()
            .find(|r| r.rooted_pi == self.pi)
            .expect("pi is attained")
    }
}

pub fn pebbling_number(graph: &Digraph) -> Result<PebblingNumberResult> {
    pebbling_number_with(graph, SolveOptions::default())
}

/// Pebbling number with per-root detail; roots are solved independently.
pub fn pebbling_number_with(
    graph: &Digraph,
    options: SolveOptions,
) -> Result<PebblingNumberResult> {
    if !graph.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let per_root = (0..graph.n())
        .into_par_iter()
        .map(|root| {
            let witness = max_unsolvable_with(graph, root, options)?;
            Ok(RootPebbling {
                root,
                rooted_pi: witness.size() as u32 + 1,
                max_unsolvable_witness: witness,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let pi = per_root.iter().map(|r| r.rooted_pi).max().expect("n >= 1");
    Ok(PebblingNumberResult { pi, per_root })
}

/// Position of the pebbling number relative to the order `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PebblingClass {
    /// `pi = n`.
    Class0,
    /// `pi = n + 1`.
    Class1,
    /// `pi = n + delta` with `delta >= 2`.
    Above(u32),
}

impl PebblingClass {
    pub fn from_pi(pi: u32, n: usize) -> Self {
        let n = n as u32;
        match pi.checked_sub(n) {
            Some(0) | None => PebblingClass::Class0,
            Some(1) => PebblingClass::Class1,
            Some(delta) => PebblingClass::Above(delta),
        }
    }
}

impl fmt::Display for PebblingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PebblingClass::Class0 => f.write_str("Class0"),
            PebblingClass::Class1 => f.write_str("Class1"),
            PebblingClass::Above(d) => write!(f, "Above({d})"),
        }
    }
}

impl FromStr for PebblingClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Class0" => Ok(PebblingClass::Class0),
            "Class1" => Ok(PebblingClass::Class1),
            _ => s
                .strip_prefix("Above(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|d| d.parse().ok())
                .filter(|&d| d >= 2)
                .map(PebblingClass::Above)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown class `{s}`"))),
        }
    }
}

impl Serialize for PebblingClass {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PebblingClass {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn classify(graph: &Digraph) -> Result<PebblingClass> {
    classify_with(graph, SolveOptions::default())
}

pub fn classify_with(graph: &Digraph, options: SolveOptions) -> Result<PebblingClass> {
    let result = pebbling_number_with(graph, options)?;
    Ok(PebblingClass::from_pi(result.pi, graph.n()))
}
