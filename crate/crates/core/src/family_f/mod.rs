//! The Class-1 family of 2-strongly-connected, diameter-2 oriented graphs
//! built around the oriented 6-cycle `p -> c <- q -> b -> r <- a <- p`.
//!
//! Membership additionally requires that every directed path
//! * from `p` to `r` contains `a`, or both `c` and `b`;
//! * from `q` to `r` contains `b`, or both `c` and `a`;
//! * from `c` to `r` contains `a` or `b`.
//!
//! Paths are simple. Each condition is decided by deleting vertices: the
//! `p` condition fails iff `r` is reachable from `p` avoiding `{a, c}` or
//! avoiding `{a, b}`, and symmetrically for `q`; the `c` condition fails iff
//! `r` is reachable from `c` avoiding `{a, b}`.

mod props;
mod search;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::digraph::{bit, bits, strong_connectivity, strong_diameter, Digraph};
use crate::error::{Error, Result};

pub use props::{
    evaluate_f_propositions, verify_f_propositions, PropositionResult, PropositionsReport,
};
pub use search::{
    find_labeling, member_records, search_family_f, FamilyMember, MemberRecord, MAX_SEARCH_ORDER,
};

/// Role assignment for the six distinguished vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyFLabeling {
    pub p: usize,
    pub q: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub r: usize,
}

impl FamilyFLabeling {
    pub fn new(p: usize, q: usize, a: usize, b: usize, c: usize, r: usize) -> Result<Self> {
        let l = FamilyFLabeling { p, q, a, b, c, r };
        let vs = l.vertices();
        for i in 0..6 {
            for j in i + 1..6 {
                if vs[i] == vs[j] {
                    return Err(Error::InvalidLabeling(format!(
                        "vertex {} is used for two roles",
                        vs[i]
                    )));
                }
            }
        }
        Ok(l)
    }

    /// `[p, q, a, b, c, r]`.
    pub fn vertices(&self) -> [usize; 6] {
        [self.p, self.q, self.a, self.b, self.c, self.r]
    }

    pub fn mask(&self) -> u64 {
        self.vertices().iter().fold(0, |m, &v| m | bit(v))
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        if n < 6 {
            return Err(Error::InvalidLabeling(format!(
                "six distinct vertices are needed, the graph has {n}"
            )));
        }
        if let Some(&v) = self.vertices().iter().find(|&&v| v >= n) {
            return Err(Error::InvalidLabeling(format!(
                "vertex {v} is out of range for a graph on {n} vertices"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for FamilyFLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{}",
            self.p, self.q, self.a, self.b, self.c, self.r
        )
    }
}

impl FromStr for FamilyFLabeling {
    type Err = Error;

    /// `p,q,a,b,c,r`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidLabeling(format!("`{x}` is not a vertex id")))
            })
            .collect::<Result<Vec<_>>>()?;
        match parts[..] {
            [p, q, a, b, c, r] => FamilyFLabeling::new(p, q, a, b, c, r),
            _ => Err(Error::InvalidLabeling(format!(
                "expected six comma-separated vertices, got {}",
                parts.len()
            ))),
        }
    }
}

/// Intermediary vertex sets of a member. None contains a labelled vertex.
///
/// `h_c` collects interiors of paths that leave `c` and stop at the first of
/// `a`, `b` they meet: a path from `c` to `a` through `b` does not count.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HSets {
    pub h_a: Vec<usize>,
    pub h_b: Vec<usize>,
    pub h_c: Vec<usize>,
    pub h_ab: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFReport {
    pub oriented: bool,
    pub two_connected: bool,
    pub diameter_two: bool,
    pub cycle_orientation: bool,
    pub p_paths: bool,
    pub q_paths: bool,
    pub c_paths: bool,
    pub member: bool,
    /// Present for members only.
    pub h_sets: Option<HSets>,
}

/// The six arcs of the oriented 6-cycle.
pub(crate) fn cycle_arcs(l: &FamilyFLabeling) -> [(usize, usize); 6] {
    [
        (l.p, l.c),
        (l.q, l.c),
        (l.q, l.b),
        (l.b, l.r),
        (l.a, l.r),
        (l.p, l.a),
    ]
}

/// `(p condition, q condition, c condition)` via the deletion equivalence.
pub(crate) fn path_conditions(g: &Digraph, l: &FamilyFLabeling) -> (bool, bool, bool) {
    let all = g.vertex_mask();
    let avoiding = |src: usize, x: usize, y: usize| -> bool {
        g.reachable_within(src, all & !(bit(x) | bit(y))) & bit(l.r) == 0
    };
    let p_ok = avoiding(l.p, l.a, l.c) && avoiding(l.p, l.a, l.b);
    let q_ok = avoiding(l.q, l.b, l.c) && avoiding(l.q, l.b, l.a);
    let c_ok = avoiding(l.c, l.a, l.b);
    (p_ok, q_ok, c_ok)
}

/// Evaluates every defining condition under the labelling.
pub fn check_family_f(graph: &Digraph, labeling: &FamilyFLabeling) -> Result<FamilyFReport> {
    labeling.check_range(graph.n())?;
    let oriented = graph.is_oriented();
    let two_connected = strong_connectivity(graph)? >= 2;
    let diameter_two = strong_diameter(graph) == Some(2);
    let cycle_orientation = cycle_arcs(labeling)
        .iter()
        .all(|&(u, v)| graph.has_arc(u, v));
    let (p_paths, q_paths, c_paths) = path_conditions(graph, labeling);
    let member = oriented
        && two_connected
        && diameter_two
        && cycle_orientation
        && p_paths
        && q_paths
        && c_paths;
    Ok(FamilyFReport {
        oriented,
        two_connected,
        diameter_two,
        cycle_orientation,
        p_paths,
        q_paths,
        c_paths,
        member,
        h_sets: member.then(|| h_sets_unchecked(graph, labeling)),
    })
}

/// Intermediary sets of a verified member.
pub fn compute_h_sets(graph: &Digraph, labeling: &FamilyFLabeling) -> Result<HSets> {
    if !check_family_f(graph, labeling)?.member {
        return Err(Error::NotAMember);
    }
    Ok(h_sets_unchecked(graph, labeling))
}

/// Vertices strictly inside some simple directed path `from -> ... -> to`
/// whose vertices all lie in `allowed`. Exhaustive path search.
pub fn interior_of_simple_paths(graph: &Digraph, from: usize, to: usize, allowed: u64) -> u64 {
    fn walk(g: &Digraph, at: usize, to: usize, allowed: u64, on_path: u64, found: &mut u64) {
        for next in bits(g.out_mask(at) & allowed & !on_path) {
            if next == to {
                *found |= on_path;
            } else {
                walk(g, next, to, allowed, on_path | bit(next), found);
            }
        }
    }
    let mut found = 0;
    if from != to {
        walk(graph, from, to, allowed | bit(to), bit(from), &mut found);
    }
    found & !bit(from)
}

pub(crate) fn h_sets_unchecked(g: &Digraph, l: &FamilyFLabeling) -> HSets {
    let all = g.vertex_mask();
    let labelled = l.mask();
    let h_a = interior_of_simple_paths(g, l.p, l.a, all & !bit(l.c)) & !labelled;
    let h_b = interior_of_simple_paths(g, l.q, l.b, all & !bit(l.c)) & !labelled;
    let h_c = (interior_of_simple_paths(g, l.c, l.a, all & !bit(l.b))
        | interior_of_simple_paths(g, l.c, l.b, all & !bit(l.a)))
        & !(labelled | h_a | h_b);
    let h_ab = (interior_of_simple_paths(g, l.a, l.r, all & !bit(l.b))
        | interior_of_simple_paths(g, l.b, l.r, all & !bit(l.a)))
        & !labelled;
    HSets {
        h_a: bits(h_a).collect(),
        h_b: bits(h_b).collect(),
        h_c: bits(h_c).collect(),
        h_ab: bits(h_ab).collect(),
    }
}
