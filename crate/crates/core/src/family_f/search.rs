//! Exhaustive backtracking for members on a fixed labelled 6-cycle.
//!
//! Labels are pinned to `p=0, q=1, a=2, b=3, c=4, r=5`; extra vertices are
//! `6..n`. The six cycle arcs are forced and every other vertex pair is
//! assigned none / forward / backward. Arcs that on their own complete a
//! forbidden path (`p->r`, `p->b`, `q->r`, `q->a`, `c->r`) are never tried.
//! A branch is cut as soon as
//! * a path condition fails on the arcs chosen so far (adding arcs never
//!   repairs one), or
//! * the graph cannot reach diameter 2 even if every undecided pair were
//!   joined in both directions.
//!
//! Survivors are confirmed with [`check_family_f`] and deduplicated by
//! canonical form, keeping the labelled graph with the smallest arc list.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check_family_f, cycle_arcs, path_conditions, verify_f_propositions, FamilyFLabeling};
use crate::digraph::{
    bit, bits, canonical_form, low_mask, strong_connectivity, strong_diameter, CanonicalForm,
    Digraph,
};
use crate::error::{Error, Result};
use crate::pebbling::{pebbling_number_with, verify_two3no2_with, PebblingClass, SolveOptions};

pub const MAX_SEARCH_ORDER: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub form: CanonicalForm,
    pub graph: Digraph,
    pub labeling: FamilyFLabeling,
}

const P: usize = 0;
const Q: usize = 1;
const A: usize = 2;
const B: usize = 3;
const C: usize = 4;
const R: usize = 5;

fn reach(rows: &[u64], src: usize, allowed: u64) -> u64 {
    let mut seen = bit(src);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for u in bits(frontier) {
            next |= rows[u];
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

fn conditions_hold(rows: &[u64], all: u64) -> bool {
    let blocked =
        |src: usize, x: usize, y: usize| reach(rows, src, all & !(bit(x) | bit(y))) & bit(R) == 0;
    blocked(P, A, C) && blocked(P, A, B) && blocked(Q, B, C) && blocked(Q, B, A) && blocked(C, A, B)
}

fn diameter_at_most_two(rows: &[u64], all: u64) -> bool {
    (0..rows.len()).all(|v| {
        let mut two = bit(v) | rows[v];
        for w in bits(rows[v]) {
            two |= rows[w];
        }
        two & all == all
    })
}

struct Search {
    n: usize,
    all: u64,
    pairs: Vec<(usize, usize)>,
    rows: Vec<u64>,
    found: BTreeMap<CanonicalForm, (Vec<[usize; 2]>, Digraph)>,
}

impl Search {
    fn forbidden(u: usize, v: usize) -> bool {
        matches!((u, v), (P, R) | (P, B) | (Q, R) | (Q, A) | (C, R))
    }

    fn optimistic_rows(&self, depth: usize) -> Vec<u64> {
        let mut rows = self.rows.clone();
        for &(u, v) in &self.pairs[depth..] {
            if !Self::forbidden(u, v) {
                rows[u] |= bit(v);
            }
            if !Self::forbidden(v, u) {
                rows[v] |= bit(u);
            }
        }
        rows
    }

    fn run(&mut self, depth: usize) -> Result<()> {
        if !conditions_hold(&self.rows, self.all) {
            return Ok(());
        }
        if !diameter_at_most_two(&self.optimistic_rows(depth), self.all) {
            return Ok(());
        }
        if depth == self.pairs.len() {
            return self.accept();
        }
        let (u, v) = self.pairs[depth];
        self.run(depth + 1)?;
        if !Self::forbidden(u, v) {
            self.rows[u] |= bit(v);
            self.run(depth + 1)?;
            self.rows[u] &= !bit(v);
        }
        if !Self::forbidden(v, u) {
            self.rows[v] |= bit(u);
            self.run(depth + 1)?;
            self.rows[v] &= !bit(u);
        }
        Ok(())
    }

    fn accept(&mut self) -> Result<()> {
        let g = Digraph::from_out_rows(&self.rows)?;
        let labeling = FamilyFLabeling::new(P, Q, A, B, C, R)?;
        if !check_family_f(&g, &labeling)?.member {
            return Ok(());
        }
        let form = canonical_form(&g)?;
        let arcs = g.arc_list();
        match self.found.get(&form) {
            Some((best, _)) if *best <= arcs => {}
            _ => {
                self.found.insert(form, (arcs, g));
            }
        }
        Ok(())
    }
}

/// Every member on `n` vertices up to isomorphism, in canonical-form order,
/// truncated to `limit` when given. Orders below 6 have no members.
pub fn search_family_f(n: usize, limit: Option<usize>) -> Result<Vec<FamilyMember>> {
    if n > MAX_SEARCH_ORDER {
        return Err(Error::UnsupportedOrder {
            n,
            min: 6,
            max: MAX_SEARCH_ORDER,
        });
    }
    if n < 6 {
        return Ok(Vec::new());
    }
    let labeling = FamilyFLabeling::new(P, Q, A, B, C, R)?;
    let mut rows = vec![0u64; n];
    let forced = cycle_arcs(&labeling);
    for &(u, v) in &forced {
        rows[u] |= bit(v);
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !forced
                .iter()
                .any(|&(x, y)| (x, y) == (u, v) || (x, y) == (v, u))
            {
                pairs.push((u, v));
            }
        }
    }
    let mut search = Search {
        n,
        all: low_mask(n),
        pairs,
        rows,
        found: BTreeMap::new(),
    };
    search.run(0)?;
    debug_assert!(search.rows.len() == search.n);
    Ok(search
        .found
        .into_iter()
        .take(limit.unwrap_or(usize::MAX))
        .map(|(form, (_, graph))| FamilyMember {
            form,
            graph,
            labeling,
        })
        .collect())
}

/// Persisted form of a searched member with its verification outcomes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberRecord {
    pub canonical_form: String,
    pub n: usize,
    pub graph: Vec<[usize; 2]>,
    pub labeling: FamilyFLabeling,
    pub pi: u32,
    pub class: PebblingClass,
    /// Every structural proposition holds.
    pub propositions: bool,
    pub two3no2: bool,
}

impl MemberRecord {
    pub fn new(member: &FamilyMember, options: SolveOptions) -> Result<Self> {
        let g = &member.graph;
        let pi = pebbling_number_with(g, options)?.pi;
        Ok(MemberRecord {
            canonical_form: member.form.to_hex(),
            n: g.n(),
            graph: g.arc_list(),
            labeling: member.labeling,
            pi,
            class: PebblingClass::from_pi(pi, g.n()),
            propositions: verify_f_propositions(g, &member.labeling)?.all_pass(),
            two3no2: verify_two3no2_with(g, options)?.pass,
        })
    }

    pub fn verified(&self) -> bool {
        self.class == PebblingClass::Class1 && self.propositions && self.two3no2
    }
}

/// Member records for every searched member, in search order.
pub fn member_records(
    members: &[FamilyMember],
    options: SolveOptions,
) -> Result<Vec<MemberRecord>> {
    members
        .par_iter()
        .map(|m| MemberRecord::new(m, options))
        .collect()
}

/// First labelling (in lexicographic `(p, a, c, q, b, r)` order) under which
/// the graph is a member, if any.
pub fn find_labeling(graph: &Digraph) -> Result<Option<FamilyFLabeling>> {
    let n = graph.n();
    if n < 6
        || !graph.is_oriented()
        || strong_diameter(graph) != Some(2)
        || strong_connectivity(graph)? < 2
    {
        return Ok(None);
    }
    for p in 0..n {
        for a in graph.out_neighbors(p) {
            for c in bits(graph.out_mask(p) & !bit(a)) {
                for q in bits(graph.in_mask(c) & !(bit(p) | bit(a))) {
                    for b in bits(graph.out_mask(q) & !(bit(p) | bit(a) | bit(c))) {
                        let used = bit(p) | bit(q) | bit(a) | bit(b) | bit(c);
                        for r in bits(graph.out_mask(b) & graph.out_mask(a) & !used) {
                            let l = FamilyFLabeling::new(p, q, a, b, c, r)?;
                            let (pc, qc, cc) = path_conditions(graph, &l);
                            if pc && qc && cc {
                                return Ok(Some(l));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}
