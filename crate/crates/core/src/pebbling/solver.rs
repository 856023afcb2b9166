//! Exact solvability by depth-first search over configuration states.
//!
//! Pruning, in the order applied at each state:
//! * accept when the root holds a pebble, or some vertex `v` holds at least
//!   `2^dist(v, r)` pebbles (walk them down a shortest path);
//! * reject when `sum_v C(v) / 2^dist(v, r) < 1`; no move increases this
//!   weight and a pebble on the root has weight 1;
//! * reject states already explored in this call, or pointwise below a
//!   recorded unsolvable state.
//!
//! Every move strictly lowers the pebble total, so the state graph is acyclic
//! and a fully explored state is unsolvable.

use std::collections::HashSet;

use super::{check_dimensions, check_vertex, Configuration, Move, SolveResult};
use crate::digraph::{Digraph, DistanceMatrix};
use crate::error::{Error, Result};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
pub const NODE_BUDGET_ENV: &str = "PEBBLE_NODE_BUDGET";

/// Unsolvable states kept for dominance checks.
const DOMINANCE_SLOTS: usize = 32;

/// `PEBBLE_NODE_BUDGET` if set and valid, otherwise [`DEFAULT_NODE_BUDGET`].
pub fn node_budget_from_env() -> u64 {
    std::env::var(NODE_BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&b| b > 0)
        .unwrap_or(DEFAULT_NODE_BUDGET)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Visited states allowed per solve call before failing with
    /// [`Error::BudgetExceeded`].
    pub node_budget: u64,
    /// Enables the `2^dist` early accept.
    pub shortcuts: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            node_budget: node_budget_from_env(),
            shortcuts: true,
        }
    }
}

/// A solver bound to one graph and root. Distances and move orders are
/// computed once; each [`Solver::solve`] call gets a fresh memo.
pub struct Solver<'g> {
    graph: &'g Digraph,
    root: usize,
    options: SolveOptions,
    dist: Vec<Option<u32>>,
    /// `2^dist(v, r)`, or `None` when `v` cannot reach the root.
    threshold: Vec<Option<u64>>,
    /// First step of a shortest path from `v` to the root.
    next_hop: Vec<usize>,
    /// Vertices that can reach the root, nearest first.
    sources: Vec<usize>,
    /// Out-neighbours that can reach the root, nearest first.
    targets: Vec<Vec<usize>>,
    max_dist: u32,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Digraph, root: usize, options: SolveOptions) -> Result<Self> {
        check_vertex(graph, root)?;
        let n = graph.n();
        let dist = DistanceMatrix::new(graph).column(root);
        let threshold = dist
            .iter()
            .map(|d| d.and_then(|d| 1u64.checked_shl(d)))
            .collect();
        let next_hop = (0..n)
            .map(|v| match dist[v] {
                Some(d) if d > 0 => graph
                    .out_neighbors(v)
                    .find(|&w| dist[w] == Some(d - 1))
                    .expect("a shortest path continues"),
                _ => v,
            })
            .collect();
        let mut sources: Vec<usize> = (0..n).filter(|&v| dist[v].is_some()).collect();
        sources.sort_by_key(|&v| (dist[v], v));
        let targets = (0..n)
            .map(|u| {
                let mut ts: Vec<usize> = graph
                    .out_neighbors(u)
                    .filter(|&w| dist[w].is_some())
                    .collect();
                ts.sort_by_key(|&w| (dist[w], w));
                ts
            })
            .collect();
        let max_dist = dist.iter().flatten().copied().max().unwrap_or(0);
        Ok(Solver {
            graph,
            root,
            options,
            dist,
            threshold,
            next_hop,
            sources,
            targets,
            max_dist,
        })
    }

    pub fn graph(&self) -> &Digraph {
        self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Distance from each vertex to the root.
    pub fn distances(&self) -> &[Option<u32>] {
        &self.dist
    }

    pub fn solve(&self, config: &Configuration) -> Result<SolveResult> {
        check_dimensions(self.graph, config)?;
        let mut search = Search {
            solver: self,
            state: config.counts().to_vec(),
            visited: HashSet::new(),
            unsolvable: Vec::new(),
            nodes: 0,
        };
        let mut path = Vec::new();
        let solvable = search.dfs(&mut path)?;
        if !solvable {
            path.clear();
        }
        Ok(SolveResult {
            solvable,
            witness: path,
        })
    }

    /// `sum_v C(v) 2^(D - dist(v))` against `2^D` with `D` the largest
    /// finite distance.
    fn weight_below_one(&self, state: &[u32]) -> bool {
        let scale = self.max_dist.min(96);
        let mut weight: u128 = 0;
        for (&c, d) in state.iter().zip(&self.dist) {
            if let Some(d) = d {
                if *d <= scale {
                    weight += u128::from(c) << (scale - d);
                }
            }
        }
        weight < 1u128 << scale
    }

    /// Moves carrying one pebble from `v` to the root along a shortest path,
    /// assuming `v` holds `2^dist(v, r)` pebbles.
    fn push_down(&self, v: usize, path: &mut Vec<Move>) {
        let mut x = v;
        let mut batch = self.threshold[v].expect("v reaches the root") / 2;
        while x != self.root {
            let y = self.next_hop[x];
            for _ in 0..batch {
                path.push(Move { from: x, to: y });
            }
            batch /= 2;
            x = y;
        }
    }
}

struct Search<'s, 'g> {
    solver: &'s Solver<'g>,
    state: Vec<u32>,
    visited: HashSet<Vec<u32>>,
    unsolvable: Vec<Vec<u32>>,
    nodes: u64,
}

impl Search<'_, '_> {
    fn dfs(&mut self, path: &mut Vec<Move>) -> Result<bool> {
        let s = self.solver;
        self.nodes += 1;
        if self.nodes > s.options.node_budget {
            return Err(Error::BudgetExceeded(s.options.node_budget));
        }
        if self.state[s.root] >= 1 {
            return Ok(true);
        }
        if s.options.shortcuts {
            for &v in &s.sources {
                if let Some(t) = s.threshold[v] {
                    if u64::from(self.state[v]) >= t {
                        s.push_down(v, path);
                        return Ok(true);
                    }
                }
            }
        }
        if s.weight_below_one(&self.state) {
            return Ok(false);
        }
        if self.visited.contains(&self.state) || self.dominated() {
            return Ok(false);
        }
        for &u in &s.sources {
            if self.state[u] < 2 {
                continue;
            }
            for &w in &s.targets[u] {
                self.state[u] -= 2;
                self.state[w] += 1;
                path.push(Move { from: u, to: w });
                let found = self.dfs(path)?;
                self.state[u] += 2;
                self.state[w] -= 1;
                if found {
                    return Ok(true);
                }
                path.pop();
            }
        }
        self.record_unsolvable();
        Ok(false)
    }

    fn dominated(&self) -> bool {
        self.unsolvable
            .iter()
            .any(|u| self.state.iter().zip(u).all(|(a, b)| a <= b))
    }

    fn record_unsolvable(&mut self) {
        let state = self.state.clone();
        self.unsolvable
            .retain(|u| !u.iter().zip(&state).all(|(a, b)| a <= b));
        if self.unsolvable.len() == DOMINANCE_SLOTS {
            self.unsolvable.remove(0);
        }
        self.unsolvable.push(state.clone());
        self.visited.insert(state);
    }
}

/// Decides whether `config` is `root`-solvable under default options.
pub fn is_solvable(graph: &Digraph, config: &Configuration, root: usize) -> Result<SolveResult> {
    check_dimensions(graph, config)?;
    Solver::new(graph, root, SolveOptions::default())?.solve(config)
}
