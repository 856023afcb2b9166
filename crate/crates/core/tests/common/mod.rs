//! Reference implementations used as oracles. They share no code with the
//! library beyond reading a graph's arc list.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use dipebble::{Digraph, Move};
use proptest::prelude::*;

/// Plain adjacency matrix copy of a graph.
pub fn matrix(g: &Digraph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.arcs() {
        m[u][v] = true;
    }
    m
}

/// Exhaustive game-tree search with no pruning besides a visited set.
pub fn oracle_solvable(g: &Digraph, counts: &[u32], root: usize) -> bool {
    let m = matrix(g);
    let n = g.n();
    let mut seen = HashSet::new();
    let mut stack = vec![counts.to_vec()];
    while let Some(c) = stack.pop() {
        if c[root] > 0 {
            return true;
        }
        if !seen.insert(c.clone()) {
            continue;
        }
        for u in 0..n {
            if c[u] < 2 {
                continue;
            }
            for v in 0..n {
                if m[u][v] {
                    let mut next = c.clone();
                    next[u] -= 2;
                    next[v] += 1;
                    stack.push(next);
                }
            }
        }
    }
    false
}

/// Applies moves one by one, returning `None` on the first illegal move.
pub fn oracle_replay(g: &Digraph, counts: &[u32], moves: &[Move]) -> Option<Vec<u32>> {
    let m = matrix(g);
    let mut c = counts.to_vec();
    for mv in moves {
        if mv.from >= c.len() || mv.to >= c.len() || !m[mv.from][mv.to] || c[mv.from] < 2 {
            return None;
        }
        let before: u32 = c.iter().sum();
        c[mv.from] -= 2;
        c[mv.to] += 1;
        assert_eq!(c.iter().sum::<u32>() + 1, before);
    }
    Some(c)
}

/// Every configuration on `n` vertices with exactly `size` pebbles.
pub fn compositions(n: usize, size: u32) -> Vec<Vec<u32>> {
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for x in 0..=left {
            cur[i] = x;
            go(i + 1, left - x, cur, out);
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(0, size, &mut vec![0; n], &mut out);
    }
    out
}

/// Rooted pebbling number by brute force: smallest `t` such that every
/// configuration of size `t` is solvable.
pub fn oracle_rooted_pi(g: &Digraph, root: usize) -> u32 {
    (1..)
        .find(|&t| {
            compositions(g.n(), t)
                .iter()
                .all(|c| oracle_solvable(g, c, root))
        })
        .unwrap()
}

pub fn oracle_pi(g: &Digraph) -> u32 {
    (0..g.n()).map(|r| oracle_rooted_pi(g, r)).max().unwrap()
}

/// BFS distance from `s` to every vertex.
pub fn bfs(g: &Digraph, s: usize) -> Vec<Option<u32>> {
    let m = matrix(g);
    let mut dist = vec![None; g.n()];
    dist[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for v in 0..g.n() {
            if m[u][v] && dist[v].is_none() {
                dist[v] = Some(dist[u].unwrap() + 1);
                q.push_back(v);
            }
        }
    }
    dist
}

fn strongly_connected_without(m: &[Vec<bool>], removed: &[bool]) -> bool {
    let n = m.len();
    let alive: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    let Some(&start) = alive.first() else {
        return true;
    };
    for forward in [true, false] {
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                let arc = if forward { m[u][v] } else { m[v][u] };
                if arc && !removed[v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        if alive.iter().any(|&v| !seen[v]) {
            return false;
        }
    }
    true
}

/// Smallest vertex set whose removal leaves a graph that is not strongly
/// connected; `n - 1` when no such set exists, 0 if already disconnected.
pub fn brute_connectivity(g: &Digraph) -> usize {
    let n = g.n();
    let m = matrix(g);
    let mut best = n - 1;
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k >= best || k + 2 > n {
            continue;
        }
        let removed: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if !strongly_connected_without(&m, &removed) {
            best = k;
        }
    }
    best
}

/// Every simple directed path from `s` to `t`, as vertex lists.
pub fn simple_paths(g: &Digraph, s: usize, t: usize) -> Vec<Vec<usize>> {
    fn go(m: &[Vec<bool>], path: &mut Vec<usize>, t: usize, out: &mut Vec<Vec<usize>>) {
        let u = *path.last().unwrap();
        if u == t {
            out.push(path.clone());
            return;
        }
        for v in 0..m.len() {
            if m[u][v] && !path.contains(&v) {
                path.push(v);
                go(m, path, t, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&matrix(g), &mut vec![s], t, &mut out);
    out
}

/// Random digraph on `1..=max_n` vertices, arcs independently with
/// probability about one half.
pub fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && bits[u * n + v]);
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

pub fn arb_oriented(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u8..3, n * n).prop_map(move |choice| {
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    match choice[u * n + v] {
                        1 => arcs.push((u, v)),
                        2 => arcs.push((v, u)),
                        _ => {}
                    }
                }
            }
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

pub fn arb_strong(max_n: usize) -> impl Strategy<Value = Digraph> {
    arb_digraph(max_n).prop_filter("strongly connected", Digraph::is_strongly_connected)
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
