//! Strong vertex connectivity through unit-capacity vertex-split flows.

use std::collections::VecDeque;

use super::Digraph;
use crate::error::{Error, Result};

/// Maximum number of internally vertex-disjoint `source -> target` paths.
/// A direct arc `source -> target` counts as one path.
///
/// Vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1` joined by a unit
/// arc; every graph arc `u -> w` becomes `u_out -> w_in` with unit capacity.
pub fn local_connectivity(graph: &Digraph, source: usize, target: usize) -> Result<usize> {
    let n = graph.n();
    for v in [source, target] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if source == target {
        return Err(Error::InvalidParameter(
            "local connectivity needs distinct endpoints".into(),
        ));
    }
    let nodes = 2 * n;
    let mut cap = vec![0u8; nodes * nodes];
    for v in 0..n {
        cap[(2 * v) * nodes + 2 * v + 1] = 1;
    }
    for (u, w) in graph.arcs() {
        cap[(2 * u + 1) * nodes + 2 * w] = 1;
    }
    let s = 2 * source + 1;
    let t = 2 * target;

    let mut flow = 0;
    let mut parent = vec![usize::MAX; nodes];
    loop {
        parent.fill(usize::MAX);
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for y in 0..nodes {
                if parent[y] == usize::MAX && cap[x * nodes + y] > 0 {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[t] == usize::MAX {
            return Ok(flow);
        }
        let mut y = t;
        while y != s {
            let x = parent[y];
            cap[x * nodes + y] -= 1;
            cap[y * nodes + x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// Largest `k` such that the graph is `k`-strongly connected, capped at
/// `n - 1`; 0 when the graph is not strongly connected.
pub fn strong_connectivity(graph: &Digraph) -> Result<usize> {
    let n = graph.n();
    if n < 2 {
        return Err(Error::UnsupportedOrder {
            n,
            min: 2,
            max: super::MAX_VERTICES,
        });
    }
    if !graph.is_strongly_connected() {
        return Ok(0);
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in 0..n {
            if s != t {
                best = best.min(local_connectivity(graph, s, t)?);
                if best == 1 {
                    return Ok(1);
                }
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cycle_is_one_connected() {
        assert_eq!(
            strong_connectivity(&Digraph::directed_cycle(3).unwrap()).unwrap(),
            1
        );
    }

    #[test]
    fn complete_four_is_three_connected() {
        let k4 = Digraph::complete_bidirected(4).unwrap();
        assert_eq!(strong_connectivity(&k4).unwrap(), 3);
        assert_eq!(local_connectivity(&k4, 0, 1).unwrap(), 3);
    }

    #[test]
    fn disjoint_cycles_are_disconnected() {
        let g = Digraph::from_arcs(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(strong_connectivity(&g).unwrap(), 0);
    }

    #[test]
    fn needs_two_vertices() {
        assert!(strong_connectivity(&Digraph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn bidirected_pair() {
        let g = Digraph::complete_bidirected(2).unwrap();
        assert_eq!(strong_connectivity(&g).unwrap(), 1);
    }
}
