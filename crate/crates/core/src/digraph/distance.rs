use super::{bit, bits, Digraph};

/// All-pairs shortest directed path lengths. `None` marks an unreachable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Option<u32>>,
}

impl DistanceMatrix {
    /// One breadth-first search per source, frontier kept as a bit mask.
    pub fn new(graph: &Digraph) -> Self {
        let n = graph.n();
        let mut dist = vec![None; n * n];
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            let mut seen = bit(s);
            let mut frontier = seen;
            let mut level = 0u32;
            while frontier != 0 {
                for v in bits(frontier) {
                    row[v] = Some(level);
                }
                let mut next = 0;
                for u in bits(frontier) {
                    next |= graph.out_mask(u);
                }
                next &= !seen;
                seen |= next;
                frontier = next;
                level += 1;
            }
        }
        DistanceMatrix { n, dist }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, from: usize, to: usize) -> Option<u32> {
        self.dist[from * self.n + to]
    }

    /// Distances from every vertex into `target`.
    pub fn column(&self, target: usize) -> Vec<Option<u32>> {
        (0..self.n).map(|v| self.get(v, target)).collect()
    }

    /// Largest finite entry, or `None` if some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        self.dist.iter().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }
}

/// Strong diameter, or `None` when the graph is not strongly connected.
/// The one-vertex graph has diameter 0.
pub fn strong_diameter(graph: &Digraph) -> Option<u32> {
    DistanceMatrix::new(graph).diameter()
}

/// Floyd–Warshall relaxation over the arc set. Independent of the BFS route
/// used by [`DistanceMatrix::new`].
pub fn distance_matrix_relaxation(graph: &Digraph) -> DistanceMatrix {
    let n = graph.n();
    let mut dist = vec![None; n * n];
    for v in 0..n {
        dist[v * n + v] = Some(0);
    }
    for (u, v) in graph.arcs() {
        dist[u * n + v] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            let Some(ik) = dist[i * n + k] else { continue };
            for j in 0..n {
                if let Some(kj) = dist[k * n + j] {
                    let via = ik + kj;
                    if dist[i * n + j].is_none_or(|d| via < d) {
                        dist[i * n + j] = Some(via);
                    }
                }
            }
        }
    }
    DistanceMatrix { n, dist }
}
