//! Loopless directed graphs stored as out/in adjacency bit rows.

mod canon;
mod connectivity;
mod distance;
mod enumerate;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, MAX_CANONICAL_ORDER};
pub use connectivity::{local_connectivity, strong_connectivity};
pub use distance::{distance_matrix_relaxation, strong_diameter, DistanceMatrix};
pub use enumerate::{enumerate_digraphs, max_enumeration_order, GraphClass};

/// Largest vertex count representable with one `u64` row per vertex.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of `mask` in increasing order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A loopless digraph on vertices `0..n`. Bidirected pairs are allowed.
///
/// `out[u]` has bit `v` set iff `u -> v`; `inn[v]` mirrors it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

/// On-disk graph shape: `{"n": <int>, "arcs": [[u,v], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
}

impl From<&Digraph> for GraphFile {
    fn from(g: &Digraph) -> Self {
        GraphFile {
            n: g.n,
            arcs: g.arc_list(),
        }
    }
}

impl TryFrom<GraphFile> for Digraph {
    type Error = Error;

    fn try_from(file: GraphFile) -> Result<Self> {
        Digraph::from_arcs(file.n, file.arcs.into_iter().map(|[u, v]| (u, v)))
    }
}

impl Digraph {
    /// The arcless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::UnsupportedOrder {
                n,
                min: 1,
                max: MAX_VERTICES,
            });
        }
        Ok(Digraph {
            n,
            out: vec![0; n],
            inn: vec![0; n],
        })
    }

    /// Builds a graph from an arc list, rejecting loops, out-of-range
    /// endpoints and duplicates.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Digraph::empty(n)?;
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::ArcOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if g.has_arc(u, v) {
                return Err(Error::DuplicateArc { u, v });
            }
            g.set_arc(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from out-adjacency rows. Loops and bits beyond `n` are
    /// rejected.
    pub fn from_out_rows(rows: &[u64]) -> Result<Self> {
        let mut g = Digraph::empty(rows.len())?;
        let range = low_mask(g.n);
        for (u, &row) in rows.iter().enumerate() {
            if row & bit(u) != 0 {
                return Err(Error::Loop(u));
            }
            if row & !range != 0 {
                let v = (row & !range).trailing_zeros() as usize;
                return Err(Error::ArcOutOfRange { u, v, n: g.n });
            }
            for v in bits(row) {
                g.set_arc(u, v);
            }
        }
        Ok(g)
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn directed_cycle(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnsupportedOrder {
                n,
                min: 2,
                max: MAX_VERTICES,
            });
        }
        Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Every ordered pair of distinct vertices is an arc.
    pub fn complete_bidirected(n: usize) -> Result<Self> {
        let mut g = Digraph::empty(n)?;
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    g.set_arc(u, v);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn set_arc(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.out[u] |= bit(v);
        self.inn[v] |= bit(u);
    }

    /// Adds `u -> v`; adding an existing arc is a no-op.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::ArcOutOfRange { u, v, n: self.n });
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.set_arc(u, v);
        Ok(())
    }

    /// Removes `u -> v` if present; returns whether it was present.
    pub fn remove_arc(&mut self, u: usize, v: usize) -> bool {
        if !self.has_arc(u, v) {
            return false;
        }
        self.out[u] &= !bit(v);
        self.inn[v] &= !bit(u);
        true
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u] & bit(v) != 0
    }

    /// Out-neighbourhood of `u` as a bit mask.
    #[inline]
    pub fn out_mask(&self, u: usize) -> u64 {
        self.out[u]
    }

    /// In-neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn in_mask(&self, v: usize) -> u64 {
        self.inn[v]
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> {
        bits(self.out[u])
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.inn[v])
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.out[u]).map(move |v| (u, v)))
    }

    /// True iff no pair of vertices is joined in both directions.
    pub fn is_oriented(&self) -> bool {
        (0..self.n).all(|u| self.out[u] & self.inn[u] == 0)
    }

    /// Vertices reachable from `source` using only vertices in `allowed`.
    /// `source` itself is always included.
    pub fn reachable_within(&self, source: usize, allowed: u64) -> u64 {
        let mut seen = bit(source);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.out[u];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Vertices that can reach `target` using only vertices in `allowed`.
    pub fn reaching_within(&self, target: usize, allowed: u64) -> u64 {
        let mut seen = bit(target);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.inn[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_strongly_connected(&self) -> bool {
        let all = self.vertex_mask();
        self.reachable_within(0, all) == all && self.reaching_within(0, all) == all
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::InvalidParameter(format!(
                    "{perm:?} is not a permutation of 0..{}",
                    self.n
                )));
            }
            seen |= bit(p);
        }
        let mut g = Digraph::empty(self.n)?;
        for (u, v) in self.arcs() {
            g.set_arc(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self> {
        for &v in vertices {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        let mut g = Digraph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if i != j && self.has_arc(u, v) {
                    g.set_arc(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: GraphFile =
            serde_json::from_str(text.trim()).map_err(|e| Error::MalformedGraph(e.to_string()))?;
        Digraph::try_from(file)
    }

    /// Graph file text: one compact JSON object, arcs sorted, trailing LF.
    pub fn to_graph_file(&self) -> String {
        let mut text = serde_json::to_string(&GraphFile::from(self))
            .expect("graph file serialization is infallible");
        text.push('\n');
        text
    }

    pub(crate) fn arc_list(&self) -> Vec<[usize; 2]> {
        self.arcs().map(|(u, v)| [u, v]).collect()
    }
}

/// Free-function form of [`Digraph::parse`].
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    Digraph::parse(text)
}

pub fn is_oriented(graph: &Digraph) -> bool {
    graph.is_oriented()
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arc_list())
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_graph_file().trim_end())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_directed_three_cycle() {
        let g = Digraph::parse(r#"{"n":3,"arcs":[[0,1],[1,2],[2,0]]}"#).unwrap();
        assert_eq!(g, Digraph::directed_cycle(3).unwrap());
        assert_eq!(g.arc_count(), 3);
    }

    #[test]
    fn rejects_loop() {
        let err = Digraph::parse(r#"{"n":2,"arcs":[[0,0]]}"#).unwrap_err();
        assert!(matches!(err, Error::Loop(0)), "{err}");
    }

    #[test]
    fn rejects_out_of_range_and_duplicates() {
        let err = Digraph::parse(r#"{"n":2,"arcs":[[0,2]]}"#).unwrap_err();
        assert!(matches!(err, Error::ArcOutOfRange { u: 0, v: 2, n: 2 }));
        let err = Digraph::parse(r#"{"n":3,"arcs":[[0,1],[1,2],[0,1]]}"#).unwrap_err();
        assert!(matches!(err, Error::DuplicateArc { u: 0, v: 1 }));
    }

    #[test]
    fn rejects_malformed_text() {
        for text in [
            "",
            "{",
            r#"{"n":3}"#,
            r#"{"n":-1,"arcs":[]}"#,
            r#"{"n":2,"arcs":[[0]]}"#,
            r#"{"n":2,"arcs":[],"extra":1}"#,
            r#"{"n":0,"arcs":[]}"#,
        ] {
            assert!(Digraph::parse(text).is_err(), "accepted {text:?}");
        }
    }

    #[test]
    fn writes_sorted_compact_file() {
        let g = Digraph::from_arcs(3, [(2, 0), (1, 2), (0, 1), (1, 0)]).unwrap();
        assert_eq!(
            g.to_graph_file(),
            "{\"n\":3,\"arcs\":[[0,1],[1,0],[1,2],[2,0]]}\n"
        );
        assert_eq!(Digraph::parse(&g.to_graph_file()).unwrap(), g);
    }

    #[test]
    fn orientation() {
        assert!(Digraph::directed_cycle(3).unwrap().is_oriented());
        assert!(!Digraph::from_arcs(2, [(0, 1), (1, 0)])
            .unwrap()
            .is_oriented());
    }

    #[test]
    fn permute_and_induce() {
        let g = Digraph::directed_cycle(3).unwrap();
        let h = g.permute(&[0, 2, 1]).unwrap();
        assert!(h.has_arc(0, 2) && h.has_arc(2, 1) && h.has_arc(1, 0));
        assert!(g.permute(&[0, 0, 1]).is_err());
        let sub = g.induced_subgraph(&[1, 2]).unwrap();
        assert_eq!(sub.arc_list(), vec![[0, 1]]);
    }
}
