//! Exact canonical labelling by colour refinement plus individualisation.
//!
//! Refinement splits vertices by (colour, out-neighbour colour counts,
//! in-neighbour colour counts) until stable. If the partition is not
//! discrete, every vertex of the first non-singleton cell is individualised
//! in turn, skipping vertices that are twins of an already tried one (their
//! transposition is an automorphism, so both branches yield the same codes).
//! The canonical form is the smallest adjacency code over all leaves.

use std::fmt;

use super::{bit, Digraph};
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 16;

/// Isomorphism-class key: the vertex count followed by the row-major
/// adjacency matrix of the canonical relabelling, packed MSB-first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Box<[u8]>);

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(text: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("`{text}` is not a canonical form"));
        if !text.len().is_multiple_of(2) || text.is_empty() {
            return Err(bad());
        }
        let bytes = (0..text.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&text[i..i + 2], 16).map_err(|_| bad()))
            .collect::<Result<Vec<u8>>>()?;
        let n = bytes[0] as usize;
        if n == 0 || bytes.len() != 1 + (n * n).div_ceil(8) {
            return Err(bad());
        }
        let form = CanonicalForm(bytes.into_boxed_slice());
        form.to_digraph().map_err(|_| bad())?;
        Ok(form)
    }

    /// The graph in canonical labelling.
    pub fn to_digraph(&self) -> Result<Digraph> {
        let n = self.order();
        let mut rows = vec![0u64; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for j in 0..n {
                let idx = i * n + j;
                if self.0[1 + idx / 8] & (0x80 >> (idx % 8)) != 0 {
                    *row |= bit(j);
                }
            }
        }
        Digraph::from_out_rows(&rows)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub fn canonical_form(graph: &Digraph) -> Result<CanonicalForm> {
    canonical_labeling(graph).map(|(form, _)| form)
}

/// Canonical form together with the relabelling `perm` (vertex `v` maps to
/// `perm[v]`) such that `graph.permute(&perm)` equals `form.to_digraph()`.
pub fn canonical_labeling(graph: &Digraph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = graph.n();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::UnsupportedOrder {
            n,
            min: 1,
            max: MAX_CANONICAL_ORDER,
        });
    }
    let mut colors = vec![0u32; n];
    refine(graph, &mut colors);
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    search(graph, colors, &mut best);
    let (code, perm) = best.expect("search visits at least one leaf");
    Ok((CanonicalForm(code.into_boxed_slice()), perm))
}

fn cell_count(colors: &[u32]) -> usize {
    colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
}

/// Refines `colors` (dense ranks `0..k`) to the coarsest equitable partition
/// below it. Cells keep their relative order.
fn refine(graph: &Digraph, colors: &mut [u32]) {
    let n = graph.n();
    let mut cells = cell_count(colors);
    loop {
        let width = 1 + 2 * cells;
        let mut sigs: Vec<u16> = vec![0; n * width];
        for v in 0..n {
            let sig = &mut sigs[v * width..(v + 1) * width];
            sig[0] = colors[v] as u16;
            for w in graph.out_neighbors(v) {
                sig[1 + colors[w] as usize] += 1;
            }
            for w in graph.in_neighbors(v) {
                sig[1 + cells + colors[w] as usize] += 1;
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            sigs[a * width..(a + 1) * width].cmp(&sigs[b * width..(b + 1) * width])
        });
        let mut rank = 0u32;
        for (i, &v) in order.iter().enumerate() {
            if i > 0 {
                let prev = order[i - 1];
                if sigs[prev * width..(prev + 1) * width] != sigs[v * width..(v + 1) * width] {
                    rank += 1;
                }
            }
            colors[v] = rank;
        }
        let next = rank as usize + 1;
        if next == cells {
            return;
        }
        cells = next;
    }
}

/// Transposing `u` and `v` is an automorphism.
fn are_twins(graph: &Digraph, u: usize, v: usize) -> bool {
    let keep = !(bit(u) | bit(v));
    graph.out_mask(u) & keep == graph.out_mask(v) & keep
        && graph.in_mask(u) & keep == graph.in_mask(v) & keep
        && graph.has_arc(u, v) == graph.has_arc(v, u)
}

fn search(graph: &Digraph, colors: Vec<u32>, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    let n = graph.n();
    let cells = cell_count(&colors);
    if cells == n {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let code = encode(graph, &perm);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, perm));
        }
        return;
    }
    let mut sizes = vec![0usize; cells];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    let target = sizes
        .iter()
        .position(|&s| s > 1)
        .expect("partition is not discrete") as u32;
    let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &members {
        if tried.iter().any(|&u| are_twins(graph, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| 2 * c + u32::from(c == target && w != v))
            .collect();
        // Re-rank to dense colours before refining.
        let mut distinct = next.clone();
        distinct.sort_unstable();
        distinct.dedup();
        for c in next.iter_mut() {
            *c = distinct.binary_search(c).unwrap() as u32;
        }
        refine(graph, &mut next);
        search(graph, next, best);
    }
}

fn encode(graph: &Digraph, perm: &[usize]) -> Vec<u8> {
    let n = graph.n();
    let mut code = vec![0u8; 1 + (n * n).div_ceil(8)];
    code[0] = n as u8;
    for (u, v) in graph.arcs() {
        let idx = perm[u] * n + perm[v];
        code[1 + idx / 8] |= 0x80 >> (idx % 8);
    }
    code
}
