//! Extremal digraphs with their exhibited unsolvable configurations.

mod bounds;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::pebbling::Configuration;

pub use bounds::{
    bound_construction_certified, bound_dboundsharp_statement, bound_dboundupper, verify_bounds,
    BoundCheck, BoundValue, BoundsReport, FormulaId,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum ConstructionParameters {
    Mixed2 { k: usize },
    Layered { d: usize, k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionOutput {
    pub graph: Digraph,
    pub root: usize,
    pub extremal_config: Configuration,
    pub claimed_unsolvable: bool,
    pub parameters: ConstructionParameters,
}

/// Sidecar written next to a generated graph file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSidecar {
    pub root: usize,
    pub extremal_config: Configuration,
    pub parameters: ConstructionParameters,
}

impl From<&ConstructionOutput> for ConstructionSidecar {
    fn from(c: &ConstructionOutput) -> Self {
        ConstructionSidecar {
            root: c.root,
            extremal_config: c.extremal_config.clone(),
            parameters: c.parameters,
        }
    }
}

/// Diameter-2 digraph on `2k + 1` vertices with an unsolvable configuration
/// of size `3k`.
///
/// `A = 0..k` is independent, `B = k..2k` is complete bidirected, the root is
/// `2k`. Arcs: `a_i -> b_i`, `b_j -> a_i` for `j != i`, `b_j -> r`,
/// `r -> a_i`. Three pebbles sit on every `A` vertex.
pub fn build_mixed2(k: usize) -> Result<ConstructionOutput> {
    if k < 1 {
        return Err(Error::InvalidParameter("mixed2 needs k >= 1".into()));
    }
    let n = 2 * k + 1;
    let root = 2 * k;
    let mut g = Digraph::empty(n)?;
    for i in 0..k {
        let (a, b) = (i, k + i);
        g.add_arc(a, b)?;
        g.add_arc(b, root)?;
        g.add_arc(root, a)?;
        for j in 0..k {
            if j != i {
                g.add_arc(k + j, a)?;
                g.add_arc(b, k + j)?;
            }
        }
    }
    let mut counts = vec![0; n];
    counts[..k].fill(3);
    Ok(ConstructionOutput {
        graph: g,
        root,
        extremal_config: Configuration::new(counts),
        claimed_unsolvable: true,
        parameters: ConstructionParameters::Mixed2 { k },
    })
}

/// Layered digraph of diameter `d` on `dk + 1` vertices.
///
/// Layer `l` (1-based) holds vertices `(l-1)k .. lk`; layers `1..d-1` are
/// independent and layer `d` is complete bidirected. Consecutive layers are
/// joined by the matching `(l-1)k + i -> lk + i`. Every layer-`d` vertex
/// points to the root `dk` and to every vertex of layers `1..d-1` except its
/// own matching predecessor; the root points to all of layer 1.
/// `2^d - 1` pebbles sit on each layer-1 vertex.
pub fn build_layered(d: usize, k: usize) -> Result<ConstructionOutput> {
    if d < 2 || k < 1 {
        return Err(Error::InvalidParameter(
            "layered needs d >= 2 and k >= 1".into(),
        ));
    }
    if d >= 32 {
        return Err(Error::InvalidParameter("layered needs d < 32".into()));
    }
    let n = d * k + 1;
    let root = d * k;
    let vertex = |layer: usize, i: usize| (layer - 1) * k + i;
    let mut g = Digraph::empty(n)?;
    for layer in 1..d {
        for i in 0..k {
            g.add_arc(vertex(layer, i), vertex(layer + 1, i))?;
        }
    }
    for i in 0..k {
        let top = vertex(d, i);
        g.add_arc(top, root)?;
        g.add_arc(root, vertex(1, i))?;
        for j in 0..k {
            if j != i {
                g.add_arc(top, vertex(d, j))?;
            }
        }
        for layer in 1..d {
            for j in 0..k {
                if !(layer == d - 1 && j == i) {
                    g.add_arc(top, vertex(layer, j))?;
                }
            }
        }
    }
    let mut counts = vec![0; n];
    counts[..k].fill((1u32 << d) - 1);
    Ok(ConstructionOutput {
        graph: g,
        root,
        extremal_config: Configuration::new(counts),
        claimed_unsolvable: true,
        parameters: ConstructionParameters::Layered { d, k },
    })
}
