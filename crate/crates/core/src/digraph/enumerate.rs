//! Exhaustive generation of digraphs up to isomorphism.
//!
//! Classes on `m` vertices are produced by attaching a new vertex to every
//! class representative on `m - 1` vertices in every possible way (each old
//! vertex is unrelated, an in-neighbour, an out-neighbour, or, unless
//! oriented, both). Every graph on `m` vertices arises this way from the class
//! of its deletion of vertex `m - 1`; duplicates are rejected by canonical
//! form.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::canon::canonical_labeling;
use super::{CanonicalForm, Digraph};
use crate::error::{Error, Result};

/// One isomorphism class: its canonical form and the graph in canonical
/// labelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphClass {
    pub form: CanonicalForm,
    pub graph: Digraph,
}

/// Largest order enumerated without the long-running flag.
pub fn max_enumeration_order(long_running: bool) -> usize {
    if long_running {
        7
    } else {
        6
    }
}

/// All isomorphism classes on `n` vertices satisfying `predicate`, in
/// ascending canonical-form order. `predicate` must be invariant under
/// relabelling; it is applied before canonicalisation.
pub fn enumerate_digraphs<P>(
    n: usize,
    oriented_only: bool,
    long_running: bool,
    predicate: P,
) -> Result<Vec<GraphClass>>
where
    P: Fn(&Digraph) -> bool + Sync,
{
    let max = max_enumeration_order(long_running);
    if n == 0 || n > max {
        return Err(Error::UnsupportedOrder { n, min: 1, max });
    }
    let mut level: Vec<Digraph> = vec![Digraph::empty(1)?];
    for m in 2..=n {
        let last = m == n;
        let forms = extend(&level, oriented_only, |g| !last || predicate(g));
        level = forms
            .iter()
            .map(|f| f.to_digraph())
            .collect::<Result<Vec<_>>>()?;
        if last {
            return Ok(forms
                .into_iter()
                .zip(level)
                .map(|(form, graph)| GraphClass { form, graph })
                .collect());
        }
    }
    // n == 1
    Ok(std::iter::once(Digraph::empty(1)?)
        .filter(|g| predicate(g))
        .map(|graph| GraphClass {
            form: super::canonical_form(&graph).expect("order 1 is supported"),
            graph,
        })
        .collect())
}

fn extend<P>(parents: &[Digraph], oriented_only: bool, keep: P) -> BTreeSet<CanonicalForm>
where
    P: Fn(&Digraph) -> bool + Sync,
{
    let states: u64 = if oriented_only { 3 } else { 4 };
    parents
        .par_iter()
        .map(|parent| {
            let old = parent.n();
            let mut found = BTreeSet::new();
            let mut base = Digraph::empty(old + 1).expect("orders stay small");
            for (u, v) in parent.arcs() {
                base.set_arc(u, v);
            }
            let total = states.pow(old as u32);
            for code in 0..total {
                let mut g = base.clone();
                let mut rest = code;
                for u in 0..old {
                    let s = rest % states;
                    rest /= states;
                    if s & 1 != 0 {
                        g.set_arc(u, old);
                    }
                    if s & 2 != 0 {
                        g.set_arc(old, u);
                    }
                }
                if keep(&g) {
                    let (form, _) = canonical_labeling(&g).expect("orders stay small");
                    found.insert(form);
                }
            }
            found
        })
        .reduce(BTreeSet::new, |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            a.extend(b);
            a
        })
}
