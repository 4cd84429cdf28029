//! Matchings that isolate a vertex: `v` uncovered, every neighbour covered.
//!
//! A matching isolating `v` is minimal exactly when each of its edges has an
//! end in `N(v)`, since an edge covering no neighbour can be dropped and an
//! edge covering one cannot.

use super::{Matching, MatchingError};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

fn check_vertex(g: &Graph, v: usize) -> Result<(), MatchingError> {
    if v >= g.order() {
        return Err(MatchingError::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    Ok(())
}

/// `v ∉ V(m)` and `N(v) ⊆ V(m)`.
pub fn is_isolating(g: &Graph, m: &Matching, v: usize) -> bool {
    let covered = m.covered();
    v < g.order() && !covered.contains(v) && g.neighbors(v).is_subset(covered)
}

/// Drops edges in ascending index order while `v` stays isolated, until no
/// edge can be dropped.
pub fn minimize_isolating(g: &Graph, m: &Matching, v: usize) -> Result<Matching, MatchingError> {
    check_vertex(g, v)?;
    if !is_isolating(g, m, v) {
        return Err(MatchingError::NotIsolating(v));
    }
    let mut edges = m.edges().to_vec();
    loop {
        let before = edges.len();
        let mut i = 0;
        while i < edges.len() {
            let mut trial = edges.clone();
            trial.remove(i);
            if is_isolating(g, &Matching::from_sorted_unchecked(trial.clone()), v) {
                edges = trial;
            } else {
                i += 1;
            }
        }
        if edges.len() == before {
            return Ok(Matching::from_sorted_unchecked(edges));
        }
    }
}

fn isolating_rec(
    g: &Graph,
    need: VertexSet,
    blocked: VertexSet,
    edges: &mut Vec<(usize, usize)>,
    out: &mut Vec<Matching>,
    cap: usize,
) {
    let Some(x) = (need - blocked).first() else {
        out.push(Matching::from_sorted_unchecked(edges.clone()));
        return;
    };
    for y in g.neighbors(x) - blocked {
        if out.len() >= cap {
            return;
        }
        edges.push((x, y));
        isolating_rec(g, need, blocked.with(x).with(y), edges, out, cap);
        edges.pop();
    }
}

/// Distinct minimal matchings isolating `v`, at most `cap` of them. The
/// lowest uncovered neighbour of `v` is matched to each available partner in
/// turn, so each matching is produced once.
pub fn enumerate_minimal_isolating(
    g: &Graph,
    v: usize,
    cap: usize,
) -> Result<Vec<Matching>, MatchingError> {
    check_vertex(g, v)?;
    let mut out = Vec::new();
    if cap > 0 {
        isolating_rec(
            g,
            g.neighbors(v),
            VertexSet::singleton(v),
            &mut Vec::new(),
            &mut out,
            cap,
        );
    }
    Ok(out)
}
