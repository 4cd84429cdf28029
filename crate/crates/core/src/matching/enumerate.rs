//! Exhaustive searches over maximal and perfect matchings.
//!
//! Maximal matchings are generated by a decision tree: the lowest-indexed
//! undecided vertex with an undecided neighbour is either matched to one of
//! those neighbours or committed to stay unmatched. The decisions along a
//! branch are determined by the matching it produces, so every maximal
//! matching appears at exactly one accepted leaf and no deduplication store
//! is needed.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::Serialize;

use super::{has_perfect_matching_within, Matching};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

struct MaximalSearch<'a, F> {
    adj: &'a [u64],
    all: u64,
    covered: u64,
    committed: u64,
    edges: Vec<(usize, usize)>,
    /// Branches stop once the matching reaches this size.
    bound: Option<usize>,
    visit: F,
}

impl<F: FnMut(&[(usize, usize)]) -> ControlFlow<()>> MaximalSearch<'_, F> {
    /// Every committed vertex must end with all neighbours covered.
    fn feasible(&self) -> bool {
        let free = self.all & !self.covered & !self.committed;
        for c in VertexSet::from_bits(self.committed) {
            let open = self.adj[c] & !self.covered;
            if open & self.committed != 0 {
                return false;
            }
            if VertexSet::from_bits(open)
                .iter()
                .any(|y| self.adj[y] & free == 0)
            {
                return false;
            }
        }
        true
    }

    fn run(&mut self) -> ControlFlow<()> {
        if self.bound.is_some_and(|b| self.edges.len() >= b) {
            return ControlFlow::Continue(());
        }
        let free = self.all & !self.covered & !self.committed;
        let active = VertexSet::from_bits(free)
            .iter()
            .find(|&v| self.adj[v] & free != 0);
        let Some(x) = active else {
            let uncovered = self.all & !self.covered;
            let maximal = VertexSet::from_bits(uncovered)
                .iter()
                .all(|v| self.adj[v] & uncovered == 0);
            if maximal {
                return (self.visit)(&self.edges);
            }
            return ControlFlow::Continue(());
        };
        for y in VertexSet::from_bits(self.adj[x] & free) {
            self.covered |= 1 << x | 1 << y;
            self.edges.push((x, y));
            if self.feasible() {
                self.run()?;
            }
            self.edges.pop();
            self.covered &= !(1 << x | 1 << y);
        }
        self.committed |= 1 << x;
        if self.feasible() {
            self.run()?;
        }
        self.committed &= !(1 << x);
        ControlFlow::Continue(())
    }
}

/// Calls `visit` once for every maximal matching of `g` with fewer than
/// `bound` edges (all of them when `bound` is `None`), until it breaks.
pub fn for_each_maximal_matching<F>(g: &Graph, bound: Option<usize>, visit: F)
where
    F: FnMut(&Matching) -> ControlFlow<()>,
{
    let mut visit = visit;
    let mut search = MaximalSearch {
        adj: g.rows(),
        all: g.vertices().bits(),
        covered: 0,
        committed: 0,
        edges: Vec::new(),
        bound,
        visit: |edges: &[(usize, usize)]| visit(&Matching::from_sorted_unchecked(edges.to_vec())),
    };
    let _ = search.run();
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalMatchings {
    pub matchings: Vec<Matching>,
    /// Matching size -> number of emitted maximal matchings of that size.
    pub size_counts: BTreeMap<usize, usize>,
    /// The cap was hit before the search finished.
    pub truncated: bool,
}

impl MaximalMatchings {
    /// Sizes occurring among the emitted matchings.
    pub fn sizes(&self) -> Vec<usize> {
        self.size_counts.keys().copied().collect()
    }
}

pub fn enumerate_maximal_matchings(g: &Graph, cap: usize) -> MaximalMatchings {
    let mut out = MaximalMatchings {
        matchings: Vec::new(),
        size_counts: BTreeMap::new(),
        truncated: false,
    };
    for_each_maximal_matching(g, None, |m| {
        if out.matchings.len() == cap {
            out.truncated = true;
            return ControlFlow::Break(());
        }
        *out.size_counts.entry(m.len()).or_default() += 1;
        out.matchings.push(m.clone());
        ControlFlow::Continue(())
    });
    out
}

/// A maximal matching with fewer than `bound` edges, if any exists.
pub fn find_small_maximal_matching(g: &Graph, bound: usize) -> Option<Matching> {
    let mut found = None;
    for_each_maximal_matching(g, Some(bound), |m| {
        found = Some(m.clone());
        ControlFlow::Break(())
    });
    found
}

fn perfect_rec(
    g: &Graph,
    uncovered: VertexSet,
    edges: &mut Vec<(usize, usize)>,
    out: &mut Vec<Matching>,
    cap: usize,
) {
    if out.len() >= cap {
        return;
    }
    let Some(x) = uncovered.first() else {
        out.push(Matching::from_sorted_unchecked(edges.clone()));
        return;
    };
    for y in g.neighbors(x) & uncovered {
        let rest = uncovered.without(x).without(y);
        if has_perfect_matching_within(g, rest) {
            edges.push((x, y));
            perfect_rec(g, rest, edges, out, cap);
            edges.pop();
            if out.len() >= cap {
                return;
            }
        }
    }
}

/// Perfect matchings of `g` in lexicographic order of their sorted edge
/// lists, at most `cap` of them.
pub fn enumerate_perfect_matchings(g: &Graph, cap: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    if has_perfect_matching_within(g, g.vertices()) {
        perfect_rec(g, g.vertices(), &mut Vec::new(), &mut out, cap);
    }
    out
}

/// The perfect matching whose sorted edge list is lexicographically smallest.
pub fn lex_first_perfect_matching(g: &Graph) -> Option<Matching> {
    enumerate_perfect_matchings(g, 1).pop()
}
