//! Matchings: maximum and perfect matchings, maximal-matching enumeration and
//! search, isolating matchings and augmenting paths.

mod blossom;
mod enumerate;
mod isolating;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub use blossom::{find_augmenting_path, matching_number, maximum_matching};
pub use enumerate::{
    enumerate_maximal_matchings, enumerate_perfect_matchings, find_small_maximal_matching,
    for_each_maximal_matching, lex_first_perfect_matching, MaximalMatchings,
};
pub use isolating::{enumerate_minimal_isolating, is_isolating, minimize_isolating};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} is covered by two matching edges")]
    NotDisjoint(usize),
    #[error("matching does not isolate vertex {0}")]
    NotIsolating(usize),
    #[error("vertex {0} is covered by the matching and cannot be an augmenting path end")]
    CoveredEndpoint(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
}

/// A set of pairwise disjoint edges, stored as sorted `(u, v)` pairs with
/// `u < v`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates that every pair is an edge of `g` and the pairs are disjoint.
    pub fn new(g: &Graph, edges: &[(usize, usize)]) -> Result<Matching, MatchingError> {
        let mut covered = VertexSet::EMPTY;
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(MatchingError::NotAnEdge(u, v));
            }
            for x in [u, v] {
                if covered.contains(x) {
                    return Err(MatchingError::NotDisjoint(x));
                }
                covered.insert(x);
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Matching { edges: out })
    }

    pub(crate) fn from_sorted_unchecked(mut edges: Vec<(usize, usize)>) -> Matching {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        Matching { edges }
    }

    /// Builds a matching from a mate array (`mate[v] = Some(w)` iff `vw` is
    /// matched).
    pub(crate) fn from_mates(mate: &[Option<usize>]) -> Matching {
        let edges = mate
            .iter()
            .enumerate()
            .filter_map(|(v, &m)| m.filter(|&w| v < w).map(|w| (v, w)))
            .collect();
        Matching { edges }
    }

    pub fn empty() -> Matching {
        Matching::default()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `V(M)`.
    pub fn covered(&self) -> VertexSet {
        self.edges
            .iter()
            .fold(VertexSet::EMPTY, |s, &(u, v)| s.with(u).with(v))
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.edges.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    pub(crate) fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }

    /// Matching without the edges in `drop`.
    pub fn without_edges(&self, drop: &[(usize, usize)]) -> Matching {
        Matching {
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !drop.contains(e))
                .collect(),
        }
    }

    /// Edges whose ends both lie in `set`.
    pub fn restricted_to(&self, set: VertexSet) -> Matching {
        Matching {
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(u, v)| set.contains(u) && set.contains(v))
                .collect(),
        }
    }

    /// Union with a disjoint matching.
    pub fn union(&self, other: &Matching) -> Matching {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        edges.sort_unstable();
        Matching { edges }
    }
}

/// Path whose consecutive edges alternate between unmatched and matched.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlternatingPath {
    pub vertices: Vec<usize>,
    /// `matched[i]` tells whether the edge `vertices[i] vertices[i + 1]` is in
    /// the matching.
    pub matched: Vec<bool>,
}

impl AlternatingPath {
    pub(crate) fn from_vertices(m: &Matching, vertices: Vec<usize>) -> AlternatingPath {
        let matched = vertices
            .windows(2)
            .map(|w| m.contains_edge(w[0], w[1]))
            .collect();
        AlternatingPath { vertices, matched }
    }

    pub fn len(&self) -> usize {
        self.matched.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matched.is_empty()
    }

    /// Checks that this is an `m`-augmenting path of `g`.
    pub fn is_augmenting(&self, g: &Graph, m: &Matching) -> bool {
        let vs = &self.vertices;
        let distinct = vs.iter().copied().collect::<VertexSet>().len() == vs.len();
        let covered = m.covered();
        distinct
            && vs.len() >= 2
            && vs.len().is_multiple_of(2)
            && vs.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && self
                .matched
                .iter()
                .enumerate()
                .all(|(i, &x)| x == (i % 2 == 1))
            && !covered.contains(vs[0])
            && !covered.contains(*vs.last().unwrap())
    }

    /// `m` with the path's edges flipped.
    pub fn augment(&self, m: &Matching) -> Matching {
        let mut edges: Vec<(usize, usize)> = m
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| {
                !self
                    .vertices
                    .windows(2)
                    .any(|w| (w[0].min(w[1]), w[0].max(w[1])) == (u, v))
            })
            .collect();
        for (i, w) in self.vertices.windows(2).enumerate() {
            if !self.matched[i] {
                edges.push((w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        Matching::from_sorted_unchecked(edges)
    }
}

/// True iff no edge of `g` has both ends uncovered by `m`.
pub fn is_maximal(g: &Graph, m: &Matching) -> bool {
    let free = g.vertices() - m.covered();
    free.iter().all(|v| g.neighbors(v).is_disjoint(free))
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && matching_number(g) * 2 == g.order()
}

/// `G - v` has a perfect matching for every vertex `v`. Only connected graphs
/// of odd order qualify.
pub fn is_factor_critical(g: &Graph) -> bool {
    is_factor_critical_within(g, g.vertices())
}

pub(crate) fn is_factor_critical_within(g: &Graph, within: VertexSet) -> bool {
    if within.len().is_multiple_of(2) || !g.is_connected_within(within) {
        return false;
    }
    within.iter().all(|v| {
        let (h, _) = g.induced_unchecked(within.without(v));
        has_perfect_matching(&h)
    })
}

/// Whether `G[within]` has a perfect matching.
pub(crate) fn has_perfect_matching_within(g: &Graph, within: VertexSet) -> bool {
    if within.len() % 2 == 1 {
        return false;
    }
    let (h, _) = g.induced_unchecked(within);
    has_perfect_matching(&h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_family, FamilySpec};

    fn p4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn matching_validation() {
        let g = p4();
        assert!(Matching::new(&g, &[(0, 1), (2, 3)]).is_ok());
        assert_eq!(
            Matching::new(&g, &[(0, 2)]),
            Err(MatchingError::NotAnEdge(0, 2))
        );
        assert_eq!(
            Matching::new(&g, &[(0, 1), (1, 2)]),
            Err(MatchingError::NotDisjoint(1))
        );
    }

    #[test]
    fn maximality() {
        let g = p4();
        assert!(is_maximal(&g, &Matching::new(&g, &[(1, 2)]).unwrap()));
        assert!(!is_maximal(&g, &Matching::new(&g, &[(0, 1)]).unwrap()));
        assert!(is_maximal(&g, &maximum_matching(&g)));
    }

    #[test]
    fn factor_critical_examples() {
        let c5 = build_family(&FamilySpec::Cycle(5)).unwrap();
        assert!(is_factor_critical(&c5));
        let k4 = build_family(&FamilySpec::Complete(4)).unwrap();
        assert!(!is_factor_critical(&k4));
        assert!(has_perfect_matching(&k4));
        let f6 = build_family(&FamilySpec::F(6)).unwrap();
        assert!(is_factor_critical(&f6));
        // two disjoint triangles plus an isolated vertex: odd order but disconnected
        let g = Graph::new(7, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_factor_critical(&g));
        assert!(!is_factor_critical(&Graph::empty(0)));
        assert!(is_factor_critical(&Graph::empty(1)));
    }

    #[test]
    fn augment_flips() {
        let g = p4();
        let m = Matching::new(&g, &[(1, 2)]).unwrap();
        let path = AlternatingPath::from_vertices(&m, vec![0, 1, 2, 3]);
        assert!(path.is_augmenting(&g, &m));
        assert_eq!(path.augment(&m).edges(), &[(0, 1), (2, 3)]);
    }
}
