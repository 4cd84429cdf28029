//! Immutable simple undirected graphs on at most 64 vertices.

use serde::Serialize;
use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of 64")]
    OrderTooLarge(usize),
    #[error("loop edge ({0}, {0}) is not allowed in a simple graph")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
}

/// Simple undirected graph with dense vertex ids `0..n`.
///
/// Adjacency is stored as one 64-bit row per vertex. The rows are always
/// symmetric and loop-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { adj })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph { adj: vec![0; n] }
    }

    /// Builds a graph from raw adjacency rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph, GraphError> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let full = VertexSet::full(n).bits();
        for (u, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, order: n });
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::Loop(u));
            }
        }
        let mut adj = rows;
        for u in 0..n {
            for v in VertexSet::from_bits(adj[u]) {
                adj[v] |= 1 << u;
            }
        }
        Ok(Graph { adj })
    }

    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_rows(adj.clone())
            .map(|g| g.adj == adj)
            .unwrap_or(false));
        Graph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    /// Union of the neighbourhoods of the members of `set`.
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc | self.neighbors(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            let higher = self.adj[u] & !((2u64 << u).wrapping_sub(1));
            out.extend(VertexSet::from_bits(higher).iter().map(|v| (u, v)));
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Common degree when the graph is regular. The null graph has no
    /// regularity.
    pub fn regularity(&self) -> Option<usize> {
        if self.order() == 0 {
            return None;
        }
        let first = self.degree(0);
        (0..self.order())
            .all(|v| self.degree(v) == first)
            .then_some(first)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().bits();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, &row)| !row & full & !(1u64 << u))
            .collect();
        Graph { adj }
    }

    fn check_set(&self, set: VertexSet) -> Result<(), GraphError> {
        match (set - self.vertices()).first() {
            Some(vertex) => Err(GraphError::VertexOutOfRange {
                vertex,
                order: self.order(),
            }),
            None => Ok(()),
        }
    }

    /// Subgraph induced by `set`, relabeled densely in increasing vertex
    /// order. The returned map sends new ids to old ids.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(set)?;
        Ok(self.induced_unchecked(set))
    }

    pub(crate) fn induced_unchecked(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let map = set.to_vec();
        let mut index = [usize::MAX; MAX_ORDER];
        for (new, &old) in map.iter().enumerate() {
            index[old] = new;
        }
        let adj = map
            .iter()
            .map(|&old| {
                (VertexSet::from_bits(self.adj[old]) & set)
                    .iter()
                    .fold(0u64, |row, w| row | 1 << index[w])
            })
            .collect();
        (Graph { adj }, map)
    }

    /// `G - set`.
    pub fn remove_vertices(&self, set: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(set)?;
        Ok(self.induced_unchecked(self.vertices() - set))
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let mut adj = vec![0u64; self.order()];
        for (u, &row) in self.adj.iter().enumerate() {
            adj[perm[u]] = VertexSet::from_bits(row)
                .iter()
                .fold(0u64, |acc, w| acc | 1 << perm[w]);
        }
        Graph { adj }
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.neighbors(v).is_disjoint(set))
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.without(v).is_subset(self.neighbors(v)))
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier) & within;
            frontier = next - seen;
            seen = seen | next;
        }
        seen
    }

    /// Vertex sets of the connected components of `G[within]`, ordered by
    /// smallest member.
    pub(crate) fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v, within);
            out.push(c);
            left = left - c;
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub(crate) fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(v) => self.reach(v, within) == within,
        }
    }

    /// Connected, at least 3 vertices, and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        self.is_biconnected_within(self.vertices())
    }

    pub(crate) fn is_biconnected_within(&self, within: VertexSet) -> bool {
        within.len() >= 3
            && self.is_connected_within(within)
            && within
                .iter()
                .all(|v| self.is_connected_within(within.without(v)))
    }

    /// Cut vertices of `G[within]`.
    pub(crate) fn cut_vertices_within(&self, within: VertexSet) -> VertexSet {
        let base = self.components_within(within).len();
        within
            .iter()
            .filter(|&v| {
                let rest = within.without(v);
                self.components_within(rest).len() > base
                    && !(self.neighbors(v) & within).is_empty()
            })
            .collect()
    }

    /// A 2-colouring of `G[within]`, as `(side containing the smallest vertex of
    /// each component, other side)`.
    pub(crate) fn two_coloring_within(
        &self,
        within: VertexSet,
    ) -> Option<Vec<(VertexSet, VertexSet)>> {
        let mut parts = Vec::new();
        for comp in self.components_within(within) {
            let root = comp.first().expect("component is non-empty");
            let mut a = VertexSet::singleton(root);
            let mut b = VertexSet::EMPTY;
            let mut frontier = a;
            let mut frontier_is_a = true;
            while !frontier.is_empty() {
                let next = self.neighborhood(frontier) & comp;
                let (same, other) = if frontier_is_a { (a, b) } else { (b, a) };
                if !next.is_disjoint(same) {
                    return None;
                }
                let fresh = next - other;
                if frontier_is_a {
                    b = b | fresh;
                } else {
                    a = a | fresh;
                }
                frontier = fresh;
                frontier_is_a = !frontier_is_a;
            }
            parts.push((a, b));
        }
        Some(parts)
    }

    /// A bipartition `(A, B)`: for each component, `A` receives the side of
    /// its smallest vertex.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let parts = self.two_coloring_within(self.vertices())?;
        Some(
            parts
                .iter()
                .fold((VertexSet::EMPTY, VertexSet::EMPTY), |(a, b), &(x, y)| {
                    (a | x, b | y)
                }),
        )
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn profile(&self) -> StructureProfile {
        StructureProfile {
            order: self.order(),
            size: self.edge_count(),
            connected: self.is_connected(),
            biconnected: self.is_biconnected(),
            bipartition: self.bipartition(),
            regularity: self.regularity(),
            degree_sequence: self.degree_sequence(),
        }
    }

    /// `|∂(x)|` and, when `y` is given, the number of edges in both `∂(x)`
    /// and `∂(y)`.
    pub fn boundary_counts(
        &self,
        x: VertexSet,
        y: Option<VertexSet>,
    ) -> Result<BoundaryCounts, GraphError> {
        self.check_set(x)?;
        if let Some(y) = y {
            self.check_set(y)?;
        }
        Ok(BoundaryCounts {
            boundary: self.boundary_size(x),
            between: y.map(|y| self.edges_between(x, y)),
        })
    }

    /// Number of edges with exactly one end in `x`.
    pub fn boundary_size(&self, x: VertexSet) -> usize {
        x.iter().map(|v| (self.neighbors(v) - x).len()).sum()
    }

    /// Number of edges lying in both `∂(x)` and `∂(y)`. For disjoint sets this
    /// is the number of edges joining `x` to `y`.
    pub fn edges_between(&self, x: VertexSet, y: VertexSet) -> usize {
        let mut count = 0;
        for v in x - y {
            // v in x only: the edge leaves x iff w is not in x, and crosses y iff w in y.
            count += (self.neighbors(v) & (y - x)).len();
        }
        for v in x & y {
            // v in both: need w outside both.
            count += (self.neighbors(v) - x - y).len();
        }
        count
    }

    /// Number of edges with both ends in `x`.
    pub fn inner_edge_count(&self, x: VertexSet) -> usize {
        x.iter()
            .map(|v| (self.neighbors(v) & x).len())
            .sum::<usize>()
            / 2
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureProfile {
    pub order: usize,
    pub size: usize,
    pub connected: bool,
    /// False for graphs with fewer than three vertices.
    pub biconnected: bool,
    pub bipartition: Option<(VertexSet, VertexSet)>,
    pub regularity: Option<usize>,
    pub degree_sequence: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundaryCounts {
    pub boundary: usize,
    pub between: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_family, FamilySpec};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2), (2, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree_sequence(), vec![2, 2, 2]);
    }

    #[test]
    fn build_errors() {
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 2,
                order: 2
            })
        );
        assert_eq!(Graph::new(65, &[]), Err(GraphError::OrderTooLarge(65)));
        assert!(Graph::from_rows(vec![0b1]).is_err());
    }

    #[test]
    fn two_disjoint_edges_disconnected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.profile().connected);
    }

    #[test]
    fn complement_examples() {
        let c7 = build_family(&FamilySpec::Cycle(7)).unwrap();
        assert_eq!(c7.complement().regularity(), Some(4));
        let k5 = build_family(&FamilySpec::Complete(5)).unwrap();
        assert_eq!(k5.complement().edge_count(), 0);
        assert_eq!(k5.complement().order(), 5);
        let p4 = path(4);
        assert_eq!(p4.complement().complement(), p4);
    }

    #[test]
    fn induced_examples() {
        let k5 = build_family(&FamilySpec::Complete(5)).unwrap();
        let (k3, map) = k5.induced_subgraph(set(&[1, 3, 4])).unwrap();
        assert_eq!(k3, build_family(&FamilySpec::Complete(3)).unwrap());
        assert_eq!(map, vec![1, 3, 4]);
        let c6 = build_family(&FamilySpec::Cycle(6)).unwrap();
        let (h, _) = c6.induced_subgraph(set(&[0, 2, 4])).unwrap();
        assert_eq!(h, Graph::empty(3));
        let (null, map) = c6.induced_subgraph(VertexSet::EMPTY).unwrap();
        assert_eq!(null.order(), 0);
        assert!(map.is_empty());
        assert!(c6.induced_subgraph(set(&[6])).is_err());
    }

    #[test]
    fn profile_examples() {
        let k33 = build_family(&FamilySpec::CompleteBipartite(3, 3)).unwrap();
        let p = k33.profile();
        assert!(p.connected && p.biconnected);
        let (a, b) = p.bipartition.unwrap();
        assert_eq!((a.len(), b.len()), (3, 3));
        assert_eq!(p.regularity, Some(3));

        let p = path(4).profile();
        assert!(p.connected && !p.biconnected);
        assert!(p.bipartition.is_some());
        assert_eq!(p.regularity, None);

        let f6 = build_family(&FamilySpec::F(6)).unwrap();
        let p = f6.profile();
        assert!(p.connected);
        assert_eq!(p.regularity, Some(6));
        assert!(p.bipartition.is_none());
        assert_eq!(p.order, 13);

        // small orders are never biconnected
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(!k2.is_biconnected());
        assert!(!Graph::empty(0).is_biconnected());
        assert_eq!(Graph::empty(0).regularity(), None);
    }

    #[test]
    fn boundary_examples() {
        let k4 = build_family(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(k4.boundary_counts(set(&[0]), None).unwrap().boundary, 3);
        let k33 = build_family(&FamilySpec::CompleteBipartite(3, 3)).unwrap();
        let (a, b) = k33.bipartition().unwrap();
        let c = k33.boundary_counts(a, Some(b)).unwrap();
        assert_eq!(c.between, Some(9));
        assert_eq!(c.boundary, 9);
        let f6 = build_family(&FamilySpec::F(6)).unwrap();
        let apex = 12;
        let rest = f6.vertices().without(apex);
        assert_eq!(f6.boundary_counts(rest, None).unwrap().boundary, 6);
        assert!(k4.boundary_counts(set(&[4]), None).is_err());
        assert_eq!(k4.boundary_size(VertexSet::EMPTY), 0);
    }

    #[test]
    fn cut_vertices_of_path() {
        let p = path(5);
        assert_eq!(p.cut_vertices_within(p.vertices()), set(&[1, 2, 3]));
    }

    #[test]
    fn edges_sorted() {
        let g = Graph::new(4, &[(3, 2), (0, 3), (1, 0)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (2, 3)]);
        let k64 = Graph::empty(64).complement();
        assert_eq!(k64.edges().len(), 64 * 63 / 2);
    }
}
