//! Edmonds' blossom algorithm: single-root alternating-tree search with
//! blossom shrinking via base pointers.

use super::{AlternatingPath, Matching, MatchingError};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

struct Tree<'a> {
    g: &'a Graph,
    mate: &'a [Option<usize>],
    base: Vec<usize>,
    parent: Vec<Option<usize>>,
    outer: Vec<bool>,
}

impl<'a> Tree<'a> {
    fn new(g: &'a Graph, mate: &'a [Option<usize>]) -> Self {
        let n = g.order();
        Tree {
            g,
            mate,
            base: (0..n).collect(),
            parent: vec![None; n],
            outer: vec![false; n],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match self.mate[a] {
                None => break,
                Some(m) => a = self.parent[m].expect("outer vertex has a tree parent"),
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            let m = self.mate[b].expect("path to root passes through matched bases");
            b = self.parent[m].expect("outer vertex has a tree parent");
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, blossom: &mut [bool]) {
        while self.base[v] != b {
            let m = self.mate[v].expect("blossom path vertex is matched");
            blossom[self.base[v]] = true;
            blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("outer vertex has a tree parent");
        }
    }

    /// Grows an alternating tree from `root`; returns an augmenting path from
    /// `root` to an exposed vertex of `targets`, listed root first.
    fn search(mut self, root: usize, targets: VertexSet) -> Option<Vec<usize>> {
        let n = self.g.order();
        self.outer[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let to_is_outer =
                    to == root || self.mate[to].is_some_and(|m| self.parent[m].is_some());
                if to_is_outer {
                    let cur = self.lca(v, to);
                    let mut blossom = vec![false; n];
                    self.mark_path(v, cur, to, &mut blossom);
                    self.mark_path(to, cur, v, &mut blossom);
                    for i in 0..n {
                        if blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.outer[i] {
                                self.outer[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    match self.mate[to] {
                        None if !targets.contains(to) => continue,
                        None => {
                            self.parent[to] = Some(v);
                            return Some(self.unwind(to));
                        }
                        Some(m) => {
                            self.parent[to] = Some(v);
                            self.outer[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }

    fn unwind(&self, end: usize) -> Vec<usize> {
        let mut path = Vec::new();
        let mut v = end;
        loop {
            let p = self.parent[v].expect("tree vertex has a parent");
            path.push(v);
            path.push(p);
            match self.mate[p] {
                None => break,
                Some(next) => v = next,
            }
        }
        path.reverse();
        path
    }
}

fn flip(mate: &mut [Option<usize>], path: &[usize]) {
    for pair in path.chunks(2) {
        mate[pair[0]] = Some(pair[1]);
        mate[pair[1]] = Some(pair[0]);
    }
}

/// Maximum-cardinality matching.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.order();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    for v in 0..n {
        if mate[v].is_none() {
            if let Some(w) = g.neighbors(v).iter().find(|&w| mate[w].is_none()) {
                mate[v] = Some(w);
                mate[w] = Some(v);
            }
        }
    }
    let all = g.vertices();
    for v in 0..n {
        if mate[v].is_none() {
            if let Some(path) = Tree::new(g, &mate).search(v, all.without(v)) {
                flip(&mut mate, &path);
            }
        }
    }
    Matching::from_mates(&mate)
}

/// `ν(G)`.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// An `m`-augmenting path joining a vertex of `sources` to a different vertex
/// of `targets`, if one exists. Sources are tried in increasing order.
pub fn find_augmenting_path(
    g: &Graph,
    m: &Matching,
    sources: VertexSet,
    targets: VertexSet,
) -> Result<Option<AlternatingPath>, MatchingError> {
    let n = g.order();
    let covered = m.covered();
    for v in (sources | targets).iter() {
        if v >= n {
            return Err(MatchingError::VertexOutOfRange {
                vertex: v,
                order: n,
            });
        }
        if covered.contains(v) {
            return Err(MatchingError::CoveredEndpoint(v));
        }
    }
    let mate = m.mates(n);
    for s in sources {
        let t = targets.without(s);
        if t.is_empty() {
            continue;
        }
        if let Some(path) = Tree::new(g, &mate).search(s, t) {
            return Ok(Some(AlternatingPath::from_vertices(m, path)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_family, FamilySpec};
    use crate::matching::is_maximal;

    #[test]
    fn small_examples() {
        let k4 = build_family(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(matching_number(&k4), 2);
        let c7 = build_family(&FamilySpec::Cycle(7)).unwrap();
        assert_eq!(matching_number(&c7), 3);
        let pet = build_family(&FamilySpec::Petersen).unwrap();
        let m = maximum_matching(&pet);
        assert_eq!(m.len(), 5);
        assert!(Matching::new(&pet, m.edges()).is_ok());
        assert!(is_maximal(&pet, &m));
        assert_eq!(matching_number(&Graph::empty(0)), 0);
    }

    #[test]
    fn needs_blossom() {
        // stem 0-1, matched 1-2, odd cycle 2-3-4 with 3-4 matched, exit 3-5:
        // the only augmenting path is 0-1-2-4-3-5
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (2, 4), (3, 4), (3, 5)]).unwrap();
        assert_eq!(matching_number(&g), 3);
        let m = Matching::new(&g, &[(1, 2), (3, 4)]).unwrap();
        let p = find_augmenting_path(&g, &m, VertexSet::singleton(0), VertexSet::singleton(5))
            .unwrap()
            .unwrap();
        assert!(p.is_augmenting(&g, &m));
        assert_eq!(p.vertices, vec![0, 1, 2, 4, 3, 5]);
        assert_eq!(p.augment(&m).len(), 3);
    }

    #[test]
    fn augmenting_examples() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let m = Matching::new(&p4, &[(1, 2)]).unwrap();
        let path = find_augmenting_path(&p4, &m, VertexSet::singleton(0), VertexSet::singleton(3))
            .unwrap()
            .unwrap();
        assert_eq!(path.vertices, vec![0, 1, 2, 3]);
        assert_eq!(path.matched, vec![false, true, false]);

        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let m = Matching::new(&k2, &[(0, 1)]).unwrap();
        let exposed = k2.vertices() - m.covered();
        assert_eq!(
            find_augmenting_path(&k2, &m, exposed, exposed).unwrap(),
            None
        );
        assert_eq!(
            find_augmenting_path(&k2, &m, VertexSet::singleton(0), VertexSet::EMPTY),
            Err(MatchingError::CoveredEndpoint(0))
        );

        let c4 = build_family(&FamilySpec::Cycle(4)).unwrap();
        let m = Matching::new(&c4, &[(0, 1)]).unwrap();
        let path = find_augmenting_path(&c4, &m, VertexSet::singleton(2), VertexSet::singleton(3))
            .unwrap()
            .unwrap();
        assert_eq!(path.vertices, vec![2, 3]);
    }
}
