//! Canonical labelling by equitable partition refinement and backtracking.
//!
//! The search tree is the usual individualisation-refinement tree. Leaves are
//! discrete ordered partitions; the certificate of a leaf is the adjacency
//! matrix relabelled by that order, and the canonical form is the smallest
//! certificate over all leaves. Two prunings keep the tree small on highly
//! symmetric inputs:
//!
//! * a leaf whose certificate equals the first or the best leaf yields an
//!   automorphism, and the search returns to the node where the two paths
//!   diverge;
//! * children of a node are skipped when a stored automorphism fixing the
//!   node's individualised prefix maps them onto an already explored child.

use std::cmp::Ordering;

use serde::Serialize;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Totally ordered isomorphism invariant: equal iff the graphs are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm {
    order: usize,
    colors: Vec<u32>,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    /// The canonically labelled graph.
    pub fn graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.rows.clone())
    }
}

/// Result of a canonical labelling run.
#[derive(Debug, Clone)]
pub struct Labeling {
    /// `relabel[v]` is the canonical label of vertex `v`.
    pub relabel: Vec<usize>,
    pub form: CanonicalForm,
    /// Automorphisms found during the search (not necessarily a full
    /// generating set).
    pub automorphisms: Vec<Vec<usize>>,
}

pub fn canonicalize(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    canonical_labeling_colored(g, &vec![0; g.order()])
}

/// Canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonicalize(g).graph()
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonicalize(g) == canonicalize(h)
}

/// Canonical labelling of a vertex-coloured graph. Isomorphisms must
/// preserve colours; canonical labels list colour classes in increasing
/// colour order.
pub fn canonical_labeling_colored(g: &Graph, colors: &[u32]) -> Labeling {
    assert_eq!(colors.len(), g.order(), "one colour per vertex");
    let n = g.order();
    let mut sorted_colors = colors.to_vec();
    sorted_colors.sort_unstable();
    sorted_colors.dedup();
    let mut cells: Vec<u64> = sorted_colors
        .iter()
        .map(|&c| {
            (0..n)
                .filter(|&v| colors[v] == c)
                .fold(0u64, |m, v| m | 1 << v)
        })
        .collect();
    let initial: Vec<u64> = cells.clone();
    refine(g, &mut cells, initial);

    let mut search = Search {
        g,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut prefix = Vec::new();
    search.visit(cells, &mut prefix);
    let best = search.best.expect("search visits at least one leaf");

    let mut relabel = vec![0; n];
    for (pos, &v) in best.lab.iter().enumerate() {
        relabel[v] = pos;
    }
    let mut color_seq: Vec<u32> = colors.to_vec();
    color_seq.sort_unstable();
    if color_seq.iter().all(|&c| c == 0) {
        color_seq.clear();
    }
    Labeling {
        relabel,
        form: CanonicalForm {
            order: n,
            colors: color_seq,
            rows: best.cert,
        },
        automorphisms: search.automorphisms,
    }
}

/// Splits cells until every cell is equitable with respect to every other.
fn refine(g: &Graph, cells: &mut Vec<u64>, mut pending: Vec<u64>) {
    let adj = g.rows();
    let mut head = 0;
    while head < pending.len() {
        let splitter = pending[head];
        head += 1;
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell & (cell - 1) == 0 {
                i += 1;
                continue;
            }
            let mut counts: Vec<(u32, usize)> = VertexSet::from_bits(cell)
                .iter()
                .map(|v| ((adj[v] & splitter).count_ones(), v))
                .collect();
            if counts.iter().all(|&(c, _)| c == counts[0].0) {
                i += 1;
                continue;
            }
            counts.sort_unstable();
            let mut fragments: Vec<u64> = Vec::new();
            let mut last = u32::MAX;
            for &(c, v) in &counts {
                if c != last {
                    fragments.push(0);
                    last = c;
                }
                *fragments.last_mut().unwrap() |= 1 << v;
            }
            let k = fragments.len();
            cells.splice(i..=i, fragments.iter().copied());
            pending.extend(fragments);
            i += k;
        }
        if cells.len() == g.order() {
            break;
        }
    }
}

struct Leaf {
    lab: Vec<usize>,
    path: Vec<usize>,
    cert: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    fn certificate(&self, lab: &[usize]) -> Vec<u64> {
        let n = lab.len();
        let mut pos = vec![0usize; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        lab.iter()
            .map(|&v| {
                self.g
                    .neighbors(v)
                    .iter()
                    .fold(0u64, |row, w| row | 1 << pos[w])
            })
            .collect()
    }

    fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
        let mut perm = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            perm[a] = b;
        }
        perm
    }

    /// Explores the subtree below `cells`. Returns `Some(depth)` when the
    /// caller should abandon everything below depth `depth`.
    fn visit(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) -> Option<usize> {
        let n = self.g.order();
        if cells.len() == n {
            return self.leaf(cells, prefix);
        }
        let depth = prefix.len();
        let (target_idx, &target) = cells
            .iter()
            .enumerate()
            .filter(|(_, &c)| c.count_ones() > 1)
            .min_by_key(|(_, &c)| c.count_ones())
            .expect("non-discrete partition has a non-singleton cell");

        let mut explored: Vec<usize> = Vec::new();
        for w in VertexSet::from_bits(target) {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, w) {
                continue;
            }
            explored.push(w);
            let mut child = cells.clone();
            let single = 1u64 << w;
            child.splice(target_idx..=target_idx, [single, target & !single]);
            refine(self.g, &mut child, vec![single]);
            prefix.push(w);
            let jump = self.visit(child, prefix);
            prefix.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn same_orbit(&self, prefix: &[usize], explored: &[usize], w: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for perm in &self.automorphisms {
            if prefix.iter().all(|&p| perm[p] == p) {
                any = true;
                for (x, &y) in perm.iter().enumerate() {
                    let (a, b) = (root(&mut parent, x), root(&mut parent, y));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rw = root(&mut parent, w);
        explored.iter().any(|&e| root(&mut parent, e) == rw)
    }

    fn leaf(&mut self, cells: Vec<u64>, prefix: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let cert = self.certificate(&lab);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                lab,
                path: prefix.to_vec(),
                cert,
            };
            self.best = Some(Leaf {
                lab: leaf.lab.clone(),
                path: leaf.path.clone(),
                cert: leaf.cert.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let perm = Self::automorphism(&first.lab, &lab);
            let level = common_prefix(&first.path, prefix);
            self.automorphisms.push(perm);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best set with first");
        match cert.cmp(&best.cert) {
            Ordering::Less => {
                self.best = Some(Leaf {
                    lab,
                    path: prefix.to_vec(),
                    cert,
                });
                None
            }
            Ordering::Equal => {
                let perm = Self::automorphism(&best.lab, &lab);
                let level = common_prefix(&best.path, prefix);
                self.automorphisms.push(perm);
                Some(level)
            }
            Ordering::Greater => None,
        }
    }
}
