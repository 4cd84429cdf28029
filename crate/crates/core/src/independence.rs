//! Exact independence number and maximum independent sets by
//! branch-and-bound: branch on a vertex of maximum degree in the candidate
//! set (take it or drop it), bounded by a greedy clique cover.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Number of cliques in a greedy cover of `p`; an upper bound on `α(G[p])`.
fn clique_cover_bound(adj: &[u64], mut p: u64) -> usize {
    let mut cliques = 0;
    while p != 0 {
        let v = p.trailing_zeros() as usize;
        let mut cand = p & adj[v];
        p &= !(1 << v);
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= adj[w];
            p &= !(1 << w);
        }
        cliques += 1;
    }
    cliques
}

fn max_degree_vertex(adj: &[u64], p: u64) -> (usize, u32) {
    VertexSet::from_bits(p)
        .iter()
        .map(|v| (v, (adj[v] & p).count_ones()))
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
        .expect("non-empty candidate set")
}

struct Best {
    size: usize,
    set: u64,
}

fn search_max(adj: &[u64], chosen: u64, p: u64, best: &mut Best) {
    let size = chosen.count_ones() as usize;
    if p == 0 {
        if size > best.size {
            *best = Best { size, set: chosen };
        }
        return;
    }
    if size + clique_cover_bound(adj, p) <= best.size {
        return;
    }
    let (v, d) = max_degree_vertex(adj, p);
    if d == 0 {
        search_max(adj, chosen | p, 0, best);
        return;
    }
    search_max(adj, chosen | 1 << v, p & !adj[v] & !(1 << v), best);
    search_max(adj, chosen, p & !(1 << v), best);
}

/// `α(G)` and one maximum independent set.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    let mut best = Best { size: 0, set: 0 };
    search_max(g.rows(), 0, g.vertices().bits(), &mut best);
    (best.size, VertexSet::from_bits(best.set))
}

fn search_all(
    adj: &[u64],
    alpha: usize,
    chosen: u64,
    p: u64,
    out: &mut Vec<VertexSet>,
    cap: usize,
) {
    if out.len() >= cap {
        return;
    }
    let size = chosen.count_ones() as usize;
    if p == 0 {
        if size == alpha {
            out.push(VertexSet::from_bits(chosen));
        }
        return;
    }
    if size + clique_cover_bound(adj, p) < alpha {
        return;
    }
    let (v, d) = max_degree_vertex(adj, p);
    if d == 0 {
        search_all(adj, alpha, chosen | p, 0, out, cap);
        return;
    }
    search_all(
        adj,
        alpha,
        chosen | 1 << v,
        p & !adj[v] & !(1 << v),
        out,
        cap,
    );
    search_all(adj, alpha, chosen, p & !(1 << v), out, cap);
}

/// All maximum independent sets, at most `cap`, sorted.
pub fn maximum_independent_sets(g: &Graph, cap: usize) -> Vec<VertexSet> {
    let (alpha, _) = independence_number(g);
    let mut out = Vec::new();
    search_all(g.rows(), alpha, 0, g.vertices().bits(), &mut out, cap);
    out.sort();
    out
}

/// `α(G[within])`.
pub(crate) fn independence_number_within(g: &Graph, within: VertexSet) -> usize {
    let mut best = Best { size: 0, set: 0 };
    search_max(g.rows(), 0, within.bits(), &mut best);
    best.size
}
