//! Brute-force oracles shared by the integration tests. Each one follows the
//! definition directly and uses nothing from the library except `Graph`
//! accessors.

#![allow(dead_code)]

use std::collections::BTreeSet;

use equimatch::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Maximum matching size by trying, for the lowest remaining vertex, to leave
/// it unmatched or match it to each remaining neighbour.
pub fn nu(g: &Graph) -> usize {
    fn rec(g: &Graph, left: u64) -> usize {
        if left == 0 {
            return 0;
        }
        let x = left.trailing_zeros() as usize;
        let rest = left & !(1 << x);
        let mut best = rec(g, rest);
        for y in 0..g.order() {
            if rest >> y & 1 == 1 && g.has_edge(x, y) {
                best = best.max(1 + rec(g, rest & !(1 << y)));
            }
        }
        best
    }
    rec(g, full(g.order()))
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Sizes of all maximal matchings, found by deciding every edge in turn.
pub fn maximal_sizes(g: &Graph) -> BTreeSet<usize> {
    fn rec(edges: &[(usize, usize)], i: usize, used: u64, size: usize, out: &mut BTreeSet<usize>) {
        if i == edges.len() {
            let maximal = edges
                .iter()
                .all(|&(a, b)| used >> a & 1 == 1 || used >> b & 1 == 1);
            if maximal {
                out.insert(size);
            }
            return;
        }
        let (a, b) = edges[i];
        if used >> a & 1 == 0 && used >> b & 1 == 0 {
            rec(edges, i + 1, used | 1 << a | 1 << b, size + 1, out);
        }
        rec(edges, i + 1, used, size, out);
    }
    let edges = all_edges(g);
    let mut out = BTreeSet::new();
    rec(&edges, 0, 0, 0, &mut out);
    out
}

/// Every maximal matching, each as a sorted edge list.
pub fn maximal_matchings(g: &Graph) -> BTreeSet<Vec<(usize, usize)>> {
    fn rec(
        edges: &[(usize, usize)],
        i: usize,
        used: u64,
        cur: &mut Vec<(usize, usize)>,
        out: &mut BTreeSet<Vec<(usize, usize)>>,
    ) {
        if i == edges.len() {
            if edges
                .iter()
                .all(|&(a, b)| used >> a & 1 == 1 || used >> b & 1 == 1)
            {
                out.insert(cur.clone());
            }
            return;
        }
        let (a, b) = edges[i];
        if used >> a & 1 == 0 && used >> b & 1 == 0 {
            cur.push((a, b));
            rec(edges, i + 1, used | 1 << a | 1 << b, cur, out);
            cur.pop();
        }
        rec(edges, i + 1, used, cur, out);
    }
    let edges = all_edges(g);
    let mut out = BTreeSet::new();
    rec(&edges, 0, 0, &mut Vec::new(), &mut out);
    out
}

pub fn equimatchable(g: &Graph) -> bool {
    maximal_sizes(g).len() == 1
}

pub fn all_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Independence number by scanning all vertex subsets.
pub fn alpha(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 20, "subset scan limited to 20 vertices");
    let mut best = 0;
    for s in 0u32..1 << n {
        let k = s.count_ones() as usize;
        if k <= best {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let independent = members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| !g.has_edge(a, b)));
        if independent {
            best = k;
        }
    }
    best
}

/// Graph with vertex `v` deleted and the rest renumbered in order.
pub fn delete_vertex(g: &Graph, v: usize) -> Graph {
    let keep: Vec<usize> = (0..g.order()).filter(|&x| x != v).collect();
    let mut edges = Vec::new();
    for (i, &a) in keep.iter().enumerate() {
        for (j, &b) in keep.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(keep.len(), &edges).unwrap()
}

pub fn factor_critical(g: &Graph) -> bool {
    let n = g.order();
    n % 2 == 1 && (0..n).all(|v| 2 * nu(&delete_vertex(g, v)) == n - 1)
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// `p` maps `g` onto `h` edge for edge.
pub fn is_isomorphism(g: &Graph, h: &Graph, p: &[usize]) -> bool {
    let n = g.order();
    (0..n).all(|a| (a + 1..n).all(|b| g.has_edge(a, b) == h.has_edge(p[a], p[b])))
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || all_edges(g).len() != all_edges(h).len() {
        return false;
    }
    let mut found = false;
    for_each_permutation(g.order(), |p| found |= !found && is_isomorphism(g, h, p));
    found
}

pub fn automorphism_count(g: &Graph) -> usize {
    let mut count = 0;
    for_each_permutation(g.order(), |p| {
        if is_isomorphism(g, g, p) {
            count += 1;
        }
    });
    count
}

/// graph6 written straight from the format definition: one byte `n + 63`,
/// then the upper triangle column by column, six bits per byte, each byte
/// offset by 63.
pub fn graph6_reference(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= 62);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = vec![(n as u8) + 63];
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        out.push(v + 63);
    }
    String::from_utf8(out).unwrap()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// A random triangle-free graph: vertex pairs in random order, each kept
/// with probability `p` when it closes no triangle.
pub fn random_triangle_free<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    pairs.shuffle(rng);
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for (a, b) in pairs {
        let closes = (0..n).any(|c| adj[a][c] && adj[b][c]);
        if !closes && rng.gen_bool(p) {
            adj[a][b] = true;
            adj[b][a] = true;
            edges.push((a, b));
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Connectivity by depth-first search.
pub fn connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for (y, s) in seen.iter_mut().enumerate() {
            if g.has_edge(x, y) && !*s {
                *s = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// At least three vertices and connected after deleting any one vertex.
pub fn biconnected(g: &Graph) -> bool {
    g.order() >= 3 && connected(g) && (0..g.order()).all(|v| connected(&delete_vertex(g, v)))
}

/// `g` is `K_{2t}` for some `t >= 0`.
pub fn is_complete_even(g: &Graph) -> bool {
    let n = g.order();
    n.is_multiple_of(2) && all_edges(g).len() == n * n.saturating_sub(1) / 2
}

/// `g` is `K_{t,t}` for some `t >= 1`.
pub fn is_balanced_complete_bipartite(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 || n % 2 == 1 {
        return false;
    }
    let side: Vec<usize> = (0..n).filter(|&x| !g.has_edge(0, x)).collect();
    if side.len() != n / 2 {
        return false;
    }
    (0..n).all(|a| (a + 1..n).all(|b| g.has_edge(a, b) == (side.contains(&a) != side.contains(&b))))
}
