//! The partition `V = I ∪ W ∪ T' ∪ T''` built from a maximum independent set
//! `I`, a vertex `v ∈ I` and a perfect matching `M^v` of `G - v`, together
//! with the refinement of `M_2` and the sets `T_w`.

mod audit;
mod search;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::classify::is_equimatchable;
use crate::graph::Graph;
use crate::independence::independence_number;
use crate::matching::{enumerate_perfect_matchings, Matching};
use crate::vertex_set::VertexSet;

pub use audit::{
    audit_decomposition, audit_graph, AuditError, AuditOptions, AuditPlan, AuditReport,
    CheckRecord, CheckStatus, Coverage, DecompositionRun, GraphAudit,
};
pub use search::{
    balanced_bipartition_search, odd_clique_obstruction_search, BalancedBipartition, BalancedSplit,
    ObstructionError, ObstructionSearch,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("the given vertex set is not independent")]
    NotIndependent,
    #[error("independent set has {size} vertices but the independence number is {alpha}")]
    NotMaximum { size: usize, alpha: usize },
    #[error("vertex {0} is not in the independent set")]
    VertexNotInSet(usize),
    #[error("G - {0} has no perfect matching: the graph is not factor-critical at {0}")]
    NoPerfectMatching(usize),
    #[error("the supplied matching is not a perfect matching of G - {0}")]
    NotPerfectMatching(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub v: usize,
    /// The maximum independent set `I`.
    pub independent: VertexSet,
    /// Perfect matching of `G - v`.
    pub mv: Matching,
    /// Edges of `mv` with an end in `I`.
    pub m1: Matching,
    /// Edges of `mv` avoiding `I`.
    pub m2: Matching,
    /// `V(M_1) \ I`.
    pub w: VertexSet,
    pub t_prime: VertexSet,
    pub t_double_prime: VertexSet,
    /// `M_2` edges with no neighbour in `W`.
    pub m20: Matching,
    /// `M_2` edges touching `W` where each end has at most one `W`-neighbour.
    pub m21: Matching,
    /// `M_2` edges with an end having two or more `W`-neighbours.
    pub m22: Matching,
    /// `T_w` for every `w ∈ W`.
    pub t_w: BTreeMap<usize, VertexSet>,
    /// Members `w` of `W` with `|T_w| >= 3`.
    pub w_prime: VertexSet,
}

fn check_range(g: &Graph, set: VertexSet) -> Result<(), DecompositionError> {
    match (set - g.vertices()).first() {
        Some(vertex) => Err(DecompositionError::VertexOutOfRange {
            vertex,
            order: g.order(),
        }),
        None => Ok(()),
    }
}

/// Perfect matchings of `G[within]` in original labels, lexicographic order.
pub(crate) fn perfect_matchings_within(g: &Graph, within: VertexSet, cap: usize) -> Vec<Matching> {
    let (h, map) = g.induced_unchecked(within);
    enumerate_perfect_matchings(&h, cap)
        .into_iter()
        .map(|m| {
            let edges = m.edges().iter().map(|&(a, b)| (map[a], map[b])).collect();
            Matching::from_sorted_unchecked(edges)
        })
        .collect()
}

/// Builds the decomposition for `(I, v)`. Without `mv`, the lexicographically
/// first perfect matching of `G - v` is used.
pub fn build_decomposition(
    g: &Graph,
    independent: VertexSet,
    v: usize,
    mv: Option<&Matching>,
) -> Result<Decomposition, DecompositionError> {
    check_range(g, independent.with(v))?;
    if !g.is_independent(independent) {
        return Err(DecompositionError::NotIndependent);
    }
    let alpha = independence_number(g).0;
    if independent.len() != alpha {
        return Err(DecompositionError::NotMaximum {
            size: independent.len(),
            alpha,
        });
    }
    if !independent.contains(v) {
        return Err(DecompositionError::VertexNotInSet(v));
    }
    let rest = g.vertices().without(v);
    let mv = match mv {
        Some(m) => {
            let valid = m.edges().iter().all(|&(a, b)| g.has_edge(a, b)) && m.covered() == rest;
            if !valid {
                return Err(DecompositionError::NotPerfectMatching(v));
            }
            m.clone()
        }
        None => perfect_matchings_within(g, rest, 1)
            .pop()
            .ok_or(DecompositionError::NoPerfectMatching(v))?,
    };
    Ok(assemble(g, independent, v, mv))
}

fn assemble(g: &Graph, independent: VertexSet, v: usize, mv: Matching) -> Decomposition {
    let split = |keep: &dyn Fn(usize, usize) -> bool| {
        Matching::from_sorted_unchecked(
            mv.edges()
                .iter()
                .copied()
                .filter(|&(a, b)| keep(a, b))
                .collect(),
        )
    };
    let touches_i = |a: usize, b: usize| independent.contains(a) || independent.contains(b);
    let m1 = split(&touches_i);
    let m2 = split(&|a, b| !touches_i(a, b));
    let w = m1.covered() - independent;
    let w_degree = |x: usize| (g.neighbors(x) & w).len();
    let m20 = split(&|a, b| !touches_i(a, b) && w_degree(a) == 0 && w_degree(b) == 0);
    let m21 = split(&|a, b| {
        !touches_i(a, b) && w_degree(a) + w_degree(b) > 0 && w_degree(a) <= 1 && w_degree(b) <= 1
    });
    let m22 = split(&|a, b| !touches_i(a, b) && (w_degree(a) >= 2 || w_degree(b) >= 2));
    let t_w: BTreeMap<usize, VertexSet> = w
        .iter()
        .map(|x| {
            let set = m21
                .edges()
                .iter()
                .filter(|&&(a, b)| g.has_edge(x, a) || g.has_edge(x, b))
                .fold(VertexSet::singleton(x), |s, &(a, b)| s.with(a).with(b));
            (x, set)
        })
        .collect();
    let w_prime = t_w
        .iter()
        .filter(|(_, t)| t.len() >= 3)
        .map(|(&x, _)| x)
        .collect();
    Decomposition {
        v,
        independent,
        t_prime: m21.covered() | m22.covered(),
        t_double_prime: m20.covered(),
        mv,
        m1,
        m2,
        w,
        m20,
        m21,
        m22,
        t_w,
        w_prime,
    }
}

impl Decomposition {
    /// Structural invariants that every build satisfies on any graph; an
    /// empty list means all hold.
    pub fn invariant_violations(&self, g: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        let mut expect = |ok: bool, what: &str| {
            if !ok {
                out.push(what.to_string());
            }
        };
        let all = g.vertices();
        let i = self.independent;
        expect(g.is_independent(i), "I is independent");
        expect(i.contains(self.v), "v lies in I");
        expect(
            self.mv.edges().iter().all(|&(a, b)| g.has_edge(a, b))
                && self.mv.covered() == all.without(self.v)
                && self.mv.covered().len() == 2 * self.mv.len(),
            "M^v is a perfect matching of G - v",
        );
        let parts = [i, self.w, self.t_prime, self.t_double_prime];
        let union = parts.iter().fold(VertexSet::EMPTY, |s, &p| s | p);
        let sizes: usize = parts.iter().map(|p| p.len()).sum();
        expect(
            union == all && sizes == all.len(),
            "I, W, T', T'' partition V",
        );
        expect(self.w.len() + 1 == i.len(), "|W| = |I| - 1");
        expect(
            self.m1.len() + self.m2.len() == self.mv.len(),
            "M^v = M_1 + M_2",
        );
        let mut refined: Vec<_> = [&self.m20, &self.m21, &self.m22]
            .iter()
            .flat_map(|m| m.edges().iter().copied())
            .collect();
        refined.sort_unstable();
        expect(refined == self.m2.edges(), "M_2 = M_20 + M_21 + M_22");
        expect(
            self.t_w.keys().copied().collect::<VertexSet>() == self.w,
            "T_w indexed by W",
        );
        expect(self.t_w.values().all(|t| t.len() % 2 == 1), "|T_w| is odd");
        expect(
            self.t_w.values().all(|&t| g.is_connected_within(t)),
            "each T_w induces a connected subgraph",
        );
        out
    }

    /// Whether the `T_w` sets are pairwise disjoint.
    pub fn t_w_disjoint(&self) -> bool {
        let total: usize = self.t_w.values().map(|t| t.len()).sum();
        let union = self.t_w.values().fold(VertexSet::EMPTY, |s, &t| s | t);
        total == union.len()
    }
}

/// Which parts of the defining conditions of the target class hold: connected,
/// `r`-regular with `r` even and at least 6, odd order, `α >= 3`,
/// equimatchable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassMembership {
    pub connected: bool,
    pub regularity: Option<usize>,
    pub odd_order: bool,
    pub alpha: usize,
    pub equimatchable: bool,
}

impl ClassMembership {
    pub fn is_member(&self) -> bool {
        self.unmet().is_empty()
    }

    /// Human-readable list of the failing conditions.
    pub fn unmet(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.connected {
            out.push("not connected");
        }
        match self.regularity {
            None => out.push("not regular"),
            Some(r) if r % 2 == 1 || r < 6 => out.push("degree is not even and at least 6"),
            Some(_) => {}
        }
        if !self.odd_order {
            out.push("even order");
        }
        if self.alpha < 3 {
            out.push("independence number below 3");
        }
        if !self.equimatchable {
            out.push("not equimatchable");
        }
        out
    }
}

pub fn class_membership(g: &Graph) -> ClassMembership {
    ClassMembership {
        connected: g.is_connected(),
        regularity: g.regularity(),
        odd_order: g.order() % 2 == 1,
        alpha: independence_number(g).0,
        equimatchable: is_equimatchable(g).equimatchable,
    }
}
