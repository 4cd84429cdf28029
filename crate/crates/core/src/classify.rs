//! Equimatchability verdicts with witnesses, remainder shapes of isolating
//! matchings, and classification of connected regular graphs.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::isomorphic;
use crate::families::{build_family, FamilySpec};
use crate::graph::Graph;
use crate::matching::{
    enumerate_minimal_isolating, find_small_maximal_matching, is_factor_critical, maximum_matching,
    Matching,
};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqmVerdict {
    pub equimatchable: bool,
    pub nu: usize,
    /// A maximal matching smaller than `nu`, present iff not equimatchable.
    pub witness: Option<Matching>,
}

/// Decides whether every maximal matching of `g` has size `ν(g)`.
pub fn is_equimatchable(g: &Graph) -> EqmVerdict {
    let nu = maximum_matching(g).len();
    let witness = find_small_maximal_matching(g, nu);
    EqmVerdict {
        equimatchable: witness.is_none(),
        nu,
        witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BiconnectedClass {
    CompleteEven,
    Bipartite,
    FactorCritical,
    /// Not 2-connected or not equimatchable.
    NotApplicable,
}

/// Places a 2-connected equimatchable graph in one of three classes: an
/// even complete graph, bipartite, or factor-critical, checked in that order.
///
/// # Panics
///
/// If a 2-connected equimatchable graph falls in none of the three.
pub fn classify_biconnected_equimatchable(g: &Graph) -> BiconnectedClass {
    if !g.is_biconnected() || !is_equimatchable(g).equimatchable {
        return BiconnectedClass::NotApplicable;
    }
    let n = g.order();
    if n.is_multiple_of(2) && g.edge_count() == n * (n - 1) / 2 {
        BiconnectedClass::CompleteEven
    } else if g.is_bipartite() {
        BiconnectedClass::Bipartite
    } else if is_factor_critical(g) {
        BiconnectedClass::FactorCritical
    } else {
        panic!("2-connected equimatchable graph in no class: {g:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RemainderShape {
    /// `K_{2t}`; the null graph is `CompleteEven(0)`.
    CompleteEven(usize),
    /// `K_{t,t}` with `t >= 1`.
    BalancedCompleteBipartite(usize),
    Other,
}

pub fn remainder_shape(g: &Graph) -> RemainderShape {
    let n = g.order();
    let m = g.edge_count();
    if n.is_multiple_of(2) && m == n * n.saturating_sub(1) / 2 {
        return RemainderShape::CompleteEven(n / 2);
    }
    if n.is_multiple_of(2) && m == n * n / 4 && g.is_connected() {
        if let Some((a, b)) = g.bipartition() {
            if a.len() == b.len() {
                return RemainderShape::BalancedCompleteBipartite(n / 2);
            }
        }
    }
    RemainderShape::Other
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditPrecondition {
    #[error("graph is not 2-connected")]
    NotBiconnected,
    #[error("graph is not factor-critical")]
    NotFactorCritical,
    #[error("graph is not equimatchable")]
    NotEquimatchable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemainderCounterexample {
    pub vertex: usize,
    pub matching: Matching,
    pub remainder: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexRemainders {
    pub vertex: usize,
    pub matchings_checked: usize,
    /// The per-vertex cap was reached, so more matchings may exist.
    pub cap_reached: bool,
    /// Matchings covering everything but `vertex`, read as `K_0`.
    pub empty_remainders: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemainderAudit {
    pub vertices: Vec<VertexRemainders>,
    pub counterexamples: Vec<RemainderCounterexample>,
}

impl RemainderAudit {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn matchings_checked(&self) -> usize {
        self.vertices.iter().map(|v| v.matchings_checked).sum()
    }
}

/// For a 2-connected, factor-critical, equimatchable graph: for every vertex
/// `v` and every minimal matching `M` isolating `v` (up to `per_vertex_cap`
/// per vertex), checks that `G - V(M) - v` is `K_{2t}` or `K_{t,t}`. Vertices
/// are processed in parallel; results are in vertex order.
pub fn isolating_remainder_audit(
    g: &Graph,
    per_vertex_cap: usize,
) -> Result<RemainderAudit, AuditPrecondition> {
    if !g.is_biconnected() {
        return Err(AuditPrecondition::NotBiconnected);
    }
    if !is_factor_critical(g) {
        return Err(AuditPrecondition::NotFactorCritical);
    }
    if !is_equimatchable(g).equimatchable {
        return Err(AuditPrecondition::NotEquimatchable);
    }
    let per_vertex: Vec<_> = (0..g.order())
        .into_par_iter()
        .map(|v| {
            let ms = enumerate_minimal_isolating(g, v, per_vertex_cap).expect("vertex in range");
            let mut bad = Vec::new();
            let mut empty = 0;
            for m in &ms {
                let rest = g.vertices() - m.covered() - VertexSet::singleton(v);
                if rest.is_empty() {
                    empty += 1;
                }
                let (h, _) = g.induced_unchecked(rest);
                if remainder_shape(&h) == RemainderShape::Other {
                    bad.push(RemainderCounterexample {
                        vertex: v,
                        matching: m.clone(),
                        remainder: rest,
                    });
                }
            }
            let summary = VertexRemainders {
                vertex: v,
                matchings_checked: ms.len(),
                cap_reached: ms.len() == per_vertex_cap,
                empty_remainders: empty,
            };
            (summary, bad)
        })
        .collect();
    let mut audit = RemainderAudit {
        vertices: Vec::new(),
        counterexamples: Vec::new(),
    };
    for (summary, bad) in per_vertex {
        audit.vertices.push(summary);
        audit.counterexamples.extend(bad);
    }
    Ok(audit)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Exceptional4 {
    ComplementC7,
    ComplementF4,
}

/// Tag of a graph against the known lists of connected equimatchable regular
/// graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RegularClass {
    /// `K_{r+1}`.
    CompleteKr1,
    /// `K_{r,r}`.
    CompleteBipartiteKrr,
    /// The two 4-regular graphs in the quartic list that are neither
    /// complete, complete bipartite nor `F_4`.
    FourRegularExceptional(Exceptional4),
    FGraph(usize),
    /// Connected, regular and equimatchable, but matching none of the named
    /// graphs. Expected for cycles `C_7` and for even `r` with `α <= 2`.
    UncharacterizedEquimatchable,
    NotEquimatchable,
    NotRegular,
    Disconnected,
}

impl RegularClass {
    /// Whether the tag asserts equimatchability.
    pub fn is_equimatchable(self) -> bool {
        !matches!(
            self,
            RegularClass::NotEquimatchable | RegularClass::NotRegular | RegularClass::Disconnected
        )
    }
}

impl std::fmt::Display for RegularClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegularClass::FourRegularExceptional(Exceptional4::ComplementC7) => {
                write!(f, "FourRegularExceptional(complement-C7)")
            }
            RegularClass::FourRegularExceptional(Exceptional4::ComplementF4) => {
                write!(f, "FourRegularExceptional(complement-F4)")
            }
            RegularClass::FGraph(r) => write!(f, "FGraph({r})"),
            other => write!(f, "{other:?}"),
        }
    }
}

fn named_candidate(g: &Graph, r: usize) -> Option<RegularClass> {
    let n = g.order();
    let m = g.edge_count();
    if n == r + 1 {
        return Some(RegularClass::CompleteKr1);
    }
    if n == 2 * r && g.is_bipartite() && m == r * r {
        return Some(RegularClass::CompleteBipartiteKrr);
    }
    let matches = |spec: FamilySpec| isomorphic(g, &build_family(&spec).expect("valid spec"));
    if r == 4 && n == 7 && matches(FamilySpec::ComplementCycle(7)) {
        return Some(RegularClass::FourRegularExceptional(
            Exceptional4::ComplementC7,
        ));
    }
    if r == 4 && n == 9 && isomorphic(g, &build_family(&FamilySpec::F(4)).unwrap().complement()) {
        return Some(RegularClass::FourRegularExceptional(
            Exceptional4::ComplementF4,
        ));
    }
    if r.is_multiple_of(2) && r >= 2 && n == 2 * r + 1 && matches(FamilySpec::F(r)) {
        return Some(RegularClass::FGraph(r));
    }
    None
}

/// Classifies `g` by isomorphism against the named equimatchable regular
/// graphs, then confirms against the exact equimatchability search.
///
/// # Panics
///
/// If a named graph turns out not to be equimatchable.
pub fn classify_regular(g: &Graph) -> RegularClass {
    let Some(r) = g.regularity() else {
        return RegularClass::NotRegular;
    };
    if !g.is_connected() {
        return RegularClass::Disconnected;
    }
    let equimatchable = is_equimatchable(g).equimatchable;
    match named_candidate(g, r) {
        Some(tag) => {
            assert!(equimatchable, "{tag} is not equimatchable: {g:?}");
            tag
        }
        None if equimatchable => RegularClass::UncharacterizedEquimatchable,
        None => RegularClass::NotEquimatchable,
    }
}
