//! Two exact searches over a whole graph: odd cliques hanging off an
//! independent set, and balanced independent splits of `G - u`.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use super::perfect_matchings_within;
use crate::classify::is_equimatchable;
use crate::families::{recognize_family, FamilySpec};
use crate::graph::Graph;
use crate::independence::independence_number;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructionError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("{0} is not an independent set")]
    NotIndependent(&'static str),
    #[error("{which} has {size} vertices but the independence number is {alpha}")]
    NotMaximum {
        which: &'static str,
        size: usize,
        alpha: usize,
    },
    #[error("I and I' intersect")]
    NotDisjoint,
    #[error("vertex {0} lies in I or I'")]
    VertexInSets(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionSearch {
    /// An odd clique `X` of `G - (I ∪ {u})` with `|X| >= 3`, `|X ∩ I'| = 1`
    /// and every neighbour of `X` in `X ∪ I ∪ {u}`.
    pub clique: Option<VertexSet>,
    /// `G - (I ∪ I' ∪ {u})` has a perfect matching.
    pub rest_has_perfect_matching: bool,
    /// Largest `|N(x) ∩ I'|` over `x` outside `I ∪ I' ∪ {u}`.
    pub max_i_prime_degree: usize,
    /// Both side conditions hold (perfect matching, degree at most 1).
    pub hypotheses_hold: bool,
}

/// Searches for the odd clique described on [`ObstructionSearch::clique`].
///
/// Such an `X` is determined by any of its members `c`: every neighbour of
/// `c` outside `I ∪ {u}` must lie in `X`, and `X` is a clique, so `X` is the
/// closed neighbourhood of `c` in `G - (I ∪ {u})`. Trying every `c` is
/// therefore exhaustive.
pub fn odd_clique_obstruction_search(
    g: &Graph,
    i: VertexSet,
    i_prime: VertexSet,
    u: usize,
) -> Result<ObstructionSearch, ObstructionError> {
    if let Some(vertex) = (i | i_prime).with(u).iter().find(|&x| x >= g.order()) {
        return Err(ObstructionError::VertexOutOfRange {
            vertex,
            order: g.order(),
        });
    }
    if !g.is_independent(i) {
        return Err(ObstructionError::NotIndependent("I"));
    }
    if !g.is_independent(i_prime) {
        return Err(ObstructionError::NotIndependent("I'"));
    }
    if !i.is_disjoint(i_prime) {
        return Err(ObstructionError::NotDisjoint);
    }
    if (i | i_prime).contains(u) {
        return Err(ObstructionError::VertexInSets(u));
    }
    let alpha = independence_number(g).0;
    for (which, set) in [("I", i), ("I'", i_prime)] {
        if set.len() != alpha {
            return Err(ObstructionError::NotMaximum {
                which,
                size: set.len(),
                alpha,
            });
        }
    }
    Ok(obstruction_unchecked(g, i, i_prime, u))
}

pub(crate) fn obstruction_unchecked(
    g: &Graph,
    i: VertexSet,
    i_prime: VertexSet,
    u: usize,
) -> ObstructionSearch {
    let rest = g.vertices() - i - i_prime - VertexSet::singleton(u);
    let rest_has_perfect_matching = !perfect_matchings_within(g, rest, 1).is_empty();
    let max_i_prime_degree = rest
        .iter()
        .map(|x| (g.neighbors(x) & i_prime).len())
        .max()
        .unwrap_or(0);
    let host = g.vertices() - i - VertexSet::singleton(u);
    let clique = host.iter().find_map(|c| {
        let x = (g.neighbors(c) & host).with(c);
        let closed = x.iter().all(|y| (g.neighbors(y) & host).with(y) == x);
        let ok = closed
            && x.len() >= 3
            && x.len() % 2 == 1
            && (x & i_prime).len() == 1
            && g.is_clique(x);
        ok.then_some(x)
    });
    ObstructionSearch {
        clique,
        rest_has_perfect_matching,
        max_i_prime_degree,
        hypotheses_hold: rest_has_perfect_matching && max_i_prime_degree <= 1,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalancedSplit {
    pub u: usize,
    pub x: VertexSet,
    pub y: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalancedBipartition {
    /// A vertex `u` and a split of `V \ {u}` into independent sets of equal
    /// size, for the smallest such `u`.
    pub found: Option<BalancedSplit>,
    /// Connected, `r`-regular with even `r >= 6`, and equimatchable. Under
    /// these conditions a split exists exactly for `F_r`.
    pub hypotheses_hold: bool,
}

/// Orients each bipartite component so that the two sides have equal size.
fn balance(parts: &[(VertexSet, VertexSet)]) -> Option<(VertexSet, VertexSet)> {
    // difference |X| - |Y| -> (X, Y) reaching it
    let mut reach: BTreeMap<i64, (VertexSet, VertexSet)> = BTreeMap::new();
    reach.insert(0, (VertexSet::EMPTY, VertexSet::EMPTY));
    for &(a, b) in parts {
        let delta = a.len() as i64 - b.len() as i64;
        let mut next = BTreeMap::new();
        for (&d, &(x, y)) in &reach {
            next.entry(d + delta).or_insert((x | a, y | b));
            next.entry(d - delta).or_insert((x | b, y | a));
        }
        reach = next;
    }
    reach.get(&0).copied()
}

/// Tries every vertex `u` and every 2-colouring of `G - u`, looking for two
/// independent sets of equal size covering `V \ {u}`.
///
/// # Panics
///
/// When the hypotheses hold and the outcome disagrees with recognising `G`
/// as `F_r`.
pub fn balanced_bipartition_search(g: &Graph) -> BalancedBipartition {
    let found = if g.order() % 2 == 1 {
        g.vertices().iter().find_map(|u| {
            let parts = g.two_coloring_within(g.vertices().without(u))?;
            let (x, y) = balance(&parts)?;
            Some(BalancedSplit { u, x, y })
        })
    } else {
        None
    };
    let r = g.regularity();
    let hypotheses_hold = g.is_connected()
        && r.is_some_and(|r| r % 2 == 0 && r >= 6)
        && is_equimatchable(g).equimatchable;
    if hypotheses_hold {
        let is_f = recognize_family(g) == Some(FamilySpec::F(r.expect("regular")));
        assert_eq!(
            found.is_some(),
            is_f,
            "balanced split disagrees with F_r recognition"
        );
    }
    BalancedBipartition {
        found,
        hypotheses_hold,
    }
}
