//! Isomorph-free generation of connected regular graphs, classification of
//! each class, and comparison against the known lists of equimatchable ones.
//!
//! Generation completes one vertex at a time. A partial state is a graph in
//! which some vertices are *completed* (all `r` edges present) and the rest
//! still have room. Completing a vertex branches over every choice of its
//! missing neighbours, so the set of regular graphs reachable from a state
//! does not depend on which vertex is completed next; isomorphic states
//! (under maps preserving completedness) reach the same graphs up to
//! isomorphism, so each level is reduced to one state per class.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_labeling, canonical_labeling_colored, isomorphic, CanonicalForm};
use crate::classify::{classify_regular, is_equimatchable, RegularClass};
use crate::families::{build_family, recognize_family, FamilySpec};
use crate::graph::Graph;
use crate::graph6;
use crate::independence::independence_number;
use crate::matching::is_factor_critical;
use crate::vertex_set::VertexSet;

/// Largest order the generator accepts.
pub const MAX_CENSUS_ORDER: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("n * r must be even (n = {n}, r = {r})")]
    Parity { n: usize, r: usize },
    #[error("degree {r} needs at least {} vertices, got {n}", r + 1)]
    DegreeTooLarge { n: usize, r: usize },
    #[error("order {0} outside the supported census range 1..={MAX_CENSUS_ORDER}")]
    OrderOutOfRange(usize),
    #[error("request outside the supported envelope: {0}")]
    OutsideEnvelope(String),
}

#[derive(Clone)]
struct State {
    g: Graph,
    completed: VertexSet,
}

impl State {
    fn residual(&self, r: usize, v: usize) -> usize {
        r - self.g.degree(v)
    }

    fn canonical(self) -> (CanonicalForm, State) {
        let colors: Vec<u32> = (0..self.g.order())
            .map(|v| self.completed.contains(v) as u32)
            .collect();
        let lab = canonical_labeling_colored(&self.g, &colors);
        let g = self.g.permuted(&lab.relabel);
        let completed = self.completed.iter().map(|v| lab.relabel[v]).collect();
        (lab.form, State { g, completed })
    }

    /// Every uncompleted vertex can still reach degree `r`, and no component
    /// made only of completed vertices is a proper part of the graph.
    fn feasible(&self, r: usize) -> bool {
        let n = self.g.order();
        let open = self.g.vertices() - self.completed;
        let hungry: VertexSet = open.iter().filter(|&v| self.residual(r, v) > 0).collect();
        for v in hungry {
            let room = (hungry.without(v) - self.g.neighbors(v)).len();
            if room < self.residual(r, v) {
                return false;
            }
        }
        // a completed component with no edges leaving it is final
        !self
            .g
            .components_within(self.completed)
            .iter()
            .any(|&comp| comp.len() < n && self.g.neighborhood(comp).is_subset(comp))
    }

    /// Next vertex to complete: the open vertex with most completed
    /// neighbours, then highest degree, then lowest index.
    fn pick(&self) -> usize {
        let open = self.g.vertices() - self.completed;
        open.iter()
            .max_by_key(|&v| {
                let done = (self.g.neighbors(v) & self.completed).len();
                (done, self.g.degree(v), std::cmp::Reverse(v))
            })
            .expect("an open vertex remains")
    }

    fn children(&self, r: usize) -> Vec<State> {
        let x = self.pick();
        let need = self.residual(r, x);
        let open = self.g.vertices() - self.completed;
        let candidates: Vec<usize> = (open.without(x) - self.g.neighbors(x))
            .iter()
            .filter(|&y| self.residual(r, y) > 0)
            .collect();
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(need);
        choose(&candidates, need, 0, &mut chosen, &mut |picks| {
            let mut rows = self.g.rows().to_vec();
            for &y in picks {
                rows[x] |= 1 << y;
                rows[y] |= 1 << x;
            }
            let child = State {
                g: Graph::from_rows(rows).expect("simple graph"),
                completed: self.completed.with(x),
            };
            if child.feasible(r) {
                out.push(child);
            }
        });
        out
    }
}

fn choose(
    items: &[usize],
    k: usize,
    start: usize,
    acc: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if acc.len() == k {
        f(acc);
        return;
    }
    let left = k - acc.len();
    for i in start..items.len() {
        if items.len() - i < left {
            break;
        }
        acc.push(items[i]);
        choose(items, k, i + 1, acc, f);
        acc.pop();
    }
}

fn check_request(n: usize, r: usize) -> Result<(), CensusError> {
    if n == 0 || n > MAX_CENSUS_ORDER {
        return Err(CensusError::OrderOutOfRange(n));
    }
    if r >= n {
        return Err(CensusError::DegreeTooLarge { n, r });
    }
    if n * r % 2 == 1 {
        return Err(CensusError::Parity { n, r });
    }
    Ok(())
}

/// One canonically labelled representative per isomorphism class of
/// connected `r`-regular graphs on `n` vertices, sorted by canonical form.
pub fn connected_regular_graphs(n: usize, r: usize) -> Result<Vec<Graph>, CensusError> {
    check_request(n, r)?;
    let mut level = vec![State {
        g: Graph::empty(n),
        completed: VertexSet::EMPTY,
    }];
    for _ in 0..n {
        let expanded: Vec<(CanonicalForm, State)> = level
            .par_iter()
            .flat_map_iter(|s| s.children(r).into_iter().map(State::canonical))
            .collect();
        let mut unique: HashMap<CanonicalForm, State> = HashMap::with_capacity(expanded.len());
        for (form, state) in expanded {
            unique.entry(form).or_insert(state);
        }
        let mut next: Vec<(CanonicalForm, State)> = unique.into_iter().collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, s)| s).collect();
    }
    let mut out: Vec<(CanonicalForm, Graph)> = level
        .into_par_iter()
        .filter(|s| s.g.is_connected())
        .map(|s| {
            let lab = canonical_labeling(&s.g);
            (lab.form, s.g.permuted(&lab.relabel))
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.dedup_by(|a, b| a.0 == b.0);
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

/// Calls `visitor` on each class representative in canonical order and
/// returns the number of classes.
pub fn generate_connected_regular<F: FnMut(&Graph)>(
    n: usize,
    r: usize,
    mut visitor: F,
) -> Result<usize, CensusError> {
    let graphs = connected_regular_graphs(n, r)?;
    graphs.iter().for_each(&mut visitor);
    Ok(graphs.len())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub g6: String,
    pub n: usize,
    pub r: usize,
    pub equimatchable: bool,
    pub factor_critical: bool,
    pub alpha: usize,
    /// Named family, e.g. `family=KB,a=3,b=3`.
    pub family: Option<String>,
    pub regular_class: String,
}

impl CensusRecord {
    pub fn classify(g: &Graph) -> CensusRecord {
        CensusRecord {
            g6: graph6::encode(g).expect("census orders fit graph6"),
            n: g.order(),
            r: g.regularity().unwrap_or(0),
            equimatchable: is_equimatchable(g).equimatchable,
            factor_critical: is_factor_critical(g),
            alpha: independence_number(g).0,
            family: recognize_family(g).map(|f| f.to_string()),
            regular_class: classify_regular(g).to_string(),
        }
    }

    pub fn graph(&self) -> Graph {
        graph6::decode(&self.g6).expect("record holds valid graph6")
    }
}

/// Classifies every class of connected `r`-regular graphs on `n` vertices.
pub fn classify_census(n: usize, r: usize) -> Result<Vec<CensusRecord>, CensusError> {
    Ok(connected_regular_graphs(n, r)?
        .par_iter()
        .map(CensusRecord::classify)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpectedGraph {
    pub name: String,
    pub n: usize,
    pub g6: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderCount {
    pub n: usize,
    pub classes: usize,
    pub equimatchable: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub r: usize,
    pub n_max: usize,
    /// `r = 2` has no published list; the expected set is the cycles for
    /// which the smallest maximal matching is as large as the largest.
    pub outside_reference_list: bool,
    pub counts: Vec<OrderCount>,
    pub expected: Vec<ExpectedGraph>,
    pub found: Vec<CensusRecord>,
    #[serde(rename = "match")]
    pub matched: bool,
    pub discrepancies: Vec<String>,
    /// Even `r` only: equimatchable records that are neither `K_{r,r}` nor
    /// factor-critical.
    pub dichotomy_exceptions: Vec<String>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.matched && self.dichotomy_exceptions.is_empty()
    }
}

/// Largest `n_max` accepted by [`verify_characterization`] for each degree.
pub fn verification_envelope(r: usize) -> Option<usize> {
    match r {
        2 | 3 => Some(MAX_CENSUS_ORDER),
        4 => Some(12),
        _ => None,
    }
}

fn expected_list(r: usize) -> Vec<(String, Graph)> {
    let fam = |s: FamilySpec| build_family(&s).expect("valid family");
    match r {
        2 => [3, 4, 5, 7]
            .iter()
            .map(|&n| (format!("C{n}"), fam(FamilySpec::Cycle(n))))
            .collect(),
        3 => vec![
            ("K4".into(), fam(FamilySpec::Complete(4))),
            ("K3,3".into(), fam(FamilySpec::CompleteBipartite(3, 3))),
        ],
        4 => vec![
            ("K5".into(), fam(FamilySpec::Complete(5))),
            ("complement-C7".into(), fam(FamilySpec::ComplementCycle(7))),
            ("K4,4".into(), fam(FamilySpec::CompleteBipartite(4, 4))),
            ("F4".into(), fam(FamilySpec::F(4))),
            ("complement-F4".into(), fam(FamilySpec::F(4)).complement()),
        ],
        _ => Vec::new(),
    }
}

/// Runs the census for every feasible order up to `n_max` and compares the
/// equimatchable classes with the known list for degree `r`. Requests outside
/// [`verification_envelope`] are refused.
pub fn verify_characterization(r: usize, n_max: usize) -> Result<VerificationReport, CensusError> {
    let limit = verification_envelope(r).ok_or_else(|| {
        CensusError::OutsideEnvelope(format!(
            "exhaustive verification supports r in {{2, 3, 4}}, got {r}"
        ))
    })?;
    if n_max > limit {
        return Err(CensusError::OutsideEnvelope(format!(
            "n_max {n_max} exceeds {limit} for r = {r}"
        )));
    }
    let mut counts = Vec::new();
    let mut found = Vec::new();
    for n in (r + 1)..=n_max {
        if n * r % 2 == 1 {
            continue;
        }
        let records = classify_census(n, r)?;
        let eq: Vec<CensusRecord> = records
            .iter()
            .filter(|c| c.equimatchable)
            .cloned()
            .collect();
        counts.push(OrderCount {
            n,
            classes: records.len(),
            equimatchable: eq.len(),
        });
        found.extend(eq);
    }
    let expected: Vec<(String, Graph)> = expected_list(r)
        .into_iter()
        .filter(|(_, g)| g.order() <= n_max)
        .collect();
    let found_graphs: Vec<Graph> = found.iter().map(CensusRecord::graph).collect();
    let mut discrepancies = Vec::new();
    for (name, g) in &expected {
        if !found_graphs.iter().any(|h| isomorphic(g, h)) {
            discrepancies.push(format!("expected {name} (n = {}) not found", g.order()));
        }
    }
    for rec in &found {
        let h = rec.graph();
        if !expected.iter().any(|(_, g)| isomorphic(g, &h)) {
            discrepancies.push(format!(
                "unexpected equimatchable graph {} (n = {})",
                rec.g6, rec.n
            ));
        }
    }
    let dichotomy_exceptions = if r.is_multiple_of(2) {
        found
            .iter()
            .filter(|rec| !rec.factor_critical && !(rec.n == 2 * r && rec.graph().is_bipartite()))
            .map(|rec| rec.g6.clone())
            .collect()
    } else {
        Vec::new()
    };
    Ok(VerificationReport {
        r,
        n_max,
        outside_reference_list: r == 2,
        counts,
        expected: expected
            .iter()
            .map(|(name, g)| ExpectedGraph {
                name: name.clone(),
                n: g.order(),
                g6: graph6::encode(g).expect("small graph"),
            })
            .collect(),
        matched: discrepancies.is_empty(),
        found,
        discrepancies,
        dichotomy_exceptions,
    })
}

/// Regular class of a record, recomputed from its graph.
pub fn record_class(rec: &CensusRecord) -> RegularClass {
    classify_regular(&rec.graph())
}
