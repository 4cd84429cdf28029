//! Instance-level checks of the structural statements about the partition,
//! reported as one record per check.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use super::search::{balanced_bipartition_search, obstruction_unchecked, BalancedBipartition};
use super::{
    build_decomposition, class_membership, perfect_matchings_within, ClassMembership, Decomposition,
};
use crate::classify::is_equimatchable;
use crate::graph::Graph;
use crate::independence::{independence_number_within, maximum_independent_sets};
use crate::matching::{
    find_augmenting_path, find_small_maximal_matching, has_perfect_matching_within,
    is_factor_critical_within, maximum_matching, Matching,
};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coverage {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check_id: &'static str,
    pub citation: &'static str,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coverage: Option<Coverage>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct AuditReport {
    pub checks: Vec<CheckRecord>,
}

impl AuditReport {
    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    /// No check failed.
    pub fn passed(&self) -> bool {
        self.count(CheckStatus::Fail) == 0
    }

    pub fn get(&self, check_id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.check_id == check_id)
    }

    fn push(
        &mut self,
        check_id: &'static str,
        citation: &'static str,
        status: CheckStatus,
    ) -> &mut CheckRecord {
        self.checks.push(CheckRecord {
            check_id,
            citation,
            status,
            witness: None,
            coverage: None,
            note: None,
        });
        self.checks.last_mut().expect("just pushed")
    }

    /// Pass when `witness` is `None`, fail carrying it otherwise.
    fn outcome(
        &mut self,
        check_id: &'static str,
        citation: &'static str,
        witness: Option<Value>,
    ) -> &mut CheckRecord {
        let status = if witness.is_some() {
            CheckStatus::Fail
        } else {
            CheckStatus::Pass
        };
        let rec = self.push(check_id, citation, status);
        rec.witness = witness;
        rec
    }

    fn skip(&mut self, check_id: &'static str, citation: &'static str, note: &str) {
        self.push(check_id, citation, CheckStatus::Skipped).note = Some(note.to_string());
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("decomposition does not match the graph: {0}")]
    Mismatch(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuditOptions {
    /// Random matchings or subsets drawn by the sampled checks.
    pub samples: usize,
    pub seed: u64,
    /// Subsets of `W` are enumerated exhaustively up to this `|W|`.
    pub exhaustive_limit: usize,
    /// Maximum independent sets used as partners in the odd-clique check.
    pub max_sets_cap: usize,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            samples: 1000,
            seed: 0x5eed,
            exhaustive_limit: 12,
            max_sets_cap: 50,
        }
    }
}

const NOT_IN_CLASS: &str =
    "hypothesis unmet: graph is not a connected equimatchable r-regular graph (r even, r >= 6) of odd order with alpha >= 3";

/// Check identifiers with their cited statements, in report order.
pub const CHECKS: &[(&str, &str)] = &[
    ("class-membership", "class G (Theorem 1.6 hypotheses)"),
    ("partition-structure", "partition I, W, T', T''"),
    ("alpha-and-maximal-size", "Proposition 2.1"),
    ("matching-remainder-alpha", "Proposition 2.2"),
    ("x-has-no-perfect-matching", "Lemma 2.3"),
    ("w-independent", "Lemma 2.4(i)"),
    ("no-augmenting-path-between-w", "Lemma 2.4(i)"),
    ("no-w-u-u-w-path", "Lemma 2.4(i)"),
    ("tw-misses-other-w", "Lemma 2.4(ii)"),
    ("tw-disjoint", "Lemma 2.4(ii)"),
    ("tw-structure", "Lemma 2.4(iii)"),
    ("single-multi-w-vertex", "Lemma 2.4(iv)"),
    ("every-vertex-sees-i", "Lemma 2.5(i)"),
    ("m2-off-nw-clique", "Lemma 2.5(ii)"),
    ("t-prime-nonempty", "Lemma 2.7"),
    ("tw-pair-no-perfect-matching", "Lemma 3.1(i)"),
    ("clique-tw-pairs-unlinked", "Lemma 3.1(ii)"),
    ("tw-t2-alpha", "Lemma 3.1(iii)"),
    ("cut-vertex-two-cliques", "Lemma 3.1(iv)"),
    ("partner-misses-w", "Lemma 5.1(i)"),
    ("t2-partner-clique", "Lemma 5.1(ii)"),
    ("w-prime-cliques-avoid-partner", "Lemma 5.1(iii)"),
    ("t2-neighbourhood", "Lemma 5.1(iv)"),
    ("odd-clique-obstruction", "Proposition 2.6"),
];

fn cite(check_id: &str) -> &'static str {
    CHECKS
        .iter()
        .find(|(id, _)| *id == check_id)
        .map(|(_, c)| *c)
        .expect("known check id")
}

/// External neighbourhood `N(X) \ X`.
fn outer_neighbors(g: &Graph, x: VertexSet) -> VertexSet {
    g.neighborhood(x) - x
}

fn random_matching(g: &Graph, edges: &mut [(usize, usize)], rng: &mut ChaCha8Rng) -> Matching {
    edges.shuffle(rng);
    let keep: f64 = rng.gen_range(0.05..=1.0);
    let mut covered = VertexSet::EMPTY;
    let mut out = Vec::new();
    for &(a, b) in edges.iter() {
        if !covered.contains(a) && !covered.contains(b) && rng.gen_bool(keep) {
            covered = covered.with(a).with(b);
            out.push((a, b));
        }
    }
    debug_assert!(out.iter().all(|&(a, b)| g.has_edge(a, b)));
    Matching::from_sorted_unchecked(out)
}

struct Ctx<'a> {
    g: &'a Graph,
    d: &'a Decomposition,
    r: usize,
    opts: AuditOptions,
}

impl Ctx<'_> {
    fn w_degree(&self, x: usize) -> usize {
        (self.g.neighbors(x) & self.d.w).len()
    }

    fn outside_i_w(&self) -> VertexSet {
        self.g.vertices() - self.d.independent - self.d.w
    }
}

/// Runs every check against one decomposition. Checks whose hypotheses fail
/// are reported as skipped.
pub fn audit_decomposition(
    g: &Graph,
    d: &Decomposition,
    opts: &AuditOptions,
) -> Result<AuditReport, AuditError> {
    let membership = class_membership(g);
    audit_with_membership(g, d, opts, &membership, None)
}

fn audit_with_membership(
    g: &Graph,
    d: &Decomposition,
    opts: &AuditOptions,
    membership: &ClassMembership,
    max_sets: Option<&[VertexSet]>,
) -> Result<AuditReport, AuditError> {
    let used = (d.independent | d.w | d.t_prime | d.t_double_prime).with(d.v);
    if d.v >= g.order() || !used.is_subset(g.vertices()) {
        return Err(AuditError::Mismatch("vertex out of range".into()));
    }
    let violations = d.invariant_violations(g);
    if !violations.is_empty() {
        return Err(AuditError::Mismatch(violations.join("; ")));
    }
    let mut rep = AuditReport::default();
    if membership.is_member() {
        rep.outcome("class-membership", cite("class-membership"), None);
    } else {
        let rec = rep.outcome(
            "class-membership",
            cite("class-membership"),
            Some(json!({ "unmet": membership.unmet() })),
        );
        rec.note = Some("not in class G".into());
    }
    rep.outcome("partition-structure", cite("partition-structure"), None);
    let gated_ids = &CHECKS[2..];
    if !membership.is_member() {
        for (id, c) in gated_ids {
            rep.skip(id, c, NOT_IN_CLASS);
        }
        return Ok(rep);
    }
    let ctx = Ctx {
        g,
        d,
        r: membership.regularity.expect("member is regular"),
        opts: *opts,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (d.v as u64).wrapping_mul(0x9e37_79b9));
    prop_alpha_and_maximal(&ctx, membership.alpha, &mut rep);
    prop_remainder_alpha(&ctx, &mut rng, &mut rep);
    check_x_no_perfect_matching(&ctx, &mut rng, &mut rep);
    check_w_paths(&ctx, &mut rep);
    check_tw(&ctx, &mut rep);
    check_basic(&ctx, &mut rep);
    check_single_w_neighbour(&ctx, &mut rep);
    check_multi_w_neighbour(&ctx, &mut rep);
    let owned;
    let sets = match max_sets {
        Some(s) => s,
        None => {
            owned = maximum_independent_sets(g, opts.max_sets_cap);
            &owned
        }
    };
    obstruction_instances(&ctx, sets, &mut rep);
    Ok(rep)
}

fn prop_alpha_and_maximal(ctx: &Ctx, alpha: usize, rep: &mut AuditReport) {
    let g = ctx.g;
    let half = (g.order() - 1) / 2;
    let nu = maximum_matching(g).len();
    let witness = if 2 * alpha > g.order() - 1 {
        Some(json!({ "alpha": alpha }))
    } else if nu != half {
        Some(json!({ "nu": nu }))
    } else {
        find_small_maximal_matching(g, half).map(|m| json!({ "maximal_matching": m }))
    };
    rep.outcome(
        "alpha-and-maximal-size",
        cite("alpha-and-maximal-size"),
        witness,
    )
    .coverage = Some(Coverage::Exhaustive);
}

fn prop_remainder_alpha(ctx: &Ctx, rng: &mut ChaCha8Rng, rep: &mut AuditReport) {
    let g = ctx.g;
    let d = ctx.d;
    let mut edges = g.edges();
    let mut pool = vec![
        Matching::empty(),
        d.mv.clone(),
        d.m1.clone(),
        d.m2.clone(),
        maximum_matching(g),
    ];
    for _ in 0..ctx.opts.samples {
        pool.push(random_matching(g, &mut edges, rng));
    }
    let witness = pool.iter().find_map(|m| {
        let rest = g.vertices() - m.covered();
        let alpha = independence_number_within(g, rest);
        if 2 * alpha > rest.len() + 1 {
            return Some(json!({ "matching": m, "alpha": alpha }));
        }
        let parts = g.two_coloring_within(rest)?;
        let (a, b) = parts.iter().fold((0i64, 0i64), |(a, b), (x, y)| {
            (a + x.len() as i64, b + y.len() as i64)
        });
        ((a - b).abs() > 1).then(|| json!({ "matching": m, "sides": [a, b] }))
    });
    let rec = rep.outcome(
        "matching-remainder-alpha",
        cite("matching-remainder-alpha"),
        witness,
    );
    rec.coverage = Some(Coverage::Sampled);
    rec.note = Some(format!("{} matchings", pool.len()));
}

fn check_x_no_perfect_matching(ctx: &Ctx, rng: &mut ChaCha8Rng, rep: &mut AuditReport) {
    let d = ctx.d;
    let base = ctx.outside_i_w();
    let w = d.w.to_vec();
    let check = |s: VertexSet| {
        let x = base | s;
        has_perfect_matching_within(ctx.g, x).then(|| json!({ "x": x }))
    };
    let (witness, coverage, tried) = if w.len() <= ctx.opts.exhaustive_limit {
        let mut tried = 0;
        let witness = (0u64..1 << w.len())
            .filter(|mask| mask.count_ones() >= 2)
            .find_map(|mask| {
                tried += 1;
                let s = w
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &x)| x)
                    .collect();
                check(s)
            });
        (witness, Coverage::Exhaustive, tried)
    } else {
        let mut tried = 0;
        let witness = (0..ctx.opts.samples).find_map(|_| {
            tried += 1;
            let k = rng.gen_range(2..=w.len());
            let s = w.choose_multiple(rng, k).copied().collect();
            check(s)
        });
        (witness, Coverage::Sampled, tried)
    };
    if w.len() < 2 {
        rep.skip(
            "x-has-no-perfect-matching",
            cite("x-has-no-perfect-matching"),
            "|W| < 2",
        );
        return;
    }
    let rec = rep.outcome(
        "x-has-no-perfect-matching",
        cite("x-has-no-perfect-matching"),
        witness,
    );
    rec.coverage = Some(coverage);
    rec.note = Some(format!("{tried} subsets"));
}

fn check_w_paths(ctx: &Ctx, rep: &mut AuditReport) {
    let (g, d) = (ctx.g, ctx.d);
    let edge = d.w.iter().find_map(|a| {
        (g.neighbors(a) & d.w)
            .first()
            .map(|b| json!({ "edge": [a, b] }))
    });
    rep.outcome("w-independent", cite("w-independent"), edge);

    let path = find_augmenting_path(g, &d.m2, d.w, d.w)
        .expect("W is exposed by M_2")
        .map(|p| json!({ "path": p.vertices }));
    rep.outcome(
        "no-augmenting-path-between-w",
        cite("no-augmenting-path-between-w"),
        path,
    );

    let short = d.m2.edges().iter().find_map(|&(a, b)| {
        for (x, y) in [(a, b), (b, a)] {
            for w1 in g.neighbors(x) & d.w {
                if let Some(w2) = (g.neighbors(y) & d.w).without(w1).first() {
                    return Some(json!({ "path": [w1, x, y, w2] }));
                }
            }
        }
        None
    });
    rep.outcome("no-w-u-u-w-path", cite("no-w-u-u-w-path"), short);
}

fn check_tw(ctx: &Ctx, rep: &mut AuditReport) {
    let (g, d) = (ctx.g, ctx.d);
    let touches = d.t_w.iter().find_map(|(&w, &t)| {
        let hit = g.neighborhood(t) & d.w.without(w);
        (!hit.is_empty()).then(|| json!({ "w": w, "t_w": t, "other_w": hit }))
    });
    rep.outcome("tw-misses-other-w", cite("tw-misses-other-w"), touches);

    let overlap = (!d.t_w_disjoint()).then(|| {
        let pair = d.t_w.iter().find_map(|(&a, &ta)| {
            d.t_w
                .range(a + 1..)
                .find(|(_, &tb)| !ta.is_disjoint(tb))
                .map(|(&b, _)| [a, b])
        });
        json!({ "w_pair": pair })
    });
    rep.outcome("tw-disjoint", cite("tw-disjoint"), overlap);

    let bad = d.t_w.iter().find_map(|(&w, &t)| {
        let (h, _) = g.induced_unchecked(t);
        let mut problems = Vec::new();
        if !h.is_connected() {
            problems.push("disconnected");
        }
        if independence_number_within(g, t) > 2 {
            problems.push("alpha above 2");
        }
        if !is_equimatchable(&h).equimatchable {
            problems.push("not equimatchable");
        }
        if h.is_biconnected() && !is_factor_critical_within(g, t) {
            problems.push("2-connected but not factor-critical");
        }
        (!problems.is_empty()).then(|| json!({ "w": w, "t_w": t, "problems": problems }))
    });
    rep.outcome("tw-structure", cite("tw-structure"), bad);

    let multi: VertexSet = ctx
        .outside_i_w()
        .iter()
        .filter(|&x| ctx.w_degree(x) >= 2)
        .collect();
    let witness =
        (multi.len() > 1 || d.m22.len() > 1).then(|| json!({ "vertices": multi, "m22": d.m22 }));
    rep.outcome(
        "single-multi-w-vertex",
        cite("single-multi-w-vertex"),
        witness,
    );
}

fn check_basic(ctx: &Ctx, rep: &mut AuditReport) {
    let (g, d) = (ctx.g, ctx.d);
    let lonely = (g.vertices() - d.independent)
        .iter()
        .find(|&x| g.neighbors(x).is_disjoint(d.independent))
        .map(|x| json!({ "vertex": x }));
    rep.outcome("every-vertex-sees-i", cite("every-vertex-sees-i"), lonely);

    let v0 = d.m2.covered() - g.neighborhood(d.w);
    let witness = if !g.is_clique(v0) {
        Some(json!({ "not_a_clique": v0 }))
    } else if d.t_double_prime.len() > ctx.r {
        Some(json!({ "t_double_prime": d.t_double_prime }))
    } else {
        None
    };
    rep.outcome("m2-off-nw-clique", cite("m2-off-nw-clique"), witness);

    let empty = d
        .t_prime
        .is_empty()
        .then(|| json!({ "t_prime": d.t_prime }));
    rep.outcome("t-prime-nonempty", cite("t-prime-nonempty"), empty);
}

fn check_single_w_neighbour(ctx: &Ctx, rep: &mut AuditReport) {
    let (g, d) = (ctx.g, ctx.d);
    let ids = [
        "tw-pair-no-perfect-matching",
        "clique-tw-pairs-unlinked",
        "tw-t2-alpha",
        "cut-vertex-two-cliques",
    ];
    if let Some(x) = ctx.outside_i_w().iter().find(|&x| ctx.w_degree(x) >= 2) {
        let note = format!("hypothesis unmet: vertex {x} has at least two neighbours in W");
        for id in ids {
            rep.skip(id, cite(id), &note);
        }
        return;
    }
    let t2 = d.t_double_prime;
    let tws: Vec<(usize, VertexSet)> = d.t_w.iter().map(|(&w, &t)| (w, t)).collect();
    let pairs = || {
        tws.iter()
            .enumerate()
            .flat_map(|(k, &a)| tws[k + 1..].iter().map(move |&b| (a, b)))
    };

    let pm = pairs().find_map(|((wa, ta), (wb, tb))| {
        let x = ta | tb | t2;
        has_perfect_matching_within(g, x).then(|| json!({ "w_pair": [wa, wb], "set": x }))
    });
    rep.outcome(ids[0], cite(ids[0]), pm);

    let linked = pairs().find_map(|((wa, ta), (wb, tb))| {
        let both_cliques = g.is_clique(ta) && g.is_clique(tb);
        (both_cliques && !(g.neighborhood(ta) & tb).is_empty())
            .then(|| json!({ "w_pair": [wa, wb] }))
    });
    rep.outcome(ids[1], cite(ids[1]), linked);

    let mut alpha_two = Vec::new();
    let mut wide = None;
    for &(w, t) in &tws {
        if independence_number_within(g, t | t2) > 2 {
            wide = wide.or(Some(w));
        }
        if independence_number_within(g, t) == 2 {
            alpha_two.push(w);
        }
    }
    let witness = match wide {
        Some(w) => Some(json!({ "w": w, "set": d.t_w[&w] | t2 })),
        None if alpha_two.len() > 1 => Some(json!({ "alpha_two": alpha_two })),
        None => None,
    };
    rep.outcome(ids[2], cite(ids[2]), witness);

    let cut = tws.iter().find_map(|&(w, t)| {
        let x = t | t2;
        if !g.is_connected_within(x) || g.is_biconnected_within(x) || x.len() < 3 {
            return None;
        }
        g.cut_vertices_within(x).iter().find_map(|c| {
            let comps = g.components_within(x.without(c));
            let ok = comps.len() == 2 && {
                let (o1, o2) = (comps[0], comps[1]);
                (g.is_clique(o1.with(c)) && g.is_clique(o2))
                    || (g.is_clique(o2.with(c)) && g.is_clique(o1))
            };
            (!ok).then(|| json!({ "w": w, "cut_vertex": c, "components": comps }))
        })
    });
    rep.outcome(ids[3], cite(ids[3]), cut);
}

/// The `M_2` edge `uu'` with `|N(u) ∩ W| >= 2`, oriented.
fn multi_w_edge(ctx: &Ctx) -> Option<(usize, usize)> {
    ctx.d.m2.edges().iter().find_map(|&(a, b)| {
        if ctx.w_degree(a) >= 2 {
            Some((a, b))
        } else if ctx.w_degree(b) >= 2 {
            Some((b, a))
        } else {
            None
        }
    })
}

fn check_multi_w_neighbour(ctx: &Ctx, rep: &mut AuditReport) {
    let (g, d) = (ctx.g, ctx.d);
    let ids = [
        "partner-misses-w",
        "t2-partner-clique",
        "w-prime-cliques-avoid-partner",
        "t2-neighbourhood",
    ];
    let Some((u, up)) = multi_w_edge(ctx) else {
        for id in ids {
            rep.skip(
                id,
                cite(id),
                "hypothesis unmet: no M_2 edge with an end having two neighbours in W",
            );
        }
        return;
    };
    let t2 = d.t_double_prime;
    let hit = g.neighbors(up) & d.w;
    rep.outcome(
        ids[0],
        cite(ids[0]),
        (!hit.is_empty()).then(|| json!({ "u": u, "u_prime": up, "w": hit })),
    );

    let clique = t2.with(up);
    rep.outcome(
        ids[1],
        cite(ids[1]),
        (!g.is_clique(clique)).then(|| json!({ "set": clique })),
    );

    let bad = d.w_prime.iter().find_map(|w| {
        let t = d.t_w[&w];
        (!g.is_clique(t) || !g.neighbors(up).is_disjoint(t)).then(|| json!({ "w": w, "t_w": t }))
    });
    rep.outcome(ids[2], cite(ids[2]), bad);

    let allowed = d.independent.with(u).with(up);
    let out = outer_neighbors(g, t2) - allowed;
    rep.outcome(
        ids[3],
        cite(ids[3]),
        (!out.is_empty()).then(|| json!({ "outside": out })),
    )
    .note = Some("neighbourhood read as N(T'') \\ T''".into());
}

fn obstruction_instances(ctx: &Ctx, sets: &[VertexSet], rep: &mut AuditReport) {
    let (g, d) = (ctx.g, ctx.d);
    let i = d.independent;
    let mut instances: Vec<(VertexSet, usize)> = Vec::new();
    if let Some((u, up)) = multi_w_edge(ctx) {
        let ip = d.w.with(up);
        if g.is_independent(ip) && ip.len() == i.len() {
            instances.push((ip, u));
        }
    }
    for &ip in sets.iter().filter(|s| s.is_disjoint(i)) {
        for u in g.vertices() - i - ip {
            instances.push((ip, u));
        }
    }
    instances.sort();
    instances.dedup();
    let mut applicable = 0;
    let mut witness = None;
    for &(ip, u) in &instances {
        let res = obstruction_unchecked(g, i, ip, u);
        if res.hypotheses_hold {
            applicable += 1;
            if let (None, Some(x)) = (&witness, res.clique) {
                witness = Some(json!({ "i_prime": ip, "u": u, "clique": x }));
            }
        }
    }
    let id = "odd-clique-obstruction";
    if applicable == 0 {
        rep.skip(
            id,
            cite(id),
            &format!("hypothesis unmet on all {} instances", instances.len()),
        );
        return;
    }
    let rec = rep.outcome(id, cite(id), witness);
    rec.coverage = Some(Coverage::Exhaustive);
    rec.note = Some(format!(
        "{applicable} of {} instances satisfy the hypotheses",
        instances.len()
    ));
}

/// How many decompositions [`audit_graph`] builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuditPlan {
    /// Maximum independent sets to use as `I`.
    pub max_sets_cap: usize,
    /// Perfect matchings of `G - v` to try per `(I, v)`.
    pub matchings_per_vertex: usize,
    pub options: AuditOptions,
}

impl Default for AuditPlan {
    fn default() -> Self {
        AuditPlan {
            max_sets_cap: 50,
            matchings_per_vertex: 20,
            options: AuditOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecompositionRun {
    pub set_index: usize,
    pub independent: VertexSet,
    pub v: usize,
    pub matching_index: usize,
    /// Build error, when `G - v` has no perfect matching.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub report: AuditReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphAudit {
    pub membership: ClassMembership,
    pub runs: Vec<DecompositionRun>,
    pub balanced_bipartition: BalancedBipartition,
}

impl GraphAudit {
    pub fn failures(&self) -> usize {
        self.runs
            .iter()
            .map(|r| r.report.count(CheckStatus::Fail))
            .sum()
    }

    pub fn build_errors(&self) -> usize {
        self.runs.iter().filter(|r| r.error.is_some()).count()
    }
}

/// Audits every maximum independent set `I` (up to the cap), every `v ∈ I`
/// and several perfect matchings of `G - v`, in parallel; runs are returned
/// in a fixed order.
pub fn audit_graph(g: &Graph, plan: &AuditPlan) -> GraphAudit {
    let membership = class_membership(g);
    let sets = maximum_independent_sets(g, plan.max_sets_cap);
    let partner_sets = maximum_independent_sets(g, plan.options.max_sets_cap);
    let jobs: Vec<(usize, VertexSet, usize)> = sets
        .iter()
        .enumerate()
        .flat_map(|(k, &i)| i.iter().map(move |v| (k, i, v)))
        .collect();
    let runs: Vec<Vec<DecompositionRun>> = jobs
        .par_iter()
        .map(|&(set_index, i, v)| {
            let choices =
                perfect_matchings_within(g, g.vertices().without(v), plan.matchings_per_vertex);
            if choices.is_empty() {
                return vec![DecompositionRun {
                    set_index,
                    independent: i,
                    v,
                    matching_index: 0,
                    error: Some(super::DecompositionError::NoPerfectMatching(v).to_string()),
                    report: AuditReport::default(),
                }];
            }
            choices
                .iter()
                .enumerate()
                .map(|(matching_index, m)| {
                    let d = build_decomposition(g, i, v, Some(m)).expect("valid inputs");
                    let report = audit_with_membership(
                        g,
                        &d,
                        &plan.options,
                        &membership,
                        Some(&partner_sets),
                    )
                    .expect("decomposition built from this graph");
                    DecompositionRun {
                        set_index,
                        independent: i,
                        v,
                        matching_index,
                        error: None,
                        report,
                    }
                })
                .collect()
        })
        .collect();
    GraphAudit {
        membership,
        runs: runs.into_iter().flatten().collect(),
        balanced_bipartition: balanced_bipartition_search(g),
    }
}
