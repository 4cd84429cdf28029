//! Named graph families: complete and complete bipartite graphs, cycles and
//! their complements, the apex graphs `F_r`, and two cubic negative controls.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::canon::canonicalize;
use crate::graph::Graph;
use crate::vertex_set::MAX_ORDER;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    ComplementCycle(usize),
    /// `K_{r,r}` minus a matching of size `r/2`, plus an apex joined to the
    /// `r` ends of that matching. Defined for even `r >= 2`.
    F(usize),
    Petersen,
    Prism,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("F requires even r >= 2, got r = {0}")]
    FParameter(usize),
    #[error("cycles need at least 3 vertices, got n = {0}")]
    CycleTooShort(usize),
    #[error("family member would have {0} vertices, more than the supported 64")]
    TooLarge(usize),
    #[error("cannot parse family spec {0:?}")]
    Parse(String),
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Complete(n) | FamilySpec::Cycle(n) | FamilySpec::ComplementCycle(n) => n,
            FamilySpec::CompleteBipartite(a, b) => a + b,
            FamilySpec::F(r) => 2 * r + 1,
            FamilySpec::Petersen => 10,
            FamilySpec::Prism => 6,
        }
    }

    fn validate(&self) -> Result<(), FamilyError> {
        match *self {
            FamilySpec::F(r) if r < 2 || r % 2 == 1 => return Err(FamilyError::FParameter(r)),
            FamilySpec::Cycle(n) | FamilySpec::ComplementCycle(n) if n < 3 => {
                return Err(FamilyError::CycleTooShort(n))
            }
            _ => {}
        }
        let n = self.order();
        if n > MAX_ORDER {
            return Err(FamilyError::TooLarge(n));
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Complete(n) => write!(f, "family=K,n={n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "family=KB,a={a},b={b}"),
            FamilySpec::Cycle(n) => write!(f, "family=C,n={n}"),
            FamilySpec::ComplementCycle(n) => write!(f, "family=CC,n={n}"),
            FamilySpec::F(r) => write!(f, "family=F,r={r}"),
            FamilySpec::Petersen => write!(f, "family=Petersen"),
            FamilySpec::Prism => write!(f, "family=Prism"),
        }
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parameters accompanying a family tag.
#[derive(Debug, Clone, Copy, Default)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub r: Option<usize>,
}

impl FamilySpec {
    /// Builds a spec from a family tag (`K`, `KB`, `C`, `CC`, `F`, `Petersen`,
    /// `Prism`, case-insensitive, with a few long aliases).
    pub fn from_tag(tag: &str, p: FamilyParams) -> Result<FamilySpec, FamilyError> {
        let missing = |what: &str| FamilyError::Parse(format!("{tag}: missing {what}"));
        let spec = match tag.to_ascii_lowercase().as_str() {
            "k" | "complete" => FamilySpec::Complete(p.n.ok_or_else(|| missing("n"))?),
            "kb" | "kab" | "complete-bipartite" => FamilySpec::CompleteBipartite(
                p.a.ok_or_else(|| missing("a"))?,
                p.b.ok_or_else(|| missing("b"))?,
            ),
            "c" | "cycle" => FamilySpec::Cycle(p.n.ok_or_else(|| missing("n"))?),
            "cc" | "complement-cycle" => {
                FamilySpec::ComplementCycle(p.n.ok_or_else(|| missing("n"))?)
            }
            "f" => FamilySpec::F(p.r.ok_or_else(|| missing("r"))?),
            "petersen" => FamilySpec::Petersen,
            "prism" => FamilySpec::Prism,
            _ => return Err(FamilyError::Parse(tag.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Parses the `family=F,r=6` form produced by `Display`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::Parse(s.to_string());
        let mut tag = None;
        let mut p = FamilyParams::default();
        for part in s.split(',') {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            let key = key.trim();
            let value = value.trim();
            if key == "family" {
                tag = Some(value);
                continue;
            }
            let num: usize = value.parse().map_err(|_| bad())?;
            match key {
                "n" => p.n = Some(num),
                "a" => p.a = Some(num),
                "b" => p.b = Some(num),
                "r" => p.r = Some(num),
                _ => return Err(bad()),
            }
        }
        FamilySpec::from_tag(tag.ok_or_else(bad)?, p)
    }
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let g = match *spec {
        FamilySpec::Complete(n) => Graph::empty(n).complement(),
        FamilySpec::CompleteBipartite(a, b) => {
            let edges: Vec<_> = (0..a)
                .flat_map(|i| (0..b).map(move |j| (i, a + j)))
                .collect();
            Graph::new(a + b, &edges).expect("valid bipartite edges")
        }
        FamilySpec::Cycle(n) => cycle(n),
        FamilySpec::ComplementCycle(n) => cycle(n).complement(),
        FamilySpec::F(r) => f_graph(r),
        FamilySpec::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
                edges.push((i, 5 + i));
            }
            Graph::new(10, &edges).expect("valid Petersen edges")
        }
        FamilySpec::Prism => Graph::new(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .expect("valid prism edges"),
    };
    Ok(g)
}

fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).expect("valid cycle edges")
}

/// Fixed labelling: `x_i = i - 1`, `y_i = r + i - 1` for `i` in `1..=r`, apex
/// `2r`. The removed matching is `{x_i y_i : i <= r/2}`.
fn f_graph(r: usize) -> Graph {
    let half = r / 2;
    let apex = 2 * r;
    let mut edges = Vec::with_capacity(r * (2 * r + 1) / 2);
    for i in 0..r {
        for j in 0..r {
            if i != j || i >= half {
                edges.push((i, r + j));
            }
        }
    }
    for i in 0..half {
        edges.push((apex, i));
        edges.push((apex, r + i));
    }
    let g = Graph::new(2 * r + 1, &edges).expect("valid F_r edges");
    assert_eq!(g.regularity(), Some(r), "F_r must be r-regular");
    g
}

/// Apex vertex of [`build_family`]`(F(r))`.
pub fn f_graph_apex(r: usize) -> usize {
    2 * r
}

/// Identifies `g` as a member of a named family, up to isomorphism.
///
/// Checked in this order, first hit wins: complete graphs, complete
/// bipartite graphs `K_{a,b}` with `1 <= a <= b`, `F(r)`, the complement of
/// `C_7`, cycles. Aliases resolve to the earliest family (`C_3` is `K_3`,
/// `C_4` is `K_{2,2}`, `C_5` is `F(2)`). Petersen and the prism are
/// negative controls and are never reported.
pub fn recognize_family(g: &Graph) -> Option<FamilySpec> {
    let n = g.order();
    let m = g.edge_count();
    if m == n * n.saturating_sub(1) / 2 {
        return Some(FamilySpec::Complete(n));
    }
    if g.is_connected() {
        if let Some((a, b)) = g.bipartition() {
            if a.len() * b.len() == m {
                let (a, b) = (a.len().min(b.len()), a.len().max(b.len()));
                return Some(FamilySpec::CompleteBipartite(a, b));
            }
        }
    }
    let r = g.regularity()?;
    if n == 2 * r + 1 && r % 2 == 0 && r >= 2 {
        let f = build_family(&FamilySpec::F(r)).expect("valid F spec");
        if canonicalize(g) == canonicalize(&f) {
            return Some(FamilySpec::F(r));
        }
    }
    if n == 7 && r == 4 {
        let comp = g.complement();
        if comp.is_connected() {
            return Some(FamilySpec::ComplementCycle(n));
        }
    }
    if r == 2 && g.is_connected() {
        return Some(FamilySpec::Cycle(n));
    }
    None
}
