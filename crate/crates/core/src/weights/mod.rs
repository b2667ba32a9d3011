//! The weight normalizer `f_r`, the localized sum `Σ 1/f_r(p(e))` and its
//! equality classification, exact Turán numbers and the gap inequality.
//!
//! Everything here is exact rational arithmetic. Equality with `n` is
//! decided by comparing reduced fractions.

mod gap;
mod turan;

use num::bigint::BigInt;
use num::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{EdgeRef, Hypergraph};
use crate::rational::Rational;
use crate::search;

pub use gap::{falling_factorial, gap_check, generalized_binomial, GapCheck};
pub use turan::{turan_exact, TuranRegime, TuranResult, TURAN_EDGE_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("f_r needs r >= 3, got r = {0}")]
    UniformityTooSmall(usize),
    #[error("f_r needs x >= 1, got x = {0}")]
    ArgumentTooSmall(usize),
    #[error("{what}: {count} exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        count: usize,
        limit: usize,
    },
    #[error("path length k must be at least 1")]
    ZeroLength,
    #[error(transparent)]
    Hypergraph(#[from] crate::hypergraph::HypergraphError),
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// The piecewise normalizer, for any `r >= 2`. At `r = 2` every branch
/// collapses to `x/2`.
pub(crate) fn weight_of(r: usize, x: usize) -> Rational {
    debug_assert!(r >= 2 && x >= 1);
    if x == 1 {
        Rational::new(1, r as i64)
    } else if x < r {
        Rational::new(x as i64, r as i64 + 1)
    } else {
        Rational::from_big(binomial(x, r - 1), BigInt::from(r))
    }
}

/// `f_r(x)`: `1/r` at `x = 1`, `x/(r+1)` for `1 < x <= r-1`, and
/// `C(x, r-1)/r` for `x >= r`.
pub fn f_r(r: usize, x: usize) -> Result<Rational, WeightError> {
    if r < 3 {
        return Err(WeightError::UniformityTooSmall(r));
    }
    if x < 1 {
        return Err(WeightError::ArgumentTooSmall(x));
    }
    Ok(weight_of(r, x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    /// Extremal, with at least one component on `r + 1` vertices.
    CaseI,
    /// Extremal, every component complete on `r` or at least `r + 2` vertices.
    CaseIi,
    NotExtremal,
    /// `r = 2`: the equality characterization is not evaluated.
    OutOfScopeR2,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::CaseI => "case_i",
            Classification::CaseIi => "case_ii",
            Classification::NotExtremal => "not_extremal",
            Classification::OutOfScopeR2 => "out_of_scope_r2",
        }
    }

    pub fn is_extremal(self) -> bool {
        matches!(self, Classification::CaseI | Classification::CaseIi)
    }
}

/// Truth table for one connected component with `vertices` vertices and
/// `edges` edges:
/// - `|V| = r`, `|E| = 1`: complete, case (ii);
/// - `|V| = r + 1`, `|E| ∈ {2, …, r-1} ∪ {r+1}`: case (i);
/// - `|V| >= r + 2`, `|E| = C(|V|, r)`: complete, case (ii).
///
/// A connected component on `r + 1` vertices cannot have a single edge, so
/// `|E| = 1` is not listed there.
pub fn classify_component(vertices: usize, edges: usize, r: usize) -> Classification {
    if r < 3 {
        return Classification::OutOfScopeR2;
    }
    if edges == 0 {
        return Classification::NotExtremal;
    }
    if vertices == r && edges == 1 {
        Classification::CaseIi
    } else if vertices == r + 1 && ((2..r).contains(&edges) || edges == r + 1) {
        Classification::CaseI
    } else if vertices >= r + 2 && BigInt::from(edges) == binomial(vertices, r) {
        Classification::CaseIi
    } else {
        Classification::NotExtremal
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeWeight {
    pub edge: EdgeRef,
    pub vertices: Vec<usize>,
    pub p: usize,
    pub f: Rational,
    pub inv_f: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentWeight {
    /// Vertex ids in the parent hypergraph.
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeRef>,
    pub sum: Rational,
    pub is_equality: bool,
    pub classification: Classification,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub n: usize,
    pub r: usize,
    /// Longest Berge path length.
    pub k: usize,
    pub per_edge: Vec<EdgeWeight>,
    pub sum: Rational,
    pub bound: usize,
    pub is_equality: bool,
    pub classification: Classification,
    pub components: Vec<ComponentWeight>,
}

impl WeightReport {
    /// Whether the classifier's verdict agrees with the exact sum.
    pub fn classifier_agrees(&self) -> bool {
        match self.classification {
            Classification::OutOfScopeR2 => true,
            c => c.is_extremal() == self.is_equality,
        }
    }

    pub fn within_bound(&self) -> bool {
        self.sum <= Rational::from(self.bound)
    }
}

impl Classification {
    fn of_components(r: usize, parts: &[Classification]) -> Classification {
        if r < 3 {
            return Classification::OutOfScopeR2;
        }
        if parts.iter().any(|c| !c.is_extremal()) {
            Classification::NotExtremal
        } else if parts.contains(&Classification::CaseI) {
            Classification::CaseI
        } else {
            Classification::CaseIi
        }
    }
}

/// The localized weight report of `h`.
pub fn weight_report(h: &Hypergraph) -> WeightReport {
    let p = search::p_edge_all(h);
    weight_report_from_profile(h, search::longest_length(h), &p)
}

/// Builds the report from a precomputed longest length and `p(e)` profile.
pub fn weight_report_from_profile(h: &Hypergraph, k: usize, p: &[usize]) -> WeightReport {
    assert_eq!(p.len(), h.num_edges());
    let r = h.r();
    let per_edge: Vec<EdgeWeight> = h
        .edge_refs()
        .map(|e| {
            let f = weight_of(r, p[e.0]);
            EdgeWeight {
                edge: e,
                vertices: h.edge(e).to_vec(),
                p: p[e.0],
                inv_f: f.recip(),
                f,
            }
        })
        .collect();
    let sum: Rational = per_edge.iter().map(|w| &w.inv_f).sum();
    let components: Vec<ComponentWeight> = h
        .components()
        .into_iter()
        .map(|c| {
            let sum: Rational = c.edge_map.iter().map(|e| &per_edge[e.0].inv_f).sum();
            let size = c.vertex_map.len();
            ComponentWeight {
                is_equality: sum == Rational::from(size),
                classification: classify_component(size, c.edge_map.len(), r),
                vertices: c.vertex_map,
                edges: c.edge_map,
                sum,
            }
        })
        .collect();
    let classes: Vec<Classification> = components.iter().map(|c| c.classification).collect();
    WeightReport {
        n: h.n(),
        r,
        k,
        is_equality: sum == Rational::from(h.n()),
        classification: Classification::of_components(r, &classes),
        per_edge,
        sum,
        bound: h.n(),
        components,
    }
}
