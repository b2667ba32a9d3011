//! Exact `ex_r(n, BP_k)` by branch and bound over edge subsets.
//!
//! Being BP_k-free is closed under taking subsets, so the search only ever
//! extends free sets. When an edge joins a free set, any new length-`k` path
//! must use it, so the inclusion test is a required-edge query.

use serde::{Deserialize, Serialize};

use crate::hypergraph::{EdgeUniverse, Hypergraph};
use crate::rational::Rational;
use crate::search::{self, PathQuery};

use super::{weight_of, WeightError};

/// Largest candidate-edge count `C(n, r)` accepted.
pub const TURAN_EDGE_LIMIT: usize = 30;

/// Parameter ranges where the bound `n·f_r(k-1)` is known to hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TuranRegime {
    /// `n >= r >= k > 2`.
    ShortPaths,
    /// `n >= k >= r + 1 >= 3`.
    LongPaths,
}

impl TuranRegime {
    pub fn of(n: usize, r: usize, k: usize) -> Option<TuranRegime> {
        if n >= r && r >= k && k > 2 {
            Some(TuranRegime::ShortPaths)
        } else if n >= k && k > r && r >= 2 {
            Some(TuranRegime::LongPaths)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranResult {
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub exact: usize,
    /// `n·f_r(k-1)`; absent for `k = 1`.
    pub bound: Option<Rational>,
    pub regime: Option<TuranRegime>,
    #[serde(with = "witness_edges")]
    pub witness: Hypergraph,
    /// Number of search nodes visited.
    pub nodes: u64,
}

impl TuranResult {
    /// `exact <= floor(bound)`, when a bound exists.
    pub fn within_bound(&self) -> Option<bool> {
        self.bound
            .as_ref()
            .map(|b| num::BigInt::from(self.exact) <= b.floor())
    }
}

mod witness_edges {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::hypergraph::Hypergraph;

    #[derive(Serialize, Deserialize)]
    struct Repr {
        n: usize,
        r: usize,
        edges: Vec<Vec<usize>>,
    }

    pub fn serialize<S: Serializer>(h: &Hypergraph, s: S) -> Result<S::Ok, S::Error> {
        Repr {
            n: h.n(),
            r: h.r(),
            edges: h.edge_lists(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Hypergraph, D::Error> {
        let repr = Repr::deserialize(d)?;
        Hypergraph::new(
            repr.n,
            repr.r,
            repr.edges.into_iter().map(|e| e.into_iter().collect()),
        )
        .map_err(serde::de::Error::custom)
    }
}

struct Search<'a> {
    universe: &'a EdgeUniverse,
    k: usize,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn still_free(&self, candidate: usize) -> bool {
        let mut cur = self.chosen.clone();
        cur.push(candidate);
        let h = self.universe.instance_from_indices(&cur);
        let added = h
            .find_edge(crate::VertexSet(self.universe.candidates()[candidate]))
            .expect("candidate is an edge");
        search::search_length(&h, &PathQuery::through(added).with_length(self.k)).is_none()
    }

    fn rec(&mut self, idx: usize) {
        self.nodes += 1;
        let m = self.universe.len();
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if idx == m || self.chosen.len() + (m - idx) <= self.best.len() {
            return;
        }
        if self.still_free(idx) {
            self.chosen.push(idx);
            self.rec(idx + 1);
            self.chosen.pop();
        }
        self.rec(idx + 1);
    }
}

/// Maximum number of edges in an `r`-uniform hypergraph on `n` labeled
/// vertices with no Berge path of length `k`, with a lexicographically
/// first extremal witness (by candidate index).
pub fn turan_exact(n: usize, r: usize, k: usize) -> Result<TuranResult, WeightError> {
    if k == 0 {
        return Err(WeightError::ZeroLength);
    }
    let universe = EdgeUniverse::new(n, r)?;
    if universe.len() > TURAN_EDGE_LIMIT {
        return Err(WeightError::TooLarge {
            what: "candidate edge count",
            count: universe.len(),
            limit: TURAN_EDGE_LIMIT,
        });
    }
    let mut s = Search {
        universe: &universe,
        k,
        chosen: Vec::new(),
        best: Vec::new(),
        nodes: 0,
    };
    s.rec(0);
    let witness = universe.instance_from_indices(&s.best);
    debug_assert!(!search::has_path_of_length(&witness, k));
    let bound = (k >= 2).then(|| Rational::from(n) * weight_of(r, k - 1));
    Ok(TuranResult {
        n,
        r,
        k,
        exact: s.best.len(),
        bound,
        regime: TuranRegime::of(n, r, k),
        witness,
        nodes: s.nodes,
    })
}
