//! Longest Berge paths and Berge cycles.
//!
//! Lengths come from a branch-and-bound depth-first search over
//! (endpoint, used vertices, used edges). Witnesses are canonical: among all
//! qualifying paths the one with the lexicographically least vertex
//! sequence is returned, and among those the least edge-index sequence.
//! [`oracle`] holds an independent brute-force enumeration used to
//! cross-check the search.

mod canonical;
mod kernel;
mod literal;
pub mod oracle;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{EdgeRef, Hypergraph, VertexSet};

pub use kernel::for_each_path_of_length;
pub use literal::{parse_path_literal, PathLiteralError};
pub use oracle::{oracle_longest_path, oracle_profile, OracleError, ORACLE_EDGE_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("expected {expected} vertices for {edges} edges, found {found}")]
    LengthMismatch {
        edges: usize,
        expected: usize,
        found: usize,
    },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("edge {0} out of range")]
    EdgeOutOfRange(EdgeRef),
    #[error("vertex {0} repeated")]
    RepeatedVertex(usize),
    #[error("edge {0} repeated")]
    RepeatedEdge(EdgeRef),
    #[error("edge {edge} at position {position} does not contain both neighbouring vertices")]
    NotIncident { position: usize, edge: EdgeRef },
    #[error("a cycle needs at least 2 edges, found {0}")]
    CycleTooShort(usize),
}

/// `v_0 e_1 v_1 ... e_k v_k` with distinct vertices and distinct edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BergePath {
    vertices: Vec<usize>,
    edges: Vec<EdgeRef>,
}

impl BergePath {
    /// Checks the shape only; use [`BergePath::validate`] against a hypergraph.
    pub fn new(vertices: Vec<usize>, edges: Vec<EdgeRef>) -> Result<Self, PathError> {
        if vertices.len() != edges.len() + 1 {
            return Err(PathError::LengthMismatch {
                edges: edges.len(),
                expected: edges.len() + 1,
                found: vertices.len(),
            });
        }
        Ok(BergePath { vertices, edges })
    }

    pub(crate) fn from_parts(vertices: Vec<usize>, edges: Vec<EdgeRef>) -> Self {
        debug_assert_eq!(vertices.len(), edges.len() + 1);
        BergePath { vertices, edges }
    }

    pub fn single(v: usize) -> Self {
        BergePath {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("path has a vertex")
    }

    /// Defining vertices `V(P)`.
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Defining edges `E(P)`, sorted.
    pub fn edge_set(&self) -> Vec<EdgeRef> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    /// `∪E(P)`, which may be larger than `V(P)`.
    pub fn covered_vertices(&self, h: &Hypergraph) -> VertexSet {
        self.edges
            .iter()
            .fold(VertexSet::EMPTY, |s, &e| s.union(h.edge(e)))
    }

    pub fn reversed(&self) -> BergePath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let mut edges = self.edges.clone();
        edges.reverse();
        BergePath { vertices, edges }
    }

    pub fn uses_edge(&self, e: EdgeRef) -> bool {
        self.edges.contains(&e)
    }

    pub fn validate(&self, h: &Hypergraph) -> Result<(), PathError> {
        validate_sequence(h, &self.vertices, &self.edges, false)
    }

    /// `v0 -e3- v1 -e0- v2`
    pub fn render(&self) -> String {
        let mut s = format!("v{}", self.vertices[0]);
        for (e, v) in self.edges.iter().zip(&self.vertices[1..]) {
            s.push_str(&format!(" -e{}- v{}", e.0, v));
        }
        s
    }
}

impl fmt::Display for BergePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `v_0 e_1 v_1 ... v_{k-1} e_k v_0`; `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BergeCycle {
    vertices: Vec<usize>,
    edges: Vec<EdgeRef>,
}

impl BergeCycle {
    pub fn new(vertices: Vec<usize>, edges: Vec<EdgeRef>) -> Result<Self, PathError> {
        if edges.len() < 2 {
            return Err(PathError::CycleTooShort(edges.len()));
        }
        if vertices.len() != edges.len() {
            return Err(PathError::LengthMismatch {
                edges: edges.len(),
                expected: edges.len(),
                found: vertices.len(),
            });
        }
        Ok(BergeCycle { vertices, edges })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn edge_set(&self) -> Vec<EdgeRef> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    pub fn validate(&self, h: &Hypergraph) -> Result<(), PathError> {
        if self.edges.len() < 2 {
            return Err(PathError::CycleTooShort(self.edges.len()));
        }
        validate_sequence(h, &self.vertices, &self.edges, true)
    }

    /// `v0 -e1- v1 -e2- v0`
    pub fn render(&self) -> String {
        let mut s = format!("v{}", self.vertices[0]);
        let k = self.vertices.len();
        for (i, e) in self.edges.iter().enumerate() {
            s.push_str(&format!(" -e{}- v{}", e.0, self.vertices[(i + 1) % k]));
        }
        s
    }
}

impl fmt::Display for BergeCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn validate_sequence(
    h: &Hypergraph,
    vertices: &[usize],
    edges: &[EdgeRef],
    closed: bool,
) -> Result<(), PathError> {
    let mut seen_v = VertexSet::EMPTY;
    for &v in vertices {
        if v >= h.n() {
            return Err(PathError::VertexOutOfRange(v));
        }
        if seen_v.contains(v) {
            return Err(PathError::RepeatedVertex(v));
        }
        seen_v.insert(v);
    }
    let mut seen_e = vec![false; h.num_edges()];
    for (i, &e) in edges.iter().enumerate() {
        if e.0 >= h.num_edges() {
            return Err(PathError::EdgeOutOfRange(e));
        }
        if seen_e[e.0] {
            return Err(PathError::RepeatedEdge(e));
        }
        seen_e[e.0] = true;
        let a = vertices[i];
        let b = if closed {
            vertices[(i + 1) % vertices.len()]
        } else {
            vertices[i + 1]
        };
        let mask = h.edge(e);
        if !mask.contains(a) || !mask.contains(b) {
            return Err(PathError::NotIncident { position: i + 1, edge: e });
        }
    }
    Ok(())
}

/// Constraints for one search: the path must use `required_edge`, start at
/// `required_start`, and have exactly `target_length` edges when these are set.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PathQuery {
    pub required_edge: Option<EdgeRef>,
    pub required_start: Option<usize>,
    pub target_length: Option<usize>,
}

impl PathQuery {
    pub fn through(e: EdgeRef) -> Self {
        PathQuery {
            required_edge: Some(e),
            ..Default::default()
        }
    }

    pub fn starting_at(v: usize) -> Self {
        PathQuery {
            required_start: Some(v),
            ..Default::default()
        }
    }

    pub fn with_length(mut self, k: usize) -> Self {
        self.target_length = Some(k);
        self
    }

    fn check(&self, h: &Hypergraph) {
        if let Some(e) = self.required_edge {
            assert!(e.0 < h.num_edges(), "required edge {e} out of range");
        }
        if let Some(v) = self.required_start {
            assert!(v < h.n(), "required start vertex {v} out of range");
        }
    }
}

/// Length of a longest Berge path; 0 for an edgeless (or empty) hypergraph.
pub fn longest_length(h: &Hypergraph) -> usize {
    kernel::search(h, &PathQuery::default()).unwrap_or(0)
}

/// The longest Berge path length `k` and its canonical witness.
/// `None` only when `h` has no vertices.
pub fn longest_berge_path(h: &Hypergraph) -> Option<(usize, BergePath)> {
    let k = kernel::search(h, &PathQuery::default())?;
    let w = canonical::canonical_path(h, &PathQuery::default(), k)
        .expect("a path of the searched length exists");
    debug_assert!(w.validate(h).is_ok());
    Some((k, w))
}

/// `p(e)`: the maximum length of a Berge path using `e` as a defining edge.
pub fn p_edge(h: &Hypergraph, e: EdgeRef) -> usize {
    assert!(e.0 < h.num_edges(), "edge {e} out of range");
    kernel::search(h, &PathQuery::through(e)).expect("an edge is a path of length 1")
}

/// `p(e)` for every edge, in canonical edge order.
pub fn p_edge_all(h: &Hypergraph) -> Vec<usize> {
    let k = longest_length(h);
    h.edge_refs()
        .map(|e| kernel::search_capped(h, &PathQuery::through(e), k).expect("edge path"))
        .collect()
}

/// Maximum length of a path satisfying `q`, or exactly `q.target_length`
/// when set. `None` when no path qualifies.
pub fn search_length(h: &Hypergraph, q: &PathQuery) -> Option<usize> {
    q.check(h);
    kernel::search(h, q)
}

/// A canonical witness for `q`, of maximum length (or the target length).
pub fn search_witness(h: &Hypergraph, q: &PathQuery) -> Option<BergePath> {
    q.check(h);
    let k = kernel::search(h, q)?;
    let w = canonical::canonical_path(h, q, k).expect("a path of the searched length exists");
    debug_assert!(w.validate(h).is_ok());
    debug_assert!(q.required_edge.map_or(true, |e| w.uses_edge(e)));
    debug_assert!(q.required_start.map_or(true, |v| w.start() == v));
    Some(w)
}

/// True if some Berge path has at least `k` edges.
pub fn has_path_of_length(h: &Hypergraph, k: usize) -> bool {
    k == 0 && h.n() > 0 || kernel::search(h, &PathQuery::default().with_length(k)).is_some()
}

/// A canonical Berge cycle with exactly `len` edges, if one exists.
pub fn find_berge_cycle(h: &Hypergraph, len: usize) -> Option<BergeCycle> {
    assert!(len >= 2, "cycle length must be at least 2");
    let c = canonical::canonical_cycle(h, len)?;
    debug_assert!(c.validate(h).is_ok());
    Some(c)
}
