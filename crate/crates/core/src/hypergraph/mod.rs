//! Canonical r-uniform hypergraphs over at most 64 labeled vertices.
//!
//! Vertex sets are single `u64` bitmasks. Edges are stored sorted by their
//! bitmask value, which fixes the meaning of an [`EdgeRef`] for every
//! downstream report.

mod enumerate;
mod parse;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use enumerate::{complete_hypergraph, enumerate_hypergraphs, EdgeUniverse, HypergraphStream};
pub use parse::parse_hypergraph;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("line {line}: malformed header, expected \"n r\": {detail}")]
    MalformedHeader { line: usize, detail: String },
    #[error("missing header line")]
    MissingHeader,
    #[error("vertex count {0} exceeds the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("uniformity must be at least 2, got {0}")]
    UniformityTooSmall(usize),
    #[error("line {line}: invalid vertex id {token:?}")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: edge has {found} vertices, expected {expected}")]
    WrongArity {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: duplicate vertex {vertex} within an edge")]
    DuplicateVertex { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge")]
    DuplicateEdge { line: usize },
    #[error("complete hypergraph needs n >= r, got n = {n}, r = {r}")]
    FewerVerticesThanUniformity { n: usize, r: usize },
    #[error("{what}: {count} exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        count: u128,
        limit: u128,
    },
}

/// A set of vertices encoded as a bitmask; bit `i` is vertex `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Vertices in increasing id order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Serialized as the sorted list of member vertices.
impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(VertexSet::from_vertices(vs))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Index of an edge in a hypergraph's canonical edge list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeRef(pub usize);

impl EdgeRef {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<u64>,
}

/// A hypergraph derived from a parent by deletion or decomposition,
/// with the maps back to the parent's labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubHypergraph {
    pub graph: Hypergraph,
    /// `vertex_map[new] = old` vertex id in the parent.
    pub vertex_map: Vec<usize>,
    /// `edge_map[new] = old` edge reference in the parent.
    pub edge_map: Vec<EdgeRef>,
}

impl SubHypergraph {
    /// The parent vertices covered by this piece.
    pub fn parent_vertices(&self) -> VertexSet {
        self.vertex_map.iter().copied().collect()
    }
}

impl Hypergraph {
    /// Builds a hypergraph, validating uniformity and distinctness and
    /// sorting the edges into canonical order.
    pub fn new<I>(n: usize, r: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices(n));
        }
        if r < 2 {
            return Err(HypergraphError::UniformityTooSmall(r));
        }
        let all = VertexSet::full(n);
        let mut masks = Vec::new();
        for (i, e) in edges.into_iter().enumerate() {
            let line = i + 2;
            if !e.is_subset(all) {
                let vertex = e.difference(all).iter().next().unwrap_or(n);
                return Err(HypergraphError::VertexOutOfRange { line, vertex, n });
            }
            if e.len() != r {
                return Err(HypergraphError::WrongArity {
                    line,
                    expected: r,
                    found: e.len(),
                });
            }
            masks.push(e.0);
        }
        let before = masks.len();
        masks.sort_unstable();
        masks.dedup();
        if masks.len() != before {
            return Err(HypergraphError::DuplicateEdge { line: 0 });
        }
        Ok(Hypergraph { n, r, edges: masks })
    }

    /// Builds from already-canonical masks. Callers guarantee the invariants.
    pub(crate) fn from_sorted_masks(n: usize, r: usize, edges: Vec<u64>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&e| e.count_ones() as usize == r));
        debug_assert!(edges.iter().all(|&e| e & !VertexSet::full(n).0 == 0));
        Hypergraph { n, r, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeRef) -> VertexSet {
        VertexSet(self.edges[e.0])
    }

    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        (0..self.edges.len()).map(EdgeRef)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Union of all edges.
    pub fn covered_vertices(&self) -> VertexSet {
        VertexSet(self.edges.iter().fold(0, |m, &e| m | e))
    }

    /// Canonical reference of an edge given as a vertex set, if present.
    pub fn find_edge(&self, e: VertexSet) -> Option<EdgeRef> {
        self.edges.binary_search(&e.0).ok().map(EdgeRef)
    }

    /// Edges of `family` meeting `s`. The result keeps the order of `family`.
    pub fn neighborhood(&self, family: &[EdgeRef], s: VertexSet) -> Vec<EdgeRef> {
        family
            .iter()
            .copied()
            .filter(|&e| self.edges[e.0] & s.0 != 0)
            .collect()
    }

    /// `N(S)` over the full edge set, in canonical order.
    pub fn neighborhood_all(&self, s: VertexSet) -> Vec<EdgeRef> {
        self.edge_refs()
            .filter(|&e| self.edges[e.0] & s.0 != 0)
            .collect()
    }

    /// `H \ S`: removes the vertices of `s` and every edge meeting them.
    /// Remaining vertices are relabeled in increasing order.
    pub fn delete_vertices(&self, s: VertexSet) -> SubHypergraph {
        let kept = self.vertices().difference(s);
        self.induced_on(kept)
    }

    /// The sub-hypergraph on `kept` containing the edges that lie inside it.
    fn induced_on(&self, kept: VertexSet) -> SubHypergraph {
        let vertex_map = kept.to_vec();
        let mut relabel = [usize::MAX; 64];
        for (new, &old) in vertex_map.iter().enumerate() {
            relabel[old] = new;
        }
        let edge_map: Vec<EdgeRef> = self
            .edge_refs()
            .filter(|&e| self.edges[e.0] & !kept.0 == 0)
            .collect();
        // Order-preserving relabeling keeps the bitmask order, so the
        // mapped edges are already canonical.
        let edges = edge_map
            .iter()
            .map(|&e| {
                VertexSet(self.edges[e.0])
                    .iter()
                    .fold(0u64, |m, v| m | (1u64 << relabel[v]))
            })
            .collect();
        SubHypergraph {
            graph: Hypergraph::from_sorted_masks(vertex_map.len(), self.r, edges),
            vertex_map,
            edge_map,
        }
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    /// Isolated vertices form their own components.
    pub fn component_vertex_sets(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertices();
        let mut out = Vec::new();
        while !remaining.is_empty() {
            let start = remaining.0.trailing_zeros() as usize;
            let mut comp = VertexSet::singleton(start);
            loop {
                let grown = self
                    .edges
                    .iter()
                    .filter(|&&e| e & comp.0 != 0)
                    .fold(comp.0, |m, &e| m | e);
                if grown == comp.0 {
                    break;
                }
                comp = VertexSet(grown);
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<SubHypergraph> {
        self.component_vertex_sets()
            .into_iter()
            .map(|c| self.induced_on(c))
            .collect()
    }

    /// True when there is exactly one component and it holds all `n` vertices.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_vertex_sets().len() == 1
    }

    /// The `.hg` text form: header, then one canonical edge per line.
    pub fn to_hg_string(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.r);
        for &e in &self.edges {
            let line: Vec<String> = VertexSet(e).iter().map(|v| v.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Edges as sorted vertex-id lists, in canonical order.
    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&e| VertexSet(e).to_vec()).collect()
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("n", &self.n)
            .field("r", &self.r)
            .field("edges", &self.edge_lists())
            .finish()
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hg_string())
    }
}

impl std::str::FromStr for Hypergraph {
    type Err = HypergraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_hypergraph(s)
    }
}
