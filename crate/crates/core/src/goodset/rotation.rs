//! Path rotations with one terminal held fixed.
//!
//! Starting from `{P}`, the closure repeatedly looks for a segment
//! `v_{j-1} e_j v_j` of `P` whose two vertices are not yet terminals, which
//! every stored witness still traverses, and whose edge `e_j` contains the
//! far terminal `v` of some witness `Q`. Cutting `Q` at that segment and
//! reattaching the tail reversed through `e_j` yields a path with the same
//! vertices and edges ending at the segment vertex farther from `v_0`.
//! Terminals strictly grow, so the loop stops after at most `|V(P)| - 1`
//! rotations. One witness is stored per terminal.

use serde::Serialize;

use crate::hypergraph::{EdgeRef, Hypergraph, VertexSet};
use crate::search::BergePath;

use super::GoodSetError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RotationFamily {
    /// The input path, oriented so that `base.start()` is the fixed terminal.
    pub base: BergePath,
    /// Far terminals reached by rotation.
    pub terminals: VertexSet,
    /// One path per terminal, ordered by terminal id.
    pub witnesses: Vec<(usize, BergePath)>,
    /// `|N_{E(P)}(terminals)|`.
    pub bound_lhs: usize,
    /// `2|terminals| - 1`.
    pub bound_rhs: usize,
}

impl RotationFamily {
    pub fn bound_holds(&self) -> bool {
        self.bound_lhs <= self.bound_rhs
    }

    pub fn witness(&self, terminal: usize) -> Option<&BergePath> {
        self.witnesses
            .iter()
            .find(|(t, _)| *t == terminal)
            .map(|(_, p)| p)
    }

    /// Checks that every witness is a valid path in `h` on the base's
    /// vertices and edges, starting at the fixed terminal and ending at its
    /// own terminal.
    pub fn witnesses_sound(&self, h: &Hypergraph) -> bool {
        let vs = self.base.vertex_set();
        let mut es = self.base.edge_set();
        es.sort();
        self.witnesses.iter().all(|(t, q)| {
            let mut qe = q.edge_set();
            qe.sort();
            q.validate(h).is_ok()
                && q.start() == self.base.start()
                && q.end() == *t
                && q.vertex_set() == vs
                && qe == es
        })
    }
}

/// Position `i` such that `q` traverses `e` between `vertices[i]` and
/// `vertices[i + 1]`, with `{a, b}` as that pair in either order.
fn segment_position(q: &BergePath, e: EdgeRef, a: usize, b: usize) -> Option<usize> {
    let i = q.edges().iter().position(|&x| x == e)?;
    let (x, y) = (q.vertices()[i], q.vertices()[i + 1]);
    ((x, y) == (a, b) || (x, y) == (b, a)).then_some(i)
}

/// `Q[v_0..x_i] e Q[end..x_{i+1}]`: the tail after position `i` reversed.
fn rotate(q: &BergePath, i: usize) -> BergePath {
    let mut vertices = q.vertices()[..=i].to_vec();
    vertices.extend(q.vertices()[i + 1..].iter().rev());
    let mut edges = q.edges()[..=i].to_vec();
    edges.extend(q.edges()[i + 1..].iter().rev());
    BergePath::from_parts(vertices, edges)
}

/// The rotation closure of `p` with `fixed_end` held in place.
///
/// `fixed_end` may be either terminal; the path is reversed when it is the
/// last vertex.
pub fn rotation_closure(
    h: &Hypergraph,
    p: &BergePath,
    fixed_end: usize,
) -> Result<RotationFamily, GoodSetError> {
    p.validate(h).map_err(GoodSetError::InvalidPath)?;
    let base = if p.start() == fixed_end {
        p.clone()
    } else if p.end() == fixed_end {
        p.reversed()
    } else {
        return Err(GoodSetError::NotATerminal(fixed_end));
    };

    let mut terminals = VertexSet::singleton(base.end());
    let mut witnesses: Vec<(usize, BergePath)> = vec![(base.end(), base.clone())];
    let bv = base.vertices();

    'grow: loop {
        for j in 1..=base.len() {
            let (a, b) = (bv[j - 1], bv[j]);
            if terminals.contains(a) || terminals.contains(b) {
                continue;
            }
            let e = base.edges()[j - 1];
            if !witnesses
                .iter()
                .all(|(_, q)| segment_position(q, e, a, b).is_some())
            {
                continue;
            }
            let edge = h.edge(e);
            for v in terminals.intersection(edge).iter() {
                let q = &witnesses.iter().find(|(t, _)| *t == v).expect("witness").1;
                let i = segment_position(q, e, a, b).expect("segment present");
                let rotated = rotate(q, i);
                debug_assert!(rotated.validate(h).is_ok());
                let gained = rotated.end();
                terminals.insert(gained);
                witnesses.push((gained, rotated));
                witnesses.sort_by_key(|(t, _)| *t);
                continue 'grow;
            }
        }
        break;
    }

    let bound_lhs = base
        .edges()
        .iter()
        .filter(|&&e| h.edge(e).intersects(terminals))
        .count();
    Ok(RotationFamily {
        bound_rhs: 2 * terminals.len() - 1,
        base,
        terminals,
        witnesses,
        bound_lhs,
    })
}
