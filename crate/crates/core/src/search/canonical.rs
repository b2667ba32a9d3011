//! Lexicographically least witnesses.
//!
//! A vertex sequence is realizable as a Berge path (or cycle) exactly when
//! its consecutive pairs admit a system of distinct representative edges.
//! Sequences are explored in lexicographic order while a bipartite matching
//! between pairs and edges is maintained incrementally; the first complete
//! sequence with a perfect matching has the least vertex sequence, and its
//! least edge sequence is then fixed greedily, position by position.

use crate::hypergraph::{EdgeRef, Hypergraph};

use super::kernel::Incidence;
use super::{BergeCycle, BergePath, PathQuery};

struct Matcher<'a> {
    edges: &'a [u64],
    incident: &'a [Vec<usize>],
    pairs: Vec<(usize, usize)>,
    pair_edge: Vec<usize>,
    edge_owner: Vec<Option<usize>>,
}

impl<'a> Matcher<'a> {
    fn new(edges: &'a [u64], incident: &'a [Vec<usize>]) -> Self {
        Matcher {
            edges,
            incident,
            pairs: Vec::new(),
            pair_edge: Vec::new(),
            edge_owner: vec![None; edges.len()],
        }
    }

    fn candidates(&self, (a, b): (usize, usize)) -> impl Iterator<Item = usize> + '_ {
        let edges = self.edges;
        self.incident[a]
            .iter()
            .copied()
            .filter(move |&e| edges[e] >> b & 1 == 1)
    }

    fn augment(&mut self, p: usize, visited: &mut [bool]) -> bool {
        let pair = self.pairs[p];
        let cands: Vec<usize> = self.candidates(pair).collect();
        for e in cands {
            if visited[e] {
                continue;
            }
            visited[e] = true;
            let free = match self.edge_owner[e] {
                None => true,
                Some(q) => self.augment(q, visited),
            };
            if free {
                self.edge_owner[e] = Some(p);
                self.pair_edge[p] = e;
                return true;
            }
        }
        false
    }

    /// Adds a pair; on failure the matching is left unchanged.
    fn push(&mut self, pair: (usize, usize)) -> bool {
        self.pairs.push(pair);
        self.pair_edge.push(usize::MAX);
        let mut visited = vec![false; self.edges.len()];
        if self.augment(self.pairs.len() - 1, &mut visited) {
            true
        } else {
            self.pairs.pop();
            self.pair_edge.pop();
            false
        }
    }

    fn pop(&mut self) {
        let e = self.pair_edge.pop().expect("pair to pop");
        self.pairs.pop();
        self.edge_owner[e] = None;
    }
}

/// Whether `pairs` admit distinct representatives avoiding `banned`.
fn has_sdr(m: &Matcher<'_>, pairs: &[(usize, usize)], banned: &[bool]) -> bool {
    let mut owner: Vec<Option<usize>> = vec![None; m.edges.len()];
    fn aug(
        m: &Matcher<'_>,
        pairs: &[(usize, usize)],
        banned: &[bool],
        p: usize,
        owner: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for e in m.candidates(pairs[p]) {
            if banned[e] || visited[e] {
                continue;
            }
            visited[e] = true;
            let free = match owner[e] {
                None => true,
                Some(q) => aug(m, pairs, banned, q, owner, visited),
            };
            if free {
                owner[e] = Some(p);
                return true;
            }
        }
        false
    }
    (0..pairs.len()).all(|p| {
        let mut visited = vec![false; m.edges.len()];
        aug(m, pairs, banned, p, &mut owner, &mut visited)
    })
}

/// Whether `pairs` admit distinct representatives avoiding `banned` in
/// which `required` represents some pair.
fn has_sdr_using(m: &Matcher<'_>, pairs: &[(usize, usize)], banned: &[bool], required: usize) -> bool {
    if banned[required] {
        return false;
    }
    let mut banned = banned.to_vec();
    banned[required] = true;
    (0..pairs.len()).any(|j| {
        let (a, b) = pairs[j];
        if m.edges[required] >> a & 1 == 0 || m.edges[required] >> b & 1 == 0 {
            return false;
        }
        let rest: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, &p)| p)
            .collect();
        has_sdr(m, &rest, &banned)
    })
}

/// Least edge sequence realizing `pairs`, or `None`.
fn least_edge_sequence(m: &Matcher<'_>, pairs: &[(usize, usize)], required: Option<usize>) -> Option<Vec<usize>> {
    let mut banned = vec![false; m.edges.len()];
    let feasible = |banned: &[bool], rest: &[(usize, usize)], need: Option<usize>| match need {
        Some(r) => has_sdr_using(m, rest, banned, r),
        None => has_sdr(m, rest, banned),
    };
    let mut need = required;
    if !feasible(&banned, pairs, need) {
        return None;
    }
    let mut chosen = Vec::with_capacity(pairs.len());
    for i in 0..pairs.len() {
        let cands: Vec<usize> = m.candidates(pairs[i]).collect();
        let mut picked = None;
        for e in cands {
            if banned[e] {
                continue;
            }
            banned[e] = true;
            let still_needed = need.filter(|&r| r != e);
            if feasible(&banned, &pairs[i + 1..], still_needed) {
                picked = Some(e);
                need = still_needed;
                break;
            }
            banned[e] = false;
        }
        chosen.push(picked.expect("feasibility was established"));
    }
    Some(chosen)
}

struct SeqSearch<'a> {
    m: Matcher<'a>,
    n: usize,
    /// Number of edges the witness must have.
    len: usize,
    closed: bool,
    required: Option<usize>,
    seq: Vec<usize>,
    used: u64,
}

impl SeqSearch<'_> {
    /// Vertex and edge sequences of the first realizable completion.
    fn rec(&mut self) -> Option<(Vec<usize>, Vec<usize>)> {
        let vertices_needed = if self.closed { self.len } else { self.len + 1 };
        if self.seq.len() == vertices_needed {
            if self.closed {
                let closing = (*self.seq.last().unwrap(), self.seq[0]);
                if !self.m.push(closing) {
                    return None;
                }
                let found = least_edge_sequence(&self.m, &self.m.pairs.clone(), None);
                self.m.pop();
                return found.map(|e| (self.seq.clone(), e));
            }
            return least_edge_sequence(&self.m, &self.m.pairs.clone(), self.required)
                .map(|e| (self.seq.clone(), e));
        }
        let last = *self.seq.last().unwrap();
        let first = self.seq[0];
        for u in 0..self.n {
            if self.used >> u & 1 == 1 {
                continue;
            }
            // The least rotation of a cycle starts at its minimum vertex.
            if self.closed && u < first {
                continue;
            }
            if !self.m.push((last, u)) {
                continue;
            }
            self.seq.push(u);
            self.used |= 1 << u;
            let found = self.rec();
            self.used &= !(1 << u);
            self.seq.pop();
            self.m.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

fn solve(h: &Hypergraph, len: usize, closed: bool, q: &PathQuery) -> Option<(Vec<usize>, Vec<EdgeRef>)> {
    let inc = Incidence::new(h);
    let starts: Vec<usize> = match q.required_start {
        Some(v) => vec![v],
        None => (0..h.n()).collect(),
    };
    for v in starts {
        if len == 0 {
            if q.required_edge.is_some() {
                return None;
            }
            return Some((vec![v], Vec::new()));
        }
        let mut s = SeqSearch {
            m: Matcher::new(h.edge_masks(), &inc.incident),
            n: h.n(),
            len,
            closed,
            required: q.required_edge.map(|e| e.0),
            seq: vec![v],
            used: 1 << v,
        };
        if let Some((vertices, edges)) = s.rec() {
            return Some((vertices, edges.into_iter().map(EdgeRef).collect()));
        }
    }
    None
}

pub(crate) fn canonical_path(h: &Hypergraph, q: &PathQuery, len: usize) -> Option<BergePath> {
    if h.n() == 0 || len > h.num_edges() || len + 1 > h.n() {
        return None;
    }
    let (v, e) = solve(h, len, false, q)?;
    Some(BergePath::from_parts(v, e))
}

pub(crate) fn canonical_cycle(h: &Hypergraph, len: usize) -> Option<BergeCycle> {
    if len < 2 || len > h.num_edges() || len > h.n() {
        return None;
    }
    let (v, e) = solve(h, len, true, &PathQuery::default())?;
    Some(BergeCycle::new(v, e).expect("cycle shape"))
}
