use crate::hypergraph::{EdgeRef, Hypergraph};

use super::{BergePath, PathQuery};

/// Per-vertex incident edge lists in canonical order.
pub(crate) struct Incidence {
    pub(crate) incident: Vec<Vec<usize>>,
}

impl Incidence {
    pub(crate) fn new(h: &Hypergraph) -> Self {
        let mut incident = vec![Vec::new(); h.n()];
        for (i, &e) in h.edge_masks().iter().enumerate() {
            let mut rest = e;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                incident[v].push(i);
            }
        }
        Incidence { incident }
    }
}

struct Dfs<'a> {
    edges: &'a [u64],
    incident: &'a [Vec<usize>],
    n: usize,
    used_e: Vec<bool>,
    required: Option<usize>,
    /// Stop as soon as a qualifying path of this length is found.
    cap: usize,
    /// Exact-length mode: only paths of length `cap` count.
    exact: bool,
    best: Option<usize>,
}

impl Dfs<'_> {
    /// Returns true when the search can stop.
    fn extend(&mut self, end: usize, used_v: u64, len: usize, req_used: bool) -> bool {
        let qualifies = req_used && (!self.exact || len == self.cap);
        if qualifies && self.best.map_or(true, |b| len > b) {
            self.best = Some(len);
            if len == self.cap {
                return true;
            }
        }
        if len == self.cap {
            return false;
        }
        let room = (self.edges.len() - len).min(self.n - used_v.count_ones() as usize);
        let floor = if self.exact {
            Some(self.cap - 1)
        } else {
            self.best
        };
        if floor.is_some_and(|b| len + room <= b) {
            return false;
        }
        if let Some(req) = self.required {
            if !req_used && self.edges[req] & !used_v == 0 {
                return false;
            }
        }
        for idx in 0..self.incident[end].len() {
            let e = self.incident[end][idx];
            if self.used_e[e] {
                continue;
            }
            let mut candidates = self.edges[e] & !used_v;
            self.used_e[e] = true;
            let hit = req_used || self.required == Some(e);
            while candidates != 0 {
                let u = candidates.trailing_zeros() as usize;
                candidates &= candidates - 1;
                if self.extend(u, used_v | 1u64 << u, len + 1, hit) {
                    self.used_e[e] = false;
                    return true;
                }
            }
            self.used_e[e] = false;
        }
        false
    }
}

fn run(h: &Hypergraph, q: &PathQuery, cap: usize, exact: bool) -> Option<usize> {
    if h.n() == 0 {
        return None;
    }
    let inc = Incidence::new(h);
    let mut dfs = Dfs {
        edges: h.edge_masks(),
        incident: &inc.incident,
        n: h.n(),
        used_e: vec![false; h.num_edges()],
        required: q.required_edge.map(|e| e.0),
        cap,
        exact,
        best: None,
    };
    let starts: Vec<usize> = match q.required_start {
        Some(v) => vec![v],
        None => (0..h.n()).collect(),
    };
    let req_free = q.required_edge.is_none();
    for v in starts {
        if dfs.extend(v, 1u64 << v, 0, req_free) {
            break;
        }
    }
    dfs.best
}

/// Upper bound on any path length in `h`.
fn length_ceiling(h: &Hypergraph) -> usize {
    h.num_edges().min(h.n().saturating_sub(1))
}

/// Maximum qualifying length, or exactly `q.target_length` when set.
pub(crate) fn search(h: &Hypergraph, q: &PathQuery) -> Option<usize> {
    match q.target_length {
        Some(t) if t > length_ceiling(h) => None,
        Some(t) => run(h, q, t, true),
        None => run(h, q, length_ceiling(h), false),
    }
}

/// Like [`search`] without a target, but stops once `ceiling` is reached.
pub(crate) fn search_capped(h: &Hypergraph, q: &PathQuery, ceiling: usize) -> Option<usize> {
    debug_assert!(q.target_length.is_none());
    run(h, q, ceiling.min(length_ceiling(h)), false)
}

/// Calls `visit` on every Berge path with exactly `len` edges, as ordered
/// sequences (a path and its reverse are both visited). Order: start vertex,
/// then edge index, then next vertex, increasing. Returning `false` from
/// `visit` stops the enumeration.
pub fn for_each_path_of_length<F>(h: &Hypergraph, len: usize, mut visit: F)
where
    F: FnMut(&BergePath) -> bool,
{
    if h.n() == 0 || len > length_ceiling(h) {
        return;
    }
    let inc = Incidence::new(h);
    let edges = h.edge_masks();
    let mut used_e = vec![false; edges.len()];
    let mut vs = Vec::with_capacity(len + 1);
    let mut es: Vec<EdgeRef> = Vec::with_capacity(len);

    #[allow(clippy::too_many_arguments)]
    fn rec<F: FnMut(&BergePath) -> bool>(
        edges: &[u64],
        incident: &[Vec<usize>],
        used_e: &mut [bool],
        used_v: u64,
        vs: &mut Vec<usize>,
        es: &mut Vec<EdgeRef>,
        len: usize,
        visit: &mut F,
    ) -> bool {
        if es.len() == len {
            let p = BergePath::from_parts(vs.clone(), es.clone());
            return visit(&p);
        }
        let end = *vs.last().unwrap();
        for &e in &incident[end] {
            if used_e[e] {
                continue;
            }
            let mut candidates = edges[e] & !used_v;
            used_e[e] = true;
            while candidates != 0 {
                let u = candidates.trailing_zeros() as usize;
                candidates &= candidates - 1;
                vs.push(u);
                es.push(EdgeRef(e));
                let go_on = rec(edges, incident, used_e, used_v | 1 << u, vs, es, len, visit);
                vs.pop();
                es.pop();
                if !go_on {
                    used_e[e] = false;
                    return false;
                }
            }
            used_e[e] = false;
        }
        true
    }

    for v in 0..h.n() {
        vs.push(v);
        let go_on = rec(edges, &inc.incident, &mut used_e, 1 << v, &mut vs, &mut es, len, &mut visit);
        vs.pop();
        if !go_on {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, r: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, r, edges.iter().map(|e| e.iter().copied().collect())).unwrap()
    }

    #[test]
    fn path_counts() {
        // Single triple: ordered pairs of distinct vertices = 6 paths of length 1.
        let h = hg(3, 3, &[&[0, 1, 2]]);
        let mut count = 0;
        for_each_path_of_length(&h, 1, |p| {
            assert!(p.validate(&h).is_ok());
            count += 1;
            true
        });
        assert_eq!(count, 6);

        let mut zero = 0;
        for_each_path_of_length(&h, 0, |_| {
            zero += 1;
            true
        });
        assert_eq!(zero, 3);
    }

    #[test]
    fn enumeration_stops_early() {
        let h = crate::complete_hypergraph(5, 3).unwrap();
        let mut seen = 0;
        for_each_path_of_length(&h, 4, |_| {
            seen += 1;
            seen < 3
        });
        assert_eq!(seen, 3);
    }

    #[test]
    fn exact_mode_finds_intermediate_lengths() {
        let h = crate::complete_hypergraph(5, 3).unwrap();
        for t in 0..=4 {
            assert_eq!(search(&h, &PathQuery::default().with_length(t)), Some(t));
        }
        assert_eq!(search(&h, &PathQuery::default().with_length(5)), None);
    }

    #[test]
    fn required_edge_separates_components() {
        // {4,5,6} is its own component.
        let h = hg(7, 3, &[&[0, 1, 2], &[0, 1, 3], &[4, 5, 6]]);
        let through = |e| search(&h, &PathQuery::through(EdgeRef(e))).unwrap();
        assert_eq!(through(0), 2);
        assert_eq!(through(1), 2);
        assert_eq!(through(2), 1);
        assert_eq!(search(&h, &PathQuery::through(EdgeRef(2)).with_length(2)), None);
    }
}
