//! Good sets: nonempty `S` with `p(e) = k` on every edge meeting `S` and
//! `|N(S)| <= f_r(k)·|S|`, where `k` is the longest Berge path length.
//!
//! Besides the predicate and a subset scan, [`find_good_set`] tries two
//! constructive routes first: a spanning `(k+1)`-cycle (so `S = V`), and the
//! terminal sets produced by [`rotation_closure`] on longest paths.

mod rotation;

use num::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{EdgeRef, Hypergraph, VertexSet};
use crate::rational::Rational;
use crate::search::{self, for_each_path_of_length, BergeCycle, PathError};
use crate::weights::weight_of;

pub use rotation::{rotation_closure, RotationFamily};

/// Largest `n` for which the `2^n` subset scan is allowed.
pub const SUBSET_SCAN_LIMIT: usize = 20;

/// How many longest paths the rotation route examines before giving up.
pub const ROTATION_PATH_LIMIT: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoodSetError {
    #[error("the empty set is never good")]
    EmptySet,
    #[error("vertex set {0:?} leaves the vertex range")]
    OutOfRange(VertexSet),
    #[error("hypergraph has no edges")]
    NoEdges,
    #[error("good sets need r >= 3, got r = {0}")]
    UniformityTooSmall(usize),
    #[error("subset scan limited to n <= {limit}, got n = {n}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("hypergraph is not connected; decompose into components first")]
    Disconnected,
    #[error("invalid path: {0}")]
    InvalidPath(PathError),
    #[error("no good set exists")]
    NoGoodSet,
    #[error("vertex {0} is not a terminal of the path")]
    NotATerminal(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodSetCertificate {
    pub set: VertexSet,
    pub k: usize,
    pub neighborhood: Vec<EdgeRef>,
    /// `f_r(k)·|S|`.
    pub bound: Rational,
    pub all_p_equal_k: bool,
}

impl GoodSetCertificate {
    /// Re-derives the certificate's claims from scratch.
    pub fn verify(&self, h: &Hypergraph) -> bool {
        let fresh = is_good_set(h, self.set);
        matches!(fresh, Ok(Some(c)) if c == *self)
    }
}

/// Which construction produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GoodSetRoute {
    /// A Berge cycle of length `k + 1`; `S = V`.
    SpanningCycle,
    /// Terminals of a rotation closure.
    Rotation,
    /// `k = 1`: the single edge itself.
    SingleEdge,
    /// Exhaustive subset scan.
    SubsetScan,
}

impl GoodSetRoute {
    pub fn as_str(self) -> &'static str {
        match self {
            GoodSetRoute::SpanningCycle => "spanning_cycle",
            GoodSetRoute::Rotation => "rotation",
            GoodSetRoute::SingleEdge => "single_edge",
            GoodSetRoute::SubsetScan => "subset_scan",
        }
    }
}

/// `k`, `p(e)` and `f_r(k)` for one hypergraph, so repeated predicate
/// calls share a single search.
#[derive(Debug, Clone)]
pub struct GoodSetContext<'a> {
    h: &'a Hypergraph,
    k: usize,
    p: Vec<usize>,
    f_k: Rational,
    /// `f_r(k)` as `num/den` when both fit in `u128`.
    f_small: Option<(u128, u128)>,
    /// Vertices lying on some edge with `p(e) < k`.
    blocked: VertexSet,
}

impl<'a> GoodSetContext<'a> {
    pub fn new(h: &'a Hypergraph) -> Result<Self, GoodSetError> {
        let k = search::longest_length(h);
        let p = search::p_edge_all(h);
        Self::from_profile(h, k, p)
    }

    /// Uses a precomputed longest length and `p(e)` profile.
    pub fn from_profile(h: &'a Hypergraph, k: usize, p: Vec<usize>) -> Result<Self, GoodSetError> {
        if h.r() < 3 {
            return Err(GoodSetError::UniformityTooSmall(h.r()));
        }
        if h.num_edges() == 0 {
            return Err(GoodSetError::NoEdges);
        }
        let f_k = weight_of(h.r(), k);
        let f_small = f_k.numer().to_u128().zip(f_k.denom().to_u128());
        let blocked = h
            .edge_refs()
            .filter(|e| p[e.0] != k)
            .fold(VertexSet::EMPTY, |acc, e| acc.union(h.edge(e)));
        Ok(GoodSetContext {
            h,
            k,
            p,
            f_k,
            f_small,
            blocked,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn profile(&self) -> &[usize] {
        &self.p
    }

    fn fits(&self, size: usize, set_len: usize) -> bool {
        match self.f_small {
            Some((num, den)) => (size as u128) * den <= num * set_len as u128,
            None => Rational::from(size) <= &self.f_k * &Rational::from(set_len),
        }
    }

    fn neighborhood_count(&self, s: VertexSet) -> usize {
        self.h
            .edge_masks()
            .iter()
            .filter(|&&e| e & s.0 != 0)
            .count()
    }

    /// The predicate without building a certificate.
    pub fn is_good(&self, s: VertexSet) -> bool {
        !s.is_empty()
            && !s.intersects(self.blocked)
            && self.fits(self.neighborhood_count(s), s.len())
    }

    pub fn check(&self, s: VertexSet) -> Result<Option<GoodSetCertificate>, GoodSetError> {
        if s.is_empty() {
            return Err(GoodSetError::EmptySet);
        }
        if !s.is_subset(self.h.vertices()) {
            return Err(GoodSetError::OutOfRange(s));
        }
        if !self.is_good(s) {
            return Ok(None);
        }
        let neighborhood = self.h.neighborhood_all(s);
        Ok(Some(GoodSetCertificate {
            set: s,
            k: self.k,
            all_p_equal_k: neighborhood.iter().all(|e| self.p[e.0] == self.k),
            bound: &self.f_k * &Rational::from(s.len()),
            neighborhood,
        }))
    }

    /// Every good set, in increasing bitmask order.
    pub fn enumerate(&self) -> Result<Vec<GoodSetCertificate>, GoodSetError> {
        self.scan_guard()?;
        let mut out = Vec::new();
        self.for_each_good(|s| {
            out.push(self.check(s).expect("valid set").expect("good set"));
            true
        });
        Ok(out)
    }

    /// Calls `visit` on each good set in increasing bitmask order until it
    /// returns `false`. The caller enforces [`SUBSET_SCAN_LIMIT`].
    pub fn for_each_good<F: FnMut(VertexSet) -> bool>(&self, mut visit: F) {
        let allowed = self.h.vertices().difference(self.blocked).0;
        // Enumerate submasks of `allowed` in increasing numeric order.
        let mut s: u64 = 0;
        loop {
            s = (s.wrapping_sub(allowed)) & allowed;
            if s == 0 {
                break;
            }
            let set = VertexSet(s);
            if self.fits(self.neighborhood_count(set), set.len()) && !visit(set) {
                break;
            }
        }
    }

    fn scan_guard(&self) -> Result<(), GoodSetError> {
        if self.h.n() > SUBSET_SCAN_LIMIT {
            return Err(GoodSetError::TooManyVertices {
                n: self.h.n(),
                limit: SUBSET_SCAN_LIMIT,
            });
        }
        Ok(())
    }
}

/// A certificate when `s` is good, `None` when it is not.
pub fn is_good_set(h: &Hypergraph, s: VertexSet) -> Result<Option<GoodSetCertificate>, GoodSetError> {
    GoodSetContext::new(h)?.check(s)
}

/// All good sets of `h` in increasing bitmask order. Requires `n <= 20`.
pub fn enumerate_good_sets(h: &Hypergraph) -> Result<Vec<GoodSetCertificate>, GoodSetError> {
    if h.n() > SUBSET_SCAN_LIMIT {
        return Err(GoodSetError::TooManyVertices {
            n: h.n(),
            limit: SUBSET_SCAN_LIMIT,
        });
    }
    GoodSetContext::new(h)?.enumerate()
}

fn smaller(a: VertexSet, b: VertexSet) -> bool {
    (a.len(), a.0) < (b.len(), b.0)
}

/// Some good set of a connected hypergraph, with the route that found it.
///
/// Routes are tried in order: a `(k+1)`-cycle giving `S = V`; the single
/// edge when `k = 1`; the terminal sets of rotation closures over up to
/// [`ROTATION_PATH_LIMIT`] longest paths (smallest `|S|` wins, then lowest
/// bitmask); finally the smallest set from a full subset scan.
pub fn find_good_set(h: &Hypergraph) -> Result<(GoodSetRoute, GoodSetCertificate), GoodSetError> {
    if !h.is_connected() {
        return Err(GoodSetError::Disconnected);
    }
    let ctx = GoodSetContext::new(h)?;
    let k = ctx.k;

    if search::find_berge_cycle(h, k + 1).is_some() {
        if let Some(c) = ctx.check(h.vertices())? {
            return Ok((GoodSetRoute::SpanningCycle, c));
        }
    }

    if k == 1 {
        let e = h.edge(EdgeRef(0));
        if let Some(c) = ctx.check(e)? {
            return Ok((GoodSetRoute::SingleEdge, c));
        }
    }

    let mut best: Option<VertexSet> = None;
    let mut seen = 0;
    for_each_path_of_length(h, k, |p| {
        let fam = rotation_closure(h, p, p.start()).expect("enumerated paths are valid");
        if ctx.is_good(fam.terminals) && best.map_or(true, |b| smaller(fam.terminals, b)) {
            best = Some(fam.terminals);
        }
        seen += 1;
        seen < ROTATION_PATH_LIMIT
    });
    if let Some(s) = best {
        let c = ctx.check(s)?.expect("checked good");
        return Ok((GoodSetRoute::Rotation, c));
    }

    ctx.scan_guard()?;
    let mut best: Option<VertexSet> = None;
    ctx.for_each_good(|s| {
        if best.map_or(true, |b| smaller(s, b)) {
            best = Some(s);
        }
        true
    });
    match best {
        Some(s) => Ok((GoodSetRoute::SubsetScan, ctx.check(s)?.expect("checked good"))),
        // Unreachable for connected inputs if good sets always exist there;
        // surfaced rather than assumed.
        None => Err(GoodSetError::NoGoodSet),
    }
}

/// The size/neighborhood shapes a good set can take when `1 < k <= r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SmallKPattern {
    /// `k = r`, `|S| = r`, `|N(S)| <= r`.
    RSet,
    /// `k = r`, `|S| >= r + 1`, `|N(S)| <= r + 1`.
    LargeSetAtR,
    /// `k < r`, `|S| >= r + 1`, `|N(S)| <= k`.
    LargeSetBelowR,
    /// `|S| = r - 1`, `|N(S)| = 1`.
    SingleEdgeShadow,
}

/// Every pattern a certificate matches, for uniformity `r`.
pub fn small_k_patterns(r: usize, c: &GoodSetCertificate) -> Vec<SmallKPattern> {
    let (k, s, ns) = (c.k, c.set.len(), c.neighborhood.len());
    let mut out = Vec::new();
    if k == r && s == r && ns <= r {
        out.push(SmallKPattern::RSet);
    }
    if k == r && s > r && ns <= r + 1 {
        out.push(SmallKPattern::LargeSetAtR);
    }
    if k < r && s > r && ns <= k {
        out.push(SmallKPattern::LargeSetBelowR);
    }
    if s + 1 == r && ns == 1 {
        out.push(SmallKPattern::SingleEdgeShadow);
    }
    out
}

/// For `k > r`: some good set is proper (`|S| < n`), or `n = k + 1`.
/// Vacuously true when `k <= r`.
pub fn size_dichotomy_holds(h: &Hypergraph, certs: &[GoodSetCertificate]) -> bool {
    let Some(first) = certs.first() else {
        return false;
    };
    first.k <= h.r() || h.n() == first.k + 1 || certs.iter().any(|c| c.set.len() < h.n())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanningCycleReport {
    pub k: usize,
    pub cycle: Option<BergeCycle>,
    pub pass: bool,
    pub detail: Option<String>,
}

/// If a Berge cycle of length `k + 1` exists, its defining vertices must be
/// all of `V` and every edge must have `p(e) = k`.
pub fn check_spanning_cycle_property(h: &Hypergraph) -> Result<SpanningCycleReport, GoodSetError> {
    if !h.is_connected() {
        return Err(GoodSetError::Disconnected);
    }
    let k = search::longest_length(h);
    let cycle = if k + 1 >= 2 {
        search::find_berge_cycle(h, k + 1)
    } else {
        None
    };
    let mut detail = None;
    if let Some(c) = &cycle {
        if c.vertex_set() != h.vertices() {
            detail = Some(format!(
                "cycle {} misses vertices {:?}",
                c.render(),
                h.vertices().difference(c.vertex_set())
            ));
        } else {
            let p = search::p_edge_all(h);
            if let Some(e) = h.edge_refs().find(|e| p[e.0] != k) {
                detail = Some(format!("edge {e} has p = {} but k = {k}", p[e.0]));
            }
        }
    }
    Ok(SpanningCycleReport {
        k,
        pass: detail.is_none(),
        cycle,
        detail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complete_hypergraph;

    fn hg(n: usize, r: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, r, edges.iter().map(|e| e.iter().copied().collect())).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn predicate_examples() {
        let k5 = complete_hypergraph(5, 3).unwrap();
        let c = is_good_set(&k5, k5.vertices()).unwrap().unwrap();
        assert_eq!(c.neighborhood.len(), 10);
        assert_eq!(c.bound, Rational::from_integer(10));
        assert!(c.all_p_equal_k);

        let single = hg(3, 3, &[&[0, 1, 2]]);
        let c = is_good_set(&single, set(&[0, 1, 2])).unwrap().unwrap();
        assert_eq!((c.k, c.neighborhood.len()), (1, 1));
        assert_eq!(c.bound, Rational::one());

        let chain = hg(5, 3, &[&[0, 1, 2], &[2, 3, 4]]);
        assert_eq!(is_good_set(&chain, set(&[0])).unwrap(), None);
    }

    #[test]
    fn predicate_errors() {
        let single = hg(3, 3, &[&[0, 1, 2]]);
        assert_eq!(is_good_set(&single, VertexSet::EMPTY), Err(GoodSetError::EmptySet));
        assert!(matches!(is_good_set(&single, set(&[5])), Err(GoodSetError::OutOfRange(_))));
        assert_eq!(is_good_set(&hg(3, 3, &[]), set(&[0])), Err(GoodSetError::NoEdges));
        let graph = hg(3, 2, &[&[0, 1]]);
        assert_eq!(is_good_set(&graph, set(&[0])), Err(GoodSetError::UniformityTooSmall(2)));
    }

    #[test]
    fn enumeration_examples() {
        let single = hg(3, 3, &[&[0, 1, 2]]);
        let all = enumerate_good_sets(&single).unwrap();
        assert!(all.iter().any(|c| c.set == set(&[0, 1, 2])));

        let k4 = complete_hypergraph(4, 3).unwrap();
        let all = enumerate_good_sets(&k4).unwrap();
        assert!(all.iter().any(|c| c.set == k4.vertices()));

        let split = hg(6, 3, &[&[0, 1, 2], &[3, 4, 5]]);
        let all = enumerate_good_sets(&split).unwrap();
        assert!(all.iter().any(|c| c.set == set(&[0, 1, 2])));
        let sets: Vec<u64> = all.iter().map(|c| c.set.0).collect();
        let mut sorted = sets.clone();
        sorted.sort();
        assert_eq!(sets, sorted);
    }

    #[test]
    fn enumeration_matches_definition() {
        // Brute force straight from the definition on a few instances.
        for h in [
            hg(5, 3, &[&[0, 1, 2], &[2, 3, 4]]),
            hg(5, 3, &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4]]),
            complete_hypergraph(5, 3).unwrap(),
            hg(6, 4, &[&[0, 1, 2, 3], &[2, 3, 4, 5], &[0, 1, 4, 5]]),
        ] {
            let k = search::longest_length(&h);
            let f = crate::f_r(h.r(), k).unwrap();
            let expected: Vec<u64> = (1u64..1 << h.n())
                .filter(|&s| {
                    let ns = h.neighborhood_all(VertexSet(s));
                    ns.iter().all(|&e| search::p_edge(&h, e) == k)
                        && Rational::from(ns.len()) <= &f * &Rational::from(s.count_ones() as usize)
                })
                .collect();
            let got: Vec<u64> = enumerate_good_sets(&h).unwrap().iter().map(|c| c.set.0).collect();
            assert_eq!(got, expected, "{h}");
        }
    }

    #[test]
    fn find_examples() {
        let k5 = complete_hypergraph(5, 3).unwrap();
        let (route, c) = find_good_set(&k5).unwrap();
        assert_eq!(route, GoodSetRoute::SpanningCycle);
        assert_eq!(c.set, k5.vertices());

        let single = hg(3, 3, &[&[0, 1, 2]]);
        let (route, c) = find_good_set(&single).unwrap();
        assert_eq!(route, GoodSetRoute::SingleEdge);
        assert_eq!(c.set, set(&[0, 1, 2]));

        let chain = hg(5, 3, &[&[0, 1, 2], &[2, 3, 4]]);
        let (_, c) = find_good_set(&chain).unwrap();
        assert!(c.verify(&chain));

        let split = hg(6, 3, &[&[0, 1, 2], &[3, 4, 5]]);
        assert_eq!(find_good_set(&split), Err(GoodSetError::Disconnected));
    }

    #[test]
    fn spanning_cycle_examples() {
        let k4 = complete_hypergraph(4, 3).unwrap();
        let rep = check_spanning_cycle_property(&k4).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.cycle.as_ref().map(|c| c.len()), Some(4));

        let chain = hg(5, 3, &[&[0, 1, 2], &[2, 3, 4]]);
        let rep = check_spanning_cycle_property(&chain).unwrap();
        assert!(rep.pass && rep.cycle.is_none());

        assert!(check_spanning_cycle_property(&complete_hypergraph(5, 3).unwrap()).unwrap().pass);
    }

    #[test]
    fn patterns() {
        let single = hg(3, 3, &[&[0, 1, 2]]);
        let k4 = complete_hypergraph(4, 3).unwrap();
        let c = is_good_set(&k4, k4.vertices()).unwrap().unwrap();
        assert_eq!(small_k_patterns(3, &c), vec![SmallKPattern::LargeSetAtR]);
        assert_eq!(is_good_set(&single, set(&[0, 1])).unwrap(), None);
        let chain = hg(5, 3, &[&[0, 1, 2], &[2, 3, 4]]);
        let c = is_good_set(&chain, set(&[0, 1])).unwrap().unwrap();
        assert_eq!(small_k_patterns(3, &c), vec![SmallKPattern::SingleEdgeShadow]);
    }
}
