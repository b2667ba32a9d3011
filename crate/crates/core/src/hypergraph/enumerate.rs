use super::{Hypergraph, HypergraphError, MAX_VERTICES};

/// Largest candidate-edge count accepted for exhaustive enumeration.
pub const EXHAUSTIVE_EDGE_LIMIT: usize = 30;

const UNIVERSE_LIMIT: u128 = 1 << 22;

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// All `r`-subsets of `0..n` in increasing bitmask order.
fn r_subsets(n: usize, r: usize) -> Vec<u64> {
    if r > n {
        return Vec::new();
    }
    if r == 0 {
        return vec![0];
    }
    // Gosper's hack over u128 so n = 64 does not overflow the successor step.
    let limit: u128 = 1u128 << n;
    let mut out = Vec::new();
    let mut x: u128 = (1u128 << r) - 1;
    while x < limit {
        out.push(x as u64);
        let c = x & x.wrapping_neg();
        let s = x + c;
        x = (((x ^ s) >> 2) / c) | s;
    }
    out
}

/// The `C(n, r)` possible edges on `n` vertices, in canonical order.
/// Instances are addressed by a subset bitmask over this list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeUniverse {
    n: usize,
    r: usize,
    candidates: Vec<u64>,
}

impl EdgeUniverse {
    pub fn new(n: usize, r: usize) -> Result<Self, HypergraphError> {
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices(n));
        }
        if r < 2 {
            return Err(HypergraphError::UniformityTooSmall(r));
        }
        let count = binomial(n as u128, r as u128);
        if count > UNIVERSE_LIMIT {
            return Err(HypergraphError::TooLarge {
                what: "candidate edge count",
                count,
                limit: UNIVERSE_LIMIT,
            });
        }
        Ok(EdgeUniverse {
            n,
            r,
            candidates: r_subsets(n, r),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of candidate edges.
    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn candidates(&self) -> &[u64] {
        &self.candidates
    }

    /// The hypergraph selecting candidate `i` for every set bit `i` of
    /// `subset`. Requires `len() <= 64`.
    pub fn instance(&self, subset: u64) -> Hypergraph {
        assert!(self.candidates.len() <= 64, "subset mask too narrow");
        debug_assert!(self.candidates.len() == 64 || subset >> self.candidates.len() == 0);
        let edges = (0..self.candidates.len())
            .filter(|&i| subset >> i & 1 == 1)
            .map(|i| self.candidates[i])
            .collect();
        Hypergraph::from_sorted_masks(self.n, self.r, edges)
    }

    /// The hypergraph on the candidates at the given increasing positions.
    pub fn instance_from_indices(&self, indices: &[usize]) -> Hypergraph {
        let edges = indices.iter().map(|&i| self.candidates[i]).collect();
        Hypergraph::from_sorted_masks(self.n, self.r, edges)
    }
}

/// `K_n^r`: every `r`-subset of `n` vertices as an edge.
pub fn complete_hypergraph(n: usize, r: usize) -> Result<Hypergraph, HypergraphError> {
    if n < r {
        return Err(HypergraphError::FewerVerticesThanUniformity { n, r });
    }
    let universe = EdgeUniverse::new(n, r)?;
    Ok(Hypergraph::from_sorted_masks(n, r, universe.candidates))
}

/// Every labeled `r`-uniform hypergraph on `n` vertices, in increasing order
/// of the subset bitmask over [`EdgeUniverse`].
pub fn enumerate_hypergraphs(
    n: usize,
    r: usize,
    connected_only: bool,
) -> Result<HypergraphStream, HypergraphError> {
    let universe = EdgeUniverse::new(n, r)?;
    if universe.len() > EXHAUSTIVE_EDGE_LIMIT {
        return Err(HypergraphError::TooLarge {
            what: "exhaustive enumeration candidate edges",
            count: universe.len() as u128,
            limit: EXHAUSTIVE_EDGE_LIMIT as u128,
        });
    }
    let end = 1u64 << universe.len();
    Ok(HypergraphStream {
        universe,
        next: 0,
        end,
        connected_only,
    })
}

/// Iterator returned by [`enumerate_hypergraphs`].
#[derive(Debug, Clone)]
pub struct HypergraphStream {
    universe: EdgeUniverse,
    next: u64,
    end: u64,
    connected_only: bool,
}

impl HypergraphStream {
    pub fn universe(&self) -> &EdgeUniverse {
        &self.universe
    }

    /// Number of subsets in the full (unfiltered) stream.
    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for HypergraphStream {
    type Item = Hypergraph;

    fn next(&mut self) -> Option<Hypergraph> {
        while self.next < self.end {
            let h = self.universe.instance(self.next);
            self.next += 1;
            if !self.connected_only || h.is_connected() {
                return Some(h);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_counts() {
        assert_eq!(complete_hypergraph(4, 3).unwrap().num_edges(), 4);
        assert_eq!(complete_hypergraph(5, 3).unwrap().num_edges(), 10);
        assert_eq!(complete_hypergraph(3, 3).unwrap().num_edges(), 1);
        assert_eq!(complete_hypergraph(64, 2).unwrap().num_edges(), 2016);
        assert!(matches!(
            complete_hypergraph(2, 3),
            Err(HypergraphError::FewerVerticesThanUniformity { .. })
        ));
    }

    #[test]
    fn r_subsets_are_sorted_and_complete() {
        let s = r_subsets(6, 3);
        assert_eq!(s.len(), 20);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        assert!(s.iter().all(|m| m.count_ones() == 3));
        assert_eq!(r_subsets(64, 63).len(), 64);
        assert_eq!(*r_subsets(64, 64).last().unwrap(), u64::MAX);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_hypergraphs(3, 3, false).unwrap().count(), 2);
        assert_eq!(enumerate_hypergraphs(4, 3, false).unwrap().count(), 16);
        assert_eq!(enumerate_hypergraphs(5, 3, false).unwrap().count(), 1024);
    }

    #[test]
    fn enumeration_order_and_filter() {
        let all: Vec<_> = enumerate_hypergraphs(4, 3, false).unwrap().collect();
        assert_eq!(all[0].num_edges(), 0);
        assert_eq!(all[1].edge_lists(), vec![vec![0, 1, 2]]);
        assert_eq!(all[15].num_edges(), 4);
        // On 4 vertices, 3-uniform and connected means at least 2 edges.
        let connected = enumerate_hypergraphs(4, 3, true).unwrap().count();
        assert_eq!(connected, 16 - 1 - 4);
    }

    #[test]
    fn exhaustive_guard() {
        assert!(matches!(
            enumerate_hypergraphs(7, 3, false),
            Err(HypergraphError::TooLarge { .. })
        ));
        // C(6,3) = 20 is fine.
        assert_eq!(enumerate_hypergraphs(6, 3, false).unwrap().total(), 1 << 20);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(64, 32), 1832624140942590534);
    }
}
