//! Brute-force reference for the path search.
//!
//! Every ordered sequence of distinct edges is generated, and for each one
//! every vertex assignment `v_0 ∈ e_1`, `v_i ∈ e_i ∩ e_{i+1}`, `v_k ∈ e_k`
//! is tried until one with distinct vertices is found. There is no
//! length bound and nothing is shared with the main search.

use thiserror::Error;

use crate::hypergraph::Hypergraph;

use super::PathQuery;

/// Largest edge count the oracle accepts (`8!`-scale enumeration).
pub const ORACLE_EDGE_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle limited to {limit} edges, hypergraph has {edges}")]
    TooLarge { edges: usize, limit: usize },
}

fn guard(h: &Hypergraph) -> Result<(), OracleError> {
    if h.num_edges() > ORACLE_EDGE_LIMIT {
        return Err(OracleError::TooLarge {
            edges: h.num_edges(),
            limit: ORACLE_EDGE_LIMIT,
        });
    }
    Ok(())
}

/// Is there an assignment of distinct vertices to `seq`, optionally with
/// `v_0 = start`?
fn assignable(masks: &[u64], seq: &[usize], start: Option<usize>) -> bool {
    // Slot i holds v_i; slot 0 ranges over e_1, the last over e_k, and the
    // inner slots over consecutive intersections.
    let k = seq.len();
    let mut slots = [0u64; ORACLE_EDGE_LIMIT + 1];
    slots[0] = masks[seq[0]];
    if let Some(s) = start {
        slots[0] &= 1u64 << s;
    }
    for i in 1..k {
        slots[i] = masks[seq[i - 1]] & masks[seq[i]];
    }
    slots[k] = masks[seq[k - 1]];

    fn pick(slots: &[u64], i: usize, chosen: u64) -> bool {
        if i == slots.len() {
            return true;
        }
        let mut options = slots[i] & !chosen;
        while options != 0 {
            let bit = options & options.wrapping_neg();
            options ^= bit;
            if pick(slots, i + 1, chosen | bit) {
                return true;
            }
        }
        false
    }
    pick(&slots[..=k], 0, 0)
}

/// Visits every ordered sequence of distinct edges (including the empty one).
fn for_each_sequence<F: FnMut(&[usize])>(m: usize, mut visit: F) {
    fn rec<F: FnMut(&[usize])>(m: usize, seq: &mut Vec<usize>, used: &mut [bool], visit: &mut F) {
        visit(seq);
        for e in 0..m {
            if used[e] {
                continue;
            }
            used[e] = true;
            seq.push(e);
            rec(m, seq, used, visit);
            seq.pop();
            used[e] = false;
        }
    }
    rec(m, &mut Vec::new(), &mut vec![false; m], &mut visit);
}

/// Maximum length of a path satisfying `q` (exactly `q.target_length` when
/// set), or `None` if no path qualifies.
pub fn oracle_longest_path(h: &Hypergraph, q: &PathQuery) -> Result<Option<usize>, OracleError> {
    guard(h)?;
    let masks = h.edge_masks();
    let mut best: Option<usize> = None;
    let mut consider = |len: usize| {
        if q.target_length.map_or(true, |t| t == len) {
            best = Some(best.map_or(len, |b| b.max(len)));
        }
    };
    if h.n() > 0 && q.required_edge.is_none() {
        consider(0);
    }
    for_each_sequence(masks.len(), |seq| {
        if seq.is_empty() {
            return;
        }
        if let Some(e) = q.required_edge {
            if !seq.contains(&e.0) {
                return;
            }
        }
        if assignable(masks, seq, q.required_start) {
            consider(seq.len());
        }
    });
    Ok(best)
}

/// Longest path length and `p(e)` for every edge from one enumeration.
pub fn oracle_profile(h: &Hypergraph) -> Result<(usize, Vec<usize>), OracleError> {
    guard(h)?;
    let masks = h.edge_masks();
    let mut longest = 0;
    let mut p = vec![0usize; masks.len()];
    for_each_sequence(masks.len(), |seq| {
        if seq.is_empty() || !assignable(masks, seq, None) {
            return;
        }
        longest = longest.max(seq.len());
        for &e in seq {
            p[e] = p[e].max(seq.len());
        }
    });
    Ok((longest, p))
}
