//! Exact Berge-path search on small uniform hypergraphs.
//!
//! The crate computes longest Berge paths and cycles, the per-edge weight
//! `p(e)` (longest Berge path through `e`), the localized Erdős–Gallai sum
//! `Σ 1/f_r(p(e))` in exact rational arithmetic, good sets and path
//! rotation closures, exact Turán numbers for Berge paths, and exhaustive
//! or sampled verification sweeps over all small labeled instances.

pub mod goodset;
pub mod hypergraph;
pub mod rational;
pub mod search;
pub mod verify;
pub mod weights;

pub use goodset::{
    check_spanning_cycle_property, enumerate_good_sets, find_good_set, is_good_set,
    rotation_closure, GoodSetCertificate, GoodSetError, GoodSetRoute, RotationFamily,
    SpanningCycleReport,
};
pub use hypergraph::{
    complete_hypergraph, enumerate_hypergraphs, EdgeRef, Hypergraph, HypergraphError,
    SubHypergraph, VertexSet, MAX_VERTICES,
};
pub use rational::Rational;
pub use search::{
    find_berge_cycle, longest_berge_path, oracle_longest_path, p_edge, BergeCycle, BergePath,
    PathQuery,
};
pub use verify::{run_sweep, Check, SweepConfig, SweepMode, SweepReport};
pub use weights::{f_r, gap_check, turan_exact, weight_report, Classification, WeightReport};
