//! Executable checks of the characterization: exhaustive enumeration,
//! random generators, per-graph verdicts and the proof-structure diagnostic.

pub mod enumerate;
pub mod proof;
pub mod random;
pub mod verdict;
pub mod verify;

pub use enumerate::{
    canonical_key, dedup_by_isomorphism, enumerate_graphs, graph_from_mask, graphs_up_to_iso,
    labelled_count, MAX_ORDER,
};
pub use proof::{proof_decomposition, BlockId, DichotomyFailure, Part, ProofDecomposition};
pub use random::{gnp_with, random_gnp, random_triangle_free, remove_triangles, rng_from_seed, GraphRng};
pub use verdict::{check_theorem, TheoremVerdict};
pub use verify::{
    has_connected_homogeneous_set, verify_range, Failure, FailureKind, OrderStats, VerifyOptions,
    VerifyReport,
};
