//! The theorem catalog: per-graph checkers, parameter-grid checkers, an
//! exhaustive labeled enumerator, a seeded sampler and sweep drivers.
//!
//! Every count compared against a bound comes from exact inertia. Floating
//! spectra appear only in interlacing-type chains, where they are checked
//! with `1e-8` slack next to an exact counterpart at integer thresholds.

mod catalog;
mod checks;
mod enumerate;
mod grids;
mod report;
mod snapshot;
mod sweep;

pub use catalog::{TheoremId, TheoremKind};
pub use checks::{
    check_alpha_sandwich, check_diameter_main, check_dia3_graph, check_domination_bound, check_edge_interlacing,
    check_graph, check_high_index_bound, check_intro_bounds, check_longest_path, check_m02_bound,
    check_matching_upper, check_solver_agreement, check_vertex_deletion, GUARD_BAND,
};
pub use enumerate::{enumerate_graphs, sample_graphs, EnumerationFilter, EXHAUSTIVE_LIMIT, SAMPLE_RANGE};
pub use grids::{
    check_closed_form, check_cycle_matching, check_dia3, check_family_lemmas, check_g6321, check_gn32a_spectrum,
    check_gn3t1_q5, check_laplacian_remark, check_path_bound, default_grid_range, grid_instances, run_grid, ClosedFamily, GridInstance,
};
pub use report::{Instance, Status, TheoremReport};
pub use snapshot::{Context, LevelTable, SnapView, Snapshot};
pub use sweep::{
    search_counterexamples, sweep_exhaustive, sweep_sampled, with_jobs, SweepMode, SweepSummary,
    MAX_STORED_FAILURES,
};

use thiserror::Error;

use crate::eigen::EigenError;
use crate::exact::LinalgError;
use crate::graph::GraphError;
use crate::invariants::InvariantError;
use crate::spectral::SpectralError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("`{0}` is checked on {1}, not on this input")]
    WrongKind(TheoremId, &'static str),
    #[error("exhaustive enumeration is limited to n <= {limit}, got n = {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("sampling needs {min} <= n <= {max}, got n = {n}")]
    SampleRange { n: usize, min: usize, max: usize },
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("thread pool: {0}")]
    Pool(String),
}
