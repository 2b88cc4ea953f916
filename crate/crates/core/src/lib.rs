//! Exact and floating tools for counting signless Laplacian eigenvalues of
//! simple graphs in intervals, computing the graph invariants those counts
//! are compared against, and checking the resulting inequalities over
//! exhaustive and sampled graph streams.
//!
//! The exact counter is authoritative: `Q(G)` is an integer matrix, so the
//! number of eigenvalues below a rational threshold is the negative inertia
//! of a shifted integer matrix and needs no rounding.

pub mod eigen;
pub mod exact;
pub mod graph;
pub mod invariants;
pub mod spectral;
pub mod verify;

pub use eigen::{eigenvalues_sym, EigenError, Spectrum, SymMatrix};
pub use exact::{
    char_poly_eval, count_le, count_lt, inertia, is_equitable, quotient_matrix, Inertia, LinalgError, Partition,
    Rational, RationalMatrix, RationalSymMatrix,
};
pub use graph::{graph6_decode, graph6_encode, make_family, FamilyKind, FamilySpec, Graph, GraphError};
pub use invariants::InvariantBundle;
pub use spectral::{m_count, Interval};
pub use verify::{TheoremId, TheoremReport};
