//! Exact fair domination and fair coalition invariants on small graphs.
//!
//! Graphs have at most 64 vertices and vertex sets are single-word bit
//! masks. Everything here is exact search; the practical envelope is a few
//! dozen vertices for domination invariants and about twenty for the fair
//! coalition number.

pub mod catalog;
pub mod closed_forms;
pub mod coalition;
pub mod enumerate;
pub mod fair_domination;
pub mod graph;
pub mod io;
pub mod iso;
pub mod partition;
pub mod reproduce;
pub mod vertex_set;

pub use coalition::{
    cf_bruteforce, cf_solve, cf_solve_with, is_fair_coalition, lower_bound_from_domatic,
    upper_bound, verify_fc_partition, FcCertificate, SolveError, SolveOptions, SolveReport,
};
pub use fair_domination::{
    domination_count, fair_domatic_number, fd_i, fd_status, gamma, gamma_f, min_fd_subset,
    FairDomaticResult, FdStatus,
};
pub use graph::{Graph, GraphError};
pub use iso::is_isomorphic;
pub use partition::Partition;
pub use vertex_set::VertexSet;
