//! Fair coalitions and the fair coalition number `C_f`.
//!
//! An fc-partition is a vertex partition in which every class is either a
//! single full vertex, or is not fair dominating but becomes fair dominating
//! together with some other non-FD class.

mod bounds;
mod bruteforce;
mod solver;
mod verify;

use std::time::Duration;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use bounds::{
    lower_bound_from_domatic, upper_bound, upper_bound_connected_claim, DomaticLowerBound,
    LowerBoundError, LowerBoundRoute,
};
pub use bruteforce::{cf_bruteforce, RestrictedGrowth, BRUTEFORCE_MAX_ORDER};
pub use solver::{cf_solve, cf_solve_with, SolveOptions, SOLVER_MAX_ORDER};
pub use verify::{
    is_fair_coalition, verify_fc_partition, CoalitionCheck, CoalitionInputError, FcCertificate,
    Justification, UnionFairness, Violation,
};

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph order {order} exceeds the solver cap of {cap}")]
    OrderAboveCap { order: usize, cap: usize },
}

/// Result of an exact fair coalition computation.
///
/// `value` is 0 only if no fc-partition exists, in which case the witness
/// and certificate are empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    #[serde(rename = "cf")]
    pub value: usize,
    pub witness: Partition,
    pub certificate: FcCertificate,
    pub upper_bound: usize,
    pub lower_bound: usize,
    pub nodes: u64,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}
