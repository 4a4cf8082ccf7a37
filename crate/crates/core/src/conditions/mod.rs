//! The polynomiality condition on `(f, g)`, its `beta`-modified form, and
//! exhaustive polynomial solvers for it.

mod residual;
mod riccati;
mod search;

use thiserror::Error;

use crate::polyring::PolyError;

pub use residual::{
    g_from_u, modified_residual, star_residual, theorem2_solutions, ResidualReport,
};
pub use riccati::{
    riccati_descent, riccati_descent_star, riccati_lhs, ContradictionTrace, RiccatiSolutionSet,
};
pub use search::{
    modified_evidence_search, CandidateSource, DegreeEvidence, EvidenceReport, FoundPair,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConditionError {
    #[error("f is the zero polynomial; only g = 0 satisfies the condition")]
    ZeroF,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("solution set contains a one-parameter family ({0})")]
    InfiniteFamily(String),
    #[error("descent case not handled: {0}")]
    Unsupported(String),
    #[error("invalid search range: {0}")]
    SearchRange(String),
}
