//! Registry of statements, each bound to a bounded exhaustive search and
//! reported through a uniform [`ClaimOutcome`].
//!
//! A statement that survives its search is reported as
//! [`ClaimStatus::HoldsUpToBound`] together with the exact number of
//! candidates examined, which must equal the closed-form size of the
//! bounded space.

pub mod coverage;
mod params;
mod registry;
mod run;

pub use params::ClaimParams;
pub use registry::{claim_info, list_claims, ClaimId, ClaimInfo, ParamKind, ParamSpec, Profile};
pub use run::{run_claim, run_claim_partitioned, run_suite, ClaimOutcome, ClaimRun, ClaimStats, ClaimStatus};
