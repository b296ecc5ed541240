//! Number sequences, exhaustive cross-family verification, and the split experiment.

pub mod conjecture;
mod sequences;
mod verify;

pub use conjecture::{conjecture_experiment, conjecture_split, ExperimentReport};
pub use sequences::{alternating_count, baxter_number, catalan, SequenceTable};
pub use verify::{verify_all, Check, Status, VerificationReport};

use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CensusError {
    #[error("{0} is not an alternating-up permutation of the Baxter class")]
    PreconditionViolated(Permutation),
}
