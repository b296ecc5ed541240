//! Permutations, bivincular patterns, and the iso-labeling bijection with tree-like tableaux.

mod labeling;
mod pattern;
mod permutation;
mod stats;

pub use labeling::{crossing_pattern_correspondence, iso_labeling, phi, phi_inverse, CrossingOccurrence, IsoLabeling};
pub use pattern::{avoids, occurrences, BivincularPattern, Occurrence};
pub use permutation::Permutation;
pub use stats::{
    ascents, descents, extremal_factors, in_b, in_b_via_inverse, is_alternating_up, left_to_right_minima, Factor,
    FactorKind,
};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("{0:?} is not a permutation of 1..n")]
    NotAPermutation(Vec<usize>),
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PatternError {
    #[error("pattern syntax: {0}")]
    Syntax(String),
    #[error("pattern {0:?} does not describe a permutation")]
    NotAPermutation(String),
}
