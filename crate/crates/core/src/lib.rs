//! Baxter-enumerated families and the bijections between them.
//!
//! * [`tlt`]: tree-like tableaux and their Baxter subclass.
//! * [`perm`]: permutations, bivincular patterns and the labeling bijection with tableaux.
//! * [`floorplan`]: packed floorplans, mosaic floorplans and packing.
//! * [`nilp`]: triples of non-intersecting lattice paths and LGV counting.
//! * [`census`]: number sequences, cross-family verification and experiments.

pub mod census;
pub mod floorplan;
pub mod nilp;
pub mod perm;
pub mod tlt;
