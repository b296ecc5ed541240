//! Tree-like tableaux: validation, point removal and its labelings, the Baxter subclass,
//! block decomposition and exhaustive generators.

mod baxter;
mod enumerate;
mod removal;
mod shape;
mod tableau;
mod tree;

use std::fmt;

pub(crate) use baxter::rectangular_points;
pub use baxter::{
    decompose, find_pattern, is_almost_complete, is_baxter, is_complete, leaves, rectangular_baxter,
    staircase_diagonal, subtree_points, underlying_tree, BaxterBlocks,
};
pub use enumerate::{brute_force_tlts, enumerate_baxter_tlts, enumerate_tlts, shapes_in_box};
pub use removal::{expansions, removal_trace, remove_point, RemovalMode, RemovalStep, RemovalTrace, Ribbon};
pub use shape::{Cell, FerrersShape};
pub use tableau::TreeLikeTableau;
pub use tree::BinaryTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Line {
    Row(usize),
    Column(usize),
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row(r) => write!(f, "row {r}"),
            Line::Column(c) => write!(f, "column {c}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, thiserror::Error)]
pub enum TltError {
    #[error("row lengths do not form a Ferrers shape")]
    InvalidShape,
    #[error("cell {0} lies outside the shape")]
    CellOutsideShape(Cell),
    #[error("cell (1,1) is not pointed")]
    RootMissing,
    #[error("point {0} has a point both above it and to its left")]
    ParentAmbiguous(Cell),
    #[error("point {0} has no point above it or to its left")]
    ParentMissing(Cell),
    #[error("{0} holds no point")]
    EmptyRowOrColumn(Line),
    #[error("the size-1 tableau has no removable point")]
    SizeOne,
    #[error("tableau is not Baxter")]
    NotBaxter,
}
