//! Packed floorplans, their bijection with Baxter tableaux, and packing of general floorplans.
//!
//! Coordinates use a top-left origin with `y` growing downward, so the cell `(row, col)` of a
//! tableau is the unit square with top-left corner `(col - 1, row - 1)`.

mod bijection;
mod enumerate;
mod pack;
mod tiles;

pub use bijection::{is_alternating, phi_f, psi_f, tile_order};
pub use enumerate::{brute_force_floorplans, enumerate_pfps, partitions};
pub use pack::{count_forbidden_pairs, pack, pack_with_trace, JunctionKind, PackStep, PackTrace};
pub use tiles::{
    forms_pattern, segments, validate_floorplan, validate_pfp, Floorplan, Orientation, PackedFloorplan, Segment, Tile,
};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FloorplanError {
    #[error("tile {0} has zero width or height")]
    EmptyTile(Tile),
    #[error("tile {0} leaves the bounding rectangle")]
    OutOfBounds(Tile),
    #[error("tiles {0} and {1} overlap")]
    Overlap(Tile, Tile),
    #[error("unit square at ({0},{1}) is not covered")]
    Gap(usize, usize),
    #[error("expected {expected} tiles, found {found}")]
    WrongTileCount { expected: usize, found: usize },
    #[error("tiles {0} and {1} form the forbidden pattern")]
    ForbiddenPattern(Tile, Tile),
    #[error("four tiles meet at ({0},{1})")]
    CrossJunction(usize, usize),
    #[error("tile corners at ({0},{1}) do not form a T-junction")]
    FlushJunction(usize, usize),
    #[error("tableau is not Baxter")]
    NotBaxter,
    #[error("tile of label {0} is not a rectangle")]
    NonRectangularTile(usize),
    #[error("not a floorplan: {0}")]
    NotAFloorplan(Box<FloorplanError>),
    #[error("sliding step met an unsupported configuration at tiles {0} and {1}")]
    UnsupportedConfiguration(Tile, Tile),
}
