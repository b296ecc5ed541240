use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::shape::{Cell, FerrersShape};
use super::{Line, TltError};

/// A Ferrers diagram with pointed cells satisfying the tree-like conditions.
///
/// Values are only built through [`TreeLikeTableau::new`], so every instance is valid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TltJson", into = "TltJson")]
pub struct TreeLikeTableau {
    shape: FerrersShape,
    grid: Vec<Vec<bool>>,
}

#[derive(Serialize, Deserialize)]
struct TltJson {
    shape: Vec<usize>,
    points: Vec<(usize, usize)>,
}

impl TryFrom<TltJson> for TreeLikeTableau {
    type Error = TltError;

    fn try_from(j: TltJson) -> Result<Self, TltError> {
        let shape = FerrersShape::new(j.shape).ok_or(TltError::InvalidShape)?;
        TreeLikeTableau::new(shape, j.points.into_iter().map(Cell::from))
    }
}

impl From<TreeLikeTableau> for TltJson {
    fn from(t: TreeLikeTableau) -> Self {
        TltJson {
            points: t.points().into_iter().map(Into::into).collect(),
            shape: t.shape.rows().to_vec(),
        }
    }
}

impl TreeLikeTableau {
    /// Validates `points` on `shape` and builds the tableau.
    pub fn new(shape: FerrersShape, points: impl IntoIterator<Item = Cell>) -> Result<Self, TltError> {
        let mut grid: Vec<Vec<bool>> = shape.rows().iter().map(|&len| vec![false; len]).collect();
        let points: BTreeSet<Cell> = points.into_iter().collect();
        for &c in &points {
            if !shape.contains(c) {
                return Err(TltError::CellOutsideShape(c));
            }
            grid[c.row - 1][c.col - 1] = true;
        }
        let t = TreeLikeTableau { shape, grid };
        t.check()?;
        Ok(t)
    }

    /// Builds from a point grid already known to be valid; checked in debug builds.
    pub(crate) fn from_grid_unchecked(shape: FerrersShape, grid: Vec<Vec<bool>>) -> Self {
        let t = TreeLikeTableau { shape, grid };
        debug_assert!(t.check().is_ok(), "invalid tableau built internally: {t:?}");
        t
    }

    /// Builds from a pointed grid whose row lengths define the shape.
    pub(crate) fn from_grid(grid: Vec<Vec<bool>>) -> Result<Self, TltError> {
        let shape = FerrersShape::new(grid.iter().map(Vec::len).collect()).ok_or(TltError::InvalidShape)?;
        let t = TreeLikeTableau { shape, grid };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<(), TltError> {
        if !self.grid[0][0] {
            return Err(TltError::RootMissing);
        }
        for c in self.points() {
            if c == Cell::new(1, 1) {
                continue;
            }
            match (self.point_above(c).is_some(), self.point_left(c).is_some()) {
                (true, true) => return Err(TltError::ParentAmbiguous(c)),
                (false, false) => return Err(TltError::ParentMissing(c)),
                _ => {}
            }
        }
        for (i, row) in self.grid.iter().enumerate() {
            if !row.iter().any(|&p| p) {
                return Err(TltError::EmptyRowOrColumn(Line::Row(i + 1)));
            }
        }
        for j in 1..=self.shape.num_cols() {
            if !(1..=self.shape.col_len(j)).any(|i| self.grid[i - 1][j - 1]) {
                return Err(TltError::EmptyRowOrColumn(Line::Column(j)));
            }
        }
        debug_assert_eq!(self.size(), self.shape.semi_perimeter() - 1);
        Ok(())
    }

    /// The unique tableau of size 1.
    pub fn singleton() -> Self {
        TreeLikeTableau {
            shape: FerrersShape::new(vec![1]).unwrap(),
            grid: vec![vec![true]],
        }
    }

    pub fn shape(&self) -> &FerrersShape {
        &self.shape
    }

    pub(crate) fn grid(&self) -> &[Vec<bool>] {
        &self.grid
    }

    pub fn num_rows(&self) -> usize {
        self.shape.num_rows()
    }

    pub fn num_cols(&self) -> usize {
        self.shape.num_cols()
    }

    pub fn size(&self) -> usize {
        self.grid.iter().map(|r| r.iter().filter(|&&p| p).count()).sum()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.shape.contains(c)
    }

    pub fn is_pointed(&self, c: Cell) -> bool {
        self.contains(c) && self.grid[c.row - 1][c.col - 1]
    }

    /// Pointed cells in lexicographic (row, column) order.
    pub fn points(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, row) in self.grid.iter().enumerate() {
            for (j, &p) in row.iter().enumerate() {
                if p {
                    out.push(Cell::new(i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn point_above(&self, c: Cell) -> Option<Cell> {
        (1..c.row)
            .rev()
            .map(|r| Cell::new(r, c.col))
            .find(|&d| self.is_pointed(d))
    }

    pub fn point_left(&self, c: Cell) -> Option<Cell> {
        (1..c.col)
            .rev()
            .map(|j| Cell::new(c.row, j))
            .find(|&d| self.is_pointed(d))
    }

    pub fn point_below(&self, c: Cell) -> Option<Cell> {
        (c.row + 1..=self.shape.col_len(c.col))
            .map(|r| Cell::new(r, c.col))
            .find(|&d| self.is_pointed(d))
    }

    pub fn point_right(&self, c: Cell) -> Option<Cell> {
        (c.col + 1..=self.shape.row_len(c.row))
            .map(|j| Cell::new(c.row, j))
            .find(|&d| self.is_pointed(d))
    }

    /// Parent of a non-root point, `None` for the root.
    pub fn parent(&self, c: Cell) -> Option<Cell> {
        self.point_above(c).or_else(|| self.point_left(c))
    }

    pub fn points_in_col(&self, col: usize) -> usize {
        (1..=self.shape.col_len(col))
            .filter(|&r| self.grid[r - 1][col - 1])
            .count()
    }

    pub fn points_in_row(&self, row: usize) -> usize {
        self.grid[row - 1].iter().filter(|&&p| p).count()
    }

    /// The point in the bottom cell of its column, rightmost among all such points.
    pub fn special_point(&self) -> Cell {
        (1..=self.num_cols())
            .rev()
            .map(|j| Cell::new(self.shape.col_len(j), j))
            .find(|&c| self.is_pointed(c))
            .expect("the bottom row of a tableau always holds a point")
    }

    /// Empty cells with a point above in their column and a point left in their row.
    pub fn crossings(&self) -> Vec<Cell> {
        self.shape
            .cells()
            .filter(|&c| !self.is_pointed(c) && self.point_above(c).is_some() && self.point_left(c).is_some())
            .collect()
    }

    /// 1-based index of `c` in the SE border reading, if `c` is a border cell.
    pub fn border_position(&self, c: Cell) -> Option<usize> {
        self.shape.border_cells().iter().position(|&d| d == c).map(|i| i + 1)
    }
}

impl PartialOrd for TreeLikeTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: shape as an integer list, then the sorted point list.
impl Ord for TreeLikeTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| self.points().cmp(&other.points()))
    }
}

impl fmt::Display for TreeLikeTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.grid {
            let line: Vec<&str> = row.iter().map(|&p| if p { "●" } else { "·" }).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
