use super::shape::{Cell, FerrersShape};
use super::tableau::TreeLikeTableau;
use super::tree::BinaryTree;
use super::TltError;

/// True iff no 2×3 or 3×2 restriction matches the horizontal or vertical Baxter pattern.
///
/// Horizontal (rows r1 < r2, columns c1 < c2 < c3; `?` is unconstrained):
/// ```text
///   ? ● ·
///   ● · ●
/// ```
/// The vertical pattern is its transpose.
pub fn is_baxter(t: &TreeLikeTableau) -> bool {
    find_pattern(t).is_none()
}

/// First Baxter pattern occurrence as (rows, columns) of its corner cells, if any.
pub fn find_pattern(t: &TreeLikeTableau) -> Option<(Vec<usize>, Vec<usize>)> {
    let p = |r: usize, c: usize| t.is_pointed(Cell::new(r, c));
    let e = |r: usize, c: usize| t.contains(Cell::new(r, c)) && !t.is_pointed(Cell::new(r, c));
    let (k, l) = (t.num_rows(), t.num_cols());
    for r2 in 2..=k {
        for c3 in 3..=t.shape().row_len(r2) {
            if !p(r2, c3) {
                continue;
            }
            for r1 in 1..r2 {
                if !e(r1, c3) {
                    continue;
                }
                for c2 in 2..c3 {
                    if !(p(r1, c2) && e(r2, c2)) {
                        continue;
                    }
                    if let Some(c1) = (1..c2).find(|&c1| p(r2, c1)) {
                        return Some((vec![r1, r2], vec![c1, c2, c3]));
                    }
                }
            }
        }
    }
    for c2 in 2..=l {
        for r3 in 3..=t.shape().col_len(c2) {
            if !p(r3, c2) {
                continue;
            }
            for c1 in 1..c2 {
                if !e(r3, c1) {
                    continue;
                }
                for r2 in 2..r3 {
                    if !(p(r2, c1) && e(r2, c2)) {
                        continue;
                    }
                    if let Some(r1) = (1..r2).find(|&r1| p(r1, c2)) {
                        return Some((vec![r1, r2, r3], vec![c1, c2]));
                    }
                }
            }
        }
    }
    None
}

/// The tree of parent relations: a vertical edge gives a left child, a horizontal one a right child.
pub fn underlying_tree(t: &TreeLikeTableau) -> BinaryTree {
    subtree_at(t, Cell::new(1, 1))
}

fn subtree_at(t: &TreeLikeTableau, c: Cell) -> BinaryTree {
    BinaryTree {
        left: t.point_below(c).map(|d| Box::new(subtree_at(t, d))),
        right: t.point_right(c).map(|d| Box::new(subtree_at(t, d))),
    }
}

/// Points of the subtree rooted at `c`, including `c`.
pub fn subtree_points(t: &TreeLikeTableau, c: Cell) -> Vec<Cell> {
    let mut out = Vec::new();
    let mut stack = vec![c];
    while let Some(d) = stack.pop() {
        out.push(d);
        stack.extend(t.point_below(d));
        stack.extend(t.point_right(d));
    }
    out.sort();
    out
}

/// Points (1-based, relative) and dimensions of the rectangular Baxter tableau of `b`.
pub(crate) fn rectangular_points(b: &BinaryTree) -> (usize, usize, Vec<Cell>) {
    let mut pts = vec![Cell::new(1, 1)];
    let right = b.right.as_deref().map(rectangular_points);
    let left = b.left.as_deref().map(rectangular_points);
    let right_rows = right.as_ref().map_or(1, |r| r.0);
    let left_cols = left.as_ref().map_or(1, |l| l.1);
    let mut rows = right_rows;
    let mut cols = left_cols;
    if let Some((rr, rc, rp)) = right {
        cols += rc;
        debug_assert_eq!(rr, right_rows);
        pts.extend(rp.into_iter().map(|c| Cell::new(c.row, c.col + left_cols)));
    }
    if let Some((lr, _, lp)) = left {
        rows += lr;
        pts.extend(lp.into_iter().map(|c| Cell::new(c.row + right_rows, c.col)));
    }
    pts.sort();
    (rows, cols, pts)
}

/// The rectangular Baxter tableau whose underlying tree is `b`: the left subtree's tableau is
/// placed below and to the left of the right subtree's, the root in the top-left corner.
pub fn rectangular_baxter(b: &BinaryTree) -> TreeLikeTableau {
    let (rows, cols, pts) = rectangular_points(b);
    let shape = FerrersShape::new(vec![cols; rows]).unwrap();
    TreeLikeTableau::new(shape, pts).expect("rectangular construction is a tableau")
}

/// The four blocks cut out by the lines separating the root's left and right subtrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaxterBlocks {
    pub left: Option<TreeLikeTableau>,
    pub right: Option<TreeLikeTableau>,
    /// Row lengths of the SE block; every cell there is a crossing.
    pub crossing_block: Vec<usize>,
    /// Rows of the NE block (above the horizontal line).
    pub split_row: usize,
    /// Columns of the SW block (left of the vertical line).
    pub split_col: usize,
}

/// Splits a Baxter tableau into its SW (left subtree), NE (right subtree) and SE (crossings) blocks.
pub fn decompose(t: &TreeLikeTableau) -> Result<BaxterBlocks, TltError> {
    if !is_baxter(t) {
        return Err(TltError::NotBaxter);
    }
    let root = Cell::new(1, 1);
    let left_pts = t.point_below(root).map(|c| subtree_points(t, c)).unwrap_or_default();
    let right_pts = t.point_right(root).map(|c| subtree_points(t, c)).unwrap_or_default();
    let split_col = left_pts.iter().map(|c| c.col).max().unwrap_or(1);
    let split_row = right_pts.iter().map(|c| c.row).max().unwrap_or(1);
    assert!(
        left_pts.iter().all(|c| c.row > split_row),
        "left subtree not below the right one"
    );
    assert!(
        right_pts.iter().all(|c| c.col > split_col),
        "right subtree not right of the left one"
    );

    let shape = t.shape();
    let block = |rows: std::ops::RangeInclusive<usize>, col_off: usize, col_max: usize| {
        let grid: Vec<Vec<bool>> = rows
            .map(|r| {
                let len = shape.row_len(r).min(col_max).saturating_sub(col_off);
                (1..=len).map(|j| t.is_pointed(Cell::new(r, j + col_off))).collect()
            })
            .filter(|row: &Vec<bool>| !row.is_empty())
            .collect();
        grid
    };
    let left = (!left_pts.is_empty()).then(|| {
        TreeLikeTableau::from_grid(block(split_row + 1..=t.num_rows(), 0, split_col)).expect("SW block is a tableau")
    });
    let right = (!right_pts.is_empty()).then(|| {
        TreeLikeTableau::from_grid(block(1..=split_row, split_col, usize::MAX)).expect("NE block is a tableau")
    });
    for r in 1..=split_row {
        for j in 1..=split_col.min(shape.row_len(r)) {
            let c = Cell::new(r, j);
            assert!(
                c == root || !t.is_pointed(c),
                "NW block holds a point other than the root"
            );
        }
    }
    let crossings = t.crossings();
    let mut crossing_block = Vec::new();
    for r in split_row + 1..=t.num_rows() {
        let len = shape.row_len(r).saturating_sub(split_col);
        if len == 0 {
            break;
        }
        for j in split_col + 1..=shape.row_len(r) {
            assert!(
                crossings.contains(&Cell::new(r, j)),
                "SE block cell ({r},{j}) is not a crossing"
            );
        }
        crossing_block.push(len);
    }
    Ok(BaxterBlocks {
        left,
        right,
        crossing_block,
        split_row,
        split_col,
    })
}

impl BaxterBlocks {
    /// Reassembles the tableau from its blocks.
    pub fn assemble(&self) -> Result<TreeLikeTableau, TltError> {
        let left_rows = self.left.as_ref().map_or(0, |l| l.num_rows());
        let mut grid: Vec<Vec<bool>> = Vec::new();
        for r in 1..=self.split_row {
            let mut row = vec![false; self.split_col];
            if let Some(rt) = &self.right {
                row.extend_from_slice(&rt.grid()[r - 1]);
            }
            grid.push(row);
        }
        grid[0][0] = true;
        for r in 1..=left_rows {
            let mut row = self.left.as_ref().unwrap().grid()[r - 1].clone();
            if let Some(&extra) = self.crossing_block.get(r - 1) {
                row.extend(std::iter::repeat_n(false, extra));
            }
            grid.push(row);
        }
        TreeLikeTableau::from_grid(grid)
    }
}

/// Underlying tree is complete.
pub fn is_complete(t: &TreeLikeTableau) -> Result<bool, TltError> {
    if !is_baxter(t) {
        return Err(TltError::NotBaxter);
    }
    Ok(underlying_tree(t).is_complete())
}

/// Underlying tree is a complete tree minus its leftmost leaf (even size) or minus its leftmost
/// and rightmost leaves (odd size).
pub fn is_almost_complete(t: &TreeLikeTableau) -> Result<bool, TltError> {
    if !is_baxter(t) {
        return Err(TltError::NotBaxter);
    }
    Ok(almost_complete_tree(&underlying_tree(t)))
}

pub(crate) fn almost_complete_tree(b: &BinaryTree) -> bool {
    let mut c = b.with_leftmost_leaf();
    if b.size() % 2 == 1 {
        c = c.with_rightmost_leaf();
    }
    c.is_complete()
}

/// Points with no child in the underlying tree.
pub fn leaves(t: &TreeLikeTableau) -> Vec<Cell> {
    t.points()
        .into_iter()
        .filter(|&c| t.point_below(c).is_none() && t.point_right(c).is_none())
        .collect()
}

/// Cells of the SW–NE diagonal starting at the lowest point of column 1, while inside the shape.
pub fn staircase_diagonal(t: &TreeLikeTableau) -> Vec<Cell> {
    let bottom = (1..=t.shape().col_len(1))
        .rev()
        .find(|&r| t.is_pointed(Cell::new(r, 1)))
        .unwrap();
    (0..bottom)
        .map(|d| Cell::new(bottom - d, 1 + d))
        .take_while(|&c| t.contains(c))
        .collect()
}
