use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::shape::{Cell, FerrersShape};
use super::tableau::TreeLikeTableau;
use super::TltError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RemovalMode {
    /// The special point had no point to its left; its row is deleted.
    Row,
    /// The special point had no point above it; its column is deleted.
    Column,
}

/// Empty border cells removed along with a special point, listed SW to NE.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ribbon {
    pub cells: Vec<Cell>,
    pub ins_label: usize,
}

/// One application of `remove_point`. Cells are given in the coordinates of the tableau
/// the removal sequence started from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemovalStep {
    pub special_point: Cell,
    pub mode: RemovalMode,
    pub ribbon: Option<Ribbon>,
    pub resulting_shape: FerrersShape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemovalTrace {
    pub steps: Vec<RemovalStep>,
    pub point_labels: BTreeMap<Cell, usize>,
    pub ins_labels: BTreeMap<Cell, usize>,
}

#[derive(Clone, Copy)]
struct Slot {
    orig: Cell,
    pointed: bool,
}

/// Working copy of a tableau whose cells remember their original coordinates.
struct Board {
    rows: Vec<Vec<Slot>>,
}

impl Board {
    fn new(t: &TreeLikeTableau) -> Self {
        let rows = t
            .grid()
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &pointed)| Slot {
                        orig: Cell::new(i + 1, j + 1),
                        pointed,
                    })
                    .collect()
            })
            .collect();
        Board { rows }
    }

    fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.rows.get(r - 1).map_or(0, Vec::len)
    }

    fn col_len(&self, c: usize) -> usize {
        self.rows.iter().take_while(|row| row.len() >= c).count()
    }

    fn contains(&self, r: usize, c: usize) -> bool {
        r >= 1 && c >= 1 && c <= self.row_len(r)
    }

    fn slot(&self, r: usize, c: usize) -> Slot {
        self.rows[r - 1][c - 1]
    }

    fn shape(&self) -> FerrersShape {
        FerrersShape::new(self.rows.iter().map(Vec::len).collect()).expect("removal keeps a Ferrers shape")
    }

    fn to_tableau(&self) -> TreeLikeTableau {
        let grid = self
            .rows
            .iter()
            .map(|row| row.iter().map(|s| s.pointed).collect())
            .collect();
        TreeLikeTableau::from_grid_unchecked(self.shape(), grid)
    }

    /// Removes the special point, returning it, the mode and the ribbon (original coordinates).
    fn remove_special(&mut self) -> (Cell, RemovalMode, Vec<Cell>) {
        let ncols = self.row_len(1);
        let (i, j) = (1..=ncols)
            .rev()
            .map(|j| (self.col_len(j), j))
            .find(|&(i, j)| self.slot(i, j).pointed)
            .expect("special point exists");
        let special = self.slot(i, j).orig;
        let point_above = (1..i).any(|r| self.slot(r, j).pointed);
        let mode = if point_above {
            RemovalMode::Row
        } else {
            RemovalMode::Column
        };

        // Ribbon: from the cell right of s along the SE border until a point is met from below.
        let mut ribbon: Vec<(usize, usize)> = Vec::new();
        if self.contains(i, j + 1) {
            let (mut r, mut c) = (i, j + 1);
            loop {
                assert!(!self.slot(r, c).pointed, "ribbon cell ({r},{c}) is pointed");
                ribbon.push((r, c));
                if self.contains(r, c + 1) {
                    c += 1;
                } else {
                    assert!(r > 1, "ribbon left the diagram without meeting a point");
                    r -= 1;
                    if self.slot(r, c).pointed {
                        break;
                    }
                }
            }
        }
        let ribbon_orig: Vec<Cell> = ribbon.iter().map(|&(r, c)| self.slot(r, c).orig).collect();

        // Ribbon cells form a suffix of each row they meet.
        let mut cut: BTreeMap<usize, usize> = BTreeMap::new();
        for &(r, c) in &ribbon {
            let e = cut.entry(r).or_insert(c);
            *e = (*e).min(c);
        }
        for (&r, &c) in &cut {
            debug_assert_eq!(ribbon.iter().filter(|x| x.0 == r).count(), self.row_len(r) - c + 1);
            self.rows[r - 1].truncate(c - 1);
        }
        match mode {
            RemovalMode::Column => {
                for r in 1..=i {
                    self.rows[r - 1].remove(j - 1);
                }
            }
            RemovalMode::Row => {
                debug_assert!((1..j).all(|c| !self.slot(i, c).pointed));
                self.rows.remove(i - 1);
            }
        }
        (special, mode, ribbon_orig)
    }
}

/// Removes the special point of `t` together with its row or column and its ribbon.
pub fn remove_point(t: &TreeLikeTableau) -> Result<(TreeLikeTableau, RemovalStep), TltError> {
    let n = t.size();
    if n == 1 {
        return Err(TltError::SizeOne);
    }
    let mut board = Board::new(t);
    let (special_point, mode, cells) = board.remove_special();
    let ribbon = (!cells.is_empty()).then_some(Ribbon { cells, ins_label: n });
    let step = RemovalStep {
        special_point,
        mode,
        ribbon,
        resulting_shape: board.shape(),
    };
    Ok((board.to_tableau(), step))
}

/// Removes points down to the singleton, recording point labels and ins-labels.
pub fn removal_trace(t: &TreeLikeTableau) -> RemovalTrace {
    let mut board = Board::new(t);
    let mut steps = Vec::new();
    let mut point_labels = BTreeMap::new();
    let mut ins_labels = BTreeMap::new();
    for i in (2..=t.size()).rev() {
        let (special_point, mode, cells) = board.remove_special();
        point_labels.insert(special_point, i);
        for &c in &cells {
            ins_labels.insert(c, i);
        }
        let ribbon = (!cells.is_empty()).then_some(Ribbon { cells, ins_label: i });
        steps.push(RemovalStep {
            special_point,
            mode,
            ribbon,
            resulting_shape: board.shape(),
        });
    }
    point_labels.insert(board.slot(1, 1).orig, 1);
    RemovalTrace {
        steps,
        point_labels,
        ins_labels,
    }
}

/// Outer rim of a shape given by row lengths: cells just outside the SE border, SW to NE.
fn outer_rim(rows: &[usize]) -> Vec<(usize, usize)> {
    let k = rows.len();
    let len = |a: usize| {
        if a == 0 {
            rows[0]
        } else {
            rows.get(a - 1).copied().unwrap_or(0)
        }
    };
    let mut rim = Vec::new();
    for a in (1..=k + 1).rev() {
        for b in len(a) + 1..=len(a - 1) + 1 {
            rim.push((a, b));
        }
    }
    rim
}

/// Every tableau `t` with `remove_point(t) == parent`, in canonical order.
///
/// Candidates insert a fresh column (point at the bottom) or a fresh row (point at the right
/// end) and optionally pad the result with a ribbon along the outer rim; each candidate is kept
/// only if removing its special point gives back `parent`.
pub fn expansions(parent: &TreeLikeTableau) -> Vec<TreeLikeTableau> {
    let old: Vec<Vec<bool>> = parent.grid().to_vec();
    let k = old.len();
    let old_len = |r: usize| {
        if r >= 1 && r <= k {
            old[r - 1].len()
        } else {
            0
        }
    };
    let old_col = |c: usize| {
        if c == 0 {
            usize::MAX
        } else {
            parent.shape().col_len(c)
        }
    };
    let ncols = parent.num_cols();
    let mut found = BTreeSet::new();

    let mut consider = |u: Vec<Vec<bool>>, i: usize, j: usize| {
        let lens: Vec<usize> = u.iter().map(Vec::len).collect();
        let rim = outer_rim(&lens);
        let start = rim.iter().position(|&c| c == (i, j + 1));
        let mut options = vec![0];
        if let Some(start) = start {
            for l in 1..=rim.len() - start {
                let (a, b) = rim[start + l - 1];
                if a > 1 && b <= lens[a - 2] && u[a - 2][b - 1] {
                    options.push(l);
                }
            }
        }
        for l in options {
            let mut grid = u.clone();
            if let Some(start) = start {
                let mut ok = true;
                for &(a, b) in &rim[start..start + l] {
                    if a > grid.len() || grid[a - 1].len() != b - 1 {
                        ok = false;
                        break;
                    }
                    grid[a - 1].push(false);
                }
                if !ok {
                    continue;
                }
            }
            let Ok(t) = TreeLikeTableau::from_grid(grid) else {
                continue;
            };
            if t.special_point() != Cell::new(i, j) {
                continue;
            }
            if matches!(remove_point(&t), Ok((ref p, _)) if p == parent) {
                found.insert(t);
            }
        }
    };

    // Fresh column j of height i, point at its bottom.
    for j in 1..=ncols + 1 {
        for i in 1..=k + 1 {
            if i < old_col(j) || i > old_col(j - 1) || old_len(i) != j - 1 {
                continue;
            }
            let mut u = old.clone();
            if i > k {
                u.push(Vec::new());
            }
            for r in 1..=i {
                u[r - 1].insert(j - 1, r == i);
            }
            consider(u, i, j);
        }
    }
    // Fresh row i of length j, point at its right end.
    for i in 1..=k + 1 {
        for j in 1..=ncols + 1 {
            let above = if i == 1 { usize::MAX } else { old_len(i - 1) };
            if j > above || j <= old_len(i) {
                continue;
            }
            let mut u = old.clone();
            let mut row = vec![false; j];
            row[j - 1] = true;
            u.insert(i - 1, row);
            consider(u, i, j);
        }
    }
    found.into_iter().collect()
}
