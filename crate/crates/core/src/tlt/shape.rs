use std::fmt;

use serde::{Deserialize, Serialize};

/// A cell of a Ferrers diagram, 1-indexed: `row` counts from the top, `col` from the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Ferrers diagram in English notation, stored as weakly decreasing row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FerrersShape(Vec<usize>);

impl FerrersShape {
    /// Returns `None` unless the lengths are nonempty, positive and weakly decreasing.
    pub fn new(rows: Vec<usize>) -> Option<Self> {
        if rows.is_empty() || rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(FerrersShape(rows))
    }

    /// Builds the shape whose SE border, read from the SW corner to the NE corner, is `steps`
    /// (`true` = east, `false` = north). The path must start with E and end with N.
    pub fn from_border(steps: &[bool]) -> Option<Self> {
        if steps.first() != Some(&true) || steps.last() != Some(&false) {
            return None;
        }
        let mut rows = Vec::new();
        let mut width = 0;
        for &east in steps {
            if east {
                width += 1;
            } else {
                rows.push(width);
            }
        }
        rows.reverse();
        FerrersShape::new(rows)
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn num_cols(&self) -> usize {
        self.0[0]
    }

    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn col_len(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.0.iter().take_while(|&&r| r >= col).count()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.row_len(c.row)
    }

    pub fn semi_perimeter(&self) -> usize {
        self.num_rows() + self.num_cols()
    }

    pub fn num_cells(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_rectangle(&self) -> bool {
        self.0.iter().all(|&r| r == self.0[0])
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    /// Cells with no cell diagonally below-right, from the bottom cell of column 1 to the last
    /// cell of row 1: step right when possible, otherwise up.
    pub fn border_cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.semi_perimeter() - 1);
        let mut c = Cell::new(self.num_rows(), 1);
        loop {
            out.push(c);
            if self.contains(Cell::new(c.row, c.col + 1)) {
                c.col += 1;
            } else if c.row > 1 {
                c.row -= 1;
            } else {
                break;
            }
        }
        out
    }

    /// SE boundary as unit steps from the SW corner to the NE corner (`true` = east).
    pub fn border_steps(&self) -> Vec<bool> {
        let k = self.num_rows();
        let mut out = Vec::with_capacity(self.semi_perimeter());
        for r in (1..=k).rev() {
            let run = self.row_len(r) - self.row_len(r + 1);
            out.extend(std::iter::repeat_n(true, run));
            out.push(false);
        }
        out
    }
}

impl fmt::Display for FerrersShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
