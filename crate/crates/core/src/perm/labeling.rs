use std::collections::BTreeMap;

use serde::Serialize;

use super::pattern::Occurrence;
use super::permutation::Permutation;
use crate::tlt::{expansions, removal_trace, Cell, TreeLikeTableau};

/// A label in `1..=n` on every cell of a tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoLabeling {
    rows: Vec<Vec<usize>>,
}

impl IsoLabeling {
    pub fn get(&self, c: Cell) -> usize {
        self.rows[c.row - 1][c.col - 1]
    }

    pub fn to_map(&self) -> BTreeMap<Cell, usize> {
        let mut out = BTreeMap::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &l) in row.iter().enumerate() {
                out.insert(Cell::new(i + 1, j + 1), l);
            }
        }
        out
    }
}

/// Extends the point labels to every cell.
///
/// Empty cells of the first column (row) copy the cell above (left). An interior empty cell
/// copies its NW neighbour if it is a crossing, its N neighbour if only a point above exists,
/// its W neighbour if only a point to the left exists, and otherwise the common value of all three.
pub fn iso_labeling(t: &TreeLikeTableau) -> IsoLabeling {
    let points = removal_trace(t).point_labels;
    let mut rows: Vec<Vec<usize>> = t.shape().rows().iter().map(|&len| vec![0; len]).collect();
    for c in t.shape().cells() {
        let (i, j) = (c.row - 1, c.col - 1);
        let label = if let Some(&l) = points.get(&c) {
            l
        } else if j == 0 {
            rows[i - 1][0]
        } else if i == 0 {
            rows[0][j - 1]
        } else {
            let (x, y, z) = (rows[i - 1][j - 1], rows[i - 1][j], rows[i][j - 1]);
            match (t.point_above(c).is_some(), t.point_left(c).is_some()) {
                (true, true) => x,
                (true, false) => y,
                (false, true) => z,
                (false, false) => {
                    assert!(x == y && y == z, "labels around {c} disagree: {x}, {y}, {z}");
                    x
                }
            }
        };
        rows[i][j] = label;
    }
    IsoLabeling { rows }
}

/// Reads the iso-labels along the SE border, from the bottom of column 1 to the end of row 1.
pub fn phi(t: &TreeLikeTableau) -> Permutation {
    let labels = iso_labeling(t);
    let values = t.shape().border_cells().into_iter().map(|c| labels.get(c)).collect();
    Permutation::new(values).expect("border reading is a permutation")
}

/// The unique tableau with `phi(t) == sigma`.
///
/// Built value by value: the tableau for `sigma` restricted to `1..=m` is the expansion of the
/// previous one whose special point sits at the border position of `m`.
pub fn phi_inverse(sigma: &Permutation) -> TreeLikeTableau {
    assert!(!sigma.is_empty(), "phi_inverse needs a nonempty permutation");
    let mut t = TreeLikeTableau::singleton();
    for m in 2..=sigma.len() {
        let j = sigma.restrict_to(m).position_of(m);
        let mut hits = expansions(&t)
            .into_iter()
            .filter(|e| e.border_position(e.special_point()) == Some(j));
        let next = hits
            .next()
            .unwrap_or_else(|| panic!("BijectionViolation: no expansion at border position {j}"));
        assert!(
            hits.next().is_none(),
            "BijectionViolation: several expansions at border position {j}"
        );
        t = next;
    }
    t
}

/// A crossing with its occurrence of 2+-1-2 in `phi(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingOccurrence {
    pub cell: Cell,
    pub occurrence: Occurrence,
    pub iso: usize,
    pub ins: usize,
}

/// Pairs each crossing with the occurrence whose "1" has value `iso(c)` and whose "2+" has
/// value `ins(c)`.
pub fn crossing_pattern_correspondence(t: &TreeLikeTableau) -> Vec<CrossingOccurrence> {
    let labels = iso_labeling(t);
    let ins = removal_trace(t).ins_labels;
    let sigma = phi(t);
    t.crossings()
        .into_iter()
        .map(|cell| {
            let a = labels.get(cell);
            let b = ins[&cell];
            let positions = vec![sigma.position_of(b), sigma.position_of(a), sigma.position_of(b - 1)];
            assert!(
                positions.windows(2).all(|w| w[0] < w[1]) && a < b - 1,
                "crossing {cell} gives no occurrence"
            );
            CrossingOccurrence {
                cell,
                occurrence: Occurrence { positions },
                iso: a,
                ins: b,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tlt::FerrersShape;

    fn sq() -> TreeLikeTableau {
        TreeLikeTableau::new(
            FerrersShape::new(vec![2, 2]).unwrap(),
            [(1, 1), (1, 2), (2, 1)].map(Cell::from),
        )
        .unwrap()
    }

    #[test]
    fn square_labels() {
        let l = iso_labeling(&sq());
        let got: Vec<usize> = l.to_map().into_values().collect();
        assert_eq!(got, vec![1, 2, 3, 1]);
        assert_eq!(phi(&sq()).values(), &[3, 1, 2]);
        assert_eq!(phi_inverse(&"3 1 2".parse().unwrap()), sq());
        assert_eq!(phi_inverse(&"1".parse().unwrap()), TreeLikeTableau::singleton());
    }

    #[test]
    fn square_crossing() {
        let c = crossing_pattern_correspondence(&sq());
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].cell, Cell::new(2, 2));
        assert_eq!(c[0].occurrence.positions, vec![1, 2, 3]);
        assert_eq!((c[0].iso, c[0].ins), (1, 3));
        assert!(crossing_pattern_correspondence(&TreeLikeTableau::singleton()).is_empty());
    }
}
