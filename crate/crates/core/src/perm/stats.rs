use std::sync::OnceLock;

use serde::Serialize;

use super::labeling::iso_labeling;
use super::pattern::{avoids, BivincularPattern};
use super::permutation::Permutation;
use crate::tlt::{Cell, TreeLikeTableau};

/// Positions `i` (1-based) with `σ(i) < σ(i+1)`.
pub fn ascents(s: &Permutation) -> Vec<usize> {
    (1..s.len()).filter(|&i| s.at(i) < s.at(i + 1)).collect()
}

/// Positions `i` (1-based) with `σ(i) > σ(i+1)`.
pub fn descents(s: &Permutation) -> Vec<usize> {
    (1..s.len()).filter(|&i| s.at(i) > s.at(i + 1)).collect()
}

/// Values smaller than every value to their left.
pub fn left_to_right_minima(s: &Permutation) -> Vec<usize> {
    let mut out = Vec::new();
    let mut min = usize::MAX;
    for &v in s.values() {
        if v < min {
            min = v;
            out.push(v);
        }
    }
    out
}

/// `σ(1) < σ(2) > σ(3) < …`
pub fn is_alternating_up(s: &Permutation) -> bool {
    (1..s.len()).all(|i| (s.at(i) < s.at(i + 1)) == (i % 2 == 1))
}

fn patterns(texts: [&str; 2]) -> [BivincularPattern; 2] {
    texts.map(|t| BivincularPattern::parse(t).unwrap())
}

/// Membership in the class of inverses of twisted Baxter permutations: avoids 3-14-2 and 3-41-2.
pub fn in_b(s: &Permutation) -> bool {
    static P: OnceLock<[BivincularPattern; 2]> = OnceLock::new();
    let [a, b] = P.get_or_init(|| patterns(["3-14-2", "3-41-2"]));
    avoids(s, a) && avoids(s, b)
}

/// Same class tested on the inverse: `σ⁻¹` avoids 2-41-3 and 3-41-2.
pub fn in_b_via_inverse(s: &Permutation) -> bool {
    static P: OnceLock<[BivincularPattern; 2]> = OnceLock::new();
    let [a, b] = P.get_or_init(|| patterns(["2-41-3", "3-41-2"]));
    let inv = s.inverse();
    avoids(&inv, a) && avoids(&inv, b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    Ascent,
    Descent,
}

/// A pair of labels predicted to appear consecutively in `phi(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Factor {
    pub first: usize,
    pub second: usize,
    pub kind: FactorKind,
}

/// For each lowest point `x` of a column other than the first, the ascent `label(y) label(x)`
/// where `y` is the parent of the column's top point; for each rightmost point `x` of a row other
/// than the first, the descent `label(x) label(y)` where `y` is the parent of the row's
/// leftmost point.
pub fn extremal_factors(t: &TreeLikeTableau) -> Vec<Factor> {
    let labels = iso_labeling(t);
    let mut out = Vec::new();
    for j in 2..=t.num_cols() {
        let col: Vec<Cell> = (1..=t.shape().col_len(j))
            .map(|r| Cell::new(r, j))
            .filter(|&c| t.is_pointed(c))
            .collect();
        let (top, bottom) = (col[0], *col.last().unwrap());
        let y = t.parent(top).unwrap();
        out.push(Factor {
            first: labels.get(y),
            second: labels.get(bottom),
            kind: FactorKind::Ascent,
        });
    }
    for i in 2..=t.num_rows() {
        let row: Vec<Cell> = (1..=t.shape().row_len(i))
            .map(|c| Cell::new(i, c))
            .filter(|&c| t.is_pointed(c))
            .collect();
        let (first, last) = (row[0], *row.last().unwrap());
        let y = t.parent(first).unwrap();
        out.push(Factor {
            first: labels.get(last),
            second: labels.get(y),
            kind: FactorKind::Descent,
        });
    }
    out
}
