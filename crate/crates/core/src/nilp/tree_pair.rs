use std::collections::HashSet;
use std::iter::Peekable;
use std::vec::IntoIter;

use super::path::{LatticePath, Step};
use super::NilpError;
use crate::tlt::BinaryTree;

pub const PAIR_UPPER_START: (i64, i64) = (0, 1);
pub const PAIR_LOWER_START: (i64, i64) = (1, 0);

/// A letter of the traversal word of the completed tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TraversalLetter {
    LeftLeaf,
    RightLeaf,
    LeftEdge,
    RightEdge,
}

/// Depth-first traversal word of the completion of `b`, started on the left. Internal edges are
/// edges of `b`; the first and last leaves of the completion are not recorded.
pub fn traversal_word(b: &BinaryTree) -> Vec<TraversalLetter> {
    fn go(b: &BinaryTree, first: bool, last: bool, out: &mut Vec<TraversalLetter>) {
        match &b.left {
            Some(l) => {
                out.push(TraversalLetter::LeftEdge);
                go(l, first, false, out);
            }
            None if !first => out.push(TraversalLetter::LeftLeaf),
            None => {}
        }
        match &b.right {
            Some(r) => {
                out.push(TraversalLetter::RightEdge);
                go(r, false, last, out);
            }
            None if !last => out.push(TraversalLetter::RightLeaf),
            None => {}
        }
    }
    let mut out = Vec::new();
    go(b, true, true, &mut out);
    out
}

/// The pair `(w1, w2)`: edge letters become `w1` (left edge N, right edge E) anchored at (0,1),
/// leaf letters become `w2` (left leaf E, right leaf N) anchored at (1,0).
pub fn tree_to_pair(b: &BinaryTree) -> (LatticePath, LatticePath) {
    let mut w1 = Vec::new();
    let mut w2 = Vec::new();
    for l in traversal_word(b) {
        match l {
            TraversalLetter::LeftEdge => w1.push(Step::N),
            TraversalLetter::RightEdge => w1.push(Step::E),
            TraversalLetter::LeftLeaf => w2.push(Step::E),
            TraversalLetter::RightLeaf => w2.push(Step::N),
        }
    }
    (
        LatticePath::new(PAIR_UPPER_START, w1),
        LatticePath::new(PAIR_LOWER_START, w2),
    )
}

struct Decoder {
    w1: Peekable<IntoIter<Step>>,
    w2: Peekable<IntoIter<Step>>,
}

impl Decoder {
    /// Replays the traversal at one node. The left side is an edge iff the next edge letter is N
    /// (otherwise the next edge is a right edge). The right side is an edge iff the next leaf is
    /// a left leaf, since that leaf then opens the right subtree.
    fn node(&mut self, first: bool, last: bool) -> Result<BinaryTree, NilpError> {
        let left = if self.w1.peek() == Some(&Step::N) {
            self.w1.next();
            Some(self.node(first, false)?)
        } else {
            if !first && self.w2.next() != Some(Step::E) {
                return Err(NilpError::NotAPair);
            }
            None
        };
        let right = if self.w2.peek() == Some(&Step::E) {
            if self.w1.next() != Some(Step::E) {
                return Err(NilpError::NotAPair);
            }
            Some(self.node(false, last)?)
        } else {
            if !last && self.w2.next() != Some(Step::N) {
                return Err(NilpError::NotAPair);
            }
            None
        };
        Ok(BinaryTree::node(left, right))
    }
}

/// Inverse of [`tree_to_pair`].
pub fn pair_to_tree(w1: &LatticePath, w2: &LatticePath) -> Result<BinaryTree, NilpError> {
    if w1.start != PAIR_UPPER_START || w2.start != PAIR_LOWER_START || w1.len() != w2.len() {
        return Err(NilpError::NotAPair);
    }
    let upper: HashSet<_> = w1.points().into_iter().collect();
    if w2.points().iter().any(|p| upper.contains(p)) {
        return Err(NilpError::NotAPair);
    }
    let mut d = Decoder {
        w1: w1.steps.clone().into_iter().peekable(),
        w2: w2.steps.clone().into_iter().peekable(),
    };
    let b = d.node(true, true)?;
    if d.w1.next().is_some() || d.w2.next().is_some() {
        return Err(NilpError::NotAPair);
    }
    if tree_to_pair(&b) != (w1.clone(), w2.clone()) {
        return Err(NilpError::NotAPair);
    }
    Ok(b)
}
