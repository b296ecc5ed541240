use std::fmt;

/// A nonempty binary tree; structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinaryTree {
    pub left: Option<Box<BinaryTree>>,
    pub right: Option<Box<BinaryTree>>,
}

impl BinaryTree {
    pub fn leaf() -> Self {
        BinaryTree::default()
    }

    pub fn node(left: Option<BinaryTree>, right: Option<BinaryTree>) -> Self {
        BinaryTree {
            left: left.map(Box::new),
            right: right.map(Box::new),
        }
    }

    pub fn size(&self) -> usize {
        1 + self.left.as_ref().map_or(0, |t| t.size()) + self.right.as_ref().map_or(0, |t| t.size())
    }

    /// Every node has zero or two children.
    pub fn is_complete(&self) -> bool {
        match (&self.left, &self.right) {
            (None, None) => true,
            (Some(l), Some(r)) => l.is_complete() && r.is_complete(),
            _ => false,
        }
    }

    /// Adds a left child at the end of the left branch from the root.
    pub fn with_leftmost_leaf(&self) -> BinaryTree {
        let mut t = self.clone();
        let mut cur = &mut t;
        while cur.left.is_some() {
            cur = cur.left.as_mut().unwrap();
        }
        cur.left = Some(Box::new(BinaryTree::leaf()));
        t
    }

    /// Adds a right child at the end of the right branch from the root.
    pub fn with_rightmost_leaf(&self) -> BinaryTree {
        let mut t = self.clone();
        let mut cur = &mut t;
        while cur.right.is_some() {
            cur = cur.right.as_mut().unwrap();
        }
        cur.right = Some(Box::new(BinaryTree::leaf()));
        t
    }

    /// All trees with `n` nodes, in a fixed order.
    pub fn all(n: usize) -> Vec<BinaryTree> {
        let mut table: Vec<Vec<Option<BinaryTree>>> = vec![vec![None]];
        for m in 1..=n {
            let mut here = Vec::new();
            for l in 0..m {
                for left in &table[l] {
                    for right in &table[m - 1 - l] {
                        here.push(Some(BinaryTree {
                            left: left.clone().map(Box::new),
                            right: right.clone().map(Box::new),
                        }));
                    }
                }
            }
            table.push(here);
        }
        table.swap_remove(n).into_iter().flatten().collect()
    }
}

/// Bracket notation: a node is `(left,right)` with empty subtrees omitted, so a leaf is `()`.
impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        if let Some(l) = &self.left {
            write!(f, "{l}")?;
        }
        write!(f, ",")?;
        if let Some(r) = &self.right {
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}
