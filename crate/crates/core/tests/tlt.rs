use std::collections::BTreeSet;

use baxter_core::tlt::{
    brute_force_tlts, decompose, enumerate_baxter_tlts, enumerate_tlts, is_almost_complete, is_baxter, is_complete,
    leaves, rectangular_baxter, removal_trace, remove_point, staircase_diagonal, subtree_points, underlying_tree,
    BinaryTree, Cell, FerrersShape, TreeLikeTableau,
};
use proptest::prelude::*;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn tableaux_up_to(n: usize) -> impl Iterator<Item = TreeLikeTableau> {
    (1..=n).flat_map(enumerate_tlts)
}

fn baxter_up_to(n: usize) -> impl Iterator<Item = TreeLikeTableau> {
    (1..=n).flat_map(enumerate_baxter_tlts)
}

#[test]
fn enumeration_counts() {
    for n in 1..=7 {
        let all = enumerate_tlts(n);
        assert_eq!(all.len(), factorial(n));
        let filtered: BTreeSet<String> = all
            .iter()
            .filter(|t| is_baxter(t))
            .map(|t| serde_json::to_string(t).unwrap())
            .collect();
        let direct: Vec<String> = enumerate_baxter_tlts(n)
            .iter()
            .map(|t| serde_json::to_string(t).unwrap())
            .collect();
        assert_eq!(direct.len(), filtered.len());
        assert_eq!(direct.iter().cloned().collect::<BTreeSet<_>>(), filtered);
    }
    for n in 1..=5 {
        let a: BTreeSet<String> = brute_force_tlts(n)
            .iter()
            .map(|t| serde_json::to_string(t).unwrap())
            .collect();
        let b: BTreeSet<String> = enumerate_tlts(n)
            .iter()
            .map(|t| serde_json::to_string(t).unwrap())
            .collect();
        assert_eq!(a, b);
    }
}

#[test]
fn enumeration_is_canonically_ordered() {
    for n in 1..=6 {
        let key = |t: &TreeLikeTableau| (t.shape().rows().to_vec(), t.points());
        let keys: Vec<_> = enumerate_baxter_tlts(n).iter().map(key).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn size_is_semi_perimeter_minus_one() {
    for t in tableaux_up_to(6) {
        assert_eq!(t.size(), t.shape().semi_perimeter() - 1);
        assert_eq!(underlying_tree(&t).size(), t.size());
    }
}

#[test]
fn special_point_is_rightmost_point_without_cell_below() {
    for t in tableaux_up_to(6) {
        let oracle = t
            .points()
            .into_iter()
            .filter(|c| !t.contains(Cell::new(c.row + 1, c.col)))
            .max_by_key(|c| c.col)
            .unwrap();
        assert_eq!(t.special_point(), oracle);
        if t.size() > 1 {
            assert_eq!(removal_trace(&t).point_labels[&oracle], t.size());
        }
    }
}

#[test]
fn removal_shrinks_by_one_and_keeps_baxter() {
    for t in tableaux_up_to(7).filter(|t| t.size() > 1) {
        let (smaller, _) = remove_point(&t).unwrap();
        assert_eq!(smaller.size() + 1, t.size());
        if is_baxter(&t) {
            assert!(is_baxter(&smaller), "{t:?}");
        }
    }
    assert!(remove_point(&TreeLikeTableau::singleton()).is_err());
}

#[test]
fn removal_traces() {
    for t in tableaux_up_to(7) {
        let trace = removal_trace(&t);
        let n = t.size();
        assert_eq!(trace.steps.len(), n - 1);
        let mut perimeter = t.shape().semi_perimeter();
        for s in &trace.steps {
            assert_eq!(s.resulting_shape.semi_perimeter() + 1, perimeter);
            perimeter -= 1;
        }
        let labels: BTreeSet<usize> = trace.point_labels.values().copied().collect();
        assert_eq!(labels, (1..=n).collect());
        let crossings: BTreeSet<Cell> = t.crossings().into_iter().collect();
        assert_eq!(trace.ins_labels.keys().copied().collect::<BTreeSet<_>>(), crossings);

        // Consecutive labels sit SW-to-NE exactly when a ribbon was removed with the later one.
        let by_label: Vec<Cell> = {
            let mut v: Vec<(usize, Cell)> = trace.point_labels.iter().map(|(&c, &l)| (l, c)).collect();
            v.sort();
            v.into_iter().map(|(_, c)| c).collect()
        };
        for i in 1..n {
            let (prev, cur) = (by_label[i - 1], by_label[i]);
            let strictly_sw = cur.row > prev.row && cur.col < prev.col;
            let step = trace.steps.iter().find(|s| s.special_point == cur).unwrap();
            assert_eq!(strictly_sw, step.ribbon.is_some(), "{t:?} label {}", i + 1);
        }
    }
}

#[test]
fn complete_tableaux_have_staircase_leaves() {
    for t in baxter_up_to(9) {
        let leafs: BTreeSet<Cell> = leaves(&t).into_iter().collect();
        // The full SW-NE diagonal from the lowest point of column 1 up to row 1.
        let bottom = (1..=t.num_rows())
            .rev()
            .find(|&r| t.is_pointed(Cell::new(r, 1)))
            .unwrap();
        let full: Vec<Cell> = (0..bottom).map(|d| Cell::new(bottom - d, 1 + d)).collect();
        let staircase = full.iter().all(|&c| t.contains(c)) && leafs == full.iter().copied().collect();
        assert_eq!(is_complete(&t).unwrap(), staircase, "{t:?}");
        assert!(full.starts_with(&staircase_diagonal(&t)));
    }
}

#[test]
fn left_subtree_lies_below_and_left_of_right_subtree() {
    for t in baxter_up_to(7) {
        let root = Cell::new(1, 1);
        let left = t.point_below(root).map(|c| subtree_points(&t, c)).unwrap_or_default();
        let right = t.point_right(root).map(|c| subtree_points(&t, c)).unwrap_or_default();
        for a in &left {
            for b in &right {
                assert!(a.row > b.row && a.col < b.col);
            }
        }
        let blocks = decompose(&t).unwrap();
        assert_eq!(blocks.assemble().unwrap(), t);
        let sub = |b: &Option<TreeLikeTableau>| b.as_ref().map_or(0, TreeLikeTableau::size);
        assert_eq!((sub(&blocks.left), sub(&blocks.right)), (left.len(), right.len()));
    }
    let non_baxter = enumerate_tlts(4).into_iter().find(|t| !is_baxter(t)).unwrap();
    assert!(decompose(&non_baxter).is_err());
}

#[test]
fn rectangular_tableaux_of_trees() {
    for n in 1..=6 {
        for b in BinaryTree::all(n) {
            let t = rectangular_baxter(&b);
            assert!(t.shape().is_rectangle());
            assert!(is_baxter(&t));
            assert_eq!(underlying_tree(&t), b);
        }
    }
}

#[test]
fn almost_complete_counts() {
    let counts: Vec<usize> = (1..=7)
        .map(|n| {
            enumerate_baxter_tlts(n)
                .iter()
                .filter(|t| is_almost_complete(t).unwrap())
                .count()
        })
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 10, 25, 70]);
    let non_baxter = enumerate_tlts(4).into_iter().find(|t| !is_baxter(t)).unwrap();
    assert!(is_complete(&non_baxter).is_err());
}

proptest! {
    #[test]
    fn json_and_border_round_trip(n in 1usize..=6, idx in any::<prop::sample::Index>()) {
        let all = enumerate_tlts(n);
        let t = &all[idx.index(all.len())];
        let back: TreeLikeTableau = serde_json::from_str(&serde_json::to_string(t).unwrap()).unwrap();
        prop_assert_eq!(&back, t);
        let shape = FerrersShape::from_border(&t.shape().border_steps()).unwrap();
        prop_assert_eq!(&shape, t.shape());
    }
}
