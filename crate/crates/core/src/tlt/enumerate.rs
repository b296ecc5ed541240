use super::baxter::rectangular_points;
use super::removal::expansions;
use super::shape::{Cell, FerrersShape};
use super::tableau::TreeLikeTableau;
use super::tree::BinaryTree;

/// Every Baxter tableau of size `n`, built from (tree, SE border) pairs, in canonical order.
pub fn enumerate_baxter_tlts(n: usize) -> Vec<TreeLikeTableau> {
    assert!(n >= 1);
    let mut out = Vec::new();
    for b in BinaryTree::all(n) {
        let (k, l, pts) = rectangular_points(&b);
        // thin[r] = rightmost point column in rows r..k: the thinnest admissible row length.
        let mut thin = vec![0; k + 2];
        for r in (1..=k).rev() {
            let here = pts.iter().filter(|c| c.row == r).map(|c| c.col).max().unwrap_or(0);
            thin[r] = thin[r + 1].max(here);
        }
        let mut rows = vec![0; k];
        fill_rows(k, l, &thin, &mut rows, &pts, &mut out);
    }
    out.sort();
    out
}

fn fill_rows(r: usize, l: usize, thin: &[usize], rows: &mut Vec<usize>, pts: &[Cell], out: &mut Vec<TreeLikeTableau>) {
    if r == 0 {
        let shape = FerrersShape::new(rows.clone()).unwrap();
        let mut grid: Vec<Vec<bool>> = rows.iter().map(|&len| vec![false; len]).collect();
        for c in pts {
            grid[c.row - 1][c.col - 1] = true;
        }
        out.push(TreeLikeTableau::from_grid_unchecked(shape, grid));
        return;
    }
    let below = rows.get(r).copied().unwrap_or(0);
    let lo = thin[r].max(below);
    let lo = if r == 1 { l } else { lo };
    for len in lo..=l {
        rows[r - 1] = len;
        fill_rows(r - 1, l, thin, rows, pts, out);
    }
}

/// Every tableau of size `n`, grown level by level through inverse point removal.
pub fn enumerate_tlts(n: usize) -> Vec<TreeLikeTableau> {
    assert!(n >= 1);
    let mut level = vec![TreeLikeTableau::singleton()];
    for _ in 1..n {
        level = level.iter().flat_map(expansions).collect();
    }
    level.sort();
    level
}

/// All Ferrers shapes with `k` rows and `l` columns.
pub fn shapes_in_box(k: usize, l: usize) -> Vec<FerrersShape> {
    fn rec(r: usize, max: usize, rows: &mut Vec<usize>, k: usize, out: &mut Vec<FerrersShape>) {
        if r == k {
            out.push(FerrersShape::new(rows.clone()).unwrap());
            return;
        }
        for len in 1..=max {
            rows.push(len);
            rec(r + 1, len, rows, k, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![l];
    rec(1, l, &mut rows, k, &mut out);
    out
}

/// Independent oracle: every point subset of every shape with semi-perimeter `n + 1`, filtered
/// by the tableau conditions.
pub fn brute_force_tlts(n: usize) -> Vec<TreeLikeTableau> {
    assert!(n >= 1);
    let mut out = Vec::new();
    for k in 1..=n {
        let l = n + 1 - k;
        for shape in shapes_in_box(k, l) {
            let cells: Vec<Cell> = shape.cells().filter(|&c| c != Cell::new(1, 1)).collect();
            let mut chosen = Vec::with_capacity(n);
            choose(&cells, 0, n - 1, &mut chosen, &mut |pts| {
                let all = std::iter::once(Cell::new(1, 1)).chain(pts.iter().copied());
                if let Ok(t) = TreeLikeTableau::new(shape.clone(), all) {
                    out.push(t);
                }
            });
        }
    }
    out.sort();
    out
}

fn choose<F: FnMut(&[Cell])>(cells: &[Cell], from: usize, left: usize, chosen: &mut Vec<Cell>, f: &mut F) {
    if left == 0 {
        f(chosen);
        return;
    }
    for i in from..cells.len() {
        if cells.len() - i < left {
            break;
        }
        chosen.push(cells[i]);
        choose(cells, i + 1, left - 1, chosen, f);
        chosen.pop();
    }
}
