use std::collections::BTreeMap;

use super::tiles::{validate_pfp, PackedFloorplan, Tile};
use super::FloorplanError;
use crate::tlt::{is_baxter, removal_trace, Cell, FerrersShape, TreeLikeTableau};

/// For labels `n` down to `1`, lays a tile whose top-left cell holds the point of that label,
/// as wide as the free cells to its east allow and as tall as the free cells to its south allow.
pub fn phi_f(t: &TreeLikeTableau) -> Result<PackedFloorplan, FloorplanError> {
    if !is_baxter(t) {
        return Err(FloorplanError::NotBaxter);
    }
    let (k, l) = (t.num_rows(), t.num_cols());
    let mut by_label: Vec<(usize, Cell)> = removal_trace(t).point_labels.into_iter().map(|(c, j)| (j, c)).collect();
    by_label.sort_unstable_by(|a, b| b.cmp(a));
    let mut taken = vec![vec![false; l]; k];
    let mut tiles = Vec::with_capacity(by_label.len());
    for (label, c) in by_label {
        let (r, c) = (c.row - 1, c.col - 1);
        if taken[r][c] {
            return Err(FloorplanError::NonRectangularTile(label));
        }
        let w = (c..l).take_while(|&j| !taken[r][j]).count();
        let h = (r..k).take_while(|&i| !taken[i][c]).count();
        for row in &mut taken[r..r + h] {
            if row[c..c + w].iter().any(|&b| b) {
                return Err(FloorplanError::NonRectangularTile(label));
            }
            row[c..c + w].iter_mut().for_each(|b| *b = true);
        }
        tiles.push(Tile::new(c, r, w, h));
    }
    validate_pfp(k, l, tiles)
}

/// Labels tiles `n` down to `1`, each time choosing the rightmost unlabeled tile whose bottom
/// side touches only labeled tiles or the bottom of the rectangle.
pub fn tile_order(f: &PackedFloorplan) -> BTreeMap<Tile, usize> {
    let tiles = f.tiles();
    let below: Vec<Vec<usize>> = tiles
        .iter()
        .map(|t| {
            (0..tiles.len())
                .filter(|&j| tiles[j].y == t.bottom() && tiles[j].x < t.right() && t.x < tiles[j].right())
                .collect()
        })
        .collect();
    let mut label = vec![0; tiles.len()];
    for next in (1..=tiles.len()).rev() {
        let pick = (0..tiles.len())
            .filter(|&i| label[i] == 0 && below[i].iter().all(|&j| label[j] != 0))
            .max_by_key(|&i| (tiles[i].x, tiles[i].y))
            .expect("some tile has a free bottom side");
        label[pick] = next;
    }
    tiles.iter().copied().zip(label).collect()
}

/// Rebuilds the tableau by adding tile corners as points in tile order.
///
/// The partial tableau lives on the rows and columns used so far, so each new point opens a new
/// row or a new column there. The new point is padded to the NW and, when it lies left of the
/// previous point, a ribbon is laid along the border up to the cell below that point.
pub fn psi_f(f: &PackedFloorplan) -> TreeLikeTableau {
    let mut corners: Vec<(usize, Cell)> = tile_order(f)
        .into_iter()
        .map(|(t, j)| (j, Cell::new(t.y + 1, t.x + 1)))
        .collect();
    corners.sort_unstable();
    let (mut used_rows, mut used_cols): (Vec<usize>, Vec<usize>) = (Vec::new(), Vec::new());
    let mut rows: Vec<usize> = Vec::new();
    let mut prev: Option<Cell> = None;
    for &(_, c) in &corners {
        let (row_at, col_at) = (used_rows.binary_search(&c.row), used_cols.binary_search(&c.col));
        let (i, j) = match (row_at, col_at) {
            (Err(_), Err(_)) => {
                assert!(prev.is_none(), "point {c} opens both a row and a column");
                used_rows.push(c.row);
                used_cols.push(c.col);
                rows.push(1);
                (0, 0)
            }
            (Err(i), Ok(j)) => {
                used_rows.insert(i, c.row);
                rows.insert(i, 0);
                for len in &mut rows[..=i] {
                    *len = (*len).max(j + 1);
                }
                (i, j)
            }
            (Ok(i), Err(j)) => {
                used_cols.insert(j, c.col);
                for len in &mut rows[..=i] {
                    *len = (*len).max(j) + 1;
                }
                (i, j)
            }
            (Ok(_), Ok(_)) => panic!("point {c} opens neither a row nor a column"),
        };
        assert!(
            rows.get(i + 1).is_none_or(|&len| len <= j),
            "point {c} is not at the bottom of its column"
        );
        if let Some(p) = prev.filter(|p| c.col < p.col) {
            let a = used_rows.binary_search(&p.row).unwrap() + 1;
            let top = used_cols.binary_search(&p.col).unwrap() + 1;
            assert!(a <= i && rows[a] < top, "ribbon from {c} to {p} is not a border strip");
            let old = rows.clone();
            rows[a] = top;
            for m in a + 1..=i {
                rows[m] = old[m - 1] + 1;
            }
        }
        prev = Some(c);
    }
    assert!(used_rows.iter().copied().eq(1..=f.height()) && used_cols.iter().copied().eq(1..=f.width()));
    let shape = FerrersShape::new(rows).expect("padding keeps a Ferrers shape");
    TreeLikeTableau::new(shape, corners.into_iter().map(|(_, c)| c)).expect("tile corners form a tableau")
}

/// True iff `f` has the alternating dimensions for its size and the staircase path
/// E, N, E, N, … from the SW corner to the NE corner runs along tile sides.
pub fn is_alternating(f: &PackedFloorplan) -> bool {
    let n = f.size();
    let (height, width) = (f.height(), f.width());
    if width != (n + 2) / 2 || height != n.div_ceil(2) {
        return false;
    }
    let grid = f.owners();
    let (mut x, mut y) = (0, height);
    for step in 0..=n {
        if step % 2 == 0 {
            if y != 0 && y != height && grid[y - 1][x] == grid[y][x] {
                return false;
            }
            x += 1;
        } else {
            if x != 0 && x != width && grid[y - 1][x - 1] == grid[y - 1][x] {
                return false;
            }
            y -= 1;
        }
    }
    debug_assert_eq!((x, y), (width, 0));
    true
}
