use super::tiles::{forms_pattern, validate_floorplan, validate_pfp, Floorplan, PackedFloorplan, Tile};

/// Every partition of a `height × width` grid into at most `max_tiles` rectangles, built by
/// covering the first free unit square (row-major) with each possible rectangle. `prune` sees
/// the tiles placed so far plus the new one and may reject the extension.
pub fn partitions<F: Fn(&[Tile], &Tile) -> bool>(
    height: usize,
    width: usize,
    max_tiles: usize,
    prune: F,
) -> Vec<Vec<Tile>> {
    let mut out = Vec::new();
    let mut taken = vec![vec![false; width]; height];
    let mut tiles = Vec::new();
    fill(&mut taken, &mut tiles, max_tiles, &prune, &mut out);
    out
}

fn fill<F: Fn(&[Tile], &Tile) -> bool>(
    taken: &mut [Vec<bool>],
    tiles: &mut Vec<Tile>,
    max_tiles: usize,
    prune: &F,
    out: &mut Vec<Vec<Tile>>,
) {
    let width = taken[0].len();
    let Some((y, x)) = taken
        .iter()
        .enumerate()
        .find_map(|(y, row)| row.iter().position(|&b| !b).map(|x| (y, x)))
    else {
        out.push(tiles.clone());
        return;
    };
    if tiles.len() == max_tiles {
        return;
    }
    let max_w = (x..width).take_while(|&j| !taken[y][j]).count();
    for w in 1..=max_w {
        for h in 1..=taken.len() - y {
            if taken[y + h - 1][x..x + w].iter().any(|&b| b) {
                break;
            }
            let t = Tile::new(x, y, w, h);
            if !prune(tiles, &t) {
                continue;
            }
            for row in &mut taken[y..y + h] {
                row[x..x + w].iter_mut().for_each(|b| *b = true);
            }
            tiles.push(t);
            fill(taken, tiles, max_tiles, prune, out);
            tiles.pop();
            for row in &mut taken[y..y + h] {
                row[x..x + w].iter_mut().for_each(|b| *b = false);
            }
        }
    }
}

/// All PFPs of size `n`, by direct tiling of every `k × ℓ` rectangle with `k + ℓ - 1 = n`,
/// pruned on the forbidden pattern. Sorted by height, then tiles.
pub fn enumerate_pfps(n: usize) -> Vec<PackedFloorplan> {
    let mut out = Vec::new();
    for k in 1..=n {
        let l = n + 1 - k;
        let no_pattern =
            |placed: &[Tile], t: &Tile| placed.iter().all(|p| !forms_pattern(p, t) && !forms_pattern(t, p));
        for tiles in partitions(k, l, n, no_pattern) {
            if tiles.len() == n {
                out.push(validate_pfp(k, l, tiles).expect("pruned tiling is a PFP"));
            }
        }
    }
    out.sort();
    out
}

/// All floorplans with at most `max_tiles` tiles on bounding grids up to `max_dim × max_dim`.
pub fn brute_force_floorplans(max_tiles: usize, max_dim: usize) -> Vec<Floorplan> {
    let mut out = Vec::new();
    for height in 1..=max_dim {
        for width in 1..=max_dim {
            for tiles in partitions(height, width, max_tiles, |_, _| true) {
                if let Ok(f) = validate_floorplan(height, width, tiles) {
                    out.push(f);
                }
            }
        }
    }
    out
}
