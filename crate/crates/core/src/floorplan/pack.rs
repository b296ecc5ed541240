use std::collections::BTreeSet;

use serde::Serialize;

use super::tiles::{forms_pattern, validate_pfp, Floorplan, Orientation, PackedFloorplan, Segment, Tile};
use super::FloorplanError;

/// The two T-junctions possible at the bottom-right corner of the NW tile of a forbidden pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JunctionKind {
    /// The horizontal side runs through the corner; a tile to the right shares its bottom line.
    HorizontalThrough,
    /// The vertical side runs through the corner; a tile below shares its right line.
    VerticalThrough,
}

/// One sliding step. Coordinates of `t1`, `t2` and `segment` refer to the floorplan before the
/// step; `tiles` is the compressed floorplan after it, in input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackStep {
    pub t1: Tile,
    pub t2: Tile,
    pub junction: JunctionKind,
    pub segment: Segment,
    pub forbidden_before: usize,
    pub forbidden_after: usize,
    pub tiles: Vec<Tile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackTrace {
    pub steps: Vec<PackStep>,
    /// Final tiles, index-aligned with the input floorplan's tiles.
    pub tiles: Vec<Tile>,
    pub result: PackedFloorplan,
}

pub fn count_forbidden_pairs(tiles: &[Tile]) -> usize {
    tiles
        .iter()
        .map(|a| tiles.iter().filter(|b| forms_pattern(a, b)).count())
        .sum()
}

/// Renumbers the used `x` and `y` lines to consecutive integers.
fn compress(tiles: &[Tile]) -> (usize, usize, Vec<Tile>) {
    let xs: Vec<usize> = tiles
        .iter()
        .flat_map(|t| [t.x, t.right()])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let ys: Vec<usize> = tiles
        .iter()
        .flat_map(|t| [t.y, t.bottom()])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let ix = |v: usize| xs.binary_search(&v).unwrap();
    let iy = |v: usize| ys.binary_search(&v).unwrap();
    let out = tiles
        .iter()
        .map(|t| {
            let (x, y) = (ix(t.x), iy(t.y));
            Tile::new(x, y, ix(t.right()) - x, iy(t.bottom()) - y)
        })
        .collect();
    (ys.len() - 1, xs.len() - 1, out)
}

/// The forbidden pair whose corners are closest (Manhattan), ties broken by the `(y, x)` of
/// the first corner and then of the second.
fn closest_pair(tiles: &[Tile]) -> Option<(usize, usize)> {
    type Key = (usize, usize, usize, usize, usize);
    let mut best: Option<(Key, (usize, usize))> = None;
    for (i, a) in tiles.iter().enumerate() {
        for (j, b) in tiles.iter().enumerate() {
            if !forms_pattern(a, b) {
                continue;
            }
            let key = (b.x - a.right() + b.y - a.bottom(), a.bottom(), a.right(), b.y, b.x);
            if best.is_none_or(|(k, _)| key < k) {
                best = Some((key, (i, j)));
            }
        }
    }
    best.map(|(_, p)| p)
}

/// Slides segment E past `x_c` for a pair whose corner junction is horizontal-through.
/// Coordinates must be doubled so the target line `x_c + 1` is free.
fn slide(tiles: &mut [Tile], i: usize, j: usize) -> Result<Segment, FloorplanError> {
    let unsupported = || FloorplanError::UnsupportedConfiguration(tiles[i], tiles[j]);
    let (px, py) = (tiles[i].right(), tiles[i].bottom());
    let xc = tiles[j].x;
    let t3 = tiles
        .iter()
        .position(|t| t.x == px && t.bottom() == py)
        .ok_or_else(unsupported)?;
    if tiles[t3].right() <= xc {
        return Err(unsupported());
    }
    let spans = |t: &Tile| t.x <= xc && t.right() > xc;
    let mut stack = vec![t3];
    loop {
        let cur = tiles[*stack.last().unwrap()];
        match tiles.iter().position(|t| t.bottom() == cur.y && spans(t)) {
            Some(m) if tiles[m].x >= cur.x => stack.push(m),
            _ => break,
        }
    }
    let xe = stack.iter().map(|&s| tiles[s].x).max().unwrap();
    let e: BTreeSet<usize> = stack.iter().copied().filter(|&s| tiles[s].x == xe).collect();
    let top = e.iter().map(|&s| tiles[s].y).min().unwrap();
    let bot = e.iter().map(|&s| tiles[s].bottom()).max().unwrap();
    let overlaps = |t: &Tile| t.y < bot && t.bottom() > top;
    let left_of: Vec<usize> = (0..tiles.len())
        .filter(|&k| tiles[k].right() == xe && overlaps(&tiles[k]))
        .collect();
    let right_of: BTreeSet<usize> = (0..tiles.len())
        .filter(|&k| tiles[k].x == xe && overlaps(&tiles[k]))
        .collect();
    let inside = |k: &usize| tiles[*k].y >= top && tiles[*k].bottom() <= bot;
    let covered: usize = left_of.iter().map(|&k| tiles[k].h).sum();
    if right_of != e || !left_of.iter().all(inside) || covered != bot - top {
        return Err(unsupported());
    }
    let nx = xc + 1;
    for &k in &right_of {
        let r = tiles[k].right();
        tiles[k].x = nx;
        tiles[k].w = r - nx;
    }
    for &k in &left_of {
        tiles[k].w = nx - tiles[k].x;
    }
    Ok(Segment {
        orientation: Orientation::Vertical,
        line: xe,
        start: top,
        end: bot,
    })
}

/// Slides segments until no forbidden pair remains, then compresses the grid.
pub fn pack_with_trace(f: &Floorplan) -> Result<PackTrace, FloorplanError> {
    let (mut height, mut width, mut tiles) = compress(f.tiles());
    let mut steps = Vec::new();
    while let Some((i, j)) = closest_pair(&tiles) {
        let before = count_forbidden_pairs(&tiles);
        let mut d: Vec<Tile> = tiles
            .iter()
            .map(|t| Tile::new(2 * t.x, 2 * t.y, 2 * t.w, 2 * t.h))
            .collect();
        let (px, py) = (d[i].right(), d[i].bottom());
        let junction = if d.iter().any(|t| t.x == px && t.bottom() == py) {
            JunctionKind::HorizontalThrough
        } else if d.iter().any(|t| t.right() == px && t.y == py) {
            JunctionKind::VerticalThrough
        } else {
            return Err(FloorplanError::UnsupportedConfiguration(tiles[i], tiles[j]));
        };
        let transpose = junction == JunctionKind::VerticalThrough;
        if transpose {
            d.iter_mut().for_each(|t| *t = t.transposed());
        }
        let mut segment = slide(&mut d, i, j)?;
        if transpose {
            d.iter_mut().for_each(|t| *t = t.transposed());
            segment.orientation = Orientation::Horizontal;
        }
        segment = Segment {
            line: segment.line / 2,
            start: segment.start / 2,
            end: segment.end / 2,
            ..segment
        };
        let (t1, t2) = (tiles[i], tiles[j]);
        (height, width, tiles) = compress(&d);
        let after = count_forbidden_pairs(&tiles);
        if after >= before {
            return Err(FloorplanError::UnsupportedConfiguration(t1, t2));
        }
        steps.push(PackStep {
            t1,
            t2,
            junction,
            segment,
            forbidden_before: before,
            forbidden_after: after,
            tiles: tiles.clone(),
        });
    }
    let result = validate_pfp(height, width, tiles.clone()).map_err(|e| FloorplanError::NotAFloorplan(Box::new(e)))?;
    Ok(PackTrace { steps, tiles, result })
}

/// The unique packed floorplan R-equivalent to `f`.
pub fn pack(f: &Floorplan) -> Result<PackedFloorplan, FloorplanError> {
    pack_with_trace(f).map(|t| t.result)
}
