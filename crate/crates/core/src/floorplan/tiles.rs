use std::fmt;

use serde::{Deserialize, Serialize};

use super::FloorplanError;

/// An axis-aligned tile given by its top-left corner and its size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tile {
    pub x: usize,
    pub y: usize,
    pub w: usize,
    pub h: usize,
}

impl Tile {
    pub const fn new(x: usize, y: usize, w: usize, h: usize) -> Self {
        Tile { x, y, w, h }
    }

    pub fn right(&self) -> usize {
        self.x + self.w
    }

    pub fn bottom(&self) -> usize {
        self.y + self.h
    }

    pub(crate) fn transposed(&self) -> Tile {
        Tile {
            x: self.y,
            y: self.x,
            w: self.h,
            h: self.w,
        }
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{} {}x{}]", self.x, self.y, self.w, self.h)
    }
}

/// True iff `t2` lies weakly SE of the bottom-right corner of `t1`.
pub fn forms_pattern(t1: &Tile, t2: &Tile) -> bool {
    t1.right() <= t2.x && t1.bottom() <= t2.y
}

fn sorted(mut tiles: Vec<Tile>) -> Vec<Tile> {
    tiles.sort_by_key(|t| (t.y, t.x));
    tiles
}

/// Index of the tile owning each unit square, row-major.
pub(crate) fn owners(height: usize, width: usize, tiles: &[Tile]) -> Result<Vec<Vec<usize>>, FloorplanError> {
    let mut grid = vec![vec![usize::MAX; width]; height];
    for (i, t) in tiles.iter().enumerate() {
        if t.w == 0 || t.h == 0 {
            return Err(FloorplanError::EmptyTile(*t));
        }
        if t.right() > width || t.bottom() > height {
            return Err(FloorplanError::OutOfBounds(*t));
        }
        for row in &mut grid[t.y..t.bottom()] {
            for slot in &mut row[t.x..t.right()] {
                if *slot != usize::MAX {
                    return Err(FloorplanError::Overlap(tiles[*slot], *t));
                }
                *slot = i;
            }
        }
    }
    for (y, row) in grid.iter().enumerate() {
        if let Some(x) = row.iter().position(|&s| s == usize::MAX) {
            return Err(FloorplanError::Gap(x, y));
        }
    }
    Ok(grid)
}

/// Every interior point where tile corners meet must carry exactly two of them.
fn check_junctions(height: usize, width: usize, grid: &[Vec<usize>]) -> Result<(), FloorplanError> {
    for y in 1..height {
        for x in 1..width {
            let (nw, ne, sw, se) = (grid[y - 1][x - 1], grid[y - 1][x], grid[y][x - 1], grid[y][x]);
            let corners = [
                nw != ne && nw != sw,
                ne != nw && ne != se,
                sw != nw && sw != se,
                se != ne && se != sw,
            ]
            .iter()
            .filter(|&&b| b)
            .count();
            match corners {
                0 | 2 => {}
                4 => return Err(FloorplanError::CrossJunction(x, y)),
                _ => return Err(FloorplanError::FlushJunction(x, y)),
            }
        }
    }
    Ok(())
}

/// A partition of a `height × width` rectangle into `height + width - 1` tiles avoiding the
/// forbidden pattern. Tiles are kept sorted by `(y, x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PfpJson")]
pub struct PackedFloorplan {
    height: usize,
    width: usize,
    tiles: Vec<Tile>,
}

#[derive(Deserialize)]
struct PfpJson {
    height: usize,
    width: usize,
    tiles: Vec<Tile>,
}

impl TryFrom<PfpJson> for PackedFloorplan {
    type Error = FloorplanError;

    fn try_from(j: PfpJson) -> Result<Self, FloorplanError> {
        validate_pfp(j.height, j.width, j.tiles)
    }
}

pub fn validate_pfp(height: usize, width: usize, tiles: Vec<Tile>) -> Result<PackedFloorplan, FloorplanError> {
    owners(height, width, &tiles)?;
    if tiles.len() + 1 != height + width {
        return Err(FloorplanError::WrongTileCount {
            expected: height + width - 1,
            found: tiles.len(),
        });
    }
    let tiles = sorted(tiles);
    for t1 in &tiles {
        if let Some(t2) = tiles.iter().find(|t2| forms_pattern(t1, t2)) {
            return Err(FloorplanError::ForbiddenPattern(*t1, *t2));
        }
    }
    Ok(PackedFloorplan { height, width, tiles })
}

impl PackedFloorplan {
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn size(&self) -> usize {
        self.tiles.len()
    }

    pub fn segments(&self) -> Vec<Segment> {
        segments(self.height, self.width, &self.tiles)
    }

    /// Every PFP is a valid floorplan.
    pub fn to_floorplan(&self) -> Floorplan {
        Floorplan {
            height: self.height,
            width: self.width,
            tiles: self.tiles.clone(),
        }
    }

    pub(crate) fn owners(&self) -> Vec<Vec<usize>> {
        owners(self.height, self.width, &self.tiles).expect("a PFP is a partition")
    }
}

/// A partition of a rectangle into tiles whose corners all form T-junctions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FloorplanJson", into = "FloorplanJson")]
pub struct Floorplan {
    height: usize,
    width: usize,
    tiles: Vec<Tile>,
}

#[derive(Serialize, Deserialize)]
struct FloorplanJson {
    height: usize,
    width: usize,
    tiles: Vec<Tile>,
    #[serde(default)]
    packed: bool,
}

impl TryFrom<FloorplanJson> for Floorplan {
    type Error = FloorplanError;

    fn try_from(j: FloorplanJson) -> Result<Self, FloorplanError> {
        validate_floorplan(j.height, j.width, j.tiles)
    }
}

impl From<Floorplan> for FloorplanJson {
    fn from(f: Floorplan) -> Self {
        FloorplanJson {
            height: f.height,
            width: f.width,
            tiles: f.tiles,
            packed: false,
        }
    }
}

pub fn validate_floorplan(height: usize, width: usize, tiles: Vec<Tile>) -> Result<Floorplan, FloorplanError> {
    let grid = owners(height, width, &tiles)?;
    check_junctions(height, width, &grid)?;
    Ok(Floorplan {
        height,
        width,
        tiles: sorted(tiles),
    })
}

impl Floorplan {
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn segments(&self) -> Vec<Segment> {
        segments(self.height, self.width, &self.tiles)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// A maximal union of collinear tile sides. For a horizontal segment `line` is its `y` and
/// `start..end` its `x` range; for a vertical one the roles swap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Segment {
    pub orientation: Orientation,
    pub line: usize,
    pub start: usize,
    pub end: usize,
}

impl Segment {
    pub fn is_internal(&self, height: usize, width: usize) -> bool {
        let last = match self.orientation {
            Orientation::Horizontal => height,
            Orientation::Vertical => width,
        };
        self.line != 0 && self.line != last
    }
}

fn merge(orientation: Orientation, line: usize, mut spans: Vec<(usize, usize)>, out: &mut Vec<Segment>) {
    spans.sort();
    let mut cur: Option<(usize, usize)> = None;
    for (a, b) in spans {
        cur = match cur {
            Some((s, e)) if a <= e => Some((s, e.max(b))),
            Some((s, e)) => {
                out.push(Segment {
                    orientation,
                    line,
                    start: s,
                    end: e,
                });
                Some((a, b))
            }
            None => Some((a, b)),
        };
    }
    if let Some((s, e)) = cur {
        out.push(Segment {
            orientation,
            line,
            start: s,
            end: e,
        });
    }
}

/// All maximal segments, boundary included: horizontal ones top to bottom, then vertical ones
/// left to right.
pub fn segments(height: usize, width: usize, tiles: &[Tile]) -> Vec<Segment> {
    let mut out = Vec::new();
    for y in 0..=height {
        let spans = tiles
            .iter()
            .filter(|t| t.y == y || t.bottom() == y)
            .map(|t| (t.x, t.right()))
            .collect();
        merge(Orientation::Horizontal, y, spans, &mut out);
    }
    for x in 0..=width {
        let spans = tiles
            .iter()
            .filter(|t| t.x == x || t.right() == x)
            .map(|t| (t.y, t.bottom()))
            .collect();
        merge(Orientation::Vertical, x, spans, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq() -> Vec<Tile> {
        vec![Tile::new(0, 0, 1, 1), Tile::new(1, 0, 1, 1), Tile::new(0, 1, 2, 1)]
    }

    #[test]
    fn small_pfps() {
        let one = validate_pfp(1, 1, vec![Tile::new(0, 0, 1, 1)]).unwrap();
        assert_eq!(one.segments().len(), 4);
        let f = validate_pfp(2, 2, sq()).unwrap();
        assert_eq!(f.size(), 3);
        assert_eq!(f.segments().len(), 6);
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"height":2,"width":2,"tiles":[{"x":0,"y":0,"w":1,"h":1},{"x":1,"y":0,"w":1,"h":1},{"x":0,"y":1,"w":2,"h":1}]}"#
        );
        let back: PackedFloorplan = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn errors() {
        let quad = vec![
            Tile::new(0, 0, 1, 1),
            Tile::new(1, 0, 1, 1),
            Tile::new(0, 1, 1, 1),
            Tile::new(1, 1, 1, 1),
        ];
        assert!(matches!(
            validate_floorplan(2, 2, quad.clone()),
            Err(FloorplanError::CrossJunction(1, 1))
        ));
        assert!(matches!(
            validate_pfp(2, 2, quad),
            Err(FloorplanError::WrongTileCount { expected: 3, found: 4 })
        ));
        assert!(matches!(
            validate_pfp(2, 2, sq()[..2].to_vec()),
            Err(FloorplanError::Gap(0, 1))
        ));
        let mut over = sq();
        over.push(Tile::new(1, 1, 1, 1));
        assert!(matches!(validate_pfp(2, 2, over), Err(FloorplanError::Overlap(_, _))));
        assert!(matches!(
            validate_pfp(1, 1, vec![Tile::new(0, 0, 2, 1)]),
            Err(FloorplanError::OutOfBounds(_))
        ));
        assert!(matches!(
            validate_pfp(1, 1, vec![Tile::new(0, 0, 0, 1)]),
            Err(FloorplanError::EmptyTile(_))
        ));
        let f = validate_floorplan(2, 2, sq()).unwrap();
        assert_eq!(serde_json::to_value(&f).unwrap()["packed"], false);
    }
}
