use std::collections::BTreeMap;
use std::fmt::Write;

use baxter_core::floorplan::{tile_order, Tile};
use baxter_core::nilp::{LatticePath, Point};
use baxter_core::perm::Permutation;
use baxter_core::tlt::{Cell, TreeLikeTableau};

use crate::envelope::Object;

pub const CELL: i64 = 20;

pub fn ascii(obj: &Object) -> String {
    match obj {
        Object::Tlt(t) | Object::BaxterTlt(t) => tlt_ascii(t),
        Object::Pfp(f) => {
            let labels = tile_order(f);
            tiles_ascii(f.height(), f.width(), f.tiles(), |t| labels[t])
        }
        Object::Floorplan(f) => {
            let tiles = f.tiles();
            tiles_ascii(f.height(), f.width(), tiles, |t| {
                tiles.iter().position(|u| u == t).unwrap() + 1
            })
        }
        Object::Perm(s) => perm_ascii(s),
        Object::Nilp(p) => paths_ascii(&[('T', p.top()), ('M', p.middle()), ('B', p.bottom())]),
        Object::DyckPair(d) => paths_ascii(&[('U', &d.upper()), ('L', &d.lower())]),
    }
}

pub fn svg(obj: &Object) -> String {
    match obj {
        Object::Tlt(t) | Object::BaxterTlt(t) => tlt_svg(t),
        Object::Pfp(f) => {
            let labels = tile_order(f);
            tiles_svg(f.height(), f.width(), f.tiles(), |t| labels[t])
        }
        Object::Floorplan(f) => {
            let tiles = f.tiles();
            tiles_svg(f.height(), f.width(), tiles, |t| {
                tiles.iter().position(|u| u == t).unwrap() + 1
            })
        }
        Object::Perm(s) => perm_svg(s),
        Object::Nilp(p) => paths_svg(&[(p.top(), false), (p.middle(), true), (p.bottom(), true)]),
        Object::DyckPair(d) => paths_svg(&[(&d.upper(), false), (&d.lower(), false)]),
    }
}

fn tlt_ascii(t: &TreeLikeTableau) -> String {
    let shape = t.shape();
    let rule = |len: usize| format!("+{}\n", "---+".repeat(len));
    let mut out = String::new();
    for r in 1..=shape.num_rows() {
        out += &rule(shape.row_len(if r == 1 { 1 } else { r - 1 }));
        out.push('|');
        for c in 1..=shape.row_len(r) {
            out += if t.is_pointed(Cell::new(r, c)) {
                " ● |"
            } else {
                "   |"
            };
        }
        out.push('\n');
    }
    out += &rule(shape.row_len(shape.num_rows()));
    out
}

fn tiles_ascii(height: usize, width: usize, tiles: &[Tile], label: impl Fn(&Tile) -> usize) -> String {
    let (rows, cols) = (2 * height + 1, 4 * width + 1);
    let mut canvas = vec![vec![' '; cols]; rows];
    for t in tiles {
        let (x0, x1, y0, y1) = (4 * t.x, 4 * t.right(), 2 * t.y, 2 * t.bottom());
        for y in [y0, y1] {
            for ch in &mut canvas[y][x0..=x1] {
                if *ch != '+' {
                    *ch = '-';
                }
            }
        }
        for row in &mut canvas[y0..=y1] {
            for x in [x0, x1] {
                if row[x] != '+' {
                    row[x] = '|';
                }
            }
        }
        for (x, y) in [(x0, y0), (x1, y0), (x0, y1), (x1, y1)] {
            canvas[y][x] = '+';
        }
        let text = label(t).to_string();
        let y = y0 + t.h;
        let x = (x0 + x1 + 1 - text.len()) / 2;
        for (i, ch) in text.chars().enumerate() {
            canvas[y][x + i] = ch;
        }
    }
    canvas
        .into_iter()
        .map(|row| row.into_iter().collect::<String>().trim_end().to_string() + "\n")
        .collect()
}

fn perm_ascii(s: &Permutation) -> String {
    let n = s.len();
    let mut out = String::new();
    for v in (1..=n).rev() {
        let row: Vec<&str> = (1..=n).map(|i| if s.at(i) == v { "●" } else { "·" }).collect();
        let _ = writeln!(out, "{v:>2} {}", row.join(" "));
    }
    out
}

fn bounds(paths: &[&LatticePath]) -> (Point, Point) {
    let pts: Vec<Point> = paths.iter().flat_map(|p| p.points()).collect();
    let lo = (
        pts.iter().map(|p| p.0).min().unwrap(),
        pts.iter().map(|p| p.1).min().unwrap(),
    );
    let hi = (
        pts.iter().map(|p| p.0).max().unwrap(),
        pts.iter().map(|p| p.1).max().unwrap(),
    );
    (lo, hi)
}

/// Lattice points of each path marked with the path's letter, north up.
fn paths_ascii(paths: &[(char, &LatticePath)]) -> String {
    let (lo, hi) = bounds(&paths.iter().map(|p| p.1).collect::<Vec<_>>());
    let mut marks: BTreeMap<Point, char> = BTreeMap::new();
    for (ch, p) in paths {
        for pt in p.points() {
            marks.entry(pt).and_modify(|m| *m = '*').or_insert(*ch);
        }
    }
    let mut out = String::new();
    for y in (lo.1..=hi.1).rev() {
        let row: Vec<String> = (lo.0..=hi.0)
            .map(|x| marks.get(&(x, y)).copied().unwrap_or('·').to_string())
            .collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    for (ch, p) in paths {
        let _ = writeln!(out, "{ch}: {p}");
    }
    out
}

fn svg_open(w: i64, h: i64) -> String {
    format!("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n")
}

fn tlt_svg(t: &TreeLikeTableau) -> String {
    let shape = t.shape();
    let mut out = svg_open(CELL * shape.num_cols() as i64, CELL * shape.num_rows() as i64);
    for c in shape.cells() {
        let (x, y) = (CELL * (c.col as i64 - 1), CELL * (c.row as i64 - 1));
        let _ = writeln!(
            out,
            "<rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"white\" stroke=\"black\"/>"
        );
        if t.is_pointed(c) {
            let _ = writeln!(
                out,
                "<circle cx=\"{}\" cy=\"{}\" r=\"6\" fill=\"black\"/>",
                x + CELL / 2,
                y + CELL / 2
            );
        }
    }
    out + "</svg>\n"
}

fn tiles_svg(height: usize, width: usize, tiles: &[Tile], label: impl Fn(&Tile) -> usize) -> String {
    let mut out = svg_open(CELL * width as i64, CELL * height as i64);
    for t in tiles {
        let (x, y, w, h) = (
            CELL * t.x as i64,
            CELL * t.y as i64,
            CELL * t.w as i64,
            CELL * t.h as i64,
        );
        let _ = writeln!(
            out,
            "<rect x=\"{x}\" y=\"{y}\" width=\"{w}\" height=\"{h}\" fill=\"white\" stroke=\"black\"/>"
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"central\">{}</text>",
            x + w / 2,
            y + h / 2,
            label(t)
        );
    }
    out + "</svg>\n"
}

fn perm_svg(s: &Permutation) -> String {
    let n = s.len() as i64;
    let mut out = svg_open(CELL * n, CELL * n);
    for i in 1..=n {
        for v in 1..=n {
            let (x, y) = (CELL * (i - 1), CELL * (n - v));
            let _ = writeln!(
                out,
                "<rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"white\" stroke=\"gray\"/>"
            );
            if s.at(i as usize) as i64 == v {
                let _ = writeln!(
                    out,
                    "<circle cx=\"{}\" cy=\"{}\" r=\"6\" fill=\"black\"/>",
                    x + CELL / 2,
                    y + CELL / 2
                );
            }
        }
    }
    out + "</svg>\n"
}

/// Paths drawn with circled end points. Paths flagged `extended` also get the dashed E step
/// before their start and N step after their end.
fn paths_svg(paths: &[(&LatticePath, bool)]) -> String {
    let (mut lo, mut hi) = bounds(&paths.iter().map(|p| p.0).collect::<Vec<_>>());
    if paths.iter().any(|p| p.1) {
        lo.0 -= 1;
        hi.1 += 1;
    }
    let px = |p: Point| (CELL * (p.0 - lo.0 + 1), CELL * (hi.1 - p.1 + 1));
    let mut out = svg_open(CELL * (hi.0 - lo.0 + 2), CELL * (hi.1 - lo.1 + 2));
    let polyline = |pts: &[Point], dashed: bool| {
        let coords: Vec<String> = pts
            .iter()
            .map(|&p| {
                let (x, y) = px(p);
                format!("{x},{y}")
            })
            .collect();
        let dash = if dashed { " stroke-dasharray=\"4 3\"" } else { "" };
        format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"{dash}/>\n",
            coords.join(" ")
        )
    };
    for (p, extended) in paths {
        let (start, end) = (p.start, p.end());
        if *extended {
            out += &polyline(&[(start.0 - 1, start.1), start], true);
            out += &polyline(&[end, (end.0, end.1 + 1)], true);
        }
        if !p.is_empty() {
            out += &polyline(&p.points(), false);
        }
        for pt in [start, end] {
            let (x, y) = px(pt);
            let _ = writeln!(
                out,
                "<circle cx=\"{x}\" cy=\"{y}\" r=\"4\" fill=\"white\" stroke=\"black\"/>"
            );
        }
    }
    out + "</svg>\n"
}
