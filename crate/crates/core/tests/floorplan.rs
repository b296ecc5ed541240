use std::collections::{BTreeMap, BTreeSet};

use baxter_core::floorplan::*;
use baxter_core::tlt::{enumerate_baxter_tlts, is_almost_complete, removal_trace, Cell};
use proptest::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Side {
    Top,
    Bottom,
    Left,
    Right,
}

/// Groups the (tile, side) incidences by the maximal segment carrying them. Two floorplans with
/// index-aligned tiles are R-equivalent iff these groupings agree.
fn incidence_classes(tiles: &[Tile], segs: &[Segment]) -> BTreeSet<BTreeSet<(usize, Side)>> {
    segs.iter()
        .map(|s| {
            let on = |line: usize, a: usize, b: usize, o: Orientation| {
                o == s.orientation && line == s.line && s.start <= a && b <= s.end
            };
            let mut class = BTreeSet::new();
            for (i, t) in tiles.iter().enumerate() {
                let sides = [
                    (Side::Top, on(t.y, t.x, t.right(), Orientation::Horizontal)),
                    (Side::Bottom, on(t.bottom(), t.x, t.right(), Orientation::Horizontal)),
                    (Side::Left, on(t.x, t.y, t.bottom(), Orientation::Vertical)),
                    (Side::Right, on(t.right(), t.y, t.bottom(), Orientation::Vertical)),
                ];
                class.extend(sides.into_iter().filter(|&(_, b)| b).map(|(side, _)| (i, side)));
            }
            class
        })
        .collect()
}

fn r_equivalent(a: &Floorplan, b_tiles: &[Tile], b_h: usize, b_w: usize) -> bool {
    incidence_classes(a.tiles(), &a.segments()) == incidence_classes(b_tiles, &segments(b_h, b_w, b_tiles))
}

fn t(x: usize, y: usize, w: usize, h: usize) -> Tile {
    Tile::new(x, y, w, h)
}

#[test]
fn segments_of_the_4_by_2_example() {
    let f = validate_pfp(
        4,
        2,
        vec![
            t(0, 0, 2, 1),
            t(0, 1, 1, 2),
            t(1, 1, 1, 1),
            t(1, 2, 1, 1),
            t(0, 3, 2, 1),
        ],
    )
    .unwrap();
    let segs = f.segments();
    let h: Vec<(usize, usize, usize)> = segs
        .iter()
        .filter(|s| s.orientation == Orientation::Horizontal)
        .map(|s| (s.line, s.start, s.end))
        .collect();
    let v: Vec<(usize, usize, usize)> = segs
        .iter()
        .filter(|s| s.orientation == Orientation::Vertical)
        .map(|s| (s.line, s.start, s.end))
        .collect();
    assert_eq!(h, vec![(0, 0, 2), (1, 0, 2), (2, 1, 2), (3, 0, 2), (4, 0, 2)]);
    assert_eq!(v, vec![(0, 0, 4), (1, 1, 3), (2, 0, 4)]);
}

#[test]
fn non_pfp_examples() {
    let bad: Vec<(usize, usize, Vec<Tile>)> = vec![
        (2, 2, vec![t(0, 0, 1, 1), t(1, 0, 1, 1), t(0, 1, 1, 1), t(1, 1, 1, 1)]),
        (2, 2, vec![t(0, 0, 1, 2), t(1, 0, 1, 2)]),
        (3, 1, vec![t(0, 0, 1, 2), t(0, 2, 1, 1)]),
        (2, 3, vec![t(0, 0, 1, 1), t(1, 0, 2, 1), t(0, 1, 2, 1), t(2, 1, 1, 1)]),
        (3, 2, vec![t(0, 0, 1, 1), t(0, 1, 1, 2), t(1, 0, 1, 2), t(1, 2, 1, 1)]),
        (
            3,
            3,
            vec![
                t(0, 0, 3, 1),
                t(0, 1, 1, 1),
                t(1, 1, 2, 1),
                t(0, 2, 2, 1),
                t(2, 2, 1, 1),
            ],
        ),
        (
            3,
            3,
            vec![
                t(0, 0, 1, 1),
                t(1, 0, 2, 1),
                t(0, 1, 2, 1),
                t(2, 1, 1, 1),
                t(0, 2, 1, 1),
                t(1, 2, 2, 1),
            ],
        ),
    ];
    for (h, w, tiles) in bad {
        let err = validate_pfp(h, w, tiles.clone()).unwrap_err();
        assert!(
            matches!(
                err,
                FloorplanError::WrongTileCount { .. } | FloorplanError::ForbiddenPattern(..)
            ),
            "{err}"
        );
    }
}

#[test]
fn observations_on_small_pfps() {
    for n in 1..=6 {
        for f in enumerate_pfps(n) {
            let (k, l) = (f.height(), f.width());
            let segs = f.segments();
            assert_eq!(segs.len(), k + l + 2);
            let h: Vec<usize> = segs
                .iter()
                .filter(|s| s.orientation == Orientation::Horizontal)
                .map(|s| s.line)
                .collect();
            let v: Vec<usize> = segs
                .iter()
                .filter(|s| s.orientation == Orientation::Vertical)
                .map(|s| s.line)
                .collect();
            assert_eq!(h, (0..=k).collect::<Vec<_>>());
            assert_eq!(v, (0..=l).collect::<Vec<_>>());
            assert!(validate_floorplan(k, l, f.tiles().to_vec()).is_ok());
            let corners: BTreeSet<(usize, usize)> = f.tiles().iter().map(|t| (t.x, t.y)).collect();
            assert!((0..k).all(|y| corners.iter().any(|c| c.1 == y)));
            assert!((0..l).all(|x| corners.iter().any(|c| c.0 == x)));
            for &(x, y) in &corners {
                if (x, y) == (0, 0) {
                    continue;
                }
                let above = corners.iter().any(|&(cx, cy)| cx == x && cy < y);
                let left = corners.iter().any(|&(cx, cy)| cy == y && cx < x);
                assert!(above != left, "{f:?}");
            }
        }
    }
}

#[test]
fn phi_f_is_a_bijection() {
    for n in 1..=6 {
        let image: Vec<PackedFloorplan> = {
            let mut v: Vec<PackedFloorplan> = enumerate_baxter_tlts(n).iter().map(|t| phi_f(t).unwrap()).collect();
            v.sort();
            v
        };
        assert_eq!(image, enumerate_pfps(n), "n = {n}");
        for f in enumerate_pfps(n) {
            assert_eq!(phi_f(&psi_f(&f)).unwrap(), f);
        }
    }
    for t in enumerate_baxter_tlts(7) {
        assert_eq!(psi_f(&phi_f(&t).unwrap()), t);
    }
}

#[test]
fn tile_order_is_point_order() {
    for n in 1..=6 {
        for f in enumerate_pfps(n) {
            let t = psi_f(&f);
            let points = removal_trace(&t).point_labels;
            for (tile, label) in tile_order(&f) {
                assert_eq!(points[&Cell::new(tile.y + 1, tile.x + 1)], label);
            }
        }
    }
}

#[test]
fn alternating_floorplans() {
    let counts: Vec<usize> = (1..=7)
        .map(|n| enumerate_pfps(n).iter().filter(|f| is_alternating(f)).count())
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 10, 25, 70]);
    for n in 1..=7 {
        let from_tlts: BTreeSet<PackedFloorplan> = enumerate_baxter_tlts(n)
            .iter()
            .filter(|t| is_almost_complete(t).unwrap())
            .map(|t| phi_f(t).unwrap())
            .collect();
        let direct: BTreeSet<PackedFloorplan> = enumerate_pfps(n).into_iter().filter(is_alternating).collect();
        assert_eq!(from_tlts, direct);
        for f in &direct {
            let h = f.height();
            let path: BTreeSet<(usize, usize)> = (0..=n + 1).map(|s| (s.div_ceil(2), h - s / 2)).collect();
            let below = f.tiles().iter().filter(|t| path.contains(&(t.x, t.y))).count();
            assert!(f
                .tiles()
                .iter()
                .all(|t| path.contains(&(t.x, t.y)) || path.contains(&(t.right(), t.bottom()))));
            assert_eq!(below, n / 2);
        }
    }
}

#[test]
fn pack_fixes_pfps() {
    for n in 1..=5 {
        for f in enumerate_pfps(n) {
            let trace = pack_with_trace(&f.to_floorplan()).unwrap();
            assert!(trace.steps.is_empty());
            assert_eq!(trace.result, f);
        }
    }
}

#[test]
fn pack_example() {
    // The middle-left tile sees the bottom-right one; one slide of the middle split fixes it.
    let f = validate_floorplan(
        3,
        3,
        vec![
            t(0, 0, 3, 1),
            t(0, 1, 1, 1),
            t(1, 1, 2, 1),
            t(0, 2, 2, 1),
            t(2, 2, 1, 1),
        ],
    )
    .unwrap();
    let trace = pack_with_trace(&f).unwrap();
    assert!(r_equivalent(
        &f,
        &trace.tiles,
        trace.result.height(),
        trace.result.width()
    ));
    assert_eq!(count_forbidden_pairs(f.tiles()), 1);
    assert_eq!(trace.steps.len(), 1);
    assert_eq!(
        trace.result.tiles(),
        &[
            t(0, 0, 3, 1),
            t(0, 1, 2, 1),
            t(2, 1, 1, 1),
            t(0, 2, 1, 1),
            t(1, 2, 2, 1)
        ]
    );
}

#[test]
fn pack_on_all_small_floorplans() {
    let mut outputs: BTreeMap<usize, BTreeSet<PackedFloorplan>> = BTreeMap::new();
    for f in brute_force_floorplans(5, 5) {
        let trace = pack_with_trace(&f).unwrap();
        let mut prev = count_forbidden_pairs(f.tiles());
        for s in &trace.steps {
            assert_eq!(s.forbidden_before, prev);
            assert!(s.forbidden_after < s.forbidden_before);
            prev = s.forbidden_after;
        }
        assert!(
            r_equivalent(&f, &trace.tiles, trace.result.height(), trace.result.width()),
            "{f:?}"
        );
        assert_eq!(pack(&trace.result.to_floorplan()).unwrap(), trace.result);
        outputs.entry(f.tiles().len()).or_default().insert(trace.result);
    }
    let counts: Vec<usize> = outputs.values().map(BTreeSet::len).collect();
    assert_eq!(counts, vec![1, 2, 6, 22, 92]);
}

fn arb_pfp() -> impl Strategy<Value = PackedFloorplan> {
    (1usize..=6).prop_flat_map(|n| {
        let all = enumerate_pfps(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn json_round_trip(f in arb_pfp()) {
        let text = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<PackedFloorplan>(&text).unwrap(), f.clone());
        let g: Floorplan = serde_json::from_str(&serde_json::to_string(&f.to_floorplan()).unwrap()).unwrap();
        prop_assert_eq!(g, f.to_floorplan());
    }

    #[test]
    fn stretched_pfps_pack_back(f in arb_pfp(), sx in 1usize..4, sy in 1usize..4) {
        let tiles: Vec<Tile> = f.tiles().iter().map(|t| Tile::new(t.x * sx, t.y * sy, t.w * sx, t.h * sy)).collect();
        let g = validate_floorplan(f.height() * sy, f.width() * sx, tiles).unwrap();
        prop_assert_eq!(pack(&g).unwrap(), f);
    }
}
