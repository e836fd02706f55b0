mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rat_core::closed_forms::macmahon_box;
use rat_core::diagram::{build_diagram, Letter, Word};
use rat_core::tiling::{
    apply_flip, enumerate_tilings, find_flips, flip_graph, height, maximal_tiling, minimal_tiling,
    paths_to_tiling, tiling_to_paths, FlipDirection, HexagonShape, Tile, TileKind, Tiling,
};
use rat_core::Limits;

fn tiles(t: &Tiling) -> Vec<Tile> {
    t.tiles().iter().copied().collect()
}

fn word_strategy(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(
        prop_oneof![Just(Letter::D), Just(Letter::A), Just(Letter::E)],
        1..=max,
    )
    .prop_map(Word::new)
}

#[test]
fn minimal_tiling_matches_ae_first_peel() {
    for w in common::words_up_to(7) {
        let d = build_diagram(&w);
        assert_eq!(
            tiles(&minimal_tiling(&d)),
            common::greedy_peel(&w, [TileKind::AE, TileKind::DE, TileKind::DA]),
            "{w}"
        );
    }
}

#[test]
fn maximal_tiling_matches_da_first_peel() {
    for w in common::words_up_to(7) {
        let d = build_diagram(&w);
        assert_eq!(
            tiles(&maximal_tiling(&d)),
            common::greedy_peel(&w, [TileKind::DA, TileKind::DE, TileKind::AE]),
            "{w}"
        );
    }
}

#[test]
fn strips_agree_with_side_walk() {
    for w in common::words_up_to(6) {
        let d = build_diagram(&w);
        for t in enumerate_tilings(&d, &Limits::default()).unwrap() {
            let list = tiles(&t);
            let (north, west) = common::strips(&w, &list);
            let ours: Vec<Vec<Tile>> = t.north_strips().into_iter().map(|s| s.tiles).collect();
            let theirs: Vec<Vec<Tile>> = north
                .iter()
                .map(|s| s.iter().map(|&k| list[k]).collect())
                .collect();
            assert_eq!(ours, theirs, "{w}");
            let ours: Vec<Vec<Tile>> = t.west_strips().into_iter().map(|s| s.tiles).collect();
            let theirs: Vec<Vec<Tile>> = west
                .iter()
                .map(|s| s.iter().map(|&k| list[k]).collect())
                .collect();
            assert_eq!(ours, theirs, "{w}");
        }
    }
}

#[test]
fn every_tiling_reaches_both_extremes() {
    for w in common::words_up_to(6) {
        let d = build_diagram(&w);
        let from_min: BTreeSet<_> = flip_graph(&minimal_tiling(&d), &Limits::default())
            .unwrap()
            .into_iter()
            .map(|(t, _)| tiles(&t))
            .collect();
        let from_max: BTreeSet<_> = flip_graph(&maximal_tiling(&d), &Limits::default())
            .unwrap()
            .into_iter()
            .map(|(t, _)| tiles(&t))
            .collect();
        assert_eq!(from_min, from_max, "{w}");
        assert!(from_min.contains(&tiles(&maximal_tiling(&d))));
    }
}

#[test]
fn box_tiling_counts_are_plane_partitions() {
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                if a + b + c == 0 {
                    continue;
                }
                let word = Word::concat(&[
                    &[Letter::D; 3][..a],
                    &[Letter::A; 3][..b],
                    &[Letter::E; 3][..c],
                ]);
                let n = enumerate_tilings(&build_diagram(&word), &Limits::default())
                    .unwrap()
                    .len() as u64;
                let pp = common::plane_partitions(a, b, c);
                assert_eq!(n, pp, "{word}");
                assert_eq!(macmahon_box(a, b, c), pp.into(), "{word}");
            }
        }
    }
}

#[test]
fn extremes_are_unique() {
    for w in common::words_up_to(6) {
        let d = build_diagram(&w);
        let all = enumerate_tilings(&d, &Limits::default()).unwrap();
        let no_up: Vec<_> = all
            .iter()
            .filter(|t| {
                find_flips(t)
                    .iter()
                    .all(|f| f.direction == FlipDirection::MaxToMin)
            })
            .collect();
        let no_down: Vec<_> = all
            .iter()
            .filter(|t| {
                find_flips(t)
                    .iter()
                    .all(|f| f.direction == FlipDirection::MinToMax)
            })
            .collect();
        assert_eq!(no_up.len(), 1, "{w}");
        assert_eq!(no_down.len(), 1, "{w}");
        assert_eq!(*no_up[0], maximal_tiling(&d));
        assert_eq!(*no_down[0], minimal_tiling(&d));
    }
}

#[test]
fn minimal_tiling_has_no_maximal_hexagon() {
    for w in common::words_up_to(7) {
        let t = minimal_tiling(&build_diagram(&w));
        for tile in t.tiles() {
            let a = tile.anchor;
            assert!(
                !HexagonShape::Maximal.tiles(a).iter().all(|x| t.contains(x)),
                "{w} at {tile}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn paths_round_trip(w in word_strategy(7)) {
        let d = build_diagram(&w);
        for t in enumerate_tilings(&d, &Limits::default()).unwrap() {
            let pc = tiling_to_paths(&t);
            prop_assert_eq!(paths_to_tiling(&d, &pc).unwrap(), t);
        }
    }

    #[test]
    fn slides_and_lifts_are_flips(w in word_strategy(7)) {
        let d = build_diagram(&w);
        for t in enumerate_tilings(&d, &Limits::default()).unwrap() {
            let pc = tiling_to_paths(&t);
            let flipped: BTreeSet<Vec<Tile>> = find_flips(&t)
                .iter()
                .map(|f| tiles(&apply_flip(&t, f.anchor).unwrap()))
                .collect();
            let moves: Vec<_> = pc.slides(&d).into_iter().chain(pc.lifts(&d)).collect();
            prop_assert_eq!(moves.len(), flipped.len());
            for (p, s) in moves {
                let u = paths_to_tiling(&d, &pc.swap_steps(p, s)).unwrap();
                prop_assert!(flipped.contains(&tiles(&u)));
            }
        }
    }

    #[test]
    fn height_is_flip_distance(w in word_strategy(7)) {
        let d = build_diagram(&w);
        for (t, dist) in flip_graph(&minimal_tiling(&d), &Limits::default()).unwrap() {
            prop_assert_eq!(height(&tiling_to_paths(&t)), dist);
        }
    }

    #[test]
    fn tile_count_is_area(w in word_strategy(8)) {
        let d = build_diagram(&w);
        prop_assert_eq!(minimal_tiling(&d).len(), w.inversions());
        prop_assert_eq!(maximal_tiling(&d).len(), w.inversions());
    }

    #[test]
    fn flips_invert(w in word_strategy(7)) {
        let d = build_diagram(&w);
        for t in enumerate_tilings(&d, &Limits::default()).unwrap() {
            for f in find_flips(&t) {
                let u = apply_flip(&t, f.anchor).unwrap();
                prop_assert_eq!(apply_flip(&u, f.anchor).unwrap(), t.clone());
            }
        }
    }
}
