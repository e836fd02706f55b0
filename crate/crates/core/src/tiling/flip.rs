//! Hexagon flips and the flip graph.

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::paths::{minimal_path_config, paths_to_tiling, tiling_to_paths};
use super::{Tile, TileKind, Tiling};
use crate::diagram::{LatticePoint, RhombicDiagram};
use crate::limits::Limits;
use crate::{Error, Result};

/// The two tilings of a unit hexagon, named by where they sit in the flip
/// order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HexagonShape {
    Minimal,
    Maximal,
}

impl HexagonShape {
    /// Tiles of the hexagon whose northeast corner is `anchor`, in the
    /// order AE, DE, DA for the minimal shape and DA, DE, AE for the
    /// maximal one.
    pub fn tiles(self, anchor: LatticePoint) -> [Tile; 3] {
        let (i, j) = (anchor.i, anchor.j);
        match self {
            HexagonShape::Minimal => [
                Tile::new(TileKind::AE, i, j - 1),
                Tile::new(TileKind::DE, i, j),
                Tile::new(TileKind::DA, i - 1, j),
            ],
            HexagonShape::Maximal => [
                Tile::new(TileKind::DA, i, j),
                Tile::new(TileKind::DE, i - 1, j - 1),
                Tile::new(TileKind::AE, i, j),
            ],
        }
    }

    pub fn other(self) -> HexagonShape {
        match self {
            HexagonShape::Minimal => HexagonShape::Maximal,
            HexagonShape::Maximal => HexagonShape::Minimal,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FlipDirection {
    MinToMax,
    MaxToMin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flip {
    pub anchor: LatticePoint,
    pub direction: FlipDirection,
}

impl Flip {
    pub fn from_shape(self) -> HexagonShape {
        match self.direction {
            FlipDirection::MinToMax => HexagonShape::Minimal,
            FlipDirection::MaxToMin => HexagonShape::Maximal,
        }
    }
}

/// Shape of the hexagon at `anchor` in `t`, if the three tiles are there.
pub fn hexagon_at(t: &Tiling, anchor: LatticePoint) -> Option<HexagonShape> {
    [HexagonShape::Minimal, HexagonShape::Maximal]
        .into_iter()
        .find(|s| s.tiles(anchor).iter().all(|tile| t.contains(tile)))
}

/// Every available flip, sorted by anchor.
pub fn find_flips(t: &Tiling) -> Vec<Flip> {
    let mut out: Vec<Flip> = t
        .tiles()
        .iter()
        .filter(|tile| tile.kind == TileKind::DE)
        .flat_map(|tile| {
            let a = tile.anchor;
            let min = hexagon_at(t, a)
                .filter(|s| *s == HexagonShape::Minimal)
                .map(|_| Flip {
                    anchor: a,
                    direction: FlipDirection::MinToMax,
                });
            let up = a.offset(1, 1);
            let max = hexagon_at(t, up)
                .filter(|s| *s == HexagonShape::Maximal)
                .map(|_| Flip {
                    anchor: up,
                    direction: FlipDirection::MaxToMin,
                });
            min.into_iter().chain(max)
        })
        .collect();
    out.sort();
    out
}

/// Re-tiles the hexagon at `anchor` with its other shape.
pub fn apply_flip(t: &Tiling, anchor: LatticePoint) -> Result<Tiling> {
    let shape = hexagon_at(t, anchor).ok_or(Error::NotAHexagon(anchor.i, anchor.j))?;
    let mut tiles: BTreeSet<Tile> = t.tiles().clone();
    for tile in shape.tiles(anchor) {
        tiles.remove(&tile);
    }
    tiles.extend(shape.other().tiles(anchor));
    Ok(Tiling::new_unchecked(t.diagram().clone(), tiles))
}

/// The tiling with no maximal hexagon: every path takes its west steps
/// first.
pub fn minimal_tiling(d: &RhombicDiagram) -> Tiling {
    paths_to_tiling(d, &minimal_path_config(d)).expect("minimal configuration is a tiling")
}

/// The tiling with no minimal hexagon, reached from the minimal tiling by
/// flipping minimal hexagons until none is left.
pub fn maximal_tiling(d: &RhombicDiagram) -> Tiling {
    let mut t = minimal_tiling(d);
    while let Some(f) = find_flips(&t)
        .into_iter()
        .find(|f| f.direction == FlipDirection::MinToMax)
    {
        t = apply_flip(&t, f.anchor).expect("hexagon was just found");
    }
    t
}

/// Breadth-first search of the flip graph from `start`, returning each
/// tiling with its flip distance from `start`.
pub fn flip_graph(start: &Tiling, limits: &Limits) -> Result<Vec<(Tiling, usize)>> {
    limits.check_area(start.len())?;
    let mut seen = HashMap::new();
    seen.insert(tiling_to_paths(start), ());
    let mut out = vec![(start.clone(), 0)];
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        let (cur, dist) = out[idx].clone();
        for f in find_flips(&cur) {
            let next = apply_flip(&cur, f.anchor)?;
            let key = tiling_to_paths(&next);
            if seen.insert(key, ()).is_none() {
                if out.len() >= limits.max_tilings {
                    return Err(Error::LimitExceeded {
                        what: "tilings",
                        limit: limits.max_tilings,
                        actual: out.len() + 1,
                    });
                }
                out.push((next, dist + 1));
                queue.push_back(out.len() - 1);
            }
        }
    }
    Ok(out)
}

/// All tilings of `d`, in breadth-first order from the minimal tiling.
pub fn enumerate_tilings(d: &RhombicDiagram, limits: &Limits) -> Result<Vec<Tiling>> {
    limits.check_area(d.area())?;
    let min = minimal_tiling(d);
    Ok(flip_graph(&min, limits)?
        .into_iter()
        .map(|(t, _)| t)
        .collect())
}
