//! Tilings of Γ(W) by DE, DA and AE parallelograms.
//!
//! A tiling is stored as its tile set. Everything else (strips, the path
//! configuration, hexagons) is derived from it on demand.

mod flip;
mod paths;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

pub use flip::{
    apply_flip, enumerate_tilings, find_flips, flip_graph, hexagon_at, maximal_tiling,
    minimal_tiling, Flip, FlipDirection, HexagonShape,
};
pub use paths::{height, minimal_path_config, paths_to_tiling, tiling_to_paths, PathConfig, Step};

use crate::diagram::{Edge, LatticePoint, Letter, RhombicDiagram, Word};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TileKind {
    DE,
    DA,
    AE,
}

impl TileKind {
    /// Tile placed where `first` is immediately followed by `second`.
    pub fn of_pair(first: Letter, second: Letter) -> Option<TileKind> {
        match (first, second) {
            (Letter::D, Letter::E) => Some(TileKind::DE),
            (Letter::D, Letter::A) => Some(TileKind::DA),
            (Letter::A, Letter::E) => Some(TileKind::AE),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TileKind::DE => "DE",
            TileKind::DA => "DA",
            TileKind::AE => "AE",
        }
    }

    /// DE and AE tiles make up north-strips.
    pub fn in_north_strip(self) -> bool {
        matches!(self, TileKind::DE | TileKind::AE)
    }

    /// DE and DA tiles make up west-strips.
    pub fn in_west_strip(self) -> bool {
        matches!(self, TileKind::DE | TileKind::DA)
    }
}

/// A unit parallelogram, anchored at its northeast corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile {
    pub kind: TileKind,
    pub anchor: LatticePoint,
}

impl Tile {
    pub fn new(kind: TileKind, i: i64, j: i64) -> Self {
        Tile {
            kind,
            anchor: LatticePoint::new(i, j),
        }
    }

    /// Corners counterclockwise from the anchor.
    pub fn vertices(&self) -> [LatticePoint; 4] {
        let p = self.anchor;
        match self.kind {
            TileKind::DE => [p, p.offset(-1, 0), p.offset(-1, -1), p.offset(0, -1)],
            TileKind::AE => [p, p.offset(-1, 0), p.offset(-2, -1), p.offset(-1, -1)],
            TileKind::DA => [p, p.offset(-1, -1), p.offset(-1, -2), p.offset(0, -1)],
        }
    }

    /// `(bottom, top)` E-edges of a DE or AE tile.
    pub fn e_edges(&self) -> Option<(Edge, Edge)> {
        let p = self.anchor;
        match self.kind {
            TileKind::DE => Some((Edge::west(p.i, p.j - 1), Edge::west(p.i, p.j))),
            TileKind::AE => Some((Edge::west(p.i - 1, p.j - 1), Edge::west(p.i, p.j))),
            TileKind::DA => None,
        }
    }

    /// `(east, west)` D-edges of a DE or DA tile.
    pub fn d_edges(&self) -> Option<(Edge, Edge)> {
        let p = self.anchor;
        match self.kind {
            TileKind::DE => Some((Edge::south(p.i, p.j), Edge::south(p.i - 1, p.j))),
            TileKind::DA => Some((Edge::south(p.i, p.j), Edge::south(p.i - 1, p.j - 1))),
            TileKind::AE => None,
        }
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind.name(), self.anchor)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StripKind {
    North,
    West,
}

/// A maximal chain of tiles glued along E-edges (north) or D-edges (west).
///
/// North-strip tiles run bottom to top, west-strip tiles right to left.
/// `index` is the 1-based label of the boundary edge the strip starts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strip {
    pub kind: StripKind,
    pub index: usize,
    pub tiles: Vec<Tile>,
}

/// One tile removed while peeling a tiling from `p1` towards `p2`: the
/// tile and the word positions of the two letters it exchanges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub tile: Tile,
    pub first: usize,
    pub second: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tiling {
    diagram: RhombicDiagram,
    tiles: BTreeSet<Tile>,
}

impl Tiling {
    /// Checks that `tiles` covers the diagram exactly.
    pub fn new(diagram: RhombicDiagram, tiles: BTreeSet<Tile>) -> Result<Self> {
        peel(&diagram, &tiles)?;
        Ok(Tiling { diagram, tiles })
    }

    pub(crate) fn new_unchecked(diagram: RhombicDiagram, tiles: BTreeSet<Tile>) -> Self {
        debug_assert!(peel(&diagram, &tiles).is_ok());
        Tiling { diagram, tiles }
    }

    pub fn diagram(&self) -> &RhombicDiagram {
        &self.diagram
    }

    pub fn word(&self) -> &Word {
        self.diagram.word()
    }

    pub fn tiles(&self) -> &BTreeSet<Tile> {
        &self.tiles
    }

    pub fn contains(&self, tile: &Tile) -> bool {
        self.tiles.contains(tile)
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    /// Tiles in peeling order together with the letters they exchange.
    pub fn crossings(&self) -> Vec<Crossing> {
        peel(&self.diagram, &self.tiles).expect("tiling invariant")
    }

    pub fn north_strips(&self) -> Vec<Strip> {
        let by_bottom: HashMap<Edge, Tile> = self
            .tiles
            .iter()
            .filter_map(|t| t.e_edges().map(|(bottom, _)| (bottom, *t)))
            .collect();
        self.diagram
            .e_labels()
            .iter()
            .enumerate()
            .map(|(i, start)| {
                let mut tiles = Vec::new();
                let mut edge = *start;
                while let Some(t) = by_bottom.get(&edge) {
                    tiles.push(*t);
                    edge = t.e_edges().unwrap().1;
                }
                Strip {
                    kind: StripKind::North,
                    index: i + 1,
                    tiles,
                }
            })
            .collect()
    }

    pub fn west_strips(&self) -> Vec<Strip> {
        let by_east: HashMap<Edge, Tile> = self
            .tiles
            .iter()
            .filter_map(|t| t.d_edges().map(|(east, _)| (east, *t)))
            .collect();
        self.diagram
            .d_labels()
            .iter()
            .enumerate()
            .map(|(i, start)| {
                let mut tiles = Vec::new();
                let mut edge = *start;
                while let Some(t) = by_east.get(&edge) {
                    tiles.push(*t);
                    edge = t.d_edges().unwrap().1;
                }
                Strip {
                    kind: StripKind::West,
                    index: i + 1,
                    tiles,
                }
            })
            .collect()
    }
}

/// North-strips and west-strips of `t`.
pub fn strips(t: &Tiling) -> (Vec<Strip>, Vec<Strip>) {
    (t.north_strips(), t.west_strips())
}

/// Removes tiles one at a time from the southeast boundary. Each removal
/// exchanges an adjacent inverted pair of the current boundary word; a
/// tile set is a tiling iff this reaches `p2` with no tile left over.
fn peel(diagram: &RhombicDiagram, tiles: &BTreeSet<Tile>) -> Result<Vec<Crossing>> {
    let word = diagram.word();
    if tiles.len() != word.inversions() {
        return Err(Error::InvalidTiling);
    }
    let mut current: Vec<(Letter, usize)> = word
        .letters()
        .iter()
        .copied()
        .enumerate()
        .map(|(i, l)| (l, i))
        .collect();
    let mut remaining = tiles.clone();
    let mut out = Vec::with_capacity(tiles.len());
    while !remaining.is_empty() {
        let mut at = LatticePoint::ORIGIN;
        let mut removed = None;
        for p in 0..current.len().saturating_sub(1) {
            let (a, b) = (current[p].0, current[p + 1].0);
            if let Some(kind) = TileKind::of_pair(a, b) {
                let tile = Tile { kind, anchor: at };
                if remaining.remove(&tile) {
                    removed = Some((p, tile));
                    break;
                }
            }
            at = at.step(a);
        }
        let (p, tile) = removed.ok_or(Error::InvalidTiling)?;
        out.push(Crossing {
            tile,
            first: current[p].1,
            second: current[p + 1].1,
        });
        current.swap(p, p + 1);
    }
    Ok(out)
}

/// For each tile, the word positions of the letters it exchanges.
pub fn tile_letters(t: &Tiling) -> BTreeMap<Tile, (usize, usize)> {
    t.crossings()
        .into_iter()
        .map(|c| (c.tile, (c.first, c.second)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{all_words, build_diagram};

    fn min(s: &str) -> Tiling {
        minimal_tiling(&build_diagram(&s.parse().unwrap()))
    }

    #[test]
    fn dae_minimal_tiles() {
        let t = min("DAE");
        let expected: BTreeSet<Tile> = [
            Tile::new(TileKind::AE, 0, -1),
            Tile::new(TileKind::DE, 0, 0),
            Tile::new(TileKind::DA, -1, 0),
        ]
        .into_iter()
        .collect();
        assert_eq!(t.tiles(), &expected);
    }

    #[test]
    fn peel_rejects_bad_sets() {
        let d = build_diagram(&"DAE".parse().unwrap());
        let mut tiles = min("DAE").tiles().clone();
        tiles.remove(&Tile::new(TileKind::DE, 0, 0));
        assert_eq!(
            Tiling::new(d.clone(), tiles.clone()),
            Err(Error::InvalidTiling)
        );
        tiles.insert(Tile::new(TileKind::DE, -5, -5));
        assert_eq!(Tiling::new(d, tiles), Err(Error::InvalidTiling));
    }

    #[test]
    fn single_tile_strips() {
        let t = min("DE");
        let (north, west) = strips(&t);
        assert_eq!(north.len(), 1);
        assert_eq!(west.len(), 1);
        assert_eq!(north[0].tiles, west[0].tiles);
        assert_eq!(north[0].tiles.len(), 1);
    }

    #[test]
    fn strip_lengths_match_letter_counts() {
        for word in all_words(6) {
            let d = build_diagram(&word);
            let t = minimal_tiling(&d);
            let (north, west) = strips(&t);
            let letters = word.letters();
            for (strip, pos) in north.iter().zip(word.positions(Letter::E)) {
                let before = letters[..pos].iter().filter(|&&l| l != Letter::E).count();
                assert_eq!(strip.tiles.len(), before, "{word}");
                assert!(strip.tiles.iter().all(|t| t.kind.in_north_strip()));
            }
            for (strip, pos) in west.iter().zip(word.positions(Letter::D)) {
                let after = letters[pos + 1..]
                    .iter()
                    .filter(|&&l| l != Letter::D)
                    .count();
                assert_eq!(strip.tiles.len(), after, "{word}");
                assert!(strip.tiles.iter().all(|t| t.kind.in_west_strip()));
            }
            // every DE tile in one strip of each kind, AE only north, DA only west
            let north_tiles: Vec<Tile> = north.iter().flat_map(|s| s.tiles.clone()).collect();
            let west_tiles: Vec<Tile> = west.iter().flat_map(|s| s.tiles.clone()).collect();
            for tile in t.tiles() {
                let n = north_tiles.iter().filter(|x| *x == tile).count();
                let w = west_tiles.iter().filter(|x| *x == tile).count();
                match tile.kind {
                    TileKind::DE => assert_eq!((n, w), (1, 1)),
                    TileKind::AE => assert_eq!((n, w), (1, 0)),
                    TileKind::DA => assert_eq!((n, w), (0, 1)),
                }
            }
        }
    }

    #[test]
    fn ddee_north_strips_have_two_tiles() {
        let d = build_diagram(&"DDEE".parse().unwrap());
        for t in enumerate_tilings(&d, &Default::default()).unwrap() {
            let north = t.north_strips();
            assert_eq!(north[0].tiles.len(), 2);
            assert_eq!(north[1].tiles.len(), 2);
        }
    }

    #[test]
    fn crossings_pair_inverted_letters() {
        let t = min("DAADDEDAE");
        let word = t.word().clone();
        let crossings = t.crossings();
        assert_eq!(crossings.len(), 18);
        let mut pairs: Vec<(usize, usize)> =
            crossings.iter().map(|c| (c.first, c.second)).collect();
        pairs.sort();
        let mut expected = Vec::new();
        for a in 0..word.len() {
            for b in a + 1..word.len() {
                if word.letters()[a].inverts(word.letters()[b]) {
                    expected.push((a, b));
                }
            }
        }
        assert_eq!(pairs, expected);
    }
}
