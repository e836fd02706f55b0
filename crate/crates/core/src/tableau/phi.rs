//! The weight-preserving flip φ on fillings.
//!
//! A hexagon meets one north-strip and one west-strip. Whether a north
//! line enters it from below and whether a west line enters it from the
//! right decide which local fillings are allowed; φ pairs the allowed
//! fillings of the minimal shape with those of the maximal shape so that
//! the outgoing lines and the symbol and q counts agree.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use super::{Entry, Filling};
use crate::diagram::LatticePoint;
use crate::tiling::{apply_flip, hexagon_at, HexagonShape, Tile};
use crate::{Error, Result};

use Entry::{Alpha as A, Beta as B, Empty as E};

/// One row of the φ table. `min` lists the entries of the AE, DE, DA
/// tiles of the minimal hexagon; `max` those of the DA, DE, AE tiles of
/// the maximal hexagon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PhiCase {
    pub north_in: bool,
    pub west_in: bool,
    pub min: [Entry; 3],
    pub max: [Entry; 3],
}

const fn case(north_in: bool, west_in: bool, min: [Entry; 3], max: [Entry; 3]) -> PhiCase {
    PhiCase {
        north_in,
        west_in,
        min,
        max,
    }
}

const CASES: [PhiCase; 12] = [
    case(false, false, [E, E, E], [E, E, E]),
    case(false, false, [E, B, E], [B, E, E]),
    case(false, false, [E, E, B], [E, B, E]),
    case(false, false, [A, E, E], [E, A, E]),
    case(false, false, [E, A, E], [E, E, A]),
    case(false, false, [A, E, B], [B, E, A]),
    case(false, false, [E, A, B], [E, B, A]),
    case(true, false, [E, E, B], [B, E, E]),
    case(true, false, [E, E, E], [E, E, E]),
    case(false, true, [A, E, E], [E, E, A]),
    case(false, true, [E, E, E], [E, E, E]),
    case(true, true, [E, E, E], [E, E, E]),
];

/// Outgoing north line, outgoing west line, #α, #β and #q of a local
/// filling, or `None` if it breaks a filling rule.
type Signature = (bool, bool, usize, usize, usize);

/// Positions (in the shape's tile order) of the north-strip tiles bottom
/// to top and of the west-strip tiles right to left.
fn local_strips(shape: HexagonShape) -> ([usize; 2], [usize; 2]) {
    match shape {
        HexagonShape::Minimal => ([0, 1], [1, 2]),
        HexagonShape::Maximal => ([1, 2], [0, 1]),
    }
}

fn signature(
    shape: HexagonShape,
    north_in: bool,
    west_in: bool,
    c: [Entry; 3],
) -> Option<Signature> {
    let kinds = shape.tiles(LatticePoint::ORIGIN).map(|t| t.kind);
    if !c.iter().zip(kinds).all(|(e, k)| e.allowed_in(k)) {
        return None;
    }
    let (north, west) = local_strips(shape);
    let mut on_line = [false; 3];
    let mut run = |order: [usize; 2], incoming: bool, symbol: Entry, other: Entry| {
        let mut line = incoming;
        for &i in &order {
            if line {
                on_line[i] = true;
            }
            if c[i] == other && line {
                return None;
            }
            if c[i] == symbol {
                if line {
                    return None;
                }
                line = true;
            }
        }
        Some(line)
    };
    let north_out = run(north, north_in, A, B)?;
    let west_out = run(west, west_in, B, A)?;
    if (0..3).any(|i| on_line[i] && c[i] != E) {
        return None;
    }
    let count = |x: Entry| c.iter().filter(|e| **e == x).count();
    let q = (0..3).filter(|&i| c[i] == E && !on_line[i]).count();
    Some((north_out, west_out, count(A), count(B), q))
}

fn validate(cases: &[PhiCase]) {
    for north_in in [false, true] {
        for west_in in [false, true] {
            let rows: Vec<&PhiCase> = cases
                .iter()
                .filter(|c| c.north_in == north_in && c.west_in == west_in)
                .collect();
            for shape in [HexagonShape::Minimal, HexagonShape::Maximal] {
                let valid: HashSet<[Entry; 3]> = all_local()
                    .filter(|c| signature(shape, north_in, west_in, *c).is_some())
                    .collect();
                let listed: HashSet<[Entry; 3]> = rows
                    .iter()
                    .map(|r| {
                        if shape == HexagonShape::Minimal {
                            r.min
                        } else {
                            r.max
                        }
                    })
                    .collect();
                assert_eq!(listed.len(), rows.len(), "φ table repeats a local filling");
                assert_eq!(
                    valid, listed,
                    "φ table does not cover the valid local fillings"
                );
            }
            for r in rows {
                assert_eq!(
                    signature(HexagonShape::Minimal, north_in, west_in, r.min),
                    signature(HexagonShape::Maximal, north_in, west_in, r.max),
                    "φ case {r:?} changes lines or weight"
                );
            }
        }
    }
}

fn all_local() -> impl Iterator<Item = [Entry; 3]> {
    let es = [E, A, B];
    (0..27).map(move |n| [es[n % 3], es[n / 3 % 3], es[n / 9]])
}

/// The φ table, checked on first use.
pub fn phi_cases() -> &'static [PhiCase] {
    static TABLE: OnceLock<Vec<PhiCase>> = OnceLock::new();
    TABLE.get_or_init(|| {
        validate(&CASES);
        CASES.to_vec()
    })
}

/// Flips the hexagon at `at` and rewrites its three entries by φ.
pub fn weight_preserving_flip(f: &Filling, at: LatticePoint) -> Result<Filling> {
    let t = f.tiling();
    let shape = hexagon_at(t, at).ok_or(Error::NotAHexagon(at.i, at.j))?;
    let tiles = shape.tiles(at);
    let local = tiles.map(|x| f.entry(&x));
    let (north, west) = local_strips(shape);
    let incoming = |strips: Vec<crate::tiling::Strip>, first: Tile, symbol: Entry| {
        strips
            .iter()
            .find_map(|s| s.tiles.iter().position(|x| *x == first).map(|p| (s, p)))
            .map(|(s, p)| s.tiles[..p].iter().any(|x| f.entry(x) == symbol))
            .unwrap_or(false)
    };
    let north_in = incoming(t.north_strips(), tiles[north[0]], A);
    let west_in = incoming(t.west_strips(), tiles[west[0]], B);
    let row = phi_cases()
        .iter()
        .find(|c| {
            c.north_in == north_in
                && c.west_in == west_in
                && local
                    == if shape == HexagonShape::Minimal {
                        c.min
                    } else {
                        c.max
                    }
        })
        .ok_or(Error::NoCaseMatch(at.i, at.j))?;
    let image = if shape == HexagonShape::Minimal {
        row.max
    } else {
        row.min
    };
    let flipped = apply_flip(t, at)?;
    let mut entries: BTreeMap<Tile, Entry> = f.entries().clone();
    for x in tiles {
        entries.remove(&x);
    }
    for (x, e) in shape.other().tiles(at).into_iter().zip(image) {
        entries.insert(x, e);
    }
    Ok(Filling::from_parts(flipped, entries))
}
