//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's enumerators; only plain data types are borrowed.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use rat_core::diagram::{Letter, Word};
use rat_core::tableau::Entry;
use rat_core::tiling::{Tile, TileKind};

pub type Point = (i64, i64);
pub type Seg = (Point, Point);
/// `(α, β, q)` exponents.
pub type Exps = (u32, u32, u32);

fn step(l: Letter) -> Point {
    match l {
        Letter::D => (0, -1),
        Letter::E => (-1, 0),
        Letter::A => (-1, -1),
    }
}

fn seg(a: Point, b: Point) -> Seg {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Corners of a tile straight from the tile pictures.
pub fn corners(t: &Tile) -> [Point; 4] {
    let (i, j) = (t.anchor.i, t.anchor.j);
    match t.kind {
        TileKind::DE => [(i, j), (i - 1, j), (i - 1, j - 1), (i, j - 1)],
        TileKind::DA => [(i, j), (i, j - 1), (i - 1, j - 2), (i - 1, j - 1)],
        TileKind::AE => [(i, j), (i - 1, j), (i - 2, j - 1), (i - 1, j - 1)],
    }
}

fn sides(t: &Tile) -> Vec<Seg> {
    let c = corners(t);
    (0..4).map(|k| seg(c[k], c[(k + 1) % 4])).collect()
}

/// `(lower, upper)` horizontal sides.
fn horizontal(t: &Tile) -> Option<(Seg, Seg)> {
    let mut h: Vec<Seg> = sides(t).into_iter().filter(|s| s.0 .1 == s.1 .1).collect();
    if h.len() != 2 {
        return None;
    }
    h.sort_by_key(|s| s.0 .1);
    Some((h[0], h[1]))
}

/// `(right, left)` vertical sides.
fn vertical(t: &Tile) -> Option<(Seg, Seg)> {
    let mut v: Vec<Seg> = sides(t).into_iter().filter(|s| s.0 .0 == s.1 .0).collect();
    if v.len() != 2 {
        return None;
    }
    v.sort_by_key(|s| std::cmp::Reverse(s.0 .0));
    Some((v[0], v[1]))
}

/// Edges of the southeast boundary traced from the word, with letters.
pub fn boundary(w: &Word) -> Vec<(Letter, Seg)> {
    let mut at = (0, 0);
    w.letters()
        .iter()
        .map(|&l| {
            let (di, dj) = step(l);
            let next = (at.0 + di, at.1 + dj);
            let s = seg(at, next);
            at = next;
            (l, s)
        })
        .collect()
}

/// North strips (bottom to top) and west strips (right to left), found by
/// walking shared sides.
pub fn strips(w: &Word, tiles: &[Tile]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let walk = |start: Seg, sides: &dyn Fn(&Tile) -> Option<(Seg, Seg)>| {
        let mut out = Vec::new();
        let mut edge = start;
        while let Some(k) = tiles
            .iter()
            .position(|t| sides(t).map(|s| s.0) == Some(edge))
        {
            out.push(k);
            edge = sides(&tiles[k]).unwrap().1;
        }
        out
    };
    let b = boundary(w);
    let north = b
        .iter()
        .filter(|(l, _)| *l == Letter::E)
        .map(|(_, s)| walk(*s, &horizontal))
        .collect();
    let west = b
        .iter()
        .filter(|(l, _)| *l == Letter::D)
        .map(|(_, s)| walk(*s, &vertical))
        .collect();
    (north, west)
}

/// `(α exponent, β exponent, q exponent)` of a filling, or `None` if it
/// breaks a rule.
pub fn judge(w: &Word, tiles: &[Tile], fill: &[Entry]) -> Option<(u32, u32, u32)> {
    for (t, e) in tiles.iter().zip(fill) {
        let ok = match e {
            Entry::Empty => true,
            Entry::Alpha => t.kind != TileKind::DA,
            Entry::Beta => t.kind != TileKind::AE,
        };
        if !ok {
            return None;
        }
    }
    let (north, west) = strips(w, tiles);
    let mut shadowed = vec![false; tiles.len()];
    for (list, sym) in [(&north, Entry::Alpha), (&west, Entry::Beta)] {
        for s in list {
            if let Some(p) = s.iter().position(|&k| fill[k] == sym) {
                for &k in &s[p + 1..] {
                    if fill[k] != Entry::Empty {
                        return None;
                    }
                    shadowed[k] = true;
                }
            }
        }
    }
    let a = fill.iter().filter(|e| **e == Entry::Alpha).count();
    let b = fill.iter().filter(|e| **e == Entry::Beta).count();
    let q = (0..tiles.len())
        .filter(|&k| fill[k] == Entry::Empty && !shadowed[k])
        .count();
    Some(((w.k() + a) as u32, (w.l() + b) as u32, q as u32))
}

/// Every valid filling by trying all `3^area` assignments.
pub fn brute_force_fillings(w: &Word, tiles: &[Tile]) -> Vec<(BTreeMap<Tile, Entry>, Exps)> {
    let n = tiles.len();
    let total = 3usize.pow(n as u32);
    let symbols = [Entry::Empty, Entry::Alpha, Entry::Beta];
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let fill: Vec<Entry> = (0..n)
            .map(|_| {
                let e = symbols[c % 3];
                c /= 3;
                e
            })
            .collect();
        if let Some(wt) = judge(w, tiles, &fill) {
            out.push((tiles.iter().copied().zip(fill).collect(), wt));
        }
    }
    out
}

/// Multiset of weight exponents.
pub fn weight_counts(
    list: impl IntoIterator<Item = (u32, u32, u32)>,
) -> HashMap<(u32, u32, u32), usize> {
    let mut m = HashMap::new();
    for x in list {
        *m.entry(x).or_default() += 1;
    }
    m
}

/// Builds a tiling by exchanging adjacent inverted letters of the
/// boundary word, always taking the leftmost pair of the earliest kind in
/// `priority`.
pub fn greedy_peel(w: &Word, priority: [TileKind; 3]) -> Vec<Tile> {
    let mut cur: Vec<Letter> = w.letters().to_vec();
    let mut tiles = Vec::new();
    loop {
        let mut at = (0i64, 0i64);
        let mut candidates = Vec::new();
        for p in 0..cur.len().saturating_sub(1) {
            let kind = match (cur[p], cur[p + 1]) {
                (Letter::D, Letter::E) => Some(TileKind::DE),
                (Letter::D, Letter::A) => Some(TileKind::DA),
                (Letter::A, Letter::E) => Some(TileKind::AE),
                _ => None,
            };
            if let Some(k) = kind {
                candidates.push((p, k, at));
            }
            let (di, dj) = step(cur[p]);
            at = (at.0 + di, at.1 + dj);
        }
        let Some(&(p, kind, at)) = priority
            .iter()
            .find_map(|k| candidates.iter().find(|c| c.1 == *k))
        else {
            break;
        };
        tiles.push(Tile::new(kind, at.0, at.1));
        cur.swap(p, p + 1);
    }
    tiles.sort();
    tiles
}

/// Plane partitions in an `a × b` base with parts at most `c`.
pub fn plane_partitions(a: usize, b: usize, c: usize) -> u64 {
    fn go(cells: &mut Vec<usize>, k: usize, a: usize, b: usize, c: usize) -> u64 {
        if k == a * b {
            return 1;
        }
        let (i, j) = (k / b, k % b);
        let mut cap = c;
        if i > 0 {
            cap = cap.min(cells[k - b]);
        }
        if j > 0 {
            cap = cap.min(cells[k - 1]);
        }
        let mut total = 0;
        for v in 0..=cap {
            cells[k] = v;
            total += go(cells, k + 1, a, b, c);
        }
        total
    }
    if a == 0 || b == 0 {
        return 1;
    }
    go(&mut vec![0; a * b], 0, a, b, c)
}

/// Words of every length from 1 to `max`.
pub fn words_up_to(max: usize) -> Vec<Word> {
    (1..=max).flat_map(rat_core::diagram::all_words).collect()
}
