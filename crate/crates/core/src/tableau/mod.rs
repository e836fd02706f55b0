//! Fillings of tilings with α and β (rhombic alternative tableaux) and
//! their weights.

mod partition;
mod phi;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

pub use partition::{
    partition_function, refined_partition_function, refined_to_x, symbol_weight_of_word,
    weight_of_word, weight_of_word_with,
};
pub use phi::{phi_cases, weight_preserving_flip, PhiCase};

use crate::algebra::Polynomial;
use crate::limits::Limits;
use crate::tiling::{Strip, Tile, TileKind, Tiling};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    Empty,
    Alpha,
    Beta,
}

impl Entry {
    pub fn allowed_in(self, kind: TileKind) -> bool {
        match self {
            Entry::Empty => true,
            Entry::Alpha => kind != TileKind::DA,
            Entry::Beta => kind != TileKind::AE,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Entry::Empty => '.',
            Entry::Alpha => 'a',
            Entry::Beta => 'b',
        }
    }
}

/// A tiling with a symbol in every tile.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filling {
    tiling: Tiling,
    entries: BTreeMap<Tile, Entry>,
}

impl Filling {
    /// Fails unless `entries` has exactly the tiles of `tiling` as keys.
    /// Validity of the symbols is checked separately by [`is_valid_filling`].
    pub fn new(tiling: Tiling, entries: BTreeMap<Tile, Entry>) -> Result<Self> {
        if entries.len() != tiling.len() || !entries.keys().all(|t| tiling.contains(t)) {
            return Err(Error::Precondition(
                "filling entries must cover exactly the tiles of the tiling".into(),
            ));
        }
        Ok(Filling { tiling, entries })
    }

    pub fn empty(tiling: Tiling) -> Self {
        let entries = tiling.tiles().iter().map(|t| (*t, Entry::Empty)).collect();
        Filling { tiling, entries }
    }

    pub(crate) fn from_parts(tiling: Tiling, entries: BTreeMap<Tile, Entry>) -> Self {
        Filling { tiling, entries }
    }

    pub fn tiling(&self) -> &Tiling {
        &self.tiling
    }

    pub fn entries(&self) -> &BTreeMap<Tile, Entry> {
        &self.entries
    }

    pub fn entry(&self, tile: &Tile) -> Entry {
        self.entries.get(tile).copied().unwrap_or(Entry::Empty)
    }

    pub fn count(&self, e: Entry) -> usize {
        self.entries.values().filter(|x| **x == e).count()
    }

    /// Tiles strictly above an α in their north-strip or strictly left of
    /// a β in their west-strip.
    pub fn on_line(&self) -> Vec<Tile> {
        let mut out: Vec<Tile> = Vec::new();
        let (north, west) = (self.tiling.north_strips(), self.tiling.west_strips());
        for (strips, symbol) in [(&north, Entry::Alpha), (&west, Entry::Beta)] {
            for s in strips.iter() {
                if let Some(p) = s.tiles.iter().position(|t| self.entry(t) == symbol) {
                    out.extend(&s.tiles[p + 1..]);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(t, e)| format!("{t}={}", e.as_char()))
            .collect();
        write!(f, "{} [{}]", self.tiling.word(), parts.join(", "))
    }
}

/// Exponents of `α^alpha β^beta q^q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightMonomial {
    pub alpha: u32,
    pub beta: u32,
    pub q: u32,
}

impl WeightMonomial {
    pub fn to_polynomial(self) -> Polynomial {
        Polynomial::term([self.alpha, self.beta, self.q, 0], 1)
    }
}

impl fmt::Display for WeightMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// Exponent record of `q^t α^(n-r-i) β^(n-r-j)`, with `m = r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    /// North-strips without an α.
    pub i: usize,
    /// West-strips without a β.
    pub j: usize,
    /// q-weighted tiles.
    pub t: usize,
    pub m: usize,
}

impl NormalForm {
    pub fn monomial(&self, n: usize) -> WeightMonomial {
        WeightMonomial {
            alpha: (n - self.m - self.i) as u32,
            beta: (n - self.m - self.j) as u32,
            q: self.t as u32,
        }
    }
}

/// Checks the tile-type constraints and the emptiness of every tile above
/// an α in its north-strip and left of a β in its west-strip.
pub fn is_valid_filling(f: &Filling) -> bool {
    if !f.entries.iter().all(|(t, e)| e.allowed_in(t.kind)) {
        return false;
    }
    let check = |strips: Vec<Strip>, symbol: Entry| {
        strips.iter().all(
            |s| match s.tiles.iter().position(|t| f.entry(t) == symbol) {
                Some(p) => s.tiles[p + 1..].iter().all(|t| f.entry(t) == Entry::Empty),
                None => true,
            },
        )
    };
    check(f.tiling.north_strips(), Entry::Alpha) && check(f.tiling.west_strips(), Entry::Beta)
}

pub fn weight_of_filling(f: &Filling) -> WeightMonomial {
    let word = f.tiling.word();
    let alphas = f.count(Entry::Alpha);
    let betas = f.count(Entry::Beta);
    let lines = f.on_line().len();
    WeightMonomial {
        alpha: (word.k() + alphas) as u32,
        beta: (word.l() + betas) as u32,
        q: (f.tiling.len() - alphas - betas - lines) as u32,
    }
}

pub fn normal_form(f: &Filling) -> NormalForm {
    let word = f.tiling.word();
    let without = |strips: Vec<Strip>, e: Entry| {
        strips
            .iter()
            .filter(|s| s.tiles.iter().all(|t| f.entry(t) != e))
            .count()
    };
    let lines = f.on_line().len();
    NormalForm {
        i: without(f.tiling.north_strips(), Entry::Alpha),
        j: without(f.tiling.west_strips(), Entry::Beta),
        t: f.tiling.len() - f.count(Entry::Alpha) - f.count(Entry::Beta) - lines,
        m: word.r(),
    }
}

/// Strip structure of a tiling with tiles replaced by dense indices.
pub(crate) struct StripIndex {
    pub tiles: Vec<Tile>,
    pub north: Vec<Vec<usize>>,
    pub west: Vec<Vec<usize>>,
    /// `(strip, position)` of each tile in its north-strip.
    pub north_pos: Vec<Option<(usize, usize)>>,
}

impl StripIndex {
    pub fn new(t: &Tiling) -> Self {
        let tiles: Vec<Tile> = t.tiles().iter().copied().collect();
        let index: HashMap<Tile, usize> = tiles.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let dense = |strips: Vec<Strip>| -> Vec<Vec<usize>> {
            strips
                .into_iter()
                .map(|s| s.tiles.iter().map(|t| index[t]).collect())
                .collect()
        };
        let north = dense(t.north_strips());
        let west = dense(t.west_strips());
        let mut north_pos = vec![None; tiles.len()];
        for (s, strip) in north.iter().enumerate() {
            for (p, &ti) in strip.iter().enumerate() {
                north_pos[ti] = Some((s, p));
            }
        }
        StripIndex {
            tiles,
            north,
            west,
            north_pos,
        }
    }

    /// Calls `visit` with every valid choice of α position per north-strip
    /// and β position per west-strip.
    pub fn for_each(
        &self,
        limits: &Limits,
        mut visit: impl FnMut(&[Option<usize>], &[Option<usize>]),
    ) -> Result<()> {
        let mut alphas = vec![None; self.north.len()];
        let mut betas = vec![None; self.west.len()];
        let mut holds_alpha = vec![false; self.tiles.len()];
        let mut visited = 0usize;
        self.alpha_step(
            0,
            &mut alphas,
            &mut holds_alpha,
            &mut betas,
            &mut visited,
            limits,
            &mut visit,
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn alpha_step(
        &self,
        s: usize,
        alphas: &mut Vec<Option<usize>>,
        holds_alpha: &mut Vec<bool>,
        betas: &mut Vec<Option<usize>>,
        visited: &mut usize,
        limits: &Limits,
        visit: &mut impl FnMut(&[Option<usize>], &[Option<usize>]),
    ) -> Result<()> {
        if s == self.north.len() {
            let options: Vec<Vec<Option<usize>>> = (0..self.west.len())
                .map(|w| self.beta_options(w, alphas, holds_alpha))
                .collect();
            return self.beta_step(0, &options, alphas, betas, visited, limits, visit);
        }
        alphas[s] = None;
        self.alpha_step(s + 1, alphas, holds_alpha, betas, visited, limits, visit)?;
        for p in 0..self.north[s].len() {
            let ti = self.north[s][p];
            alphas[s] = Some(p);
            holds_alpha[ti] = true;
            self.alpha_step(s + 1, alphas, holds_alpha, betas, visited, limits, visit)?;
            holds_alpha[ti] = false;
        }
        alphas[s] = None;
        Ok(())
    }

    fn beta_options(
        &self,
        w: usize,
        alphas: &[Option<usize>],
        holds_alpha: &[bool],
    ) -> Vec<Option<usize>> {
        let strip = &self.west[w];
        let mut out = vec![None];
        for (b, &ti) in strip.iter().enumerate() {
            if holds_alpha[ti] || strip[b + 1..].iter().any(|&x| holds_alpha[x]) {
                continue;
            }
            if let Some((s, p)) = self.north_pos[ti] {
                if matches!(alphas[s], Some(a) if a < p) {
                    continue;
                }
            }
            out.push(Some(b));
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn beta_step(
        &self,
        w: usize,
        options: &[Vec<Option<usize>>],
        alphas: &[Option<usize>],
        betas: &mut Vec<Option<usize>>,
        visited: &mut usize,
        limits: &Limits,
        visit: &mut impl FnMut(&[Option<usize>], &[Option<usize>]),
    ) -> Result<()> {
        if w == self.west.len() {
            *visited += 1;
            if *visited > limits.max_fillings {
                return Err(Error::LimitExceeded {
                    what: "fillings",
                    limit: limits.max_fillings,
                    actual: *visited,
                });
            }
            visit(alphas, betas);
            return Ok(());
        }
        for &o in &options[w] {
            betas[w] = o;
            self.beta_step(w + 1, options, alphas, betas, visited, limits, visit)?;
        }
        betas[w] = None;
        Ok(())
    }

    /// `(#α, #β, #q)` of a choice.
    pub fn symbol_counts(
        &self,
        alphas: &[Option<usize>],
        betas: &[Option<usize>],
    ) -> (u32, u32, u32) {
        let mut busy = vec![false; self.tiles.len()];
        let mut na = 0;
        let mut nb = 0;
        for (strips, choice, count) in
            [(&self.north, alphas, &mut na), (&self.west, betas, &mut nb)]
        {
            for (strip, c) in strips.iter().zip(choice) {
                if let Some(p) = c {
                    *count += 1;
                    for &ti in &strip[*p..] {
                        busy[ti] = true;
                    }
                }
            }
        }
        let q = busy.iter().filter(|b| !**b).count() as u32;
        (na, nb, q)
    }

    pub fn entries(
        &self,
        alphas: &[Option<usize>],
        betas: &[Option<usize>],
    ) -> BTreeMap<Tile, Entry> {
        let mut entries: BTreeMap<Tile, Entry> =
            self.tiles.iter().map(|t| (*t, Entry::Empty)).collect();
        for (strips, choice, e) in [
            (&self.north, alphas, Entry::Alpha),
            (&self.west, betas, Entry::Beta),
        ] {
            for (strip, c) in strips.iter().zip(choice) {
                if let Some(p) = c {
                    entries.insert(self.tiles[strip[*p]], e);
                }
            }
        }
        entries
    }
}

/// Every valid filling of `t`.
pub fn enumerate_fillings(t: &Tiling, limits: &Limits) -> Result<Vec<Filling>> {
    limits.check_area(t.len())?;
    let index = StripIndex::new(t);
    let mut out = Vec::new();
    index.for_each(limits, |a, b| {
        out.push(Filling::from_parts(t.clone(), index.entries(a, b)));
    })?;
    Ok(out)
}

/// Number of valid fillings of `t`.
pub fn count_fillings(t: &Tiling, limits: &Limits) -> Result<usize> {
    limits.check_area(t.len())?;
    let mut n = 0;
    StripIndex::new(t).for_each(limits, |_, _| n += 1)?;
    Ok(n)
}
