//! Multi-Catalan tableaux: the q = 0 objects, and the unraveling map from
//! q = 0 fillings of minimal tilings.
//!
//! A tableau of type `W` has a row for every D or A of `W` (top to bottom
//! in word order) and a column for every E or A (right to left in word
//! order). The box in row `a` and column `b` exists iff `a < b`, so a box
//! lies right of `(a, b)` when its column sits strictly between `a` and
//! `b`, and below it when its row does.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::diagram::{build_diagram, EdgeKind, Letter, Word};
use crate::limits::Limits;
use crate::tableau::{enumerate_fillings, weight_of_filling, Entry, Filling};
use crate::tiling::{minimal_tiling, TileKind};
use crate::{Error, Result};

/// Box address: word positions of its row letter and column letter.
pub type BoxId = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MCTableau {
    word: Word,
    entries: BTreeMap<BoxId, Entry>,
}

fn rows_of(w: &Word) -> Vec<usize> {
    (0..w.len())
        .filter(|&p| w.letters()[p] != Letter::E)
        .collect()
}

fn cols_of(w: &Word) -> Vec<usize> {
    (0..w.len())
        .filter(|&p| w.letters()[p] != Letter::D)
        .collect()
}

fn boxes_of(w: &Word) -> Vec<BoxId> {
    let cols = cols_of(w);
    rows_of(w)
        .into_iter()
        .flat_map(|a| cols.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
        .collect()
}

impl MCTableau {
    /// Fails unless `entries` has exactly the boxes of the shape of `word`.
    pub fn new(word: Word, entries: BTreeMap<BoxId, Entry>) -> Result<Self> {
        let boxes: BTreeSet<BoxId> = boxes_of(&word).into_iter().collect();
        if entries.keys().copied().collect::<BTreeSet<_>>() != boxes {
            return Err(Error::Precondition(
                "entries must cover exactly the boxes of the shape".into(),
            ));
        }
        Ok(MCTableau { word, entries })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn entries(&self) -> &BTreeMap<BoxId, Entry> {
        &self.entries
    }

    pub fn entry(&self, b: BoxId) -> Entry {
        self.entries.get(&b).copied().unwrap_or(Entry::Empty)
    }

    /// Row letters' positions, top to bottom.
    pub fn rows(&self) -> Vec<usize> {
        rows_of(&self.word)
    }

    /// Column letters' positions, right to left.
    pub fn columns(&self) -> Vec<usize> {
        cols_of(&self.word)
    }

    /// Row lengths, top to bottom.
    pub fn shape(&self) -> Vec<usize> {
        let cols = self.columns();
        self.rows()
            .iter()
            .map(|&a| cols.iter().filter(|&&b| b > a).count())
            .collect()
    }

    /// Labelled steps of the southeast boundary from northeast to
    /// southwest. Each A gives a west step followed by a south step.
    pub fn boundary(&self) -> Vec<(EdgeKind, Letter)> {
        self.word
            .letters()
            .iter()
            .flat_map(|&l| match l {
                Letter::D => vec![(EdgeKind::South, l)],
                Letter::E => vec![(EdgeKind::West, l)],
                Letter::A => vec![(EdgeKind::West, l), (EdgeKind::South, l)],
            })
            .collect()
    }

    pub fn box_kind(&self, b: BoxId) -> (Letter, Letter) {
        (self.word.letters()[b.0], self.word.letters()[b.1])
    }

    /// Whether the rules leave box `b` no choice but to be empty.
    pub fn forced_empty(&self, b: BoxId) -> bool {
        forced_empty(&self.word, &self.entries, b)
    }
}

/// Reads the type back off a boundary path.
pub fn type_of_boundary(steps: &[(EdgeKind, Letter)]) -> Word {
    let mut out = Vec::new();
    let mut i = 0;
    while i < steps.len() {
        out.push(steps[i].1);
        i += if steps[i].1 == Letter::A { 2 } else { 1 };
    }
    Word::new(out)
}

impl fmt::Display for MCTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = self.columns();
        for (i, a) in self.rows().into_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: String = cols
                .iter()
                .rev()
                .map(|&b| {
                    if b <= a {
                        ' '
                    } else if self.box_kind((a, b)) == (Letter::A, Letter::A) {
                        'x'
                    } else {
                        self.entry((a, b)).as_char()
                    }
                })
                .collect();
            write!(
                f,
                "{}|{}",
                line.trim_start(),
                self.word.letters()[a].as_char()
            )?;
        }
        Ok(())
    }
}

fn symbol_allowed(kind: (Letter, Letter), e: Entry) -> bool {
    matches!(
        (kind, e),
        (_, Entry::Empty)
            | ((Letter::D, Letter::E), _)
            | ((Letter::D, Letter::A), Entry::Beta)
            | ((Letter::A, Letter::E), Entry::Alpha)
    )
}

fn forced_empty(w: &Word, entries: &BTreeMap<BoxId, Entry>, (a, b): BoxId) -> bool {
    let letters = w.letters();
    if letters[a] == Letter::A && letters[b] == Letter::A {
        return true;
    }
    (a + 1..b).any(|c| {
        let l = letters[c];
        (l != Letter::D && entries.get(&(a, c)) == Some(&Entry::Beta))
            || (l != Letter::E && entries.get(&(c, b)) == Some(&Entry::Alpha))
            || l == Letter::A
    })
}

/// Validity of the entries in row `a` alone.
fn row_valid(w: &Word, entries: &BTreeMap<BoxId, Entry>, a: usize) -> bool {
    (a + 1..w.len())
        .filter(|&b| w.letters()[b] != Letter::D)
        .all(|b| box_valid(w, entries, (a, b)))
}

fn box_valid(w: &Word, entries: &BTreeMap<BoxId, Entry>, b: BoxId) -> bool {
    let e = entries.get(&b).copied().unwrap_or(Entry::Empty);
    let kind = (w.letters()[b.0], w.letters()[b.1]);
    if !symbol_allowed(kind, e) {
        return false;
    }
    let fillable = kind != (Letter::A, Letter::A);
    if forced_empty(w, entries, b) {
        e == Entry::Empty
    } else {
        !fillable || e != Entry::Empty
    }
}

pub fn is_valid_mct(t: &MCTableau) -> bool {
    boxes_of(&t.word)
        .into_iter()
        .all(|b| box_valid(&t.word, &t.entries, b))
}

/// Every multi-Catalan tableau of type `w`. Rows are filled bottom to
/// top and each row right to left; once the boxes below and to the
/// right are known, a box is either forced empty or has one choice,
/// except a DE box, which takes α or β.
pub fn enumerate_mct(w: &Word, limits: &Limits) -> Result<Vec<MCTableau>> {
    let order: Vec<BoxId> = {
        let mut b = boxes_of(w);
        b.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        b
    };
    let mut out = Vec::new();
    let mut entries = BTreeMap::new();
    fill(w, &order, 0, &mut entries, &mut out, limits)?;
    Ok(out)
}

fn fill(
    w: &Word,
    order: &[BoxId],
    i: usize,
    entries: &mut BTreeMap<BoxId, Entry>,
    out: &mut Vec<MCTableau>,
    limits: &Limits,
) -> Result<()> {
    if i == order.len() {
        if out.len() >= limits.max_fillings {
            return Err(Error::LimitExceeded {
                what: "fillings",
                limit: limits.max_fillings,
                actual: out.len() + 1,
            });
        }
        out.push(MCTableau {
            word: w.clone(),
            entries: entries.clone(),
        });
        return Ok(());
    }
    let b = order[i];
    let options: &[Entry] = if forced_empty(w, entries, b) {
        &[Entry::Empty]
    } else {
        match (w.letters()[b.0], w.letters()[b.1]) {
            (Letter::D, Letter::E) => &[Entry::Alpha, Entry::Beta],
            (Letter::D, Letter::A) => &[Entry::Beta],
            (Letter::A, Letter::E) => &[Entry::Alpha],
            _ => &[Entry::Empty],
        }
    };
    for &e in options {
        entries.insert(b, e);
        fill(w, order, i + 1, entries, out, limits)?;
    }
    entries.remove(&b);
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MCTWeight {
    pub alpha: u32,
    pub beta: u32,
}

/// Symbols times `α^k β^(n-k-r)`.
pub fn mct_weight(t: &MCTableau) -> MCTWeight {
    let count = |e: Entry| t.entries.values().filter(|x| **x == e).count() as u32;
    MCTWeight {
        alpha: t.word.k() as u32 + count(Entry::Alpha),
        beta: t.word.l() as u32 + count(Entry::Beta),
    }
}

/// A filling of a minimal tiling redrawn as a tableau: D-rows from the
/// west-strips, A-rows for the remaining row letters, E-columns from the
/// north-strips and A-columns for the DA tiles, with the A-columns to the
/// left of every E-column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unraveled {
    pub word: Word,
    /// Row letters, top to bottom.
    pub rows: Vec<usize>,
    /// E-columns then A-columns, each right to left.
    pub columns: Vec<usize>,
    pub entries: BTreeMap<BoxId, Entry>,
    /// Boxes standing for A-row/A-column squares, holding nothing.
    pub placeholders: BTreeSet<BoxId>,
}

impl Unraveled {
    fn column_rows(&self, c: usize) -> Vec<usize> {
        self.rows
            .iter()
            .copied()
            .filter(|&a| self.entries.contains_key(&(a, c)) || self.placeholders.contains(&(a, c)))
            .collect()
    }

    /// Whether the row right below the last box of every A-column is an
    /// A-row.
    pub fn a_columns_rest_on_a_rows(&self) -> bool {
        let letters = self.word.letters();
        self.columns
            .iter()
            .filter(|&&c| letters[c] == Letter::A)
            .all(|&c| {
                let rows = self.column_rows(c);
                let next = match rows.last() {
                    Some(last) => self.rows.iter().position(|r| r == last).map(|i| i + 1),
                    None => Some(0),
                };
                matches!(next.and_then(|i| self.rows.get(i)), Some(&r) if letters[r] == Letter::A)
            })
    }

    /// Per D-row, the numbers of DE boxes and DA boxes.
    pub fn d_row_profile(&self) -> Vec<(usize, usize)> {
        let letters = self.word.letters();
        self.rows
            .iter()
            .filter(|&&a| letters[a] == Letter::D)
            .map(|&a| {
                let count = |l: Letter| {
                    self.entries
                        .keys()
                        .filter(|(r, c)| *r == a && letters[*c] == l)
                        .count()
                };
                (count(Letter::E), count(Letter::A))
            })
            .collect()
    }
}

fn check_minimal(f: &Filling) -> Result<()> {
    if *f.tiling() != minimal_tiling(f.tiling().diagram()) {
        return Err(Error::NotMinimalTiling);
    }
    Ok(())
}

/// Redraws a filling of the minimal tiling as a tableau, keeping every
/// symbol in the box of the two letters its tile exchanges.
pub fn unravel(f: &Filling) -> Result<Unraveled> {
    check_minimal(f)?;
    let word = f.tiling().word().clone();
    let letters = word.letters();
    let mut entries = BTreeMap::new();
    for c in f.tiling().crossings() {
        entries.insert((c.first, c.second), f.entry(&c.tile));
    }
    let placeholders = boxes_of(&word)
        .into_iter()
        .filter(|&(a, b)| letters[a] == Letter::A && letters[b] == Letter::A)
        .collect();
    let mut columns = word.positions(Letter::E);
    columns.extend(word.positions(Letter::A));
    Ok(Unraveled {
        rows: rows_of(&word),
        columns,
        word,
        entries,
        placeholders,
    })
}

/// The bijection from q = 0 fillings of the minimal tiling to
/// multi-Catalan tableaux. A β of a DA tile moves, within its row, to the
/// right-most empty box that keeps the row valid.
pub fn rat_to_mct(f: &Filling) -> Result<MCTableau> {
    check_minimal(f)?;
    if weight_of_filling(f).q != 0 {
        return Err(Error::NotQZero);
    }
    let u = unravel(f)?;
    let word = u.word.clone();
    let letters = word.letters();
    let mut entries: BTreeMap<BoxId, Entry> = boxes_of(&word)
        .into_iter()
        .map(|b| (b, Entry::Empty))
        .collect();
    let mut moving = Vec::new();
    for (&(a, b), &e) in &u.entries {
        if e == Entry::Beta && letters[b] == Letter::A {
            moving.push(a);
        } else {
            entries.insert((a, b), e);
        }
    }
    let cols = cols_of(&word);
    for a in moving {
        let target = cols.iter().filter(|&&b| b > a).find(|&&b| {
            if entries[&(a, b)] != Entry::Empty {
                return false;
            }
            entries.insert((a, b), Entry::Beta);
            let ok = row_valid(&word, &entries, a);
            entries.insert((a, b), Entry::Empty);
            ok
        });
        match target {
            Some(&b) => {
                entries.insert((a, b), Entry::Beta);
            }
            None => {
                return Err(Error::BijectionFailure(format!(
                    "{word}: no box for the β of row {a}"
                )))
            }
        }
    }
    let t = MCTableau { word, entries };
    if !is_valid_mct(&t) {
        return Err(Error::BijectionFailure(t.word.to_string()));
    }
    Ok(t)
}

/// q = 0 fillings of the minimal tiling of Γ(w).
pub fn q_zero_fillings(w: &Word, limits: &Limits) -> Result<Vec<Filling>> {
    let t = minimal_tiling(&build_diagram(w));
    Ok(enumerate_fillings(&t, limits)?
        .into_iter()
        .filter(|f| weight_of_filling(f).q == 0)
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordBijection {
    pub word: Word,
    pub rat_count: usize,
    pub mct_count: usize,
    pub injective: bool,
    pub weights_match: bool,
}

impl WordBijection {
    pub fn ok(&self) -> bool {
        self.injective && self.weights_match && self.rat_count == self.mct_count
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub n: usize,
    pub r: usize,
    pub words: Vec<WordBijection>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.words.iter().all(WordBijection::ok)
    }

    pub fn total(&self) -> usize {
        self.words.iter().map(|w| w.mct_count).sum()
    }
}

/// Runs `rat_to_mct` on every q = 0 filling of every word of the sector
/// and compares images with direct enumeration.
pub fn verify_bijection(n: usize, r: usize, limits: &Limits) -> Result<BijectionReport> {
    let mut words = Vec::new();
    for w in Word::sector(n, r) {
        let images = q_zero_fillings(&w, limits)?
            .iter()
            .map(|f| Ok((rat_to_mct(f)?, weight_of_filling(f))))
            .collect::<Result<Vec<_>>>()?;
        let direct = enumerate_mct(&w, limits)?;
        let distinct: BTreeSet<Vec<(BoxId, Entry)>> = images
            .iter()
            .map(|(t, _)| t.entries.iter().map(|(b, e)| (*b, *e)).collect())
            .collect();
        let mut from_rat: Vec<MCTWeight> = images
            .iter()
            .map(|(t, wt)| {
                let m = mct_weight(t);
                debug_assert_eq!((m.alpha, m.beta), (wt.alpha, wt.beta));
                MCTWeight {
                    alpha: wt.alpha,
                    beta: wt.beta,
                }
            })
            .collect();
        let mut from_direct: Vec<MCTWeight> = direct.iter().map(mct_weight).collect();
        from_rat.sort();
        from_direct.sort();
        let image_weights_ok = images.iter().all(|(t, wt)| {
            let m = mct_weight(t);
            (m.alpha, m.beta) == (wt.alpha, wt.beta)
        });
        words.push(WordBijection {
            injective: distinct.len() == images.len(),
            weights_match: image_weights_ok && from_rat == from_direct,
            rat_count: images.len(),
            mct_count: direct.len(),
            word: w,
        });
    }
    Ok(BijectionReport { n, r, words })
}

/// Whether a tile kind and a box kind carry the same letters.
pub fn tile_matches_box(kind: TileKind, b: (Letter, Letter)) -> bool {
    matches!(
        (kind, b),
        (TileKind::DE, (Letter::D, Letter::E))
            | (TileKind::DA, (Letter::D, Letter::A))
            | (TileKind::AE, (Letter::A, Letter::E))
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{mct_count, mct_count_by_k};
    use crate::diagram::all_words;
    use num_bigint::BigUint;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn dae_single_tableau() {
        let all = enumerate_mct(&word("DAE"), &lim()).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(mct_weight(&all[0]), MCTWeight { alpha: 2, beta: 2 });
        let f = q_zero_fillings(&word("DAE"), &lim()).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(rat_to_mct(&f[0]).unwrap(), all[0]);
    }

    #[test]
    fn sorted_word_is_empty() {
        let w = word("EEAADDD");
        let all = enumerate_mct(&w, &lim()).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all[0].entries().values().all(|e| *e == Entry::Empty));
        assert_eq!(mct_weight(&all[0]), MCTWeight { alpha: 3, beta: 2 });
    }

    #[test]
    fn shape_and_boundary() {
        for n in 1..=5 {
            for w in all_words(n) {
                let t = &enumerate_mct(&w, &lim()).unwrap()[0];
                let shape = t.shape();
                assert!(shape.windows(2).all(|p| p[0] >= p[1]));
                assert_eq!(shape.len(), w.k() + w.r());
                assert!(shape.iter().all(|&s| s <= n - w.k()));
                assert_eq!(type_of_boundary(&t.boundary()), w);
                let corners = t
                    .boundary()
                    .windows(2)
                    .filter(|p| {
                        p[0] == (EdgeKind::West, Letter::A) && p[1] == (EdgeKind::South, Letter::A)
                    })
                    .count();
                assert_eq!(corners, w.r());
            }
        }
    }

    #[test]
    fn sector_totals() {
        let total = |n: usize, r: usize, k: Option<usize>| -> BigUint {
            Word::sector(n, r)
                .iter()
                .filter(|w| k.is_none_or(|k| w.k() == k))
                .map(|w| enumerate_mct(w, &lim()).unwrap().len())
                .sum::<usize>()
                .into()
        };
        assert_eq!(total(3, 1, Some(1)), mct_count_by_k(3, 1, 1));
        for n in 1..=5 {
            for r in 0..=n {
                assert_eq!(total(n, r, None), mct_count(n, r), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn shadows_follow_from_the_rules() {
        // An A-row below a box or an A-column to its right empties the box
        // in every valid tableau.
        for n in 1..=5 {
            for w in all_words(n) {
                for t in enumerate_mct(&w, &lim()).unwrap() {
                    for (&(a, b), &e) in t.entries() {
                        let shadow = (a + 1..b).any(|c| w.letters()[c] == Letter::A);
                        assert!(!shadow || e == Entry::Empty);
                    }
                }
            }
        }
    }

    #[test]
    fn small_bijections() {
        let r = verify_bijection(2, 1, &lim()).unwrap();
        assert!(r.passed());
        assert_eq!(r.total(), 4);
        let r = verify_bijection(1, 1, &lim()).unwrap();
        assert!(r.passed());
        assert_eq!(r.total(), 1);
        let r = verify_bijection(3, 0, &lim()).unwrap();
        assert!(r.passed());
        assert_eq!(r.total(), 14);
        let r = verify_bijection(3, 1, &lim()).unwrap();
        assert!(r.passed());
        assert_eq!(r.total(), 14);
    }

    #[test]
    fn preconditions() {
        let d = build_diagram(&word("DAE"));
        let f = Filling::empty(minimal_tiling(&d));
        assert_eq!(rat_to_mct(&f), Err(Error::NotQZero));
        let max = crate::tiling::maximal_tiling(&d);
        assert_eq!(
            rat_to_mct(&Filling::empty(max)),
            Err(Error::NotMinimalTiling)
        );
    }

    #[test]
    fn unraveled_structure() {
        for n in 1..=6 {
            for w in all_words(n) {
                let t = minimal_tiling(&build_diagram(&w));
                let u = unravel(&Filling::empty(t)).unwrap();
                assert!(u.a_columns_rest_on_a_rows(), "{w}");
                let letters = w.letters();
                let expected: Vec<(usize, usize)> = w
                    .positions(Letter::D)
                    .into_iter()
                    .map(|p| {
                        let after = &letters[p + 1..];
                        (
                            after.iter().filter(|&&l| l == Letter::E).count(),
                            after.iter().filter(|&&l| l == Letter::A).count(),
                        )
                    })
                    .collect();
                assert_eq!(u.d_row_profile(), expected);
            }
        }
    }

    #[test]
    fn tiles_land_in_matching_boxes() {
        let t = minimal_tiling(&build_diagram(&word("DAADDEDAE")));
        let letters = t.word().letters().to_vec();
        for c in t.crossings() {
            assert!(tile_matches_box(
                c.tile.kind,
                (letters[c.first], letters[c.second])
            ));
        }
    }
}
