//! Words over {D, A, E}, the boundary paths they define on the triangular
//! lattice, and the rhombic diagram enclosed between them.
//!
//! Coordinates put the shared northeast endpoint at the origin; a D reads
//! as a south step `(0,-1)`, an E as a west step `(-1,0)` and an A as a
//! southwest step `(-1,-1)`.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Heavy particle (D), light particle (A) or hole (E).
///
/// The derived order `D < A < E` is the order used to list states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    D,
    A,
    E,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::D, Letter::A, Letter::E];

    pub fn from_char(c: char) -> Option<Letter> {
        match c.to_ascii_uppercase() {
            'D' => Some(Letter::D),
            'A' => Some(Letter::A),
            'E' => Some(Letter::E),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::D => 'D',
            Letter::A => 'A',
            Letter::E => 'E',
        }
    }

    /// Lattice step drawn for this letter.
    pub fn step(self) -> (i64, i64) {
        match self {
            Letter::D => (0, -1),
            Letter::A => (-1, -1),
            Letter::E => (-1, 0),
        }
    }

    pub fn edge_kind(self) -> EdgeKind {
        match self {
            Letter::D => EdgeKind::South,
            Letter::A => EdgeKind::Southwest,
            Letter::E => EdgeKind::West,
        }
    }

    /// Whether `self` immediately followed by `next` is one of the
    /// inversions DE, DA, AE.
    pub fn inverts(self, next: Letter) -> bool {
        self < next
    }
}

/// A state of the chain and the type of a rhombic diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    /// `E^ℓ A^r D^k`, the type with area zero.
    pub fn sorted(k: usize, r: usize, l: usize) -> Self {
        let mut letters = vec![Letter::E; l];
        letters.extend(std::iter::repeat_n(Letter::A, r));
        letters.extend(std::iter::repeat_n(Letter::D, k));
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// Number of D's.
    pub fn k(&self) -> usize {
        self.count(Letter::D)
    }

    /// Number of A's.
    pub fn r(&self) -> usize {
        self.count(Letter::A)
    }

    /// Number of E's.
    pub fn l(&self) -> usize {
        self.count(Letter::E)
    }

    /// Number of inverted pairs (D before E, D before A, A before E),
    /// which is the number of tiles in every tiling of Γ(W).
    pub fn inversions(&self) -> usize {
        let (mut d, mut da) = (0, 0);
        let mut total = 0;
        for &letter in &self.letters {
            match letter {
                Letter::D => d += 1,
                Letter::A => {
                    total += d;
                    da += 1;
                }
                Letter::E => total += d + da,
            }
        }
        total
    }

    /// Positions of `letter`, in word order.
    pub fn positions(&self, letter: Letter) -> Vec<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == letter)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn concat(parts: &[&[Letter]]) -> Word {
        Word {
            letters: parts.iter().flat_map(|p| p.iter().copied()).collect(),
        }
    }

    /// All words of length `n` with exactly `r` A's, in lexicographic order
    /// with `D < A < E`.
    pub fn sector(n: usize, r: usize) -> Vec<Word> {
        all_words(n).into_iter().filter(|w| w.r() == r).collect()
    }
}

/// All words of length `n` in lexicographic order.
pub fn all_words(n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * 3);
        for w in &out {
            for letter in Letter::ALL {
                let mut letters = w.letters.clone();
                letters.push(letter);
                next.push(Word { letters });
            }
        }
        out = next;
    }
    out
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Parses a nonempty, case-insensitive string over {D, A, E}.
pub fn parse_word(text: &str) -> Result<Word> {
    if text.is_empty() {
        return Err(Error::EmptyWord);
    }
    text.chars()
        .enumerate()
        .map(|(i, c)| Letter::from_char(c).ok_or(Error::BadCharacter(i)))
        .collect::<Result<Vec<_>>>()
        .map(Word::new)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub i: i64,
    pub j: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { i: 0, j: 0 };

    pub fn new(i: i64, j: i64) -> Self {
        LatticePoint { i, j }
    }

    pub fn offset(self, di: i64, dj: i64) -> Self {
        LatticePoint::new(self.i + di, self.j + dj)
    }

    pub fn step(self, letter: Letter) -> Self {
        let (di, dj) = letter.step();
        self.offset(di, dj)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    South,
    West,
    Southwest,
}

/// A unit lattice edge identified by its northeast endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub kind: EdgeKind,
    pub anchor: LatticePoint,
}

impl Edge {
    pub fn new(kind: EdgeKind, anchor: LatticePoint) -> Self {
        Edge { kind, anchor }
    }

    pub fn south(i: i64, j: i64) -> Self {
        Edge::new(EdgeKind::South, LatticePoint::new(i, j))
    }

    pub fn west(i: i64, j: i64) -> Self {
        Edge::new(EdgeKind::West, LatticePoint::new(i, j))
    }

    pub fn southwest(i: i64, j: i64) -> Self {
        Edge::new(EdgeKind::Southwest, LatticePoint::new(i, j))
    }

    /// The southwest endpoint.
    pub fn end(&self) -> LatticePoint {
        match self.kind {
            EdgeKind::South => self.anchor.offset(0, -1),
            EdgeKind::West => self.anchor.offset(-1, 0),
            EdgeKind::Southwest => self.anchor.offset(-1, -1),
        }
    }
}

fn trace(start: LatticePoint, letters: &[Letter]) -> Vec<Edge> {
    let mut at = start;
    letters
        .iter()
        .map(|&l| {
            let e = Edge::new(l.edge_kind(), at);
            at = at.step(l);
            e
        })
        .collect()
}

/// The region Γ(W) between the southeast boundary `p1` (read from W) and
/// the northwest boundary `p2` (read from `E^ℓ A^r D^k`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RhombicDiagram {
    word: Word,
    p1: Vec<Edge>,
    p2: Vec<Edge>,
    e_labels: Vec<Edge>,
    d_labels: Vec<Edge>,
}

impl RhombicDiagram {
    pub fn new(word: &Word) -> Self {
        build_diagram(word)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn p1(&self) -> &[Edge] {
        &self.p1
    }

    pub fn p2(&self) -> &[Edge] {
        &self.p2
    }

    /// E-edges of `p1`; index `i` carries label `i + 1` (right to left).
    pub fn e_labels(&self) -> &[Edge] {
        &self.e_labels
    }

    /// D-edges of `p1`; index `i` carries label `i + 1` (top to bottom).
    pub fn d_labels(&self) -> &[Edge] {
        &self.d_labels
    }

    pub fn area(&self) -> usize {
        self.word.inversions()
    }

    /// Vertices of `p1` from the origin to the southwest endpoint.
    pub fn p1_vertices(&self) -> Vec<LatticePoint> {
        vertices(&self.p1)
    }

    pub fn p2_vertices(&self) -> Vec<LatticePoint> {
        vertices(&self.p2)
    }

    pub fn southwest_corner(&self) -> LatticePoint {
        let w = &self.word;
        LatticePoint::new(-((w.l() + w.r()) as i64), -((w.k() + w.r()) as i64))
    }

    /// North endpoints of the D-edges of `p2`, top to bottom.
    pub fn p2_d_tops(&self) -> Vec<LatticePoint> {
        self.p2
            .iter()
            .filter(|e| e.kind == EdgeKind::South)
            .map(|e| e.anchor)
            .collect()
    }

    /// Every lattice point of the closed region, row by row from the top.
    pub fn region_points(&self) -> Vec<LatticePoint> {
        let p1 = self.p1_vertices();
        let p2 = self.p2_vertices();
        let bottom = self.southwest_corner().j;
        let mut out = Vec::new();
        for j in (bottom..=0).rev() {
            let west = p2.iter().filter(|p| p.j == j).map(|p| p.i).min();
            let east = p1.iter().filter(|p| p.j == j).map(|p| p.i).max();
            if let (Some(w), Some(e)) = (west, east) {
                out.extend((w..=e).map(|i| LatticePoint::new(i, j)));
            }
        }
        out
    }
}

fn vertices(path: &[Edge]) -> Vec<LatticePoint> {
    let mut out = vec![LatticePoint::ORIGIN];
    out.extend(path.iter().map(Edge::end));
    out
}

pub fn build_diagram(word: &Word) -> RhombicDiagram {
    let p1 = trace(LatticePoint::ORIGIN, word.letters());
    let sorted = Word::sorted(word.k(), word.r(), word.l());
    let p2 = trace(LatticePoint::ORIGIN, sorted.letters());
    let e_labels = p1
        .iter()
        .filter(|e| e.kind == EdgeKind::West)
        .copied()
        .collect();
    let d_labels = p1
        .iter()
        .filter(|e| e.kind == EdgeKind::South)
        .copied()
        .collect();
    RhombicDiagram {
        word: word.clone(),
        p1,
        p2,
        e_labels,
        d_labels,
    }
}

/// Number of unit cells in every tiling of `d`.
pub fn diagram_area(d: &RhombicDiagram) -> usize {
    d.area()
}

/// Reads the type word back off the southeast boundary.
pub fn word_of_boundary(p1: &[Edge]) -> Word {
    Word::new(
        p1.iter()
            .map(|e| match e.kind {
                EdgeKind::South => Letter::D,
                EdgeKind::West => Letter::E,
                EdgeKind::Southwest => Letter::A,
            })
            .collect(),
    )
}
