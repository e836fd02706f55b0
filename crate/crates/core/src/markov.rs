//! The two-species PASEP as an exact discrete-time Markov chain.
//!
//! From a state with `n` sites every move fires with probability
//! `u/(n+1)`, where `u` is the move's rate, and the remaining mass stays
//! put. Bulk moves `DE→ED`, `DA→AD`, `AE→EA` have rate 1 and their
//! reverses rate `q`; an `E` on the first site becomes `D` at rate `α`
//! and a `D` on the last site becomes `E` at rate `β`.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{Assignment, Polynomial, Rational, Var};
use crate::diagram::{Letter, Word};
use crate::limits::Limits;
use crate::tableau::{partition_function, weight_of_word};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub q: Rational,
}

impl ChainParams {
    /// Requires `0 < α ≤ 1`, `0 < β ≤ 1` and `0 ≤ q ≤ 1`.
    pub fn new(alpha: Rational, beta: Rational, q: Rational) -> Result<Self> {
        let one = Rational::one();
        let zero = Rational::zero();
        for (name, v) in [("alpha", &alpha), ("beta", &beta)] {
            if *v <= zero || *v > one {
                return Err(Error::BadParams(format!("{name} = {v} is not in (0, 1]")));
            }
        }
        if q < zero || q > one {
            return Err(Error::BadParams(format!("q = {q} is not in [0, 1]")));
        }
        Ok(ChainParams { alpha, beta, q })
    }

    pub fn from_ints(alpha: (i64, i64), beta: (i64, i64), q: (i64, i64)) -> Result<Self> {
        let r = |(a, b): (i64, i64)| {
            if b == 0 {
                Err(Error::BadParams("zero denominator".into()))
            } else {
                Ok(Rational::new(a.into(), b.into()))
            }
        };
        ChainParams::new(r(alpha)?, r(beta)?, r(q)?)
    }

    pub fn assignment(&self) -> Assignment {
        [
            (Var::Alpha, self.alpha.clone()),
            (Var::Beta, self.beta.clone()),
            (Var::Q, self.q.clone()),
        ]
        .into_iter()
        .collect()
    }
}

/// All words of length `n` with `r` A's, ordered with `D < A < E`.
pub fn state_space(n: usize, r: usize) -> Vec<Word> {
    if r > n {
        return Vec::new();
    }
    Word::sector(n, r)
}

/// Moves out of `w` with their rates, zero-rate moves left out.
pub fn moves(w: &Word, params: &ChainParams) -> Vec<(Word, Rational)> {
    let letters = w.letters();
    let n = letters.len();
    let mut out = Vec::new();
    let mut push = |letters: Vec<Letter>, rate: &Rational| {
        if !rate.is_zero() {
            out.push((Word::new(letters), rate.clone()));
        }
    };
    if n > 0 && letters[0] == Letter::E {
        let mut next = letters.to_vec();
        next[0] = Letter::D;
        push(next, &params.alpha);
    }
    let one = Rational::one();
    for i in 0..n.saturating_sub(1) {
        let (a, b) = (letters[i], letters[i + 1]);
        if a == b {
            continue;
        }
        let mut next = letters.to_vec();
        next.swap(i, i + 1);
        push(next, if a.inverts(b) { &one } else { &params.q });
    }
    if n > 0 && letters[n - 1] == Letter::D {
        let mut next = letters.to_vec();
        next[n - 1] = Letter::E;
        push(next, &params.beta);
    }
    out
}

/// The chain on one sector with its dense transition matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSpec {
    pub n: usize,
    pub r: usize,
    pub params: ChainParams,
    pub states: Vec<Word>,
    pub matrix: Vec<Vec<Rational>>,
}

impl ChainSpec {
    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.states.binary_search(w).ok()
    }
}

pub fn build_chain(n: usize, r: usize, params: &ChainParams) -> Result<ChainSpec> {
    if r > n {
        return Err(Error::BadParams(format!("r = {r} exceeds n = {n}")));
    }
    let params = ChainParams::new(params.alpha.clone(), params.beta.clone(), params.q.clone())?;
    let states = state_space(n, r);
    let scale = Rational::from_integer((n as i64 + 1).into());
    let m = states.len();
    let mut matrix = vec![vec![Rational::zero(); m]; m];
    for (i, w) in states.iter().enumerate() {
        let mut out = Rational::zero();
        for (target, rate) in moves(w, &params) {
            let j = states
                .binary_search(&target)
                .expect("moves keep the sector");
            let p = rate / &scale;
            out += &p;
            matrix[i][j] += p;
        }
        matrix[i][i] = Rational::one() - out;
    }
    Ok(ChainSpec {
        n,
        r,
        params,
        states,
        matrix,
    })
}

/// Solves `π P = π`, `Σ π = 1` exactly.
pub fn stationary_distribution(c: &ChainSpec) -> Result<Vec<Rational>> {
    let m = c.states.len();
    if m == 0 {
        return Err(Error::SingularSystem);
    }
    // Rows of (P - I)^T, the last replaced by the normalization.
    let mut a: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rational> = (0..m).map(|j| c.matrix[j][i].clone()).collect();
            row[i] -= Rational::one();
            row.push(Rational::zero());
            row
        })
        .collect();
    a[m - 1] = vec![Rational::one(); m + 1];
    solve_in_place(&mut a)
}

/// Gauss-Jordan elimination on an augmented `m × (m+1)` matrix.
fn solve_in_place(a: &mut [Vec<Rational>]) -> Result<Vec<Rational>> {
    let m = a.len();
    for col in 0..m {
        let pivot = (col..m)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::SingularSystem)?;
        a.swap(col, pivot);
        let inv = Rational::one() / &a[col][col];
        for x in a[col][col..].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
    }
    Ok(a.iter().map(|row| row[m].clone()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateCheck {
    pub word: Word,
    pub stationary: Rational,
    pub predicted: Rational,
}

impl StateCheck {
    pub fn ok(&self) -> bool {
        self.stationary == self.predicted
    }
}

/// Stationary probabilities next to `weight(W) / Z_{n,r}` at the chain's
/// parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub n: usize,
    pub r: usize,
    pub params: ChainParams,
    pub partition: Rational,
    pub states: Vec<StateCheck>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.states.iter().all(StateCheck::ok)
    }

    pub fn mismatches(&self) -> Vec<&StateCheck> {
        self.states.iter().filter(|s| !s.ok()).collect()
    }
}

pub fn verify_main_theorem(
    n: usize,
    r: usize,
    params: &ChainParams,
    limits: &Limits,
) -> Result<TheoremReport> {
    let chain = build_chain(n, r, params)?;
    let pi = stationary_distribution(&chain)?;
    let at = chain.params.assignment();
    let z = partition_function(n, r, limits)?.eval(&at)?;
    let states = chain
        .states
        .iter()
        .zip(pi)
        .map(|(w, p)| {
            Ok(StateCheck {
                word: w.clone(),
                stationary: p,
                predicted: weight_of_word(w, limits)?.eval(&at)? / &z,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TheoremReport {
        n,
        r,
        params: chain.params,
        partition: z,
        states,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub checked: usize,
    /// The `(X, Y)` pairs for which the identity fails.
    pub failures: Vec<(Word, Word)>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnsatzReport {
    pub max_n: usize,
    pub identities: Vec<IdentityCheck>,
}

impl AnsatzReport {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(IdentityCheck::passed)
    }
}

impl fmt::Display for AnsatzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for id in &self.identities {
            let status = if id.passed() { "ok" } else { "FAILED" };
            writeln!(
                f,
                "({}) {}: {} cases, {status}",
                id.name, id.statement, id.checked
            )?;
        }
        Ok(())
    }
}

/// Checks the five recurrences with `λ = αβ` on `weight`, for every split
/// `X · pattern · Y` of total length at most `max_n`.
pub fn verify_ansatz_identities(max_n: usize, limits: &Limits) -> Result<AnsatzReport> {
    use Letter::{A, D, E};
    let ab = Polynomial::term([1, 1, 0, 0], 1);
    let alpha = Polynomial::var(Var::Alpha);
    let beta = Polynomial::var(Var::Beta);
    let q = Polynomial::var(Var::Q);
    let wt = |parts: &[&[Letter]]| weight_of_word(&Word::concat(parts), limits);

    let mut identities = Vec::new();
    let bulk: [(&str, &str, [Letter; 2], bool); 3] = [
        (
            "I",
            "w(XDEY) - q w(XEDY) = ab (w(XDY) + w(XEY))",
            [D, E],
            true,
        ),
        ("II", "w(XDAY) - q w(XADY) = ab w(XAY)", [D, A], false),
        ("III", "w(XAEY) - q w(XEAY) = ab w(XAY)", [A, E], false),
    ];
    for (name, statement, [a, b], both) in bulk {
        let mut check = IdentityCheck {
            name,
            statement,
            checked: 0,
            failures: Vec::new(),
        };
        for (x, y) in splits(max_n.saturating_sub(2)) {
            let (xs, ys) = (x.letters(), y.letters());
            let lhs = wt(&[xs, &[a, b], ys])? - &q * &wt(&[xs, &[b, a], ys])?;
            let rhs = if both {
                &ab * &(wt(&[xs, &[D], ys])? + wt(&[xs, &[E], ys])?)
            } else {
                &ab * &wt(&[xs, &[A], ys])?
            };
            check.checked += 1;
            if lhs != rhs {
                check.failures.push((x, y));
            }
        }
        identities.push(check);
    }
    let mut iv = IdentityCheck {
        name: "IV",
        statement: "b w(XD) = ab w(X)",
        checked: 0,
        failures: Vec::new(),
    };
    let mut v = IdentityCheck {
        name: "V",
        statement: "a w(EY) = ab w(Y)",
        checked: 0,
        failures: Vec::new(),
    };
    for len in 0..max_n {
        for x in crate::diagram::all_words(len) {
            iv.checked += 1;
            if &beta * &wt(&[x.letters(), &[D]])? != &ab * &wt(&[x.letters()])? {
                iv.failures.push((x.clone(), Word::empty()));
            }
            v.checked += 1;
            if &alpha * &wt(&[&[E], x.letters()])? != &ab * &wt(&[x.letters()])? {
                v.failures.push((Word::empty(), x));
            }
        }
    }
    identities.push(iv);
    identities.push(v);
    Ok(AnsatzReport { max_n, identities })
}

/// Pairs `(X, Y)` with `|X| + |Y| ≤ total`.
fn splits(total: usize) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for lx in 0..=total {
        for ly in 0..=total - lx {
            for x in crate::diagram::all_words(lx) {
                for y in crate::diagram::all_words(ly) {
                    out.push((x.clone(), y));
                }
            }
        }
    }
    out
}
