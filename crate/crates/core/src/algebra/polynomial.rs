use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::{Error, Result};

/// The four indeterminates that occur in weight generating functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Alpha,
    Beta,
    Q,
    X,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Alpha, Var::Beta, Var::Q, Var::X];

    fn index(self) -> usize {
        self as usize
    }

    /// Name used in the text form: `a`, `b`, `q`, `x`.
    pub fn name(self) -> char {
        match self {
            Var::Alpha => 'a',
            Var::Beta => 'b',
            Var::Q => 'q',
            Var::X => 'x',
        }
    }

    pub fn from_name(c: char) -> Option<Var> {
        match c {
            'a' => Some(Var::Alpha),
            'b' => Some(Var::Beta),
            'q' => Some(Var::Q),
            'x' => Some(Var::X),
            _ => None,
        }
    }
}

/// Exponent vector indexed by [`Var`]: `[e_α, e_β, e_q, e_x]`.
pub type Exponents = [u32; 4];

/// Values bound to variables for [`Polynomial::eval`].
pub type Assignment = BTreeMap<Var, Rational>;

/// Sparse polynomial in α, β, q, x with big integer coefficients.
///
/// Terms live in a map keyed by exponent vector; zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Exponents, BigInt>,
}

// Factor order inside a printed monomial.
const PRINT_ORDER: [Var; 4] = [Var::Q, Var::X, Var::Alpha, Var::Beta];

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::term([0; 4], c)
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        Polynomial::term(e, 1)
    }

    /// `coeff · α^e0 β^e1 q^e2 x^e3`
    pub fn term(exps: Exponents, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of `(e_α, e_β, e_q, e_x)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &Exponents) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value at the given binding. Variables that do not occur may be
    /// left unbound.
    pub fn eval(&self, at: &Assignment) -> Result<Rational> {
        let mut total = Rational::zero();
        for (exps, coeff) in &self.terms {
            let mut value = Rational::from_integer(coeff.clone());
            for v in Var::ALL {
                let e = exps[v.index()];
                if e == 0 {
                    continue;
                }
                let x = at.get(&v).ok_or(Error::MissingSymbol(v.name()))?;
                value *= num_traits::pow(x.clone(), e as usize);
            }
            total += value;
        }
        Ok(total)
    }

    /// Replaces `v` by `value` everywhere.
    pub fn substitute(&self, v: Var, value: &Polynomial) -> Polynomial {
        let max = self.degree_in(v);
        let mut powers = Vec::with_capacity(max as usize + 1);
        powers.push(Polynomial::one());
        for i in 1..=max as usize {
            let next = &powers[i - 1] * value;
            powers.push(next);
        }
        let mut out = Polynomial::zero();
        for (exps, coeff) in &self.terms {
            let mut rest = *exps;
            let e = rest[v.index()] as usize;
            rest[v.index()] = 0;
            let stripped = Polynomial::term(rest, coeff.clone());
            out += &(&stripped * &powers[e]);
        }
        out
    }

    /// Groups terms by the power of `v`: `self = Σ_k coeffs[k] · v^k`.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (exps, coeff) in &self.terms {
            let mut rest = *exps;
            let e = rest[v.index()];
            rest[v.index()] = 0;
            out.entry(e).or_default().add_term(rest, coeff.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Self {
        Polynomial::var(v)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a Polynomial> for Polynomial {
    fn sum<I: Iterator<Item = &'a Polynomial>>(iter: I) -> Self {
        let mut acc = Polynomial::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, exps: &Exponents, coeff: &BigInt) -> fmt::Result {
    let mut factors = Vec::new();
    let magnitude = coeff.abs();
    let is_constant = exps.iter().all(|&e| e == 0);
    if !magnitude.is_one() || is_constant {
        factors.push(magnitude.to_string());
    }
    for v in PRINT_ORDER {
        match exps[v.index()] {
            0 => {}
            1 => factors.push(v.name().to_string()),
            e => factors.push(format!("{}^{}", v.name(), e)),
        }
    }
    write!(f, "{}", factors.join("*"))
}

/// Canonical text: terms in descending lexicographic order of
/// `(e_α, e_β, e_q, e_x)`, joined by ` + ` / ` - `, factors written
/// `q`, `x`, `a`, `b` with `^` powers. The zero polynomial prints as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, coeff)) in self.terms.iter().rev().enumerate() {
            let negative = coeff.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_monomial(f, exps, coeff)?;
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "polynomial",
            input: s.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut out = Polynomial::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ if rest.len() == compact.len() => (false, rest),
                _ => return Err(err()),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (term, tail) = body.split_at(end);
            if term.is_empty() {
                return Err(err());
            }
            let mut coeff = BigInt::one();
            let mut exps = [0u32; 4];
            for factor in term.split('*') {
                let (base, power) = match factor.split_once('^') {
                    Some((b, p)) => (b, p.parse::<u32>().map_err(|_| err())?),
                    None => (factor, 1),
                };
                let mut chars = base.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) if Var::from_name(c).is_some() => {
                        exps[Var::from_name(c).unwrap().index()] += power;
                    }
                    _ => {
                        let k: BigInt = base.parse().map_err(|_| err())?;
                        coeff *= num_traits::pow(k, power as usize);
                    }
                }
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(exps, coeff);
            rest = tail;
        }
        Ok(out)
    }
}
