//! Property suites run by `rat verify`.

use num_bigint::BigInt;

use crate::algebra::{Assignment, Polynomial, Rational, Var};
use crate::closed_forms::{
    equivalence_class_count, macmahon_box, mct_count, mct_count_by_k, z0_closed, z_q1_closed,
    z_x_closed,
};
use crate::diagram::{all_words, build_diagram, Word};
use crate::limits::Limits;
use crate::markov::{verify_ansatz_identities, verify_main_theorem, ChainParams};
use crate::mct::verify_bijection;
use crate::tableau::{
    partition_function, refined_partition_function, refined_to_x, weight_of_word,
    weight_of_word_with,
};
use crate::tiling::enumerate_tilings;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn rat(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

fn at(alpha: Rational, beta: Rational, q: Rational) -> Assignment {
    [(Var::Alpha, alpha), (Var::Beta, beta), (Var::Q, q)]
        .into_iter()
        .collect()
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ansatz(max_n: usize, limits: &Limits) -> Result<SuiteResult> {
    let report = verify_ansatz_identities(max_n, limits)?;
    let mut s = SuiteResult::new("ansatz");
    for id in report.identities {
        s.checked += id.checked;
        for (x, y) in id.failures {
            s.failures.push(format!("({}) X={x} Y={y}", id.name));
        }
    }
    Ok(s)
}

/// `weight(W)` is the same on every tiling of Γ(W).
pub fn tiling_independence(max_n: usize, limits: &Limits) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("tiling-independence");
    for n in 1..=max_n {
        for w in all_words(n) {
            let d = build_diagram(&w);
            let reference = weight_of_word(&w, limits)?;
            for t in enumerate_tilings(&d, limits)? {
                let p = weight_of_word_with(&t, limits)?;
                s.check(p == reference, || {
                    format!("{w}: tiling {:?} gives {p}", t.tiles())
                });
            }
        }
    }
    Ok(s)
}

pub fn bijection(max_n: usize, limits: &Limits) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("bijection");
    for n in 1..=max_n {
        for r in 0..=n {
            let report = verify_bijection(n, r, limits)?;
            for w in &report.words {
                s.check(w.ok(), || format!("{w:?}"));
            }
            s.check(
                report.total() == mct_count(n, r).try_into().unwrap_or(usize::MAX),
                || format!("(n, r) = ({n}, {r}): {} tableaux", report.total()),
            );
        }
    }
    Ok(s)
}

pub fn closed_forms(max_n: usize, limits: &Limits) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("closed-forms");
    let one = Polynomial::one();
    let samples = [(rat(1, 2), rat(1, 3)), (rat(2, 3), rat(1, 5))];
    for n in 0..=max_n {
        for r in 0..=n {
            let z = partition_function(n, r, limits)?;
            let z1 = z.substitute(Var::Q, &one);
            s.check(z1 == z_q1_closed(n, r), || format!("Z_{{{n},{r}}} at q=1"));
            let zx = refined_to_x(&refined_partition_function(n, r, limits)?);
            s.check(zx == z_x_closed(n, r), || format!("Z_{{{n},{r}}}(x)"));
            for (a, b) in &samples {
                let direct = z.eval(&at(a.clone(), b.clone(), int(0)))?;
                let closed = z0_closed(n, r, a, b)?;
                s.check(direct == closed, || {
                    format!("Z0_{{{n},{r}}} at a={a} b={b}")
                });
            }
            let q0 = z.eval(&at(int(1), int(1), int(0)))?;
            s.check(q0 == int(mct_count(n, r)), || {
                format!("q=0 count ({n}, {r})")
            });
            let all = z.eval(&at(int(1), int(1), int(1)))?;
            s.check(all == int(equivalence_class_count(n, r)), || {
                format!("class count ({n}, {r})")
            });
            for k in 0..=n - r {
                let mut by_k = Rational::from_integer(0.into());
                for w in Word::sector(n, r).iter().filter(|w| w.k() == k) {
                    by_k += weight_of_word(w, limits)?.eval(&at(int(1), int(1), int(0)))?;
                }
                s.check(by_k == int(mct_count_by_k(n, r, k)), || {
                    format!("q=0 count ({n}, {r}, k={k})")
                });
            }
        }
    }
    use crate::diagram::Letter::{A, D, E};
    let side = max_n.min(3);
    for a in 0..=side {
        for b in 0..=side {
            for c in 0..=side {
                let d = build_diagram(&Word::concat(&[&[D; 3][..a], &[A; 3][..b], &[E; 3][..c]]));
                let count = enumerate_tilings(&d, limits)?.len();
                s.check(
                    BigInt::from(count) == BigInt::from(macmahon_box(a, b, c)),
                    || format!("tilings of D^{a}A^{b}E^{c}: {count}"),
                );
            }
        }
    }
    Ok(s)
}

pub fn theorem(max_n: usize, limits: &Limits) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("theorem");
    let params = [
        ChainParams::new(rat(1, 2), rat(1, 3), rat(1, 5))?,
        ChainParams::new(rat(1, 1), rat(1, 1), rat(0, 1))?,
    ];
    for n in 1..=max_n {
        for r in 0..=n {
            for p in &params {
                let report = verify_main_theorem(n, r, p, limits)?;
                for st in report.mismatches() {
                    s.failures.push(format!(
                        "{} at a={} b={} q={}: {} vs {}",
                        st.word, p.alpha, p.beta, p.q, st.stationary, st.predicted
                    ));
                }
                s.checked += report.states.len();
            }
        }
    }
    Ok(s)
}
