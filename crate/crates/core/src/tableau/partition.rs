//! Weights of words and partition functions.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use super::StripIndex;
use crate::algebra::{Polynomial, Var};
use crate::diagram::{build_diagram, Word};
use crate::limits::Limits;
use crate::tiling::{maximal_tiling, minimal_tiling, Tiling};
use crate::Result;

fn collect(counts: HashMap<[u32; 4], u64>) -> Polynomial {
    counts
        .into_iter()
        .map(|(e, c)| Polynomial::term(e, c))
        .sum()
}

/// Sum over the fillings of `t` of the symbols alone, without the
/// boundary factor `α^k β^ℓ`.
fn symbol_sum(t: &Tiling, limits: &Limits) -> Result<Polynomial> {
    limits.check_area(t.len())?;
    let index = StripIndex::new(t);
    let mut counts: HashMap<[u32; 4], u64> = HashMap::new();
    index.for_each(limits, |a, b| {
        let (na, nb, nq) = index.symbol_counts(a, b);
        *counts.entry([na, nb, nq, 0]).or_default() += 1;
    })?;
    Ok(collect(counts))
}

fn boundary(w: &Word) -> Polynomial {
    Polynomial::term([w.k() as u32, w.l() as u32, 0, 0], 1)
}

/// `weight(W)` computed on the tiling `t` of Γ(W).
pub fn weight_of_word_with(t: &Tiling, limits: &Limits) -> Result<Polynomial> {
    Ok(&boundary(t.word()) * &symbol_sum(t, limits)?)
}

fn cache() -> &'static Mutex<HashMap<Word, Polynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<Word, Polynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `weight(W)`: the sum of `wt(F)` over the fillings of the minimal tiling.
pub fn weight_of_word(w: &Word, limits: &Limits) -> Result<Polynomial> {
    limits.check_area(w.inversions())?;
    if let Some(p) = cache().lock().unwrap().get(w) {
        return Ok(p.clone());
    }
    let p = weight_of_word_with(&minimal_tiling(&build_diagram(w)), limits)?;
    cache().lock().unwrap().insert(w.clone(), p.clone());
    Ok(p)
}

/// `weight(W)` divided by its boundary factor `α^k β^ℓ`.
pub fn symbol_weight_of_word(w: &Word, limits: &Limits) -> Result<Polynomial> {
    limits.check_area(w.inversions())?;
    symbol_sum(&minimal_tiling(&build_diagram(w)), limits)
}

/// `Z_{n,r}(α, β, q)`, the sum of `weight(W)` over words of length `n`
/// with `r` A's.
pub fn partition_function(n: usize, r: usize, limits: &Limits) -> Result<Polynomial> {
    if r > n {
        return Ok(Polynomial::zero());
    }
    let parts: Result<Vec<Polynomial>> = Word::sector(n, r)
        .par_iter()
        .map(|w| weight_of_word(w, limits))
        .collect();
    Ok(parts?.into_iter().sum())
}

/// `Z_{n,r,k}(α, β, 1)` for each `k`: fillings of maximal tilings at
/// `q = 1`, grouped by the number `k` of west-strips without a β.
pub fn refined_partition_function(
    n: usize,
    r: usize,
    limits: &Limits,
) -> Result<BTreeMap<usize, Polynomial>> {
    let mut out: BTreeMap<usize, Polynomial> = BTreeMap::new();
    if r > n {
        return Ok(out);
    }
    type Counts = HashMap<(usize, [u32; 4]), u64>;
    let parts: Result<Vec<Counts>> = Word::sector(n, r)
        .par_iter()
        .map(|w| {
            limits.check_area(w.inversions())?;
            let t = maximal_tiling(&build_diagram(w));
            let index = StripIndex::new(&t);
            let mut counts = HashMap::new();
            index.for_each(limits, |a, b| {
                let (na, nb, _) = index.symbol_counts(a, b);
                let free = b.iter().filter(|x| x.is_none()).count();
                let e = [w.k() as u32 + na, w.l() as u32 + nb, 0, 0];
                *counts.entry((free, e)).or_default() += 1;
            })?;
            Ok(counts)
        })
        .collect();
    for counts in parts? {
        for ((k, e), c) in counts {
            *out.entry(k).or_insert_with(Polynomial::zero) += Polynomial::term(e, c);
        }
    }
    Ok(out)
}

/// `Σ_k Z_{n,r,k} x^k`.
pub fn refined_to_x(refined: &BTreeMap<usize, Polynomial>) -> Polynomial {
    refined
        .iter()
        .map(|(k, p)| p * &Polynomial::var(Var::X).pow(*k as u32))
        .sum()
}
