//! Product and sum formulas for partition functions and tableau counts.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{binomial, Polynomial, Rational, Var};
use crate::{Error, Result};

fn binom_int(n: usize, k: usize) -> BigInt {
    binomial(n as u64, k as u64).into()
}

/// `C(n,r) ∏_{i=r}^{n-1} (xα + β + iαβ)` with `x` kept as a variable when
/// `with_x` is set.
fn product_form(n: usize, r: usize, with_x: bool) -> Polynomial {
    if r > n {
        return Polynomial::zero();
    }
    let lead = if with_x {
        Polynomial::term([1, 0, 0, 1], 1)
    } else {
        Polynomial::var(Var::Alpha)
    };
    let base = &lead + &Polynomial::var(Var::Beta);
    let mut acc = Polynomial::constant(binom_int(n, r));
    for i in r..n {
        acc = &acc * &(&base + &Polynomial::term([1, 1, 0, 0], i as i64));
    }
    acc
}

/// `Z_{n,r}(α, β, 1) = C(n,r) ∏_{i=r}^{n-1} (α + β + iαβ)`.
pub fn z_q1_closed(n: usize, r: usize) -> Polynomial {
    product_form(n, r, false)
}

/// `Z_{n,r}(x) = C(n,r) ∏_{i=r}^{n-1} (xα + β + iαβ)`.
pub fn z_x_closed(n: usize, r: usize) -> Polynomial {
    product_form(n, r, true)
}

/// `Z_{n,r}(α, β, 0)` as the sum
/// `(αβ)^{n-r} Σ_{p=0}^{n-r} (2r+p)/(2n-p) C(2n-p, n+r) (α^{-p-1} - β^{-p-1}) / (α^{-1} - β^{-1})`.
///
/// The `p = 0` term is `(r/n) C(2n, n+r) (αβ)^{n-r}`; it vanishes for
/// `r = 0` and is the whole sum for `r = n`.
pub fn z0_closed(n: usize, r: usize, alpha: &Rational, beta: &Rational) -> Result<Rational> {
    if r > n {
        return Err(Error::Precondition(format!("r = {r} exceeds n = {n}")));
    }
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::Precondition("alpha and beta must be nonzero".into()));
    }
    if alpha == beta {
        return Err(Error::AlphaEqualsBeta);
    }
    if n == r {
        return Ok(Rational::one());
    }
    let (ia, ib) = (alpha.recip(), beta.recip());
    let denom = &ia - &ib;
    let mut sum = Rational::zero();
    for p in 0..=(n - r) {
        let coeff = Rational::new(
            BigInt::from(2 * r + p) * binom_int(2 * n - p, n + r),
            BigInt::from(2 * n - p),
        );
        sum += coeff * (num_traits::pow(ia.clone(), p + 1) - num_traits::pow(ib.clone(), p + 1))
            / &denom;
    }
    Ok(num_traits::pow(alpha * beta, n - r) * sum)
}

/// `Z_{n,r}(1, 1, 0) = 2(r+1)/(n+r+2) · C(2n+1, n-r)`.
pub fn mct_count(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let num = BigUint::from(2 * (r + 1)) * binomial((2 * n + 1) as u64, (n - r) as u64);
    exact_div(num, BigUint::from(n + r + 2))
}

/// Words with `k` D's counted alone: `(r+1)/(n+1) · C(n+1, k) C(n+1, ℓ)`
/// with `ℓ = n - r - k`.
pub fn mct_count_by_k(n: usize, r: usize, k: usize) -> BigUint {
    if r + k > n {
        return BigUint::zero();
    }
    let l = n - r - k;
    let num =
        BigUint::from(r + 1) * binomial(n as u64 + 1, k as u64) * binomial(n as u64 + 1, l as u64);
    exact_div(num, BigUint::from(n + 1))
}

/// `C(n,r) (n+1)! / (r+1)!`.
pub fn equivalence_class_count(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let falling: BigUint = (r + 2..=n + 1).map(BigUint::from).product();
    binomial(n as u64, r as u64) * falling
}

/// Plane partitions in an `a × b × c` box:
/// `∏_{i≤a} ∏_{j≤b} ∏_{m≤c} (i+j+m-1)/(i+j+m-2)`.
pub fn macmahon_box(a: usize, b: usize, c: usize) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=a {
        for j in 1..=b {
            for m in 1..=c {
                num *= BigUint::from(i + j + m - 1);
                den *= BigUint::from(i + j + m - 2);
            }
        }
    }
    exact_div(num, den)
}

fn exact_div(num: BigUint, den: BigUint) -> BigUint {
    let (q, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero(), "inexact division");
    q
}
