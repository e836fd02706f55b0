mod common;

use num_bigint::BigUint;
use rat_core::algebra::{Assignment, Polynomial, Rational, Var};
use rat_core::closed_forms::{
    equivalence_class_count, mct_count, mct_count_by_k, z0_closed, z_q1_closed, z_x_closed,
};
use rat_core::diagram::{build_diagram, Word};
use rat_core::mct::enumerate_mct;
use rat_core::tableau::{
    enumerate_fillings, partition_function, refined_partition_function, refined_to_x,
    weight_of_filling,
};
use rat_core::tiling::minimal_tiling;
use rat_core::Limits;

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn choose(n: u64, k: u64) -> BigUint {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `(α^k β^ℓ q^0)`-weights of the q-free fillings of every word in a sector.
fn q_free(n: usize, r: usize) -> Vec<(usize, u32, u32)> {
    let mut out = Vec::new();
    for w in Word::sector(n, r) {
        for f in
            enumerate_fillings(&minimal_tiling(&build_diagram(&w)), &Limits::default()).unwrap()
        {
            let m = weight_of_filling(&f);
            if m.q == 0 {
                out.push((w.k(), m.alpha, m.beta));
            }
        }
    }
    out
}

fn ones() -> Assignment {
    [Var::Alpha, Var::Beta, Var::Q, Var::X]
        .into_iter()
        .map(|v| (v, Rational::from_integer(1.into())))
        .collect()
}

#[test]
fn q1_product_matches_enumeration() {
    for n in 1..=6 {
        for r in 0..=n {
            let z = partition_function(n, r, &Limits::default()).unwrap();
            let z1 = z.substitute(Var::Q, &Polynomial::one());
            assert_eq!(z1, z_q1_closed(n, r), "({n}, {r})");
        }
    }
}

#[test]
fn totals_at_one() {
    for n in 1..=6u64 {
        for r in 0..=n {
            let expect = choose(n, r) * factorial(n + 1) / factorial(r + 1);
            let z = partition_function(n as usize, r as usize, &Limits::default()).unwrap();
            assert_eq!(
                z.eval(&ones()).unwrap(),
                Rational::from_integer(expect.clone().into())
            );
            assert_eq!(equivalence_class_count(n as usize, r as usize), expect);
        }
    }
    assert_eq!(equivalence_class_count(2, 0), 6u32.into());
    assert_eq!(equivalence_class_count(3, 1), 36u32.into());
}

#[test]
fn refined_matches_product_and_recursion() {
    let x_plus_beta = &Polynomial::var(Var::X) + &Polynomial::var(Var::Beta);
    let refined =
        |n, r| refined_to_x(&refined_partition_function(n, r, &Limits::default()).unwrap());
    for n in 1..=6 {
        for r in 0..=n {
            let zx = refined(n, r);
            assert_eq!(zx, z_x_closed(n, r), "({n}, {r})");
            assert_eq!(
                zx.substitute(Var::X, &Polynomial::one()),
                partition_function(n, r, &Limits::default())
                    .unwrap()
                    .substitute(Var::Q, &Polynomial::one())
            );
        }
    }
    for n in 1..=5 {
        for r in 0..=n {
            let lead = &(&Polynomial::term([1, 0, 0, 1], 1) + &Polynomial::var(Var::Beta))
                + &Polynomial::term([1, 1, 0, 0], r as i64);
            let mut rhs = &lead * &refined(n, r).substitute(Var::X, &x_plus_beta);
            if r > 0 {
                rhs = &rhs + &refined(n, r - 1).substitute(Var::X, &x_plus_beta);
            }
            assert_eq!(refined(n + 1, r), rhs, "({n}, {r})");
        }
    }
}

#[test]
fn z0_matches_enumeration() {
    let pairs = [(1, 2, 1, 3), (2, 3, 1, 5), (3, 1, 1, 7)];
    for (an, ad, bn, bd) in pairs {
        let a = Rational::new(an.into(), ad.into());
        let b = Rational::new(bn.into(), bd.into());
        for n in 1..=5 {
            for r in 0..=n {
                let sum = q_free(n, r).into_iter().fold(
                    Rational::from_integer(0.into()),
                    |acc, (_, x, y)| {
                        acc + num_traits::pow(a.clone(), x as usize)
                            * num_traits::pow(b.clone(), y as usize)
                    },
                );
                assert_eq!(
                    z0_closed(n, r, &a, &b).unwrap(),
                    sum,
                    "({n}, {r}) at ({a}, {b})"
                );
            }
        }
    }
}

#[test]
fn mct_counts_match_enumeration() {
    for n in 1..=5 {
        for r in 0..=n {
            let rat = q_free(n, r);
            let mct: usize = Word::sector(n, r)
                .iter()
                .map(|w| enumerate_mct(w, &Limits::default()).unwrap().len())
                .sum();
            assert_eq!(mct_count(n, r), BigUint::from(rat.len()), "({n}, {r})");
            assert_eq!(mct, rat.len());
            for k in 0..=n {
                let c = rat.iter().filter(|(kk, _, _)| *kk == k).count();
                assert_eq!(mct_count_by_k(n, r, k), BigUint::from(c), "({n}, {r}, {k})");
            }
        }
    }
    assert_eq!(mct_count(1, 0), 2u32.into());
    assert_eq!(mct_count(2, 0), 5u32.into());
    assert_eq!(mct_count(3, 1), 14u32.into());
    assert_eq!(mct_count_by_k(3, 1, 1), 8u32.into());
}
