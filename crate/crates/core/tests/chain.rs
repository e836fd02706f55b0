use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rat_core::algebra::Rational;
use rat_core::markov::{build_chain, moves, state_space, stationary_distribution, ChainParams};
use rat_core::tableau::weight_of_word;
use rat_core::Limits;

fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

#[test]
fn rows_are_stochastic() {
    let p = ChainParams::from_ints((1, 2), (1, 3), (1, 5)).unwrap();
    for n in 1..=5 {
        for r in 0..=n {
            let c = build_chain(n, r, &p).unwrap();
            for (i, row) in c.matrix.iter().enumerate() {
                assert!(row.iter().all(|x| !x.is_negative()));
                assert_eq!(
                    row.iter().fold(Rational::zero(), |a, x| a + x),
                    Rational::one()
                );
                let off = row
                    .iter()
                    .enumerate()
                    .filter(|(j, x)| *j != i && !x.is_zero())
                    .count();
                assert!(off <= n + 1);
            }
        }
    }
}

#[test]
fn moves_keep_the_sector() {
    let p = ChainParams::from_ints((1, 1), (1, 1), (1, 1)).unwrap();
    for n in 1..=5 {
        for r in 0..=n {
            for w in state_space(n, r) {
                for (u, _) in moves(&w, &p) {
                    assert_eq!((u.len(), u.r()), (n, r));
                }
            }
        }
    }
}

#[test]
fn state_space_sizes() {
    for n in 1..=6usize {
        for r in 0..=n {
            let expect = (0..r).fold(1u64, |a, i| a * (n - i) as u64 / (i as u64 + 1)) << (n - r);
            assert_eq!(state_space(n, r).len() as u64, expect);
        }
    }
}

#[test]
fn solver_satisfies_balance() {
    let p = ChainParams::from_ints((2, 3), (1, 5), (1, 1)).unwrap();
    let c = build_chain(4, 1, &p).unwrap();
    let pi = stationary_distribution(&c).unwrap();
    for j in 0..pi.len() {
        let inflow = (0..pi.len()).fold(Rational::zero(), |a, i| a + &pi[i] * &c.matrix[i][j]);
        assert_eq!(inflow, pi[j]);
    }
}

fn unit() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=9).prop_map(|(a, b)| rational(a.min(b), a.max(b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // Word weights are checked against the transition matrix directly,
    // with no linear solve involved.
    #[test]
    fn weights_are_invariant(alpha in unit(), beta in unit(), q in unit(), n in 1usize..=4, r in 0usize..=4) {
        prop_assume!(r <= n);
        let p = ChainParams::new(alpha, beta, q).unwrap();
        let c = build_chain(n, r, &p).unwrap();
        let at = p.assignment();
        let w: Vec<Rational> = c
            .states
            .iter()
            .map(|s| weight_of_word(s, &Limits::default()).unwrap().eval(&at).unwrap())
            .collect();
        for j in 0..w.len() {
            let inflow = (0..w.len()).fold(Rational::zero(), |a, i| a + &w[i] * &c.matrix[i][j]);
            prop_assert_eq!(&inflow, &w[j]);
        }
    }
}
