use fibpart_core::fibfacts::fib;
use fibpart_core::polyfit::{binomial_fit, diagonal_polynomial, BinomialPoly, Family};
use fibpart_core::quiver::{evaluate_additive, mesh_violations};
use fibpart_core::triangles::{even_table, odd_table, EvenQuiver, OddQuiver};
use fibpart_core::{BigInt, Coord, TranslationQuiver};
use proptest::prelude::*;
use std::sync::OnceLock;

fn shared() -> &'static (fibpart_core::ValueTable, fibpart_core::ValueTable) {
    static TABLES: OnceLock<(fibpart_core::ValueTable, fibpart_core::ValueTable)> = OnceLock::new();
    TABLES.get_or_init(|| (even_table(61), odd_table(61)))
}

fn weights<'a>(
    q: &'a dyn TranslationQuiver,
    seed: &[i64],
) -> impl Fn(Coord) -> Option<BigInt> + 'a {
    let seed = seed.to_vec();
    move |c: Coord| {
        let k = (c.i * 31 + c.t * 7).rem_euclid(seed.len() as i64) as usize;
        q.is_projective(c).then(|| BigInt::from(seed[k]))
    }
}

fn linear_combination_is_additive(q: &dyn TranslationQuiver, a: i64, b: i64, f: &[i64], g: &[i64]) {
    let rows = q.max_row();
    let tf = evaluate_additive(q, weights(q, f), rows).unwrap();
    let tg = evaluate_additive(q, weights(q, g), rows).unwrap();
    let wf = weights(q, f);
    let wg = weights(q, g);
    let combined = evaluate_additive(q, |c| Some(wf(c)? * a + wg(c)? * b), rows).unwrap();
    assert!(mesh_violations(q, &combined).is_empty());
    for (c, v) in combined.iter() {
        assert_eq!(
            v,
            &(tf.get(c).unwrap() * a + tg.get(c).unwrap() * b),
            "at {c}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn additive_functions_form_a_vector_space(
        a in -5i64..5,
        b in -5i64..5,
        f in prop::collection::vec(-20i64..20, 1..6),
        g in prop::collection::vec(-20i64..20, 1..6),
        rows in 1u32..=20,
    ) {
        linear_combination_is_additive(&EvenQuiver::new(rows), a, b, &f, &g);
        linear_combination_is_additive(&OddQuiver::new(rows), a, b, &f, &g);
    }

    #[test]
    fn even_rows_are_symmetric_through_lookup(t in 0i64..=60, i in -3i64..=63) {
        let (even, _) = shared();
        prop_assert_eq!(even.even_lookup(i, t).unwrap(), even.even_lookup(t - i, t).unwrap());
    }

    #[test]
    fn odd_accessors_are_dual(t in 0i64..=60, i in -3i64..=63) {
        let (_, odd) = shared();
        prop_assert_eq!(odd.odd_lookup_double(i, t).unwrap(), odd.odd_lookup_prime(t - i - 1, t).unwrap());
    }

    #[test]
    fn stored_entries_are_positive(t in 0i64..=60) {
        let (even, odd) = shared();
        prop_assert!(even.row(t).unwrap().iter().all(|v| v > &BigInt::from(0)));
        prop_assert!(odd.row(t).unwrap().iter().all(|v| v > &BigInt::from(0)));
    }

    #[test]
    fn evaluation_is_deterministic(rows in 0u32..=30) {
        prop_assert_eq!(even_table(rows), even_table(rows));
        prop_assert_eq!(odd_table(rows), odd_table(rows));
    }

    #[test]
    fn fit_recovers_any_binomial_polynomial(
        coeffs in prop::collection::vec(-50i64..50, 1..6),
        t0 in -10i64..20,
        extra in 1usize..4,
    ) {
        let p = BinomialPoly::from_i64(&coeffs, t0);
        let samples: Vec<_> = (t0..t0 + (p.degree() + 1 + extra) as i64).map(|t| (t, p.evaluate(t))).collect();
        let fit = binomial_fit(&samples).unwrap();
        prop_assert!(fit.verified);
        prop_assert!(fit.poly.same_polynomial(&p));
    }

    #[test]
    fn fitted_diagonals_are_monic_of_their_index(i in 0i64..=8, which in 0usize..3) {
        let (even, odd) = shared();
        let family = [Family::Even, Family::OddPrime, Family::OddDouble][which];
        let tbl = if family == Family::Even { even } else { odd };
        let p = diagonal_polynomial(tbl, family, i, 60).unwrap();
        prop_assert_eq!(p.degree() as i64, i);
        prop_assert!(p.is_monic());
        for t in p.t_min..=60 {
            prop_assert_eq!(p.evaluate(t), family.lookup(tbl, i, t).unwrap());
        }
    }

    #[test]
    fn delta_of_shifted_fibonacci(n in 1u64..400) {
        prop_assert_eq!(fib(n + 2).unwrap() - fib(n + 1).unwrap(), fib(n).unwrap());
    }
}
