mod common;

use common::random_ratq;
use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qblocks::qfield::{eval_at_kappa, q_integer, ratq_from_json, ratq_to_json, QNumeric, RatQ};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ratq() -> impl Strategy<Value = RatQ> {
    any::<u64>().prop_map(|s| random_ratq(&mut ChaCha8Rng::seed_from_u64(s)))
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-9 * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in ratq(), b in ratq(), c in ratq()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &RatQ::zero(), a.clone());
        prop_assert_eq!(&a * &RatQ::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses(a in ratq(), b in ratq()) {
        prop_assume!(!b.is_zero());
        let q = a.checked_div(&b).unwrap();
        prop_assert_eq!(&q * &b, a);
        prop_assert!((&b * &b.inv().unwrap()).is_one());
    }

    #[test]
    fn results_stay_canonical(a in ratq(), b in ratq()) {
        prop_assert!((&a + &b).is_canonical());
        prop_assert!((&a * &b).is_canonical());
        prop_assert!((&a - &b).is_canonical());
    }

    #[test]
    fn equality_is_cross_multiplication(a in ratq(), b in ratq()) {
        let cross = a.num() * b.den() == b.num() * a.den();
        prop_assert_eq!(a == b, cross);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratq(), b in ratq(), kappa in 2.2f64..9.0) {
        let ctx = QNumeric::new(kappa).unwrap();
        let (Ok(x), Ok(y)) = (eval_at_kappa(&a, &ctx), eval_at_kappa(&b, &ctx)) else {
            return Ok(());
        };
        prop_assert!(close(eval_at_kappa(&(&a + &b), &ctx).unwrap(), x + y));
        prop_assert!(close(eval_at_kappa(&(&a * &b), &ctx).unwrap(), x * y));
    }

    #[test]
    fn json_round_trip(a in ratq()) {
        prop_assert_eq!(ratq_from_json(&ratq_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn q_integer_addition(m in 0i64..12, n in 0i64..12) {
        let lhs = RatQ::q_integer(m + n).unwrap();
        let rhs = &(&RatQ::q_integer(m).unwrap() * &RatQ::q_pow(n))
            + &(&RatQ::q_integer(n).unwrap() * &RatQ::q_pow(-m));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn q_integers_at_kappa_are_sine_ratios() {
    for kappa in [2.5, 3.7, 5.3, 6.9] {
        let ctx = QNumeric::new(kappa).unwrap();
        let t = 4.0 * std::f64::consts::PI / kappa;
        for n in 1..8 {
            let v = eval_at_kappa(&RatQ::from_poly(q_integer(n).unwrap()), &ctx).unwrap();
            let expected = (n as f64 * t).sin() / t.sin();
            assert!((v.re - expected).abs() < 1e-12 && v.im.abs() < 1e-12, "{kappa} {n}");
        }
    }
}

#[test]
fn small_q_integers() {
    assert_eq!(q_integer(0).unwrap().to_string(), "0");
    assert_eq!(RatQ::q_integer(1).unwrap(), RatQ::one());
    let two = RatQ::q_integer(2).unwrap();
    assert_eq!(two, &RatQ::q_pow(1) + &RatQ::q_pow(-1));
    assert_eq!(&two * &two, &RatQ::q_integer(3).unwrap() + &RatQ::one());
}
