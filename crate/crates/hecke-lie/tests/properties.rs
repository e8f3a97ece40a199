use hecke_lie::exactnum::{cyclo_root, Cyclotomic, Rational};
use hecke_lie::generic::{lambda_to_tau, tau_to_lambda, TauParameters};
use hecke_lie::heckelie::Context;
use hecke_lie::matlin::{nullspace, Matrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n, d))
}

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    (prop::sample::select(vec![1u64, 3, 4, 5, 8, 12]), prop::collection::vec((0i64..24, small_rational()), 1..4))
        .prop_map(|(n, terms)| {
            terms.into_iter().fold(Cyclotomic::zero(), |acc, (k, c)| acc + cyclo_root(n, k).unwrap().scale(&c))
        })
}

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..4, rows * cols)
        .prop_map(move |v| Matrix::from_vec(rows, cols, v.into_iter().map(Cyclotomic::from_int).collect()).unwrap())
}

fn big(r: &Rational) -> BigRational {
    BigRational::new(r.numer(), r.denom())
}

proptest! {
    #[test]
    fn rational_matches_bigrational(a in small_rational(), b in small_rational(), k in 0u32..30) {
        prop_assert_eq!(big(&(&a + &b)), big(&a) + big(&b));
        prop_assert_eq!(big(&(&a * &b)), big(&a) * big(&b));
        prop_assert_eq!(big(&a.pow(k)), num_traits::pow(big(&a), k as usize));
        if !b.is_zero() {
            prop_assert_eq!(big(&(&a / &b)), big(&a) / big(&b));
        }
    }

    #[test]
    fn rational_overflow_promotes(n in i64::MAX / 2..i64::MAX) {
        let a = Rational::from_int(n);
        let sq = &a * &a;
        prop_assert_eq!(sq.numer(), BigInt::from(n) * BigInt::from(n));
        prop_assert_eq!(&(&sq / &a), &a);
    }

    #[test]
    fn rational_text_round_trip(a in small_rational()) {
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), a);
    }

    #[test]
    fn cyclotomic_field_laws(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn galois_is_a_ring_map(a in cyclotomic(), b in cyclotomic(), k in prop::sample::select(vec![1i64, 7, 11, 13, 17, 19, 23, 29])) {
        let g = |x: &Cyclotomic| x.galois(k).unwrap();
        prop_assert_eq!(g(&(&a * &b)), &g(&a) * &g(&b));
        prop_assert_eq!(g(&(&a + &b)), &g(&a) + &g(&b));
        prop_assert_eq!(a.conj().conj(), a.clone());
    }

    #[test]
    fn cyclotomic_text_round_trip(a in cyclotomic()) {
        prop_assert_eq!(a.to_string().parse::<Cyclotomic>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Cyclotomic>(&json).unwrap(), a);
    }

    #[test]
    fn rank_nullity(m in int_matrix(4, 6)) {
        let kernel = nullspace(&m);
        prop_assert_eq!(m.rank() + kernel.len(), 6);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(Cyclotomic::is_zero));
        }
    }

    #[test]
    fn determinant_multiplicative(a in int_matrix(3, 3), b in int_matrix(3, 3)) {
        prop_assert_eq!((&a * &b).determinant(), &a.determinant() * &b.determinant());
        match a.inverse() {
            Ok(inv) => prop_assert!((&a * &inv).is_identity()),
            Err(_) => prop_assert!(a.determinant().is_zero()),
        }
    }

    #[test]
    fn tau_lambda_round_trip(tau in prop::collection::vec(cyclotomic(), 3)) {
        let ctx = Context::builtin("g4").unwrap();
        let tau = TauParameters { values: vec![tau] };
        let (point, lambda0) = tau_to_lambda(&ctx, &tau).unwrap();
        prop_assert_eq!(lambda_to_tau(&ctx, &point, &lambda0).unwrap(), tau);
    }
}
