use proptest::prelude::*;

use reflex_core::exactnum::{CycloNum, Rat};
use reflex_core::series::{factor_bivariate_linear, BiPoly, Poly};

fn rat() -> impl Strategy<Value = Rat> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Rat::new(n, d))
}

fn big_rat() -> impl Strategy<Value = Rat> {
    (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Rat::new(n, d))
}

fn cyclo() -> impl Strategy<Value = CycloNum> {
    (prop::sample::select(vec![3u32, 4, 5, 6, 8, 12]), prop::collection::vec(rat(), 12))
        .prop_map(|(n, c)| CycloNum::from_power_coeffs(n, &c[..n as usize]))
}

fn same_field_pair() -> impl Strategy<Value = (CycloNum, CycloNum, CycloNum)> {
    (prop::sample::select(vec![3u32, 4, 5, 8, 12]), prop::collection::vec(rat(), 36)).prop_map(|(n, c)| {
        let k = n as usize;
        (
            CycloNum::from_power_coeffs(n, &c[..k]),
            CycloNum::from_power_coeffs(n, &c[12..12 + k]),
            CycloNum::from_power_coeffs(n, &c[24..24 + k]),
        )
    })
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-9i64..10, 1..8).prop_map(|c| Poly::from_ints(&c))
}

proptest! {
    #[test]
    fn rat_field_laws(a in big_rat(), b in big_rat(), c in rat()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        }
    }

    #[test]
    fn rat_text_round_trip(a in big_rat()) {
        prop_assert_eq!(a.to_string().parse::<Rat>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rat>(&json).unwrap(), a);
    }

    #[test]
    fn rat_floor_brackets(a in big_rat()) {
        let f = Rat::from_bigint(a.floor());
        prop_assert!(f <= a);
        prop_assert!(a < &f + &Rat::ONE);
    }

    #[test]
    fn cyclo_ring_laws((a, b, c) in same_field_pair()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn cyclo_inverse_and_conj(a in cyclo()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        if !a.is_zero() {
            let one = CycloNum::one(a.conductor());
            prop_assert_eq!(&a * &a.inv().unwrap(), one);
        }
    }

    #[test]
    fn cyclo_embedding_preserves_value(a in cyclo(), k in 1u32..4) {
        let m = a.conductor() * k;
        let b = a.embed(m).unwrap();
        prop_assert_eq!(b.conductor(), m);
        prop_assert_eq!(&b, &a);
        let (x, y) = a.to_complex();
        let (u, v) = b.to_complex();
        prop_assert!((x - u).abs() < 1e-9 && (y - v).abs() < 1e-9);
    }

    #[test]
    fn cyclo_json_round_trip(a in cyclo()) {
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<CycloNum>(&json).unwrap(), a);
    }

    #[test]
    fn roots_of_unity_have_their_order(n in 1u32..25, k in -30i64..30) {
        let z = CycloNum::root_of_unity(n, k);
        prop_assert!(z.pow(n as i64).unwrap().is_one());
        prop_assert_eq!(&z * &z.conj(), CycloNum::one(n));
    }

    #[test]
    fn poly_exact_division(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a.clone());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
    }

    #[test]
    fn series_inverse(a in poly(), order in 1usize..12) {
        prop_assume!(!a.coeff(0).is_zero());
        let s = a.to_series(order);
        let prod = s.mul(&s.inv().unwrap());
        prop_assert_eq!(prod.to_poly(), Poly::one());
    }

    #[test]
    fn linear_factors_are_recovered(factors in prop::collection::vec((0i64..12, 0i64..12), 0..5), negate in any::<bool>()) {
        let factors: Vec<(i64, i64)> = factors.into_iter().filter(|&(a, b)| a + b > 0).collect();
        let triples: Vec<(i64, i64, i64)> = factors.iter().map(|&(a, b)| (1, a, b)).collect();
        let mut p = BiPoly::product_of_linear(&triples);
        if negate {
            p = p.neg();
        }
        let (sign, got) = factor_bivariate_linear(&p).expect("product of linear factors");
        prop_assert_eq!(sign, if negate { -1 } else { 1 });
        let rebuilt: Vec<(i64, i64, i64)> = got.iter().map(|&(a, b)| (1, a, b)).collect();
        let mut back = BiPoly::product_of_linear(&rebuilt);
        if negate {
            back = back.neg();
        }
        prop_assert_eq!(back, p);
        let mut want = factors.clone();
        let mut got = got;
        want.sort();
        got.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn diagonal_substitution(factors in prop::collection::vec((0i64..8, 0i64..8), 0..4)) {
        let triples: Vec<(i64, i64, i64)> = factors.iter().map(|&(a, b)| (1, a, b)).collect();
        let p = BiPoly::product_of_linear(&triples);
        let univariate = factors.iter().fold(Poly::one(), |acc, &(a, b)| &acc * &Poly::from_ints(&[1, a + b]));
        prop_assert_eq!(Poly::from_ints(&p.diagonal()), univariate);
    }
}
