use num_bigint::BigInt;

use reflex_core::exactnum::Rat;
use reflex_core::rootsys::{build_root_system, short_exponents, RootSystem, RootType};
use reflex_core::series::Poly;
use reflex_core::weylpoincare::{
    affine_rhs, affine_weighted_series, alcoves_up_to, chevalley_order, closed_form_finite, degrees, dihedral_two_param,
    enumerate_weyl, finite_weighted_poincare, macdonald_entries, macdonald_polynomial, weighted_stat, AffineForm,
    ChevalleyType, Weighting,
};

fn sys(kind: RootType, rank: usize) -> RootSystem {
    build_root_system(kind, rank).unwrap()
}

fn ints(coeffs: &[Rat]) -> Vec<i64> {
    coeffs.iter().map(|c| c.to_i64().unwrap()).collect()
}

fn two_length_list() -> Vec<RootSystem> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.push(sys(RootType::B, n));
        out.push(sys(RootType::C, n));
    }
    out.push(sys(RootType::F, 4));
    out.push(sys(RootType::G, 2));
    out
}

fn mat_mul2(a: &[i64], b: &[i64]) -> Vec<i64> {
    (0..4).map(|k| (0..2).map(|j| a[(k / 2) * 2 + j] * b[j * 2 + k % 2]).sum()).collect()
}

#[test]
fn c2_inversion_sets_and_weighted_lengths() {
    // Simple roots labelled with the long one first: s = s_{long}, t = s_{short}.
    // Our C2 has the long simple root second, so indices and coefficients swap.
    let c2 = sys(RootType::C, 2);
    let weights = Weighting::SquaredLength.weights(&c2);
    let elements = enumerate_weyl(&c2).unwrap();
    assert_eq!(elements.len(), 8);
    let letter = |c: char| if c == 's' { 1 } else { 0 };
    let rows: [(&str, &[[i64; 2]], usize, u32); 8] = [
        ("", &[], 0, 0),
        ("sts", &[[1, 0], [1, 1], [1, 2]], 3, 5),
        ("s", &[[1, 0]], 1, 2),
        ("st", &[[0, 1], [1, 2]], 2, 3),
        ("t", &[[0, 1]], 1, 1),
        ("stst", &[[1, 0], [1, 2], [1, 1], [0, 1]], 4, 6),
        ("ts", &[[1, 0], [1, 1]], 2, 3),
        ("tst", &[[0, 1], [1, 2], [1, 1]], 3, 4),
    ];
    for (word, inv, len, stat) in rows {
        let word: Vec<usize> = word.chars().map(letter).collect();
        // the listed word may differ from ours; compare as group elements
        let mut m = vec![1, 0, 0, 1];
        for &i in &word {
            let s = &elements.iter().find(|x| x.word == [i]).unwrap().matrix;
            m = mat_mul2(&m, s);
        }
        let w = elements.iter().find(|e| e.matrix == m).unwrap();
        assert_eq!(w.length(), len);
        assert_eq!(weighted_stat(w, &weights), stat);
        let mut got: Vec<Vec<i64>> = w.inversions.iter().map(|&r| c2.positive_roots()[r].coeffs.clone()).collect();
        let mut want: Vec<Vec<i64>> = inv.iter().map(|[a, b]| vec![*b, *a]).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }
}

#[test]
fn finite_sum_equals_closed_form_and_macdonald() {
    for s in two_length_list().into_iter().chain([sys(RootType::A, 2), sys(RootType::A, 3)]) {
        let sum = finite_weighted_poincare(&s, Weighting::SquaredLength).unwrap();
        assert_eq!(closed_form_finite(&s, Weighting::SquaredLength).unwrap(), sum, "{}", s.label());
        assert_eq!(macdonald_polynomial(&s).unwrap(), sum, "{}", s.label());
    }
}

#[test]
fn unit_weights_give_coxeter_length() {
    for s in two_length_list() {
        let sum = finite_weighted_poincare(&s, Weighting::Unit).unwrap();
        let prod = degrees(&s).iter().fold(Poly::one(), |acc, &d| &acc * &Poly::q_integer(d as usize));
        assert_eq!(sum, prod, "{}", s.label());
    }
}

#[test]
fn small_finite_examples() {
    let a2 = finite_weighted_poincare(&sys(RootType::A, 2), Weighting::SquaredLength).unwrap();
    assert_eq!(a2, &Poly::q_integer(2) * &Poly::q_integer(3));
    let g2 = finite_weighted_poincare(&sys(RootType::G, 2), Weighting::SquaredLength).unwrap();
    let num = &(&Poly::from_ints(&[1, 0, 0, 0, 1, 0, 0, 0, 1]) * &Poly::q_power_minus_one(2)) * &Poly::q_power_minus_one(6);
    let den = &Poly::q_integer(3) * &Poly::from_ints(&[1, -1]).pow(2);
    assert_eq!(g2, num.div_exact(&den).unwrap());
}

#[test]
fn b5_c5_weighted_height_tableaux() {
    let b5_top = [4, 4, 4, 4, 2, 6, 6, 6, 4, 8, 8, 6, 6, 10, 8, 8, 10, 10, 10, 12, 12, 14, 14, 16, 18];
    let b5_ht = [2, 2, 2, 2, 1, 4, 4, 4, 3, 6, 6, 5, 4, 8, 7, 6, 9, 8, 8, 10, 10, 12, 12, 14, 16];
    let c5_top = [2, 2, 2, 2, 4, 3, 3, 3, 4, 4, 4, 5, 6, 5, 6, 6, 7, 7, 8, 8, 8, 9, 10, 10, 12];
    let c5_ht = [1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 6, 6, 6, 7, 7, 8, 8, 9, 10];
    for (kind, top, ht) in [(RootType::B, b5_top, b5_ht), (RootType::C, c5_top, c5_ht)] {
        let entries = macdonald_entries(&sys(kind, 5));
        let mut got_ht: Vec<u32> = entries.iter().map(|e| e.0).collect();
        let mut got_top: Vec<u32> = entries.iter().map(|e| e.1).collect();
        let (mut want_ht, mut want_top) = (ht.to_vec(), top.to_vec());
        for v in [&mut got_ht, &mut got_top, &mut want_ht, &mut want_top] {
            v.sort();
        }
        assert_eq!(got_ht, want_ht, "{kind}5 heights");
        assert_eq!(got_top, want_top, "{kind}5 tops");
    }
}

#[test]
fn affine_walk_matches_product_with_short_factor() {
    let cases = [(RootType::C, 2, 20), (RootType::B, 2, 20), (RootType::C, 3, 20), (RootType::B, 3, 20), (RootType::G, 2, 20), (RootType::F, 4, 12)];
    for (kind, rank, cutoff) in cases {
        let s = sys(kind, rank);
        for weighting in [Weighting::SquaredLength, Weighting::Unit] {
            let walk = affine_weighted_series(&s, weighting, cutoff);
            let rhs = affine_rhs(&s, weighting, AffineForm::WithShortFactor, cutoff as usize).unwrap();
            assert_eq!(ints(walk.coeffs()), ints(rhs.coeffs()), "{} {weighting:?}", s.label());
        }
        let unit = affine_weighted_series(&s, Weighting::Unit, cutoff);
        let plain = affine_rhs(&s, Weighting::Unit, AffineForm::Plain, cutoff as usize).unwrap();
        assert_eq!(ints(unit.coeffs()), ints(plain.coeffs()), "{} unit", s.label());
    }
}

#[test]
fn plain_affine_product_misses_short_factor() {
    let c2 = sys(RootType::C, 2);
    let walk = affine_weighted_series(&c2, Weighting::SquaredLength, 6);
    let plain = affine_rhs(&c2, Weighting::SquaredLength, AffineForm::Plain, 6).unwrap();
    assert_eq!(ints(walk.coeffs()), vec![1, 2, 2, 4, 6, 6, 8]);
    assert_eq!(ints(plain.coeffs()), vec![1, 3, 4, 5, 7, 8, 9]);
}

#[test]
fn c2_affine_over_finite_ratio() {
    let c2 = sys(RootType::C, 2);
    let walk = affine_weighted_series(&c2, Weighting::SquaredLength, 6);
    let finite = finite_weighted_poincare(&c2, Weighting::SquaredLength).unwrap().to_series(6);
    let ratio = walk.div(&finite).unwrap();
    assert_eq!(ints(ratio.coeffs()), vec![1, 1, 0, 1, 2, 1, 1]);
    assert_eq!(ints(affine_weighted_series(&c2, Weighting::SquaredLength, 0).coeffs()), vec![1]);
}

#[test]
fn c2_alcoves_around_origin() {
    let c2 = sys(RootType::C, 2);
    let dual = c2.dual();
    let weights: Vec<u32> = dual.positive_roots().iter().map(|r| 3 - r.weight).collect();
    let mut near: Vec<u32> = alcoves_up_to(&dual, &weights, 6)
        .into_iter()
        .filter(|a| a.floors.iter().all(|&f| f == 0 || f == -1))
        .map(|a| a.stat)
        .collect();
    near.sort();
    assert_eq!(near, vec![0, 1, 2, 3, 3, 4, 5, 6]);
}

#[test]
fn dihedral_two_parameter_identity() {
    for b in 2..=8 {
        let r = dihedral_two_param(b);
        assert_eq!(r.order, 4 * b as usize);
        assert!(r.ok_bivariate, "b = {b}: {} vs {}", r.bivariate, r.closed_form);
        assert!(r.ok_specialized, "b = {b}");
        // x = y recovers the ordinary Poincaré polynomial [2]_q [2b]_q
        let diag = r.bivariate.diagonal();
        assert_eq!(Poly::from_ints(&diag), &Poly::q_integer(2) * &Poly::q_integer(2 * b as usize));
    }
    let r = dihedral_two_param(4);
    let num = &(&Poly::from_ints(&[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1]) * &Poly::q_power_minus_one(2)) * &Poly::q_power_minus_one(8);
    let den = &Poly::q_integer(4) * &Poly::from_ints(&[1, -1]).pow(2);
    assert_eq!(r.specialized, num.div_exact(&den).unwrap());
}

fn big_pow(q: u64, e: u32) -> BigInt {
    BigInt::from(q).pow(e)
}

fn classical_order(ty: ChevalleyType, q: u64) -> BigInt {
    let qq = |e: u32| big_pow(q, e);
    match ty {
        ChevalleyType::TwistedA(n) => {
            let n = n as u32;
            let mut out = qq(n * (2 * n - 1));
            for i in 2..=2 * n {
                out *= if i % 2 == 0 { qq(i) - 1 } else { qq(i) + 1 };
            }
            out
        }
        ChevalleyType::TwistedD(n) => {
            let n = n as u32;
            let mut out = qq(n * (n + 1)) * (qq(n + 1) + 1);
            for i in 1..=n {
                out *= qq(2 * i) - 1;
            }
            out
        }
        ChevalleyType::Triality => qq(12) * (qq(8) + qq(4) + 1) * (qq(6) - 1) * (qq(2) - 1),
        ChevalleyType::TwistedE6 => {
            qq(36) * (qq(12) - 1) * (qq(9) + 1) * (qq(8) - 1) * (qq(6) - 1) * (qq(5) + 1) * (qq(2) - 1)
        }
    }
}

#[test]
fn twisted_orders_match_classical_formulas() {
    let mut types = vec![ChevalleyType::Triality, ChevalleyType::TwistedE6];
    for n in 2..=4 {
        types.push(ChevalleyType::TwistedA(n));
        types.push(ChevalleyType::TwistedD(n));
    }
    for ty in types {
        for q in [2, 3, 4] {
            assert_eq!(chevalley_order(ty, q).unwrap(), classical_order(ty, q), "{ty} q = {q}");
        }
    }
    assert_eq!(chevalley_order(ChevalleyType::Triality, 2).unwrap(), BigInt::from(211341312u64));
    assert_eq!(chevalley_order(ChevalleyType::TwistedA(2), 2).unwrap(), BigInt::from(25920u64));
    assert_eq!(chevalley_order(ChevalleyType::TwistedD(3), 2).unwrap(), BigInt::from(197406720u64));
    assert!(chevalley_order(ChevalleyType::TwistedA(1), 2).is_err());
    assert!(chevalley_order(ChevalleyType::Triality, 1).is_err());
}

#[test]
fn short_exponents_table() {
    for n in 2..=5 {
        assert_eq!(short_exponents(&sys(RootType::B, n)).unwrap(), (1..n as u32).map(|i| 2 * i).collect::<Vec<_>>());
        assert_eq!(short_exponents(&sys(RootType::C, n)).unwrap(), vec![n as u32]);
    }
    assert_eq!(short_exponents(&sys(RootType::F, 4)).unwrap(), vec![4, 8]);
    assert_eq!(short_exponents(&sys(RootType::G, 2)).unwrap(), vec![3]);
    assert!(short_exponents(&sys(RootType::A, 3)).is_err());
}
