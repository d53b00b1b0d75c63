use reflex_core::exec::Strategy;
use reflex_core::groups::{build_exceptional, build_monomial_group, GroupName, ReflectionGroup};
use reflex_core::linalg::{group_closure, DEFAULT_CAP};
use reflex_core::reps::{eps_rep, validate};
use reflex_core::series::{
    factor_bivariate_linear, invariant_table, lhs_solomon, lhs_two_orbit, rhs_solomon, verify_identity, BiPoly,
    InvariantTable, MolienData, Poly,
};

fn build(name: &str) -> ReflectionGroup {
    match name.parse::<GroupName>().unwrap() {
        GroupName::Monomial { m, b, n } => build_monomial_group(m, b, n).unwrap(),
        GroupName::Exceptional(k) => build_exceptional(k).unwrap(),
    }
}

fn table(g: &ReflectionGroup) -> InvariantTable {
    invariant_table(g, &MolienData::new(g, Strategy::default()).unwrap()).unwrap()
}

const SMALL: &[&str] = &["G(2,1,2)", "G(3,1,2)", "G(4,2,2)", "G(4,4,2)", "G(6,3,2)", "G(2,1,3)", "G(3,3,3)", "G(4,2,3)", "G(2,2,4)", "G4", "G5", "G6"];

#[test]
fn dihedral_b2_example() {
    let g = build("G(2,1,2)");
    let t = table(&g);
    assert_eq!(t.exponents, vec![1, 3]);
    for orbit in ['s', 't'] {
        let rep = eps_rep(&g, orbit).unwrap();
        let unsigned = verify_identity(&g, &t, &rep, false).unwrap();
        assert_eq!(unsigned.lhs.to_string(), "1+2y+2x+2xy+y^2");
        assert_eq!(unsigned.rhs_factored, "(1+2x+y)(1+y)");
        let signed = verify_identity(&g, &t, &rep, true).unwrap();
        assert_eq!(signed.lhs.to_string(), "1-2y-2x+2xy+y^2");
        assert_eq!(signed.rhs_factored, "(1-2x-y)(1-y)");
        assert!(unsigned.ok && signed.ok && unsigned.default_pairing && signed.default_pairing);
    }
}

#[test]
fn solomon_and_two_orbit_on_small_groups() {
    for name in SMALL {
        let g = build(name);
        let t = table(&g);
        for signed in [false, true] {
            let lhs = lhs_solomon(&g, signed).unwrap();
            assert_eq!(lhs, rhs_solomon(&t, signed), "{name} signed={signed}");
            for o in g.orbits() {
                let rep = eps_rep(&g, o.label).unwrap();
                assert!(validate(&g, &rep).ok(), "{name} {}", o.label);
                let r = verify_identity(&g, &t, &rep, signed).unwrap();
                assert!(r.ok, "{name} {} signed={signed}: {} vs {}", o.label, r.lhs, r.rhs);
                // x := y collapses to the one-variable sum
                assert_eq!(Poly::from_ints(&r.lhs.diagonal()), lhs, "{name} {}", o.label);
                assert!(factor_bivariate_linear(&r.lhs).is_some(), "{name} {}", o.label);
            }
        }
        for o in &t.orbits {
            assert_eq!(o.reflexponents.iter().sum::<usize>(), o.reflections, "{name} {}", o.label);
        }
        assert!(t.checks().iter().all(|c| c.1), "{name}: {:?}", t.checks());
    }
}

#[test]
fn restricted_fixed_space_is_dominated() {
    for name in SMALL {
        let g = build(name);
        for o in g.orbits() {
            let rep = eps_rep(&g, o.label).unwrap();
            assert!((0..g.order()).all(|i| rep.m(i) <= g.m_v(i)), "{name} {}", o.label);
        }
    }
}

#[test]
fn monomial_and_matrix_realizations_agree() {
    for name in ["G(2,1,2)", "G(3,1,2)", "G(4,2,2)", "G(3,3,3)", "G(4,2,3)", "G(2,2,4)", "G(3,1,3)"] {
        let g = build(name);
        let closure = group_closure(g.generator_matrices(), DEFAULT_CAP).unwrap();
        assert_eq!(closure.order(), g.order(), "{name}");
        for i in 0..g.order() {
            let m = g.matrix(i);
            assert!(closure.index_of(&m).is_some(), "{name} element {i}");
            assert_eq!(m.minus_identity().rank(), g.m_v(i), "{name} element {i}");
            assert_eq!(m.det(), g.det(i), "{name} element {i}");
            assert_eq!(m.trace(), g.trace(i), "{name} element {i}");
        }
    }
}

#[test]
fn non_restricted_orbit_factorizations() {
    let cases: [(&str, &str, &str); 2] = [
        ("G13", "(1+8x+3y)(1+4x+3y)", "(1-12x-5y)(1-y)"),
        ("G(6,2,3)", "(1+9x+2y)(1+6x+2y)(1+3x+2y)", "(1-12x-y)(1-6x-y)(1-y)"),
    ];
    for (name, unsigned, signed) in cases {
        let g = build(name);
        assert!(!g.is_well_restricted('t'), "{name}");
        let t = table(&g);
        let rep = eps_rep(&g, 't').unwrap();
        let u = verify_identity(&g, &t, &rep, false).unwrap();
        let s = verify_identity(&g, &t, &rep, true).unwrap();
        assert!(u.ok && s.ok, "{name}");
        assert_eq!(u.rhs_factored, unsigned, "{name}");
        assert_eq!(s.rhs_factored, signed, "{name}");
        let lhs = lhs_two_orbit(&g, &rep, false).unwrap();
        let (sign, f) = factor_bivariate_linear(&lhs).unwrap();
        assert_eq!(sign, 1);
        assert_eq!(BiPoly::format_factors(&f), unsigned, "{name}");
    }
}
