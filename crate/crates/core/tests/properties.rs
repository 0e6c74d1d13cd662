//! Property tests for the spec invariants: absorption, duality, cover
//! round-trips, parser round-trips, and quotient homomorphisms.

use proptest::prelude::*;

use pbzlab::algebra::{FiniteAlgebra, Flavor};
use pbzlab::congruence::all_congruences;
use pbzlab::constructions::{catalog, gdm, CatalogName};
use pbzlab::lattice::FiniteBoundedLattice;
use pbzlab::terms::{eval_term, parse_term, Term};

const NAMES: &[&str] = &[
    "D:1", "D:2", "D:3", "D:4", "D:5", "MO:1", "MO:2", "M3", "N5", "B6", "OMLNM", "GD:2", "GDM:2",
    "CompAOL11", "SANDWICH:M3",
];

fn arb_algebra() -> impl Strategy<Value = FiniteAlgebra> {
    (0..NAMES.len()).prop_map(|i| catalog(&NAMES[i].parse::<CatalogName>().unwrap()).unwrap())
}

fn arb_term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::Zero),
        Just(Term::One),
        prop_oneof![Just("x"), Just("y"), Just("z")].prop_map(Term::var),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::meet(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::join(a, b)),
            inner.clone().prop_map(Term::kleene),
            inner.prop_map(Term::brouwer),
        ]
    })
}

proptest! {
    #[test]
    fn absorption_and_bounds(a in arb_algebra(), x in 0usize..64, y in 0usize..64) {
        let l = a.lattice();
        let (x, y) = (x % a.n(), y % a.n());
        prop_assert_eq!(l.meet(x, l.join(x, y)), x);
        prop_assert_eq!(l.join(x, l.meet(x, y)), x);
        prop_assert!(l.leq(l.meet(x, y), x) && l.leq(x, l.join(x, y)));
        prop_assert!(l.leq(l.bottom(), x) && l.leq(x, l.top()));
    }

    #[test]
    fn dual_is_an_involution(a in arb_algebra()) {
        let l = a.lattice();
        let dd = l.dual().dual();
        prop_assert_eq!(l.covers(), dd.covers());
        prop_assert_eq!(l.bottom(), dd.bottom());
        prop_assert_eq!(l.top(), dd.top());
    }

    #[test]
    fn covers_round_trip(a in arb_algebra()) {
        let l = a.lattice();
        let covers = l.covers();
        let back = FiniteBoundedLattice::from_covers(l.n(), l.bottom(), l.top(), &covers).unwrap();
        prop_assert_eq!(covers, back.covers());
        for x in 0..l.n() {
            for y in 0..l.n() {
                prop_assert_eq!(l.meet(x, y), back.meet(x, y));
                prop_assert_eq!(l.join(x, y), back.join(x, y));
            }
        }
    }

    #[test]
    fn involution_reverses_order(a in arb_algebra(), x in 0usize..64, y in 0usize..64) {
        prop_assume!(a.flavor() >= Flavor::Bi);
        let l = a.lattice();
        let (x, y) = (x % a.n(), y % a.n());
        prop_assert_eq!(a.kleene(a.kleene(x)), x);
        prop_assert_eq!(l.leq(x, y), l.leq(a.kleene(y), a.kleene(x)));
    }

    #[test]
    fn printer_parser_round_trip(t in arb_term()) {
        let text = t.to_string();
        let back = parse_term(&text).unwrap();
        prop_assert_eq!(t, back);
    }

    #[test]
    fn quotient_commutes_with_evaluation(t in arb_term(), vx in 0usize..8, vy in 0usize..8, vz in 0usize..8) {
        let a = gdm(2).unwrap().algebra;
        let theta = all_congruences(&a, Flavor::Bz)
            .unwrap()
            .into_iter()
            .find(|c| !c.is_delta() && !c.is_nabla())
            .unwrap();
        let q = pbzlab::congruence::quotient(&a, &theta).unwrap();
        let assign = |name: &str| match name {
            "x" => vx % a.n(),
            "y" => vy % a.n(),
            _ => vz % a.n(),
        };
        let val: Vec<usize> = t.vars().iter().map(|v| assign(v)).collect();
        let down = eval_term(&a, &t, &val).unwrap();
        let qval: Vec<usize> = val.iter().map(|&v| theta.block_of(v)).collect();
        let up = eval_term(&q, &t, &qval).unwrap();
        prop_assert_eq!(theta.block_of(down), up);
    }
}
