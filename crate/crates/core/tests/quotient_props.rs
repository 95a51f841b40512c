mod common;

use common::{bounded_q_element, global_function, open_set, q_element, unit_rational};
use proptest::prelude::*;
use qlab_core::exactnum::{AlgebraicNumber, Polynomial, Rational};
use qlab_core::pwfun::{cozero_witness, Norm, PiecewiseFunction};
use qlab_core::quotient::{
    archimedean_witness, c1_norm, c1_norm_demo, dense_ideal_test, fill_removable, idem_to_regopen, idempotent_le,
    idempotent_of, norm_witness_76, regopen_to_idem, roq_witness, step_approx, unit_decomposition, QElement,
};
use qlab_core::topology::{Grid, IntervalSet};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn finite(n: Norm) -> AlgebraicNumber {
    n.finite().cloned().expect("bounded")
}

/// A rational point or `sqrt(m)/4` in `(0, 1)`.
fn point() -> impl Strategy<Value = AlgebraicNumber> {
    prop_oneof![
        unit_rational().prop_map(AlgebraicNumber::from),
        (2i64..16).prop_map(|m| {
            let p = Polynomial::from_ints(&[-m, 0, 16]);
            AlgebraicNumber::root(&p, &q(0, 1), &q(1, 1)).expect("one root in (0, 1)")
        }),
    ]
}

/// Density of the cozero union decided cell by cell on the merged grid: the
/// union is dense exactly when no open cell has every generator vanishing
/// identically.
fn brute_force_dense(gens: &[PiecewiseFunction]) -> bool {
    let grid = gens.iter().fold(Grid::unit(), |g, f| g.merge(f.grid()));
    let tables: Vec<_> = gens.iter().map(|f| f.table_on(&grid)).collect();
    (1..grid.atom_count()).step_by(2).all(|a| {
        tables
            .iter()
            .any(|t| t[a].as_ref().is_some_and(|r| !r.is_zero()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quasi_inverse_identities(f in q_element()) {
        let g = f.quasi_inverse();
        prop_assert_eq!(f.pow(2).mul(&g), f.clone());
        prop_assert_eq!(g.pow(2).mul(&f), g);
    }

    #[test]
    fn unit_decomposition_identities(a in q_element()) {
        let d = unit_decomposition(&a).unwrap();
        for (name, ok) in d.checks(&a) {
            prop_assert!(ok, "{} fails for {}", name, a.render());
        }
    }

    #[test]
    fn domains_are_cozero_sets(a in q_element()) {
        let dom = a.domain();
        prop_assert_eq!(cozero_witness(&dom).unwrap().cozero_set(), dom);
    }

    #[test]
    fn dense_ideal_test_matches_brute_force(gens in prop::collection::vec(global_function(), 1..4), cut in open_set()) {
        // multiply by a witness so that some generators vanish on whole intervals
        let w = cozero_witness(&cut).unwrap();
        let gens: Vec<PiecewiseFunction> = gens
            .iter()
            .enumerate()
            .map(|(k, g)| if k == 0 { g.mul(&w).unwrap() } else { g.clone() })
            .collect();
        prop_assert_eq!(dense_ideal_test(&gens), brute_force_dense(&gens));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn roq_witness_is_global_and_nonzero(h in q_element()) {
        prop_assume!(!h.is_zero());
        let a = roq_witness(&h).unwrap();
        prop_assert!(a.is_global());
        let ha = fill_removable(&h.rep().mul(&a).unwrap());
        prop_assert!(ha.is_global());
        prop_assert!(!ha.is_zero());
    }

    #[test]
    fn idempotents_match_regular_opens(u in open_set(), v in open_set()) {
        let (ru, rv) = (u.regularize().unwrap(), v.regularize().unwrap());
        let (e, f) = (idempotent_of(&u).unwrap(), idempotent_of(&v).unwrap());
        prop_assert_eq!(idem_to_regopen(&e).unwrap(), ru.clone());
        prop_assert_eq!(regopen_to_idem(&ru).unwrap(), e.clone());
        let one = QElement::one();
        let meet = ru.intersect(&rv).regularize().unwrap();
        let join = ru.union(&rv).regularize().unwrap();
        prop_assert_eq!(idem_to_regopen(&e.mul(&f)).unwrap(), meet);
        prop_assert_eq!(idem_to_regopen(&e.add(&f).sub(&e.mul(&f))).unwrap(), join);
        prop_assert_eq!(idem_to_regopen(&one.sub(&e)).unwrap(), ru.reg_complement());
        // distinct regular opens give distinct idempotents
        prop_assert_eq!(e == f, ru == rv);
    }

    #[test]
    fn idempotent_order(u in open_set(), v in open_set()) {
        let (e, f) = (idempotent_of(&u).unwrap(), idempotent_of(&v).unwrap());
        prop_assert_eq!(e.mul(&f) == e, idempotent_le(&e, &f));
    }

    #[test]
    fn step_approximation_is_within_one_over_n(g in bounded_q_element(), n in 1u32..=8) {
        let trace = step_approx(&g, n).unwrap();
        let s = trace.step.to_q();
        prop_assert!(s.rep().is_locally_constant());
        prop_assert!(s.domain().is_dense() && s.domain().is_open());
        let err = finite(g.sub(&s).rep().sup_norm());
        prop_assert!(err <= AlgebraicNumber::from(q(1, n.into())));
    }

    #[test]
    fn norm_witness_peaks_at_p(gens in prop::collection::vec(global_function(), 1..3), p in point()) {
        let gens: Vec<PiecewiseFunction> = std::iter::once(PiecewiseFunction::identity()).chain(gens).collect();
        prop_assume!(gens.iter().any(|g| g.evaluate(&p).map(|v| !v.is_zero()).unwrap_or(false)));
        let w = norm_witness_76(&gens, &p).unwrap();
        prop_assert_eq!(w.d.evaluate(&p).unwrap(), AlgebraicNumber::one());
        prop_assert_eq!(w.d.sup_norm(), Norm::Finite(AlgebraicNumber::one()));
    }

    #[test]
    fn c1_ratios_are_at_most_three_halves(p in common::poly(3)) {
        prop_assume!(!p.is_zero());
        let d = &Polynomial::x() * &p;
        let (ratio, nu_x) = c1_norm_demo(&d).unwrap();
        prop_assert!(ratio <= AlgebraicNumber::from(q(3, 2)));
        prop_assert_eq!(nu_x, AlgebraicNumber::from_int(2));
    }

    #[test]
    fn no_nonzero_infinitesimals(f in global_function()) {
        let a = f.pow(2);
        prop_assume!(!a.is_zero());
        let n = archimedean_witness(&a).unwrap();
        let na = a.scale(&Rational::from_integer(n));
        prop_assert!(finite(na.sup_norm()) > AlgebraicNumber::one());
    }
}

#[test]
fn traced_step_approximation_of_x() {
    let g = QElement::identity();
    let t = step_approx(&g, 2).unwrap();
    let half = q(1, 2);
    let zero = q(0, 1);
    assert_eq!(t.parts.len(), 2);
    assert_eq!(t.parts[0].0, zero);
    assert_eq!(t.parts[1].0, half);
    let err = finite(g.sub(&t.step.to_q()).rep().sup_norm());
    assert_eq!(err, AlgebraicNumber::from(half));
}

#[test]
fn c1_norm_of_identity_is_two() {
    assert_eq!(c1_norm(&Polynomial::x()), AlgebraicNumber::from_int(2));
}

#[test]
fn unit_ideal_witness() {
    let one = PiecewiseFunction::constant(&IntervalSet::full(), q(1, 1));
    let p = AlgebraicNumber::from(q(2, 7));
    let w = norm_witness_76(&[one], &p).unwrap();
    assert_eq!(w.d.evaluate(&p).unwrap(), AlgebraicNumber::one());
    assert_eq!(w.d.sup_norm(), Norm::Finite(AlgebraicNumber::one()));
}
