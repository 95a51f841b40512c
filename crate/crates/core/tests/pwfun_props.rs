mod common;

use common::{global_function, light_function, open_set};
use proptest::prelude::*;
use qlab_core::exactnum::{AlgebraicNumber, Rational};
use qlab_core::parse::parse_function;
use qlab_core::pwfun::{cozero_witness, pi_value, Norm, PiecewiseFunction};
use qlab_core::topology::IntervalSet;

fn norm(f: &PiecewiseFunction) -> AlgebraicNumber {
    match f.sup_norm() {
        Norm::Finite(v) => v,
        Norm::Infinite => panic!("global functions are bounded"),
    }
}

fn two() -> Rational {
    Rational::from_integer(2.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in global_function(), b in global_function(), c in global_function()) {
        prop_assert_eq!(a.add(&b.add(&c).unwrap()).unwrap(), a.add(&b).unwrap().add(&c).unwrap());
        prop_assert_eq!(a.mul(&b.mul(&c).unwrap()).unwrap(), a.mul(&b).unwrap().mul(&c).unwrap());
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn formal_reality(a in light_function(), b in light_function(), c in light_function()) {
        let s = a.pow(2).add(&b.pow(2)).unwrap().add(&c.pow(2)).unwrap();
        let all_zero = a.is_zero() && b.is_zero() && c.is_zero();
        prop_assert_eq!(norm(&s).is_zero(), all_zero);
    }

    #[test]
    fn pi_ring_identities(a in global_function(), b in global_function()) {
        let (pa, pb) = (pi_value(&a), pi_value(&b));
        prop_assert_eq!(pa.pow(2), a.pow(2));
        let s = pa.add(&pb).unwrap();
        prop_assert_eq!(pi_value(&s), s.clone());
        prop_assert_eq!(pi_value(&a.mul(&b).unwrap()), pa.mul(&pb).unwrap());
        prop_assert_eq!(pi_value(&a.neg()), pa.clone());
        prop_assert!(pa.is_nonnegative());
        let candidate = a.neg();
        if candidate.is_nonnegative() && candidate.pow(2) == pa.pow(2) {
            prop_assert_eq!(candidate, pa.clone());
        }
    }

    #[test]
    fn lattice_laws(a in global_function(), b in global_function()) {
        let lhs = a.join(&b).scale(&two());
        let rhs = a.add(&b).unwrap().add(&a.sub(&b).unwrap().abs()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let zero = PiecewiseFunction::constant(&IntervalSet::full(), Rational::from_integer(0.into()));
        prop_assert!(a.join(&zero).mul(&a.meet(&zero)).unwrap().is_zero());
    }

    #[test]
    fn bounded_functions_form_a_subring(a in global_function(), b in global_function()) {
        prop_assert!(a.add(&b).unwrap().sup_norm().is_finite());
        prop_assert!(a.sub(&b).unwrap().sup_norm().is_finite());
        prop_assert!(a.mul(&b).unwrap().sup_norm().is_finite());
    }

    #[test]
    fn sup_norm_axioms(a in global_function(), b in global_function()) {
        let (na, nb) = (norm(&a), norm(&b));
        prop_assert!(norm(&a.mul(&b).unwrap()) <= na.mul(&nb));
        prop_assert!(norm(&a.add(&b).unwrap()) <= na.add(&nb));
        prop_assert_eq!(na.is_zero(), a.is_zero());
        prop_assert_eq!(parse_function(&a.render()).unwrap(), a.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cozero_witness_round_trip(u in open_set()) {
        let w = cozero_witness(&u).unwrap();
        prop_assert!(w.is_global());
        prop_assert_eq!(w.cozero_set(), u);
    }
}

#[test]
fn norm_of_one_is_one() {
    let one = PiecewiseFunction::constant(&IntervalSet::full(), Rational::from_integer(1.into()));
    assert_eq!(one.sup_norm(), Norm::Finite(AlgebraicNumber::one()));
}

#[test]
fn sum_of_zero_squares_has_zero_norm() {
    let zero = PiecewiseFunction::constant(&IntervalSet::full(), Rational::from_integer(0.into()));
    let s = zero.pow(2).add(&zero.pow(2)).unwrap().add(&zero.pow(2)).unwrap();
    assert!(norm(&s).is_zero());
}
