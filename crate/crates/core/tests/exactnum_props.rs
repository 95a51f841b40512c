mod common;

use std::cmp::Ordering;

use common::{poly, unit_rational};
use proptest::prelude::*;
use qlab_core::exactnum::sturm::SturmChain;
use qlab_core::exactnum::{isolate_real_roots, AlgebraicNumber, Polynomial, Rational};

fn window() -> (Rational, Rational) {
    (Rational::from_integer((-10).into()), Rational::from_integer(10.into()))
}

/// A real algebraic number in `[0, 1]`: rational, or a root of a random
/// polynomial.
fn algebraic() -> impl Strategy<Value = AlgebraicNumber> {
    algebraic_of_degree(4)
}

fn algebraic_of_degree(d: usize) -> impl Strategy<Value = AlgebraicNumber> {
    prop_oneof![
        unit_rational().prop_map(AlgebraicNumber::from),
        (poly(d), any::<prop::sample::Index>()).prop_filter_map("needs a root in (0,1)", |(p, ix)| {
            if p.is_zero() {
                return None;
            }
            let roots = isolate_real_roots(&p, &Rational::from_integer(0.into()), &Rational::from_integer(1.into()));
            (!roots.is_empty()).then(|| roots[ix.index(roots.len())].clone())
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn sturm_count_matches_isolation(p in poly(6)) {
        prop_assume!(!p.is_zero());
        let (lo, hi) = window();
        let roots = isolate_real_roots(&p, &lo, &hi);
        let chain = SturmChain::new(&p);
        prop_assert_eq!(roots.len(), chain.count_open(&lo, &hi));
        for w in roots.windows(2) {
            prop_assert_eq!(w[0].compare(&w[1]), Ordering::Less);
        }
        for r in &roots {
            prop_assert_eq!(r.sign_at(&p), 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn compare_is_a_total_order(a in algebraic(), b in algebraic(), c in algebraic()) {
        prop_assert_eq!(a.compare(&b), b.compare(&a).reverse());
        if a.compare(&b) != Ordering::Greater && b.compare(&c) != Ordering::Greater {
            prop_assert_ne!(a.compare(&c), Ordering::Greater);
        }
        let same = b.sign_at(&a.defining_poly()) == 0 && a.sign_at(&b.defining_poly()) == 0 && {
            // equal defining polynomials share roots; isolate to decide
            a.compare(&b) == Ordering::Equal
        };
        prop_assert_eq!(a.compare(&b) == Ordering::Equal, same);
        if a.compare(&b) == Ordering::Equal {
            prop_assert_eq!(b.sign_at(&a.defining_poly()), 0);
            prop_assert_eq!(a.sign_at(&b.defining_poly()), 0);
        }
    }

    #[test]
    fn refinement_keeps_comparisons(a in algebraic(), b in algebraic()) {
        let before = a.compare(&b);
        prop_assert_eq!(a.refine().compare(&b), before);
        prop_assert_eq!(a.compare(&b.refine().refine()), before);
    }

    #[test]
    fn field_operations_are_consistent(a in algebraic_of_degree(2), b in algebraic_of_degree(2)) {
        let s = a.add(&b);
        prop_assert_eq!(&s, &b.add(&a));
        prop_assert_eq!(s.sub(&b), a.clone());
        let p = a.mul(&b);
        prop_assert_eq!(&p, &b.mul(&a));
        if !b.is_zero() {
            prop_assert_eq!(p.div(&b).unwrap(), a.clone());
        }
        let x_minus = Polynomial::new(vec![-Rational::from_integer(1.into()), Rational::from_integer(1.into())]);
        prop_assert_eq!(a.add(&AlgebraicNumber::one()).sign_at(&x_minus) > 0, a.sign() > 0);
    }
}
