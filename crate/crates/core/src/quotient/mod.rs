//! The computable fragment of the ring of quotients of `C([0, 1])`.

pub mod element;
pub mod norms;
pub mod step;

pub use element::{
    cli_quotient_to_q, dense_ideal_test, domain_is_cozero_set, fill_removable, glue, idem_to_regopen, idempotent_le,
    idempotent_of, normalize_cli, q_arith, q_equal, regopen_to_idem, roq_witness, unit_decomposition, CliQuotient,
    QElement, QOp, UnitDecomposition,
};
pub use norms::{
    archimedean_witness, c1_norm, c1_norm_demo, norm_witness_76, nu_d_lower_bound, witness_polynomial, NormWitness,
};
pub use step::{step_approx, StepElement, StepTrace};

use crate::error::Result;
use crate::parse::Parser;

/// `e[<set>]`, `quot(<function>, <function>)` or a function literal on a
/// dense open domain.
pub fn parse_qelement(text: &str) -> Result<QElement> {
    let mut p = Parser::new(text);
    let q = qelement(&mut p)?;
    p.finish()?;
    Ok(q)
}

pub fn parse_cli_quotient(text: &str) -> Result<CliQuotient> {
    let mut p = Parser::new(text);
    if !p.eat_ident("quot") {
        return p.error("expected 'quot'");
    }
    let c = quot_body(&mut p)?;
    p.finish()?;
    Ok(c)
}

fn quot_body(p: &mut Parser<'_>) -> Result<CliQuotient> {
    p.expect('(')?;
    let num = p.function()?;
    p.expect(',')?;
    let den = p.function()?;
    p.expect(')')?;
    CliQuotient::new(num, den)
}

pub(crate) fn qelement(p: &mut Parser<'_>) -> Result<QElement> {
    if p.peek_ident() == Some("e") {
        p.ident()?;
        p.expect('[')?;
        let u = p.set()?;
        p.expect(']')?;
        return idempotent_of(&u);
    }
    if p.eat_ident("quot") {
        return Ok(cli_quotient_to_q(&quot_body(p)?));
    }
    QElement::new(&p.function()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{int, rat};
    use crate::exactnum::{AlgebraicNumber, Polynomial};
    use crate::parse::{parse_function, parse_set};
    use crate::pwfun::{Norm, PiecewiseFunction};
    use crate::topology::IntervalSet;
    use crate::Error;

    fn q(text: &str) -> QElement {
        parse_qelement(text).unwrap()
    }

    fn f(text: &str) -> PiecewiseFunction {
        parse_function(text).unwrap()
    }

    fn s(text: &str) -> IntervalSet {
        parse_set(text).unwrap()
    }

    fn a(n: i64, d: i64) -> AlgebraicNumber {
        rat(n, d).into()
    }

    #[test]
    fn arithmetic_glues_idempotents() {
        let sum = q("e[(0,1/2)]").add(&q("e[(1/2,1)]"));
        assert_eq!(sum, QElement::one());
        let x = q("x^2 - 1/3");
        assert_eq!(x.mul(&QElement::one()), x);
        assert_eq!(x.sub(&x), QElement::zero());
    }

    #[test]
    fn equality_of_classes() {
        assert!(q_equal(&q("x"), &q("piece((0,1), x)")));
        assert_eq!(q("piece((0,1), x)"), q("x"));
        let e = q("e[(0,1/2)]");
        assert_eq!(e, q("e[[0,1/2)]"));
        assert_eq!(e.domain(), s("[0,1/2) u (1/2,1]"));
        assert!(!q_equal(&q("x"), &q("x^2")));
        assert!(matches!(parse_qelement("piece([0,1/2), x)"), Err(Error::NotDense(_))));
    }

    #[test]
    fn idempotents() {
        let e = idempotent_of(&s("(1/4,1/2)")).unwrap();
        assert_eq!(e.rep(), &f("piece((1/4,1/2), 1); piece([0,1/4) u (1/2,1], 0)"));
        assert_eq!(idempotent_of(&s("[0,1/3) u (1/3,1]")).unwrap(), QElement::one());
        assert_eq!(idempotent_of(&IntervalSet::empty()).unwrap(), QElement::zero());
        assert_eq!(idem_to_regopen(&q("e[(0,1/2)]")).unwrap(), s("[0,1/2)"));
        assert_eq!(idem_to_regopen(&QElement::one()).unwrap(), IntervalSet::full());
        assert_eq!(idem_to_regopen(&q("x")), Err(Error::NotIdempotent));
        let u = s("(1/8,1/4) u (1/4,1/2)");
        let e = idempotent_of(&u).unwrap();
        assert_eq!(idem_to_regopen(&QElement::one().sub(&e)).unwrap(), u.regularize().unwrap().reg_complement());
        assert!(regopen_to_idem(&s("(0,1/2) u (1/2,1)")).is_err());
    }

    #[test]
    fn quasi_inverses() {
        let x = q("x");
        let g = x.quasi_inverse();
        assert_eq!(g, q("piece((0,1], 1/x)"));
        assert_eq!(x.pow(2).mul(&g), x);
        assert_eq!(QElement::zero().quasi_inverse(), QElement::zero());
        let e = q("e[(1/3,2/3)]");
        assert_eq!(e.quasi_inverse(), e);
        // zero on a whole interval and nonzero elsewhere
        let h = q("max(x - 1/2, 0)");
        let g = h.quasi_inverse();
        assert_eq!(h.pow(2).mul(&g), h);
        assert_eq!(g.pow(2).mul(&h), g);
    }

    #[test]
    fn unit_decompositions() {
        let x = q("x");
        let d = unit_decomposition(&x).unwrap();
        assert_eq!(d.c, q("piece((0,1], 1/x)"));
        assert_eq!(d.f, QElement::one());
        assert_eq!(d.e, QElement::zero());
        assert_eq!(d.u, d.c);
        let z = unit_decomposition(&QElement::zero()).unwrap();
        assert_eq!((z.c, z.f, z.e, z.u), (QElement::zero(), QElement::zero(), QElement::one(), QElement::one()));
        let e = q("e[(0,1/3)]");
        let d = unit_decomposition(&e).unwrap();
        assert_eq!((&d.c, &d.f, &d.u), (&e, &e, &QElement::one()));
    }

    #[test]
    fn ring_of_quotients_witnesses() {
        let h = q("piece((0,1], 1/x)");
        let w = roq_witness(&h).unwrap();
        assert_eq!(w, f("x"));
        assert_eq!(roq_witness(&q("x^2")).unwrap(), f("1"));
        let h = q("1/(x - 1/2)");
        let w = roq_witness(&h).unwrap();
        assert!(w.is_global());
        assert_eq!(w.evaluate(&a(1, 2)).unwrap(), a(0, 1));
        let hw = fill_removable(&h.rep().mul(&w).unwrap());
        assert!(hw.is_global() && !hw.is_zero());
        assert_eq!(roq_witness(&QElement::zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn dense_ideals() {
        assert!(dense_ideal_test(&[f("x")]));
        let w = crate::pwfun::cozero_witness(&s("(1/4,1/2)")).unwrap();
        assert!(!dense_ideal_test(&[w]));
        assert!(dense_ideal_test(&[f("1")]));
    }

    #[test]
    fn classical_quotients() {
        let c = parse_cli_quotient("quot(x^2, x)").unwrap();
        assert_eq!(cli_quotient_to_q(&c), q("x"));
        assert_eq!(cli_quotient_to_q(&parse_cli_quotient("quot(x^3 - x, 1)").unwrap()), q("x^3 - x"));
        let n = normalize_cli(&f("1"), &f("x")).unwrap();
        assert_eq!(n.num(), &f("1/(2 + x^2)"));
        assert_eq!(n.den(), &f("x/(2 + x^2)"));
        assert!(n.num().sup_norm().is_finite() && n.den().sup_norm().is_finite());
        assert_eq!(cli_quotient_to_q(&n), cli_quotient_to_q(&parse_cli_quotient("quot(1, x)").unwrap()));
        assert!(parse_cli_quotient("quot(1, max(x - 1/2, 0))").is_err());
    }

    #[test]
    fn step_approximation() {
        let t = step_approx(&q("x"), 2).unwrap();
        assert_eq!(t.step.rep(), &f("piece((0,1/2), 0); piece((1/2,1), 1/2)"));
        assert_eq!(t.parts, vec![(rat(0, 1), s("(0,1/2)")), (rat(1, 2), s("(1/2,1)"))]);
        let c = step_approx(&q("7/10"), 3).unwrap();
        assert_eq!(c.step.values(), vec![rat(2, 3)]);
        let c = step_approx(&q("2/3"), 3).unwrap();
        assert_eq!(c.step.rep(), &f("2/3"));
        let g = q("abs(x - 1/2)");
        let t = step_approx(&g, 4).unwrap();
        assert_eq!(t.step.values(), vec![rat(0, 1), rat(1, 4)]);
        assert_eq!(t.step.rep().domain(), s("(0,1/4) u (1/4,1/2) u (1/2,3/4) u (3/4,1)"));
        let err = g.rep().sub(t.step.rep()).unwrap().sup_norm();
        assert!(err <= Norm::Finite(a(1, 4)));
        assert_eq!(step_approx(&q("piece((0,1], 1/x)"), 2).unwrap_err(), Error::Unbounded);
    }

    #[test]
    fn witness_polynomial_peaks_at_one() {
        for n in 1..6 {
            let p = witness_polynomial(n);
            assert_eq!(p.eval(&int(1)), int(1));
            // r = (n + 1) x sweeps [0, n + 1] as x sweeps [0, 1]
            let stretched = p.compose(&Polynomial::from_ints(&[0, i64::from(n) + 1]));
            let on = PiecewiseFunction::polynomial(&IntervalSet::full(), stretched);
            assert!(on.is_nonnegative());
            assert_eq!(on.sup_norm(), Norm::Finite(a(1, 1)));
        }
        assert_eq!(witness_polynomial(1), Polynomial::from_ints(&[0, 2, -1]));
    }

    #[test]
    fn lemma_76_witnesses() {
        let w = norm_witness_76(&[f("x")], &a(1, 1)).unwrap();
        assert_eq!(w.g, f("x^2"));
        assert_eq!(w.n, 1);
        assert_eq!(w.d, f("x^2*(2 - x^2)"));
        let w = norm_witness_76(&[f("1")], &a(1, 3)).unwrap();
        assert_eq!(w.d.evaluate(&a(1, 3)).unwrap(), a(1, 1));
        let p = AlgebraicNumber::root(&Polynomial::from_ints(&[-1, 0, 2]), &int(0), &int(1)).unwrap();
        let w = norm_witness_76(&[f("x^2 + x")], &p).unwrap();
        assert_eq!(w.d.evaluate(&p).unwrap(), a(1, 1));
        assert_eq!(w.d.sup_norm(), Norm::Finite(a(1, 1)));
        assert!(matches!(norm_witness_76(&[f("x")], &a(0, 1)), Err(Error::OutsideCozero(_))));
    }

    #[test]
    fn relative_norm_lower_bounds() {
        let one = QElement::one();
        assert_eq!(nu_d_lower_bound(&one, &[f("x")], &[f("x"), f("x^2")]).unwrap(), Norm::Finite(a(1, 1)));
        let w = norm_witness_76(&[f("x")], &a(1, 1)).unwrap();
        let x = q("x");
        assert_eq!(nu_d_lower_bound(&x, &[f("x")], &[w.d]).unwrap(), Norm::Finite(a(1, 1)));
        let low = nu_d_lower_bound(&x, &[f("x")], &[f("x*(1 - x)^4")]).unwrap();
        assert!(low < Norm::Finite(a(1, 1)));
        assert_eq!(nu_d_lower_bound(&x, &[f("x")], &[f("0")]), Err(Error::ZeroProbe));
    }

    #[test]
    fn c1_norm_numbers() {
        let (r, nu) = c1_norm_demo(&Polynomial::x()).unwrap();
        assert_eq!((r, nu.clone()), (a(3, 2), a(2, 1)));
        let (r, _) = c1_norm_demo(&Polynomial::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(r, a(4, 3));
        assert_eq!(c1_norm_demo(&Polynomial::from_ints(&[1, 1])), Err(Error::NotMultipleOfX));
        assert_eq!(c1_norm_demo(&Polynomial::zero()), Err(Error::NotMultipleOfX));
    }

    #[test]
    fn gluing() {
        let g = glue(&[(s("(0,1/2)"), f("1")), (s("(1/2,1)"), f("0"))]).unwrap();
        assert_eq!(g, f("piece((0,1/2), 1); piece((1/2,1), 0)"));
        assert_eq!(glue(&[(s("(1/4,3/4)"), f("x"))]).unwrap(), f("x").restrict(&s("(1/4,3/4)")));
        let g = glue(&[(s("[0,1/4)"), f("1")), (s("(1/2,1]"), f("5"))]).unwrap();
        assert_eq!(g.domain(), s("[0,1/4) u (1/2,1]"));
        assert!(matches!(
            glue(&[(s("(0,1/2)"), f("1")), (s("(1/4,1)"), f("0"))]),
            Err(Error::OverlappingParts(_))
        ));
    }

    #[test]
    fn archimedean_and_cozero_domains() {
        assert_eq!(archimedean_witness(&f("x/10")).unwrap(), 11.into());
        assert!(domain_is_cozero_set(&q("e[(1/3,1/2)]")));
        assert_eq!(archimedean_witness(&f("0")), Err(Error::ZeroElement));
    }
}
