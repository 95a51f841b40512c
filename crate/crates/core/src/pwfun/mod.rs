//! Continuous piecewise-rational functions on subsets of `[0, 1]`.

pub mod piecewise;
pub mod ratfn;

pub use piecewise::{roots_between, ArithOp, Norm, PiecewiseFunction};
pub use ratfn::RationalFunction;

use num_traits::One;

use crate::error::Result;
use crate::exactnum::{AlgebraicNumber, Polynomial, Rational};
use crate::topology::{Grid, IntervalSet, Piece};

pub fn fn_arith(f: &PiecewiseFunction, g: &PiecewiseFunction, op: ArithOp) -> Result<PiecewiseFunction> {
    f.arith(g, op)
}

/// The unique nonnegative square root of `a²`, namely `|a|`.
pub fn pi_value(a: &PiecewiseFunction) -> PiecewiseFunction {
    let p = a.abs();
    debug_assert_eq!(p.pow(2), a.pow(2));
    p
}

/// A function on `[0, 1]` whose cozero set is exactly the open set `u`.
pub fn cozero_witness(u: &IntervalSet) -> Result<PiecewiseFunction> {
    u.require_open()?;
    let mut parts = vec![PiecewiseFunction::constant(&u.complement(), Rational::from_integer(0.into()))];
    for piece in u.pieces() {
        parts.push(piece_witness(piece)?);
    }
    PiecewiseFunction::union_of(&parts)
}

fn lin(c0: Rational, c1: Rational) -> Polynomial {
    Polynomial::new(vec![c0, c1])
}

/// Positive on the open piece, zero at finite endpoints that are not 0 or 1.
fn piece_witness(p: &Piece) -> Result<PiecewiseFunction> {
    let zero = AlgebraicNumber::zero();
    let one = AlgebraicNumber::one();
    let at_lo = p.lo == zero && p.lo_closed;
    let at_hi = p.hi == one && p.hi_closed;
    let set = IntervalSet::from_pieces(vec![p.clone()])?;
    let closed = IntervalSet::from_pieces(vec![Piece::new(p.lo.clone(), p.hi.clone(), true, true)])?;
    match (at_lo, at_hi, p.lo.as_rational(), p.hi.as_rational()) {
        (true, true, _, _) => Ok(PiecewiseFunction::constant(&set, Rational::one())),
        (true, false, _, Some(h)) => Ok(PiecewiseFunction::polynomial(&closed, lin(h.clone(), -Rational::one()))),
        (false, true, Some(l), _) => Ok(PiecewiseFunction::polynomial(&closed, lin(-l.clone(), Rational::one()))),
        (false, false, Some(l), Some(h)) => {
            let bump = &lin(-l.clone(), Rational::one()) * &lin(h.clone(), -Rational::one());
            Ok(PiecewiseFunction::polynomial(&closed, bump))
        }
        _ => plateau(p, at_lo, at_hi),
    }
}

/// Ramp from an endpoint `e` to an interior rational `m`: the defining
/// polynomial of `e` normalized to 1 at `m`. The isolating interval of `e`
/// guarantees no other root between them.
fn ramp(e: &AlgebraicNumber, m: &Rational) -> RationalFunction {
    let q = e.defining_poly();
    let v = q.eval(m);
    RationalFunction::poly(q.scale(&v.recip()))
}

/// Piecewise witness `ramp, 1, ramp` used when an endpoint is irrational.
fn plateau(p: &Piece, at_lo: bool, at_hi: bool) -> Result<PiecewiseFunction> {
    let mut lo = p.lo.clone();
    let mut hi = p.hi.clone();
    let (a, b) = loop {
        let a = lo.bounds().1;
        let b = hi.bounds().0;
        if a < b {
            break (a, b);
        }
        lo = lo.refine();
        hi = hi.refine();
    };
    let third = Rational::new(1.into(), 3.into());
    let m = if lo.is_rational() { &a + (&b - &a) * &third } else { a.clone() };
    let m2 = if hi.is_rational() { &b - (&b - &a) * &third } else { b.clone() };
    let am = AlgebraicNumber::from(m.clone());
    let am2 = AlgebraicNumber::from(m2.clone());
    let grid = Grid::from_points([p.lo.clone(), am.clone(), am2.clone(), p.hi.clone()]);
    let mut cells: Vec<Option<RationalFunction>> = vec![None; grid.atom_count()];
    for (i, cell) in cells.iter_mut().enumerate() {
        let probe = if Grid::is_point_atom(i) {
            grid.point(i).clone()
        } else {
            let (x, y) = grid.span(i);
            x.rational_between(y).into()
        };
        if probe < p.lo || probe > p.hi {
            continue;
        }
        *cell = Some(if !at_lo && probe <= am {
            ramp(&p.lo, &m)
        } else if !at_hi && probe >= am2 {
            ramp(&p.hi, &m2)
        } else {
            RationalFunction::one()
        });
    }
    PiecewiseFunction::new(grid, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{int, rat};
    use crate::parse::{parse_function, parse_set};

    fn f(text: &str) -> PiecewiseFunction {
        parse_function(text).unwrap()
    }

    fn s(text: &str) -> IntervalSet {
        parse_set(text).unwrap()
    }

    fn q(n: i64, d: i64) -> AlgebraicNumber {
        rat(n, d).into()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(f("x").add(&f("1 - x")).unwrap(), f("1"));
        assert_eq!(f("x").mul(&f("x")).unwrap(), f("x^2"));
        let r = f("1").div(&f("x")).unwrap();
        assert_eq!(r.domain(), s("(0,1]"));
        assert_eq!(r, f("piece((0,1], 1/x)"));
    }

    #[test]
    fn disjoint_supports_are_an_error() {
        let a = f("piece([0,1/4], x)");
        let b = f("piece([1/2,1], x)");
        assert_eq!(a.add(&b), Err(crate::Error::EmptyDomain));
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(f("x^2").evaluate(&q(1, 2)).unwrap(), q(1, 4));
        assert_eq!(f("abs(x - 1/2)").evaluate(&q(1, 2)).unwrap(), q(0, 1));
        let a = AlgebraicNumber::root(&Polynomial::from_ints(&[-1, 0, 2]), &int(0), &int(1)).unwrap();
        let v = f("piece((0,1], 1/x)").evaluate(&a).unwrap();
        let sqrt2 = AlgebraicNumber::root(&Polynomial::from_ints(&[-2, 0, 1]), &int(1), &int(2)).unwrap();
        assert_eq!(v, sqrt2);
        assert!(f("piece((0,1], x)").evaluate(&q(0, 1)).is_err());
    }

    #[test]
    fn zero_and_cozero_sets() {
        let g = f("x^2 - x");
        assert_eq!(g.zero_set(), s("{0} u {1}"));
        assert_eq!(g.cozero_set(), s("(0,1)"));
        assert_eq!(f("0").zero_set(), s("[0,1]"));
        assert!(f("0").cozero_set().is_empty());
        let h = f("abs(x - 1/2)");
        assert_eq!(h.zero_set(), s("{1/2}"));
        assert_eq!(h.cozero_set(), s("[0,1/2) u (1/2,1]"));
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(f("abs(x - 1/2)"), f("piece([0,1/2], 1/2 - x); piece([1/2,1], x - 1/2)"));
        assert_eq!(f("max(x, 1 - x)"), f("piece([0,1/2], 1 - x); piece([1/2,1], x)"));
        let g = f("x^3 - 1/3");
        assert_eq!(g.meet(&g), g);
    }

    #[test]
    fn pi_values() {
        let a = f("x - 1/2");
        let p = pi_value(&a);
        assert_eq!(p, f("abs(x - 1/2)"));
        assert_eq!(p.pow(2), a.pow(2));
        assert_eq!(pi_value(&f("x^2 + 1")), f("x^2 + 1"));
        assert_eq!(pi_value(&f("-x")), f("x"));
    }

    #[test]
    fn sup_norm_examples() {
        assert_eq!(f("x*(1 - x)").sup_norm(), Norm::Finite(q(1, 4)));
        assert_eq!(f("piece((0,1], 1/x)").sup_norm(), Norm::Infinite);
        assert_eq!(f("-3/2").sup_norm(), Norm::Finite(q(3, 2)));
        // maximum at an irrational critical point: x - x^3 peaks at 1/sqrt(3)
        let n = f("x - x^3").sup_norm();
        let expect = AlgebraicNumber::root(&Polynomial::from_ints(&[-4, 0, 27]), &int(0), &int(1)).unwrap();
        assert_eq!(n, Norm::Finite(expect));
    }

    #[test]
    fn natural_metric_examples() {
        assert_eq!(f("1").natural_metric(&f("0")).unwrap(), q(1, 2));
        assert_eq!(f("x").natural_metric(&f("x")).unwrap(), q(0, 1));
        assert_eq!(f("piece((0,1], 1/x)").natural_metric(&f("0")).unwrap(), q(1, 1));
        assert!(f("piece([0,1/2], x)").natural_metric(&f("0")).is_err());
    }

    #[test]
    fn extend_by_zero_examples() {
        let e = f("piece((0,1/2), 1)").extend_by_zero().unwrap();
        assert_eq!(e, f("piece((0,1/2), 1); piece((1/2,1], 0)"));
        assert!(!e.domain().contains(&q(0, 1)));
        assert!(!e.domain().contains(&q(1, 2)));
        let d = f("piece([0,1/2) u (1/2,1], x)");
        assert_eq!(d.extend_by_zero().unwrap(), d);
        let g = f("piece((1/4,1/2), x)").extend_by_zero().unwrap();
        assert_eq!(g, f("piece((1/4,1/2), x); piece([0,1/4) u (1/2,1], 0)"));
        assert!(f("piece([0,1/2], x)").extend_by_zero().is_err());
    }

    #[test]
    fn oscillation_examples() {
        let e = f("piece((0,1/2), 1); piece((1/2,1], 0)");
        assert_eq!(e.oscillation_at(&q(1, 2)).unwrap(), Norm::Finite(q(1, 1)));
        assert_eq!(f("piece((0,1), x)").oscillation_at(&q(0, 1)).unwrap(), Norm::Finite(q(0, 1)));
        assert_eq!(f("piece((0,1], 1/x)").oscillation_at(&q(0, 1)).unwrap(), Norm::Infinite);
        assert!(matches!(f("x").oscillation_at(&q(1, 2)), Err(crate::Error::InteriorPoint(_))));
        assert!(matches!(f("piece([0,1/4], x)").oscillation_at(&q(1, 2)), Err(crate::Error::NotBoundary(_))));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(f("x^2").derivative(), f("2*x"));
        assert!(f("piece((0,1/2), 1); piece((1/2,1], 0)").is_locally_constant());
        assert!(!f("x").has_finite_range());
        let d = f("abs(x - 1/2)").derivative();
        assert_eq!(d, f("piece([0,1/2), -1); piece((1/2,1], 1)"));
    }

    #[test]
    fn cozero_witness_examples() {
        assert_eq!(cozero_witness(&s("(0,1]")).unwrap(), f("x"));
        assert_eq!(cozero_witness(&s("[0,1/2) u (1/2,1]")).unwrap(), f("abs(x - 1/2)"));
        assert_eq!(
            cozero_witness(&s("(1/4,1/2)")).unwrap(),
            f("piece((1/4,1/2), (x - 1/4)*(1/2 - x)); piece([0,1/4] u [1/2,1], 0)")
        );
        assert!(cozero_witness(&s("[0,1/2]")).is_err());
    }

    #[test]
    fn cozero_witness_with_irrational_endpoints() {
        for text in [
            "(root(2*x^2 - 1, 0, 1), 1]",
            "[0, root(2*x^2 - 1, 0, 1))",
            "(1/4, root(2*x^2 - 1, 0, 1)) u (root(3*x^2 - 2, 0, 1), 1)",
            "(root(x^2 - 1/5, 0, 1), root(x^2 - 2/5, 0, 1))",
        ] {
            let u = s(text);
            let w = cozero_witness(&u).unwrap();
            assert!(w.is_global(), "{text}");
            assert_eq!(w.cozero_set(), u, "{text}");
        }
    }
}
