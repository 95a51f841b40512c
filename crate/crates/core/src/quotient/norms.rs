use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::element::{dense_ideal_test, QElement};
use crate::error::{Error, Result};
use crate::exactnum::{AlgebraicNumber, Polynomial, Rational};
use crate::pwfun::{Norm, PiecewiseFunction, RationalFunction};
use crate::topology::IntervalSet;

/// `max_d ‖a d‖ / ‖d‖` over the probes: a lower bound for the norm of `a`
/// relative to the ideal generated by `gens`.
pub fn nu_d_lower_bound(a: &QElement, gens: &[PiecewiseFunction], probes: &[PiecewiseFunction]) -> Result<Norm> {
    if !dense_ideal_test(gens) {
        return Err(Error::NotDense("cozero union of the generators".into()));
    }
    let mut best = Norm::Finite(AlgebraicNumber::zero());
    for d in probes {
        let nd = match d.sup_norm() {
            Norm::Finite(v) if v.is_zero() => return Err(Error::ZeroProbe),
            Norm::Finite(v) => v,
            Norm::Infinite => return Err(Error::Unbounded),
        };
        let ratio = match a.rep().mul(d)?.sup_norm() {
            Norm::Infinite => Norm::Infinite,
            Norm::Finite(v) => Norm::Finite(v.div(&nd)?),
        };
        best = best.max(ratio);
    }
    Ok(best)
}

/// `P(r) = r (n + 1 - r)^n / n^n`.
pub fn witness_polynomial(n: u32) -> Polynomial {
    let nr = Rational::from_integer(n.into());
    let base = Polynomial::new(vec![&nr + Rational::one(), -Rational::one()]);
    let scale = Rational::from_integer(num_traits::pow(BigInt::from(n), n as usize)).recip();
    (&Polynomial::x() * &base.pow(n)).scale(&scale)
}

/// Output of [`norm_witness_76`].
#[derive(Clone, Debug)]
pub struct NormWitness {
    /// The generator-derived function with value 1 at `p`.
    pub g: PiecewiseFunction,
    pub n: u32,
    pub d: PiecewiseFunction,
}

/// Largest integral bound used with `g = (f/f(p))²` directly; beyond it the
/// witness polynomial gets too large, and `g` is replaced by `2h/(1 + h²)`.
const DIRECT_BOUND: u32 = 4;

/// A function `d` in the ideal generated by `gens` with `d(p) = ‖d‖ = 1`.
///
/// A generator `f` with `s = f(p) ≠ 0` gives the member `h = (f/s)²` with
/// `h(p) = 1`; with `n` an integral bound for `h`, `d = P(h)`. When `s` is
/// irrational, `1/s` is replaced by a polynomial `k` with `k(p) = 1/s` (an
/// inverse modulo the defining polynomial of `p`). When the bound exceeds a
/// small limit, `h` is first replaced by the member `2h/(1 + h²)`, which also
/// takes the value 1 at `p` and is bounded by 1.
pub fn norm_witness_76(gens: &[PiecewiseFunction], p: &AlgebraicNumber) -> Result<NormWitness> {
    let (f, s) = gens
        .iter()
        .find_map(|f| f.evaluate(p).ok().filter(|v| !v.is_zero()).map(|v| (f, v)))
        .ok_or_else(|| Error::OutsideCozero(p.render()))?;
    let k = match s.as_rational() {
        Some(s) => Polynomial::constant(s.recip()),
        None => reciprocal_poly(f, p)?,
    };
    let fk = f.mul(&PiecewiseFunction::polynomial(&IntervalSet::full(), k))?;
    let h = fk.pow(2);
    let bound = match h.sup_norm() {
        Norm::Finite(v) => v.ceil().max(BigInt::one()),
        Norm::Infinite => return Err(Error::Unbounded),
    };
    let (g, n) = match u32::try_from(bound) {
        Ok(n) if n <= DIRECT_BOUND => (h, n),
        _ => {
            let den = h.pow(2).add_constant(&Rational::one());
            (h.scale(&Rational::from_integer(2.into())).div(&den)?, 1)
        }
    };
    let d = g.compose_poly(&witness_polynomial(n));
    let at_p = d.evaluate(p)?;
    if at_p != AlgebraicNumber::one() || d.sup_norm() != Norm::Finite(AlgebraicNumber::one()) {
        return Err(Error::RingAxiom(format!("witness {} fails d(p) = |d| = 1", d.render())));
    }
    Ok(NormWitness { g, n, d })
}

/// Polynomial `k` with `k(p) = 1/f(p)` for irrational `p`.
fn reciprocal_poly(f: &PiecewiseFunction, p: &AlgebraicNumber) -> Result<Polynomial> {
    let atom = f.grid().locate(p).ok_or_else(|| Error::PointOutsideDomain(p.render()))?;
    let r: &RationalFunction = f.cells()[atom].as_ref().ok_or_else(|| Error::PointOutsideDomain(p.render()))?;
    let q = p.defining_poly();
    let q = q.exact_div(&q.gcd(r.num()));
    let inv = r.num().inverse_mod(&q).ok_or_else(|| Error::OutsideCozero(p.render()))?;
    Ok((&inv * r.den()).rem(&q))
}

/// `‖f‖ + ‖f'‖` for a polynomial on `[0, 1]`.
pub fn c1_norm(p: &Polynomial) -> AlgebraicNumber {
    let full = IntervalSet::full();
    let value = PiecewiseFunction::polynomial(&full, p.clone()).sup_norm();
    let slope = PiecewiseFunction::polynomial(&full, p.derivative()).sup_norm();
    match (value, slope) {
        (Norm::Finite(a), Norm::Finite(b)) => a.add(&b),
        _ => unreachable!("polynomials are bounded on [0,1]"),
    }
}

/// `(ν(x d) / ν(d), ν(x))` for the C¹ norm `ν`.
pub fn c1_norm_demo(d: &Polynomial) -> Result<(AlgebraicNumber, AlgebraicNumber)> {
    if d.is_zero() || !d.coeff(0).is_zero() {
        return Err(Error::NotMultipleOfX);
    }
    let xd = &Polynomial::x() * d;
    let ratio = c1_norm(&xd).div(&c1_norm(d))?;
    Ok((ratio, c1_norm(&Polynomial::x())))
}

/// `n` with `‖n a‖ > 1`, showing a nonzero bounded `a` is not infinitesimal.
pub fn archimedean_witness(a: &PiecewiseFunction) -> Result<BigInt> {
    match a.sup_norm() {
        Norm::Infinite => Err(Error::Unbounded),
        Norm::Finite(m) if m.is_zero() => Err(Error::ZeroElement),
        Norm::Finite(m) => {
            let inv = AlgebraicNumber::one().div(&m)?;
            Ok(inv.floor() + 1)
        }
    }
}
