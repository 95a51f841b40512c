//! Helpers around [`BigRational`], the scalar everything else is built on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational; always stored reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn half() -> Rational {
    rat(1, 2)
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// Renders `n` or `n/d`.
pub fn render(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Smallest integer `>= r`.
pub fn ceil(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

/// The rational with the smallest denominator in the open interval `(lo, hi)`.
///
/// Uses the continued-fraction (Stern–Brocot) descent. Requires `lo < hi`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo < hi);
    if lo.is_negative() && hi.is_positive() {
        return Rational::zero();
    }
    if !hi.is_positive() {
        return -simplest_between(&-hi, &-lo);
    }
    simplest_open_positive(lo, hi)
}

// lo >= 0, lo < hi
fn simplest_open_positive(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    // an integer strictly inside
    let cand = &fl + Rational::one();
    if &cand < hi {
        return cand;
    }
    // lo and hi share the integer part n (hi may equal n + 1)
    let n = fl;
    let lo_frac = lo - &n;
    let hi_frac = hi - &n;
    if lo_frac.is_zero() {
        // interval (n, n + t); simplest is n + 1/k with smallest k such that 1/k < t
        let k = (hi_frac.recip()).floor() + Rational::one();
        return n + k.recip();
    }
    // n + 1/y with y in (1/hi_frac, 1/lo_frac)
    let inner = simplest_open_positive(&hi_frac.recip(), &lo_frac.recip());
    n + inner.recip()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}
