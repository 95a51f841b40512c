//! Real algebraic numbers as (square-free polynomial, isolating interval).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{sign_of, Polynomial};
use super::rational::{common_denominator, int, midpoint, render, simplest_between, Rational};
use super::resultant::eliminate;
use super::sturm::{bisect_once, descartes_bound, isolate, Isolated, SturmChain};
use crate::error::{Error, Result};

/// Width below which freshly isolated roots are refined eagerly, so most
/// comparisons between distinct breakpoints resolve without further bisection.
const EAGER_WIDTH_LOG2: u32 = 20;

/// A real algebraic number.
///
/// `Root` always carries a primitive square-free polynomial with exactly one
/// root in the open interval `(lo, hi)`, nonzero at both endpoints, and the
/// root is known to be irrational. Rational values always use `Rational`, so
/// equal values of different kinds never occur.
#[derive(Clone)]
pub enum AlgebraicNumber {
    Rational(Rational),
    Root(RootRepr),
}

#[derive(Clone)]
pub struct RootRepr {
    poly: Polynomial,
    lo: Rational,
    hi: Rational,
}

impl RootRepr {
    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    fn bisect(&self) -> AlgebraicNumber {
        match bisect_once(&self.poly, &self.lo, &self.hi) {
            Isolated::Exact(r) => AlgebraicNumber::Rational(r),
            Isolated::Open(lo, hi) => AlgebraicNumber::Root(RootRepr {
                poly: self.poly.clone(),
                lo,
                hi,
            }),
        }
    }

    /// Splits at `r` (strictly inside) and keeps the side holding the root.
    fn split_at(&self, r: &Rational) -> AlgebraicNumber {
        let s = self.poly.sign_at_rational(r);
        if s == 0 {
            return AlgebraicNumber::Rational(r.clone());
        }
        if self.poly.sign_at_rational(&self.lo) != s {
            AlgebraicNumber::Root(RootRepr { poly: self.poly.clone(), lo: self.lo.clone(), hi: r.clone() })
        } else {
            AlgebraicNumber::Root(RootRepr { poly: self.poly.clone(), lo: r.clone(), hi: self.hi.clone() })
        }
    }
}

impl AlgebraicNumber {
    pub fn from_rational(r: Rational) -> Self {
        AlgebraicNumber::Rational(r)
    }

    pub fn from_int(n: i64) -> Self {
        AlgebraicNumber::Rational(int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// Validating constructor for `root(p, lo, hi)`: `p` must have exactly
    /// one distinct real root in the open interval `(lo, hi)`.
    pub fn root(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<Self> {
        let err = || Error::NotIsolating { lo: render(lo), hi: render(hi) };
        if p.is_zero() || lo >= hi {
            return Err(err());
        }
        let found = isolate(p, lo, hi);
        if found.len() != 1 {
            return Err(err());
        }
        Ok(Self::from_isolated(&p.square_free(), found.into_iter().next().unwrap()))
    }

    /// Builds from the output of [`isolate`]; `sf` must be square-free.
    pub(crate) fn from_isolated(sf: &Polynomial, iso: Isolated) -> Self {
        match iso {
            Isolated::Exact(r) => AlgebraicNumber::Rational(r),
            Isolated::Open(lo, hi) => {
                if sf.degree() == Some(1) {
                    let c = sf.coeffs();
                    return AlgebraicNumber::Rational(-&c[0] / &c[1]);
                }
                let repr = RootRepr { poly: sf.primitive(), lo, hi };
                detect_rational(repr).eagerly_refined()
            }
        }
    }

    fn eagerly_refined(self) -> Self {
        let width = Rational::new(BigInt::one(), BigInt::one() << EAGER_WIDTH_LOG2);
        self.refine_to_width(&width)
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, AlgebraicNumber::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            AlgebraicNumber::Rational(r) => Some(r),
            AlgebraicNumber::Root(_) => None,
        }
    }

    /// Closed rational bounds; equal for rationals, and the value lies strictly
    /// inside otherwise.
    pub fn bounds(&self) -> (Rational, Rational) {
        match self {
            AlgebraicNumber::Rational(r) => (r.clone(), r.clone()),
            AlgebraicNumber::Root(rr) => (rr.lo.clone(), rr.hi.clone()),
        }
    }

    /// A polynomial that vanishes at this value (square-free).
    pub fn defining_poly(&self) -> Polynomial {
        match self {
            AlgebraicNumber::Rational(r) => Polynomial::linear_root(r),
            AlgebraicNumber::Root(rr) => rr.poly.clone(),
        }
    }

    /// One bisection step.
    pub fn refine(&self) -> Self {
        match self {
            AlgebraicNumber::Rational(_) => self.clone(),
            AlgebraicNumber::Root(rr) => rr.bisect(),
        }
    }

    pub fn refine_to_width(&self, width: &Rational) -> Self {
        let mut cur = self.clone();
        while let AlgebraicNumber::Root(rr) = &cur {
            if &(&rr.hi - &rr.lo) <= width {
                break;
            }
            cur = rr.bisect();
        }
        cur
    }

    pub fn sign(&self) -> i32 {
        match self {
            AlgebraicNumber::Rational(r) => sign_of(r),
            AlgebraicNumber::Root(_) => {
                // irrational, hence nonzero; refine until the interval avoids 0
                let mut cur = self.clone();
                loop {
                    let (lo, hi) = cur.bounds();
                    if !lo.is_negative() {
                        return 1;
                    }
                    if !hi.is_positive() {
                        return -1;
                    }
                    cur = match &cur {
                        AlgebraicNumber::Root(rr) => rr.split_at(&Rational::zero()),
                        AlgebraicNumber::Rational(r) => return sign_of(r),
                    };
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_rational().is_some_and(Zero::is_zero)
    }

    pub fn neg(&self) -> Self {
        match self {
            AlgebraicNumber::Rational(r) => AlgebraicNumber::Rational(-r),
            AlgebraicNumber::Root(rr) => AlgebraicNumber::Root(RootRepr {
                poly: rr.poly.reflect().primitive(),
                lo: -&rr.hi,
                hi: -&rr.lo,
            }),
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Total order on the represented reals.
    pub fn compare(&self, other: &Self) -> Ordering {
        use AlgebraicNumber::*;
        match (self, other) {
            (Rational(a), Rational(b)) => a.cmp(b),
            (Rational(a), Root(b)) => compare_rational_root(a, b),
            (Root(a), Rational(b)) => compare_rational_root(b, a).reverse(),
            (Root(a), Root(b)) => compare_roots(a.clone(), b.clone()),
        }
    }

    /// Exact sign of `p` at this value.
    pub fn sign_at(&self, p: &Polynomial) -> i32 {
        match self {
            AlgebraicNumber::Rational(r) => p.sign_at_rational(r),
            AlgebraicNumber::Root(rr) => {
                if p.is_zero() {
                    return 0;
                }
                if p.is_constant() {
                    return sign_of(&p.leading());
                }
                let g = p.gcd(&rr.poly);
                if !g.is_constant() && SturmChain::new(&g).count_open(&rr.lo, &rr.hi) > 0 {
                    return 0;
                }
                let chain = SturmChain::new(p);
                let mut cur = rr.clone();
                loop {
                    if chain.count_closed(&cur.lo, &cur.hi) == 0 {
                        return p.sign_at_rational(&midpoint(&cur.lo, &cur.hi));
                    }
                    match cur.bisect() {
                        AlgebraicNumber::Root(next) => cur = next,
                        AlgebraicNumber::Rational(r) => return p.sign_at_rational(&r),
                    }
                }
            }
        }
    }

    /// A rational strictly between `self` and `other`; requires `self < other`.
    pub fn rational_between(&self, other: &Self) -> Rational {
        debug_assert_eq!(self.compare(other), Ordering::Less);
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            let upper_a = a.bounds().1;
            let lower_b = b.bounds().0;
            if upper_a < lower_b {
                return simplest_between(&upper_a, &lower_b);
            }
            a = a.refine();
            b = b.refine();
        }
    }

    pub fn floor(&self) -> BigInt {
        match self {
            AlgebraicNumber::Rational(r) => r.floor().to_integer(),
            AlgebraicNumber::Root(_) => {
                let mut cur = self.clone();
                loop {
                    let (lo, hi) = cur.bounds();
                    let fl = lo.floor();
                    if hi <= &fl + Rational::one() {
                        return fl.to_integer();
                    }
                    cur = cur.refine();
                }
            }
        }
    }

    pub fn ceil(&self) -> BigInt {
        -(self.neg().floor())
    }

    /// Value of `num/den` at this number. Errors if `den` vanishes here.
    pub fn map_rational_fn(&self, num: &Polynomial, den: &Polynomial) -> Result<Self> {
        if self.sign_at(den) == 0 {
            return Err(Error::DivisionByZero);
        }
        if let AlgebraicNumber::Rational(r) = self {
            return Ok(AlgebraicNumber::Rational(num.eval(r) / den.eval(r)));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let AlgebraicNumber::Root(rr) = self else { unreachable!() };
        let g = num.gcd(den);
        let (num, den) = (num.exact_div(&g), den.exact_div(&g));
        if let (Some(a), Some(b)) = (num.constant_value(), den.constant_value()) {
            return Ok(AlgebraicNumber::Rational(a / b));
        }
        if let Some(v) = rational_value(rr, &num, &den) {
            return Ok(AlgebraicNumber::Rational(v));
        }
        let q = rr.poly.exact_div(&rr.poly.gcd(&den));
        let res = value_annihilator(&num.rem(&q), &den.rem(&q), &q);
        let mut cur = rr.clone();
        Ok(isolate_target(&res, || {
            let enc = loop {
                let (nl, nh) = num.eval_interval(&cur.lo, &cur.hi);
                let (dl, dh) = den.eval_interval(&cur.lo, &cur.hi);
                if dl.is_positive() || dh.is_negative() {
                    break interval_div((nl, nh), (dl, dh));
                }
                match cur.bisect() {
                    AlgebraicNumber::Root(n) => cur = n,
                    AlgebraicNumber::Rational(_) => unreachable!("irrational root became rational"),
                }
            };
            if let AlgebraicNumber::Root(n) = cur.bisect() {
                cur = n;
            }
            enc
        }))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.binary(other, BinOp::Add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.binary(&other.neg(), BinOp::Add)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.binary(other, BinOp::Mul)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.binary(other, BinOp::Div))
    }

    fn binary(&self, other: &Self, op: BinOp) -> Self {
        use AlgebraicNumber::*;
        let x = Polynomial::x();
        match (self, other) {
            (Rational(a), Rational(b)) => Rational(match op {
                BinOp::Add => a + b,
                BinOp::Mul => a * b,
                BinOp::Div => a / b,
            }),
            (Root(_), Rational(b)) => {
                let (num, den) = match op {
                    BinOp::Add => (&x + &Polynomial::constant(b.clone()), Polynomial::one()),
                    BinOp::Mul => (x.scale(b), Polynomial::one()),
                    BinOp::Div => (x.scale(&b.recip()), Polynomial::one()),
                };
                self.map_rational_fn(&num, &den).expect("constant denominator")
            }
            (Rational(a), Root(_)) => {
                let (num, den) = match op {
                    BinOp::Add => (&x + &Polynomial::constant(a.clone()), Polynomial::one()),
                    BinOp::Mul => (x.scale(a), Polynomial::one()),
                    BinOp::Div => (Polynomial::constant(a.clone()), x),
                };
                other.map_rational_fn(&num, &den).expect("irrational root is nonzero")
            }
            (Root(a), Root(b)) => binary_roots(a, b, op),
        }
    }

    /// Renders as a rational literal or `root(<poly>, <lo>, <hi>)`.
    pub fn render(&self) -> String {
        match self {
            AlgebraicNumber::Rational(r) => render(r),
            AlgebraicNumber::Root(rr) => {
                format!("root({}, {}, {})", rr.poly.render(), render(&rr.lo), render(&rr.hi))
            }
        }
    }
}

#[derive(Clone, Copy)]
enum BinOp {
    Add,
    Mul,
    Div,
}

fn binary_roots(a: &RootRepr, b: &RootRepr, op: BinOp) -> AlgebraicNumber {
    let p = without_zero_root(&a.poly);
    let q = without_zero_root(&b.poly);
    let m = p.degree().unwrap();
    let n = q.degree().unwrap();
    let res = match op {
        // prod_j p(x - beta_j)
        BinOp::Add => {
            let family = |x: &Rational| {
                let shift = Polynomial::new(vec![x.clone(), -Rational::one()]);
                p.compose(&shift)
            };
            eliminate(&q, family, m, m * n)
        }
        // prod_j beta_j^m p(x / beta_j)
        BinOp::Mul => {
            let family = |x: &Rational| {
                let mut coeffs = vec![Rational::zero(); m + 1];
                let mut xk = Rational::one();
                for (k, c) in p.coeffs().iter().enumerate() {
                    coeffs[m - k] = c * &xk;
                    xk *= x;
                }
                Polynomial::new(coeffs)
            };
            eliminate(&q, family, m, m * n)
        }
        // prod_j p(x * beta_j)
        BinOp::Div => {
            let family = |x: &Rational| p.compose(&Polynomial::new(vec![Rational::zero(), x.clone()]));
            eliminate(&q, family, m, m * n)
        }
    };
    let mut ca = a.clone();
    let mut cb = b.clone();
    isolate_target(&res.square_free(), || {
        let enc = loop {
            let ia = (ca.lo.clone(), ca.hi.clone());
            let ib = (cb.lo.clone(), cb.hi.clone());
            match op {
                BinOp::Add => break (&ia.0 + &ib.0, &ia.1 + &ib.1),
                BinOp::Mul => break interval_mul(ia, ib),
                BinOp::Div => {
                    if ib.0.is_positive() || ib.1.is_negative() {
                        break interval_div(ia, ib);
                    }
                }
            }
            cb = step(&cb);
        };
        ca = step(&ca);
        cb = step(&cb);
        enc
    })
}

/// `p / x^k` with `k` the multiplicity of the root 0; irrational roots are
/// nonzero, and a root at 0 would make the quotient resultant vanish.
fn without_zero_root(p: &Polynomial) -> Polynomial {
    let k = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    Polynomial::new(p.coeffs()[k..].to_vec())
}

/// `num/den` at the root when that value is the simplest rational in a
/// tight enclosure, confirmed by an exact sign test.
fn rational_value(rr: &RootRepr, num: &Polynomial, den: &Polynomial) -> Option<Rational> {
    let width = Rational::new(BigInt::one(), BigInt::one() << 64);
    let cur = match AlgebraicNumber::Root(rr.clone()).refine_to_width(&width) {
        AlgebraicNumber::Root(cur) => cur,
        AlgebraicNumber::Rational(_) => unreachable!("irrational root became rational"),
    };
    let (dl, dh) = den.eval_interval(&cur.lo, &cur.hi);
    if !(dl.is_positive() || dh.is_negative()) {
        return None;
    }
    let (lo, hi) = interval_div(num.eval_interval(&cur.lo, &cur.hi), (dl, dh));
    let v = if lo == hi { lo } else { simplest_between(&lo, &hi) };
    let diff = num - &den.scale(&v);
    (AlgebraicNumber::Root(cur).sign_at(&diff) == 0).then_some(v)
}

/// Primitive polynomial `m` of least degree with `m(N/D) = 0` in `Q[x]/(q)`,
/// found as the first linear dependency among `N^k D^(n-k) mod q`. For
/// square-free `q` the result is square-free.
fn value_annihilator(num: &Polynomial, den: &Polynomial, q: &Polynomial) -> Polynomial {
    let n = q.degree().expect("nonconstant modulus");
    let powers = |b: &Polynomial| {
        let mut out = vec![Polynomial::one()];
        for k in 1..=n {
            out.push((&out[k - 1] * b).rem(q));
        }
        out
    };
    let (np, dp) = (powers(num), powers(den));
    // Each row: pivot, reduced integer coordinates, and the integer combination
    // of the scaled vectors producing them.
    let mut rows: Vec<(usize, Vec<BigInt>, Vec<BigInt>)> = Vec::new();
    let mut scales: Vec<Rational> = Vec::new();
    for k in 0..=n {
        let w = (&np[k] * &dp[n - k]).rem(q);
        let coords: Vec<Rational> = (0..n).map(|i| w.coeff(i)).collect();
        let den = common_denominator(coords.iter());
        let mut vec: Vec<BigInt> = coords.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
        let content = vec.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if !content.is_zero() {
            vec.iter_mut().for_each(|v| *v /= &content);
            scales.push(Rational::new(den, content));
        } else {
            scales.push(Rational::one());
        }
        let mut comb = vec![BigInt::zero(); k + 1];
        comb[k] = BigInt::one();
        for (pivot, rv, rc) in &rows {
            if vec[*pivot].is_zero() {
                continue;
            }
            let (a, b) = (rv[*pivot].clone(), vec[*pivot].clone());
            for (v, r) in vec.iter_mut().zip(rv) {
                *v = &a * &*v - &b * r;
            }
            for (i, c) in comb.iter_mut().enumerate() {
                *c = &a * &*c - rc.get(i).map_or(BigInt::zero(), |r| &b * r);
            }
            let g = vec.iter().chain(comb.iter()).fold(BigInt::zero(), |g, c| g.gcd(c));
            if !g.is_zero() && !g.is_one() {
                vec.iter_mut().chain(comb.iter_mut()).for_each(|v| *v /= &g);
            }
        }
        match vec.iter().position(|v| !v.is_zero()) {
            None => {
                let coeffs = comb.into_iter().zip(&scales).map(|(c, f)| Rational::from_integer(c) * f).collect();
                return Polynomial::new(coeffs).primitive();
            }
            Some(pivot) => rows.push((pivot, vec, comb)),
        }
    }
    unreachable!("n + 1 vectors in dimension n are dependent")
}

fn step(r: &RootRepr) -> RootRepr {
    match r.bisect() {
        AlgebraicNumber::Root(n) => n,
        AlgebraicNumber::Rational(_) => unreachable!("irrational root became rational"),
    }
}

/// Picks out the root of the square-free `sf` that the enclosures converge to.
fn isolate_target(sf: &Polynomial, mut enclose: impl FnMut() -> (Rational, Rational)) -> AlgebraicNumber {
    assert!(!sf.is_zero(), "vanishing resultant");
    loop {
        let (lo, hi) = enclose();
        let (sl, sh) = (sf.sign_at_rational(&lo), sf.sign_at_rational(&hi));
        if lo == hi {
            if sl == 0 {
                return AlgebraicNumber::Rational(lo);
            }
            continue;
        }
        let inside = descartes_bound(sf, &lo, &hi);
        match (sl, sh, inside) {
            (0, s, 0) if s != 0 => return AlgebraicNumber::Rational(lo),
            (s, 0, 0) if s != 0 => return AlgebraicNumber::Rational(hi),
            (l, h, 1) if l != 0 && h != 0 => return AlgebraicNumber::from_isolated(sf, Isolated::Open(lo, hi)),
            _ => {}
        }
    }
}

fn interval_mul(a: (Rational, Rational), b: (Rational, Rational)) -> (Rational, Rational) {
    let prods = [&a.0 * &b.0, &a.0 * &b.1, &a.1 * &b.0, &a.1 * &b.1];
    (
        prods.iter().min().unwrap().clone(),
        prods.iter().max().unwrap().clone(),
    )
}

// b must not contain zero
fn interval_div(a: (Rational, Rational), b: (Rational, Rational)) -> (Rational, Rational) {
    interval_mul(a, (b.1.recip(), b.0.recip()))
}

fn compare_rational_root(a: &Rational, b: &RootRepr) -> Ordering {
    if a <= &b.lo {
        return Ordering::Less;
    }
    if a >= &b.hi {
        return Ordering::Greater;
    }
    match b.split_at(a) {
        AlgebraicNumber::Rational(_) => Ordering::Equal,
        AlgebraicNumber::Root(n) => {
            if a <= &n.lo {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
    }
}

fn compare_roots(mut a: RootRepr, mut b: RootRepr) -> Ordering {
    if a.hi <= b.lo {
        return Ordering::Less;
    }
    if b.hi <= a.lo {
        return Ordering::Greater;
    }
    let g = a.poly.gcd(&b.poly);
    if !g.is_constant() {
        let lo = (&a.lo).max(&b.lo).clone();
        let hi = (&a.hi).min(&b.hi).clone();
        if SturmChain::new(&g).count_open(&lo, &hi) > 0 {
            return Ordering::Equal;
        }
    }
    loop {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        a = step(&a);
        b = step(&b);
    }
}

/// Replaces a root representation by a rational when the root is rational.
///
/// A rational root `u/v` of the primitive integer polynomial has `v` dividing
/// the leading coefficient `L`. Distinct fractions with denominators at most
/// `L` are at least `1/L^2` apart, so once the interval is narrower than that
/// the only candidate is the simplest rational inside it.
fn detect_rational(repr: RootRepr) -> AlgebraicNumber {
    let lc = repr.poly.leading().abs().to_integer();
    let bound = Rational::new(BigInt::one(), &lc * &lc);
    let cur = AlgebraicNumber::Root(repr).refine_to_width(&bound);
    match cur {
        AlgebraicNumber::Rational(_) => cur,
        AlgebraicNumber::Root(ref rr) => {
            let cand = simplest_between(&rr.lo, &rr.hi);
            if cand.denom() <= &lc && rr.poly.sign_at_rational(&cand) == 0 {
                AlgebraicNumber::Rational(cand)
            } else {
                cur
            }
        }
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl From<Rational> for AlgebraicNumber {
    fn from(r: Rational) -> Self {
        AlgebraicNumber::Rational(r)
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// All distinct real roots of `p` in the open window `(lo, hi)`, increasing.
pub fn isolate_real_roots(p: &Polynomial, lo: &Rational, hi: &Rational) -> Vec<AlgebraicNumber> {
    let sf = p.square_free();
    isolate(p, lo, hi)
        .into_iter()
        .map(|iso| AlgebraicNumber::from_isolated(&sf, iso))
        .collect()
}

/// Roots in the closed window `[lo, hi]`.
pub fn isolate_real_roots_closed(p: &Polynomial, lo: &Rational, hi: &Rational) -> Vec<AlgebraicNumber> {
    let mut out = Vec::new();
    if p.sign_at_rational(lo) == 0 {
        out.push(AlgebraicNumber::Rational(lo.clone()));
    }
    out.extend(isolate_real_roots(p, lo, hi));
    if hi != lo && p.sign_at_rational(hi) == 0 {
        out.push(AlgebraicNumber::Rational(hi.clone()));
    }
    out
}
