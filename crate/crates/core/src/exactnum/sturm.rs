//! Sturm sequences: exact counting and isolation of real roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};


use super::poly::{sign_of, Polynomial};
use super::rational::{common_denominator, midpoint, Rational};

/// Sturm chain of a polynomial, built from its square-free part.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Polynomial>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> Self {
        let sf = p.square_free();
        let mut chain = vec![sf.clone()];
        if sf.is_constant() {
            return SturmChain { chain };
        }
        let mut a = sf.clone();
        let mut b = sf.derivative().scaled_positive();
        while !b.is_zero() {
            chain.push(b.clone());
            // keep signs: next = -rem(a, b), scaled by a positive factor
            let r = a.rem(&b);
            let r = if r.is_zero() { r } else { (-&r).scaled_positive() };
            a = b;
            b = r;
        }
        SturmChain { chain }
    }

    pub fn poly(&self) -> &Polynomial {
        &self.chain[0]
    }

    /// Sign variations at `x`, zeros dropped.
    pub fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0;
        for q in &self.chain {
            let s = q.sign_at_rational(x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_half_open(&self, lo: &Rational, hi: &Rational) -> usize {
        if lo >= hi {
            return 0;
        }
        self.variations(lo) - self.variations(hi)
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`.
    pub fn count_open(&self, lo: &Rational, hi: &Rational) -> usize {
        if lo >= hi {
            return 0;
        }
        let c = self.count_half_open(lo, hi);
        if self.poly().sign_at_rational(hi) == 0 {
            c - 1
        } else {
            c
        }
    }

    /// Number of distinct real roots in the closed interval `[lo, hi]`.
    pub fn count_closed(&self, lo: &Rational, hi: &Rational) -> usize {
        if lo > hi {
            return 0;
        }
        let at_lo = usize::from(self.poly().sign_at_rational(lo) == 0);
        if lo == hi {
            return at_lo;
        }
        self.count_half_open(lo, hi) + at_lo
    }

    /// Variations at -inf minus variations at +inf.
    pub fn count_all(&self) -> usize {
        let sign_inf = |q: &Polynomial, neg: bool| {
            let d = q.degree().unwrap_or(0);
            let s = sign_of(&q.leading());
            if neg && d % 2 == 1 {
                -s
            } else {
                s
            }
        };
        let var = |neg: bool| {
            let mut count = 0;
            let mut last = 0;
            for q in &self.chain {
                let s = sign_inf(q, neg);
                if s != 0 {
                    if last != 0 && s != last {
                        count += 1;
                    }
                    last = s;
                }
            }
            count
        };
        var(true) - var(false)
    }
}

trait ScaledPositive {
    fn scaled_positive(&self) -> Polynomial;
}

impl ScaledPositive for Polynomial {
    // primitive() may flip the sign to make the leading coefficient positive; undo that.
    fn scaled_positive(&self) -> Polynomial {
        let p = self.primitive();
        if self.leading().is_negative() {
            -&p
        } else {
            p
        }
    }
}

/// An isolated root: either an exact rational root, or an open interval
/// `(lo, hi)` with rational endpoints where the square-free polynomial has
/// exactly one root and does not vanish at either endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isolated {
    Exact(Rational),
    Open(Rational, Rational),
}

/// Isolates all distinct real roots of `p` in the open interval `(lo, hi)`, in
/// increasing order.
pub fn isolate(p: &Polynomial, lo: &Rational, hi: &Rational) -> Vec<Isolated> {
    assert!(!p.is_zero(), "root isolation of the zero polynomial");
    let chain = SturmChain::new(p);
    let mut out = Vec::new();
    if chain.poly().is_constant() || lo >= hi {
        return out;
    }
    let total = chain.count_open(lo, hi);
    if total == 0 {
        return out;
    }
    // work on (a, b] pieces; the top endpoint is excluded by construction
    let mut stack = vec![(lo.clone(), hi.clone(), total, true)];
    while let Some((a, b, count, b_excluded)) = stack.pop() {
        if count == 0 {
            continue;
        }
        let b_root = !b_excluded && chain.poly().sign_at_rational(&b) == 0;
        if count == 1 {
            if b_root {
                out.push(Isolated::Exact(b));
            } else {
                out.push(tighten(&chain, a, b));
            }
            continue;
        }
        let m = midpoint(&a, &b);
        let left = chain.count_half_open(&a, &m);
        let right = count - left;
        // push right first so left pops first; sort at the end anyway
        stack.push((m.clone(), b, right, b_excluded));
        stack.push((a, m, left, false));
    }
    out.sort_by(|x, y| isolated_lo(x).cmp(isolated_lo(y)));
    out
}

fn isolated_lo(i: &Isolated) -> &Rational {
    match i {
        Isolated::Exact(r) => r,
        Isolated::Open(l, _) => l,
    }
}

// Exactly one root in the open (a, b); shrink until neither endpoint is a root.
fn tighten(chain: &SturmChain, mut a: Rational, mut b: Rational) -> Isolated {
    let p = chain.poly();
    while p.sign_at_rational(&a) == 0 || p.sign_at_rational(&b) == 0 {
        let m = midpoint(&a, &b);
        if p.sign_at_rational(&m) == 0 {
            return Isolated::Exact(m);
        }
        if chain.count_open(&a, &m) == 1 {
            b = m;
        } else {
            a = m;
        }
    }
    Isolated::Open(a, b)
}

/// Bisects `(lo, hi)` once, keeping the half containing the sign change of the
/// square-free `p`. Returns `Exact` if the midpoint is the root.
pub fn bisect_once(p: &Polynomial, lo: &Rational, hi: &Rational) -> Isolated {
    let m = midpoint(lo, hi);
    let sm = p.sign_at_rational(&m);
    if sm == 0 {
        return Isolated::Exact(m);
    }
    let sl = p.sign_at_rational(lo);
    if sl != sm {
        Isolated::Open(lo.clone(), m)
    } else {
        Isolated::Open(m, hi.clone())
    }
}

/// Sign variations of `(1+t)^n p((lo + hi t)/(1+t))`: an upper bound on the
/// number of roots in `(lo, hi)` with the same parity, exact when 0 or 1.
pub fn descartes_bound(p: &Polynomial, lo: &Rational, hi: &Rational) -> usize {
    let Some(n) = p.degree() else { return 0 };
    let den = common_denominator(p.coeffs().iter());
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    // lo = a/d, hi = b/d; build d^n p(lo + (hi - lo) x) by homogeneous Horner.
    let d = lo.denom().lcm(hi.denom());
    let a = lo.numer() * (&d / lo.denom());
    let b = hi.numer() * (&d / hi.denom());
    let w = &b - &a;
    let mut acc: Vec<BigInt> = vec![ints[n].clone()];
    let mut dp = d.clone();
    for c in ints[..n].iter().rev() {
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (i, v) in acc.iter().enumerate() {
            next[i] += v * &a;
            next[i + 1] += v * &w;
        }
        next[0] += c * &dp;
        dp *= &d;
        acc = next;
    }
    // x^n q(1/x), then the Taylor shift x -> x + 1.
    acc.reverse();
    for i in 0..acc.len() {
        for j in (i..acc.len() - 1).rev() {
            let t = acc[j + 1].clone();
            acc[j] += t;
        }
    }
    let signs: Vec<bool> = acc.iter().filter(|c| !c.is_zero()).map(|c| c.is_negative()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

pub fn all_real_roots(p: &Polynomial) -> Vec<Isolated> {
    let bound = p.root_bound();
    isolate(p, &-bound.clone(), &bound)
}

pub fn has_root_in_open(p: &Polynomial, lo: &Rational, hi: &Rational) -> bool {
    !p.is_zero() && !p.is_constant() && SturmChain::new(p).count_open(lo, hi) > 0
}
