#![allow(dead_code)]

use proptest::prelude::*;
use qlab_core::exactnum::{Polynomial, Rational};
use qlab_core::parse::{parse_function, parse_set};
use qlab_core::pwfun::PiecewiseFunction;
use qlab_core::quotient::QElement;
use qlab_core::topology::IntervalSet;

pub fn render_q(r: &Rational) -> String {
    qlab_core::exactnum::rational::render(r)
}

/// Rational in `[0, 1]` with denominator at most 32.
pub fn unit_rational() -> impl Strategy<Value = Rational> {
    (1i64..=32).prop_flat_map(|d| (0..=d).prop_map(move |n| Rational::new(n.into(), d.into())))
}

/// Small rational with numerator in `[-8, 8]` and denominator in `[1, 4]`.
pub fn coeff() -> impl Strategy<Value = Rational> {
    (-8i64..=8, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(coeff(), 1..=max_degree + 1).prop_map(Polynomial::new)
}

/// Up to `n` distinct sorted points of `[0, 1]`.
pub fn breakpoints(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::btree_set(unit_rational(), 1..=n).prop_map(|s| s.into_iter().collect())
}

/// A union of open intervals with endpoints from a random breakpoint list,
/// relatively open at 0 and 1.
pub fn open_set() -> impl Strategy<Value = IntervalSet> {
    (breakpoints(6), any::<u8>()).prop_map(|(pts, bits)| {
        let mut b = vec![Rational::from_integer(0.into())];
        b.extend(pts.into_iter().filter(|p| *p > Rational::from_integer(0.into()) && *p < Rational::from_integer(1.into())));
        b.push(Rational::from_integer(1.into()));
        b.dedup();
        let mut parts = Vec::new();
        for k in 0..b.len() - 1 {
            if bits >> (k % 8) & 1 == 1 {
                let open = if k == 0 { "[" } else { "(" };
                let close = if k + 2 == b.len() { "]" } else { ")" };
                parts.push(format!("{open}{},{}{close}", render_q(&b[k]), render_q(&b[k + 1])));
            }
        }
        if parts.is_empty() {
            IntervalSet::empty()
        } else {
            parse_set(&parts.join(" u ")).expect("generated set parses")
        }
    })
}

/// Arbitrary finite unions of intervals and points.
pub fn any_set() -> impl Strategy<Value = IntervalSet> {
    (breakpoints(6), prop::collection::vec(0u8..6, 7)).prop_map(|(pts, kinds)| {
        let mut b = vec![Rational::from_integer(0.into())];
        b.extend(pts);
        b.push(Rational::from_integer(1.into()));
        b.dedup();
        let mut parts = Vec::new();
        for k in 0..b.len() - 1 {
            let (lo, hi) = (render_q(&b[k]), render_q(&b[k + 1]));
            match kinds[k % kinds.len()] {
                0 => {}
                1 => parts.push(format!("({lo},{hi})")),
                2 => parts.push(format!("[{lo},{hi}]")),
                3 => parts.push(format!("[{lo},{hi})")),
                4 => parts.push(format!("({lo},{hi}]")),
                _ => parts.push(format!("{{{lo}}}")),
            }
        }
        if parts.is_empty() {
            IntervalSet::empty()
        } else {
            parse_set(&parts.join(" u ")).expect("generated set parses")
        }
    })
}

fn poly_text(p: &Polynomial) -> String {
    format!("({})", p.render())
}

/// A continuous function on `[0, 1]`: a polynomial, a rational function with
/// a positive denominator, or two polynomial pieces glued at a point.
pub fn global_function() -> impl Strategy<Value = PiecewiseFunction> {
    (poly(3), poly(2), unit_rational(), 0u8..3).prop_map(|(p, q, c, kind)| {
        let text = match kind {
            0 => p.render(),
            1 => format!("{} / (1 + ({})^2)", poly_text(&p), q.render()),
            _ => {
                let shift = p.eval(&c) - q.eval(&c);
                let q2 = &q + &Polynomial::constant(shift);
                let c = render_q(&c);
                format!("piece([0,{c}], {}); piece([{c},1], {})", p.render(), q2.render())
            }
        };
        parse_function(&text).expect("generated function parses")
    })
}

/// Like [`global_function`] with quadratic numerators and linear `q`, so that
/// sums of squares keep critical points of moderate degree.
pub fn light_function() -> impl Strategy<Value = PiecewiseFunction> {
    (poly(2), poly(1), unit_rational(), 0u8..3).prop_map(|(p, q, c, kind)| {
        let text = match kind {
            0 => p.render(),
            1 => format!("{} / (1 + ({})^2)", poly_text(&p), q.render()),
            _ => {
                let shift = p.eval(&c) - q.eval(&c);
                let q2 = &q + &Polynomial::constant(shift);
                let c = render_q(&c);
                format!("piece([0,{c}], {}); piece([{c},1], {})", p.render(), q2.render())
            }
        };
        parse_function(&text).expect("generated function parses")
    })
}

/// A function on a dense open subset of `[0, 1]`: a global function, a
/// jump at an interior point, or a pole at an interior point.
pub fn q_function() -> impl Strategy<Value = PiecewiseFunction> {
    (global_function(), poly(2), poly(2), (1i64..32).prop_map(|n| Rational::new(n.into(), 32.into())), 0u8..4).prop_map(
        |(g, p, q, c, kind)| {
            let cs = render_q(&c);
            let text = match kind {
                0 => return g,
                1 => format!("piece([0,{cs}), {}); piece(({cs},1], {})", p.render(), q.render()),
                2 => format!("piece([0,{cs}) u ({cs},1], {} / (x - {cs}))", poly_text(&p)),
                _ => format!("piece([0,{cs}), 0); piece(({cs},1], {})", p.render()),
            };
            parse_function(&text).expect("generated function parses")
        },
    )
}

pub fn q_element() -> impl Strategy<Value = QElement> {
    q_function().prop_map(|f| QElement::new(&f).expect("dense open domain"))
}

/// Bounded elements only.
pub fn bounded_q_element() -> impl Strategy<Value = QElement> {
    q_element().prop_filter("bounded", |a| a.rep().sup_norm().is_finite())
}
