//! Elimination by resultants, computed through evaluation and interpolation.

use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::rational::{int, Rational};

/// Resultant `lc(f)^deg(g) * prod_{f(a)=0} g(a)` by the Euclidean recurrence.
pub fn resultant(f: &Polynomial, g: &Polynomial) -> Rational {
    let (Some(_), Some(_)) = (f.degree(), g.degree()) else {
        return Rational::zero();
    };
    let mut f = f.clone();
    let mut g = g.clone();
    let mut acc = Rational::one();
    loop {
        let df = f.degree().unwrap();
        let dg = g.degree().unwrap();
        if df == 0 {
            return acc * pow(&f.leading(), dg);
        }
        if dg == 0 {
            return acc * pow(&g.leading(), df);
        }
        // res(f, g) = lc(f)^(dg - dr) res(f, r) and res(f, r) = (-1)^(df dr) res(r, f)
        let r = g.rem(&f);
        let Some(dr) = r.degree() else {
            return Rational::zero();
        };
        acc *= pow(&f.leading(), dg - dr);
        if (df * dr) % 2 == 1 {
            acc = -acc;
        }
        g = f;
        f = r;
    }
}

fn pow(r: &Rational, k: usize) -> Rational {
    let mut out = Rational::one();
    for _ in 0..k {
        out *= r;
    }
    out
}

/// Computes `R(x) = lc(q)^y_deg * prod_{q(b)=0} F(x, b)` where `family(x0)`
/// returns `F(x0, y)` as a polynomial in `y` whose generic `y`-degree is
/// `y_deg`, and `R` has degree at most `x_deg`.
pub fn eliminate(
    q: &Polynomial,
    family: impl Fn(&Rational) -> Polynomial,
    y_deg: usize,
    x_deg: usize,
) -> Polynomial {
    let lc = q.leading();
    let points: Vec<Rational> = (0..=x_deg as i64).map(int).collect();
    let values: Vec<Rational> = points
        .iter()
        .map(|x| {
            let g = family(x);
            match g.degree() {
                None => Rational::zero(),
                Some(d) => resultant(q, &g) * pow(&lc, y_deg - d),
            }
        })
        .collect();
    interpolate(&points, &values)
}

/// Newton interpolation through `(points[i], values[i])`.
pub fn interpolate(points: &[Rational], values: &[Rational]) -> Polynomial {
    let n = points.len();
    let mut coef = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&points[i] - &points[i - j]);
        }
    }
    let mut result = Polynomial::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        let factor = Polynomial::linear_root(&points[i]);
        result = &(&result * &factor) + &Polynomial::constant(coef[i].clone());
    }
    result
}
