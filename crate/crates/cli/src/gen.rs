//! Seeded case generator.
//!
//! Every case draws from its own ChaCha8 stream. The 32-byte key is the
//! little-endian seed, the little-endian case index, and the FNV-1a hash of
//! `suite/check`, zero padded. Cases are emitted as text in the documented
//! input formats so that a failure can be replayed with `qlab eval`.

use qlab_core::exactnum::rational::render;
use qlab_core::exactnum::{Polynomial, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest polynomial degree accepted by `--max-degree`.
pub const DEGREE_CAP: usize = 4;

pub struct Gen {
    rng: ChaCha8Rng,
    max_degree: usize,
}

fn fnv1a(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

impl Gen {
    pub fn for_case(seed: u64, id: &str, case: usize, max_degree: usize) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        key[8..16].copy_from_slice(&(case as u64).to_le_bytes());
        key[16..24].copy_from_slice(&fnv1a(id).to_le_bytes());
        Gen { rng: ChaCha8Rng::from_seed(key), max_degree: max_degree.min(DEGREE_CAP) }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    /// Rational in `[0, 1]` with denominator at most 32.
    pub fn unit_rational(&mut self) -> Rational {
        let d = self.int(1, 32);
        let n = self.int(0, d);
        Self::q(n, d)
    }

    /// Numerator in `[-8, 8]`, denominator in `[1, 4]`.
    pub fn coeff(&mut self) -> Rational {
        let n = self.int(-8, 8);
        let d = self.int(1, 4);
        Self::q(n, d)
    }

    pub fn poly(&mut self, degree: usize) -> Polynomial {
        let len = self.int(1, degree.min(self.max_degree) as i64 + 1) as usize;
        Polynomial::new((0..len).map(|_| self.coeff()).collect())
    }

    pub fn nonzero_poly(&mut self, degree: usize) -> Polynomial {
        let p = self.poly(degree);
        if p.is_zero() {
            Polynomial::constant(Rational::from_integer(1.into()))
        } else {
            p
        }
    }

    /// `0`, up to six sorted interior breakpoints, and `1`.
    fn breakpoints(&mut self) -> Vec<Rational> {
        let n = self.int(1, 6);
        let mut pts: Vec<Rational> = (0..n).map(|_| self.unit_rational()).collect();
        pts.push(Self::q(0, 1));
        pts.push(Self::q(1, 1));
        pts.sort();
        pts.dedup();
        pts
    }

    /// A union of open intervals between consecutive breakpoints, relatively
    /// open at `0` and `1`.
    pub fn open_set(&mut self) -> String {
        let b = self.breakpoints();
        let mut parts = Vec::new();
        for k in 0..b.len() - 1 {
            if self.coin() {
                let open = if k == 0 { "[" } else { "(" };
                let close = if k + 2 == b.len() { "]" } else { ")" };
                parts.push(format!("{open}{},{}{close}", render(&b[k]), render(&b[k + 1])));
            }
        }
        join_parts(parts)
    }

    /// An arbitrary finite union of intervals and points.
    pub fn any_set(&mut self) -> String {
        let b = self.breakpoints();
        let mut parts = Vec::new();
        for k in 0..b.len() - 1 {
            let (lo, hi) = (render(&b[k]), render(&b[k + 1]));
            match self.int(0, 5) {
                0 => {}
                1 => parts.push(format!("({lo},{hi})")),
                2 => parts.push(format!("[{lo},{hi}]")),
                3 => parts.push(format!("[{lo},{hi})")),
                4 => parts.push(format!("({lo},{hi}]")),
                _ => parts.push(format!("{{{lo}}}")),
            }
        }
        join_parts(parts)
    }

    fn function_with(&mut self, num_degree: usize, den_degree: usize) -> String {
        let p = self.poly(num_degree);
        let q = self.poly(den_degree);
        match self.int(0, 2) {
            0 => p.render(),
            1 => format!("({}) / (1 + ({})^2)", p.render(), q.render()),
            _ => {
                let c = self.unit_rational();
                let q2 = &q + &Polynomial::constant(p.eval(&c) - q.eval(&c));
                let c = render(&c);
                format!("piece([0,{c}], {}); piece([{c},1], {})", p.render(), q2.render())
            }
        }
    }

    /// A continuous function on `[0, 1]`: a polynomial, a rational function
    /// with positive denominator, or two polynomials glued at a point.
    pub fn global_function(&mut self) -> String {
        self.function_with(3, 2)
    }

    /// Like [`Gen::global_function`] with lower degrees, for checks whose
    /// cost grows quickly with the degree of critical points.
    pub fn light_function(&mut self) -> String {
        self.function_with(2, 1)
    }

    /// A function on a dense open subset of `[0, 1]`: a global function, a
    /// jump, a pole, or a function vanishing on an interval.
    pub fn q_function(&mut self) -> String {
        let kind = self.int(0, 3);
        self.q_function_of_kind(kind)
    }

    /// Like [`Gen::q_function`] without poles.
    pub fn bounded_q_function(&mut self) -> String {
        let kind = [0, 1, 3][self.index(3)];
        self.q_function_of_kind(kind)
    }

    fn q_function_of_kind(&mut self, kind: i64) -> String {
        if kind == 0 {
            return self.global_function();
        }
        let (p, q) = (self.poly(2), self.poly(2));
        let c = render(&Self::q(self.int(1, 31), 32));
        match kind {
            1 => format!("piece([0,{c}), {}); piece(({c},1], {})", p.render(), q.render()),
            2 => format!("piece([0,{c}) u ({c},1], ({}) / (x - {c}))", p.render()),
            _ => format!("piece([0,{c}), 0); piece(({c},1], {})", p.render()),
        }
    }

    /// A rational point of `(0, 1]` or `sqrt(m)/4` for `2 <= m < 16`.
    pub fn point(&mut self) -> String {
        if self.coin() {
            let d = self.int(1, 32);
            render(&Self::q(self.int(1, d), d))
        } else {
            format!("root(16*x^2 - {}, 0, 1)", self.int(2, 15))
        }
    }

    /// `cyl(d; ...)` with `d <= max_depth` and small rational values.
    pub fn cylinder(&mut self, max_depth: usize) -> String {
        let d = self.int(0, max_depth as i64) as usize;
        let vals: Vec<String> = (0..1usize << d).map(|_| render(&Self::q(self.int(-4, 4), self.int(1, 3)))).collect();
        format!("cyl({d}; {})", vals.join(", "))
    }
}

fn join_parts(parts: Vec<String>) -> String {
    if parts.is_empty() {
        "empty".to_string()
    } else {
        parts.join(" u ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qlab_core::parse::{parse_algebraic, parse_function, parse_set};
    use qlab_core::limits::parse_cylinder;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let draw = |seed, id, case| {
            let mut g = Gen::for_case(seed, id, case, 3);
            (0..8).map(|_| g.int(0, 1000)).collect::<Vec<_>>()
        };
        assert_eq!(draw(7, "a/b", 3), draw(7, "a/b", 3));
        assert_ne!(draw(7, "a/b", 3), draw(7, "a/b", 4));
        assert_ne!(draw(7, "a/b", 3), draw(7, "a/c", 3));
        assert_ne!(draw(7, "a/b", 3), draw(8, "a/b", 3));
    }

    #[test]
    fn generated_text_parses() {
        for case in 0..200 {
            let mut g = Gen::for_case(1, "gen", case, 4);
            parse_set(&g.open_set()).unwrap().require_open().unwrap();
            parse_set(&g.any_set()).unwrap();
            assert!(parse_function(&g.global_function()).unwrap().is_global());
            assert!(parse_function(&g.q_function()).unwrap().domain().is_dense());
            parse_algebraic(&g.point()).unwrap();
            parse_cylinder(&g.cylinder(3)).unwrap();
        }
    }

    #[test]
    fn degree_is_capped() {
        let mut g = Gen::for_case(0, "deg", 0, 9);
        for _ in 0..100 {
            assert!(g.poly(9).degree().unwrap_or(0) <= DEGREE_CAP);
        }
    }
}
