use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};

/// Largest supported ring order; ideals are bitmasks over a `u64`.
pub const MAX_ORDER: usize = 64;

/// A finite commutative ring with 1, given by explicit operation tables
/// over the element indices `0..order`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    order: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    zero: u8,
    one: u8,
    labels: Vec<String>,
}

#[derive(Deserialize)]
struct TableSpec {
    order: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

impl FiniteRing {
    /// Builds a ring from tables, locating 0 and 1 and verifying the axioms.
    pub fn from_tables(name: &str, order: usize, add: Vec<u8>, mul: Vec<u8>, labels: Vec<String>) -> Result<Self> {
        if order == 0 {
            return Err(Error::RingAxiom("empty carrier".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::TooLarge(order));
        }
        if add.len() != order * order || mul.len() != order * order || labels.len() != order {
            return Err(Error::RingAxiom("table dimensions do not match the order".into()));
        }
        if add.iter().chain(&mul).any(|&v| v as usize >= order) {
            return Err(Error::RingAxiom("table entry out of range".into()));
        }
        let at = |t: &[u8], a: usize, b: usize| t[a * order + b] as usize;
        let zero = (0..order)
            .find(|&z| (0..order).all(|a| at(&add, z, a) == a && at(&add, a, z) == a))
            .ok_or_else(|| Error::RingAxiom("no additive identity".into()))?;
        let one = (0..order)
            .find(|&u| (0..order).all(|a| at(&mul, u, a) == a && at(&mul, a, u) == a))
            .ok_or_else(|| Error::RingAxiom("no multiplicative identity".into()))?;
        let mut neg = Vec::with_capacity(order);
        for a in 0..order {
            let n = (0..order)
                .find(|&b| at(&add, a, b) == zero)
                .ok_or_else(|| Error::RingAxiom(format!("element {a} has no additive inverse")))?;
            neg.push(n as u8);
        }
        let ring = FiniteRing { name: name.to_string(), order, add, mul, neg, zero: zero as u8, one: one as u8, labels };
        ring.verify_axioms()?;
        Ok(ring)
    }

    fn verify_axioms(&self) -> Result<()> {
        let n = self.order;
        if n > 1 && self.zero == self.one {
            return Err(Error::RingAxiom("0 = 1 in a nontrivial ring".into()));
        }
        for a in 0..n as u8 {
            for b in 0..n as u8 {
                if self.add(a, b) != self.add(b, a) {
                    return Err(Error::RingAxiom(format!("addition not commutative at ({a}, {b})")));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::RingAxiom(format!("multiplication not commutative at ({a}, {b})")));
                }
                for c in 0..n as u8 {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(Error::RingAxiom(format!("addition not associative at ({a}, {b}, {c})")));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::RingAxiom(format!("multiplication not associative at ({a}, {b}, {c})")));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(Error::RingAxiom(format!("distributivity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// `Z/n`.
    pub fn zn(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::RingAxiom("Z/0 is not finite".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        let add = (0..n * n).map(|i| ((i / n + i % n) % n) as u8).collect();
        let mul = (0..n * n).map(|i| ((i / n) * (i % n) % n) as u8).collect();
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_tables(&format!("Z{n}"), n, add, mul, labels)
    }

    /// The field with four elements `0, 1, a, a+1` where `a² = a + 1`.
    pub fn f4() -> Self {
        // Elements are bit pairs c0 + c1·a.
        let add = (0..16).map(|i| ((i / 4) ^ (i % 4)) as u8).collect();
        let mul = (0..16)
            .map(|i| {
                let (x, y) = (i / 4, i % 4);
                let (x0, x1, y0, y1) = (x & 1, x >> 1, y & 1, y >> 1);
                let c0 = (x0 & y0) ^ (x1 & y1);
                let c1 = (x0 & y1) ^ (x1 & y0) ^ (x1 & y1);
                (c0 | (c1 << 1)) as u8
            })
            .collect();
        let labels = ["0", "1", "a", "a+1"].iter().map(|s| s.to_string()).collect();
        Self::from_tables("F4", 4, add, mul, labels).expect("F4 tables are valid")
    }

    /// Reads a table-defined ring from JSON `{order, add, mul}`.
    pub fn from_json(name: &str, text: &str) -> Result<Self> {
        let spec: TableSpec = serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
        let n = spec.order;
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        let flatten = |t: Vec<Vec<usize>>, what: &str| -> Result<Vec<u8>> {
            if t.len() != n || t.iter().any(|row| row.len() != n) {
                return Err(Error::RingAxiom(format!("{what} table is not {n}x{n}")));
            }
            t.into_iter()
                .flatten()
                .map(|v| if v < n { Ok(v as u8) } else { Err(Error::RingAxiom(format!("{what} entry {v} out of range"))) })
                .collect()
        };
        let add = flatten(spec.add, "add")?;
        let mul = flatten(spec.mul, "mul")?;
        Self::from_tables(name, n, add, mul, (0..n).map(|i| i.to_string()).collect())
    }

    /// Componentwise product; element `(a, b)` has index `a·|other| + b`.
    pub fn product(&self, other: &FiniteRing) -> Result<Self> {
        let (m, k) = (self.order, other.order);
        let n = m * k;
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        let split = |i: usize| ((i / k) as u8, (i % k) as u8);
        let join = |a: u8, b: u8| (a as usize * k + b as usize) as u8;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let ((a1, b1), (a2, b2)) = (split(i), split(j));
                add.push(join(self.add(a1, a2), other.add(b1, b2)));
                mul.push(join(self.mul(a1, a2), other.mul(b1, b2)));
            }
        }
        let labels = (0..n)
            .map(|i| {
                let (a, b) = split(i);
                let left = self.label(a);
                let left = left.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(left);
                format!("({},{})", left, other.label(b))
            })
            .collect();
        Self::from_tables(&format!("{}x{}", self.name, other.name), n, add, mul, labels)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> u8 {
        self.zero
    }

    pub fn one(&self) -> u8 {
        self.one
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> + Clone {
        0..self.order as u8
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn label(&self, a: u8) -> &str {
        &self.labels[a as usize]
    }

    /// Element with the given label.
    pub fn element(&self, label: &str) -> Option<u8> {
        let wanted: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.labels.iter().position(|l| *l == wanted).map(|i| i as u8)
    }

    pub fn is_idempotent(&self, a: u8) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<u8> {
        self.elements().filter(|&a| self.is_idempotent(a)).collect()
    }

    pub fn is_nilpotent(&self, a: u8) -> bool {
        let mut p = a;
        for _ in 0..self.order {
            if p == self.zero {
                return true;
            }
            p = self.mul(p, a);
        }
        p == self.zero
    }

    /// `n·1` for small `n`.
    pub fn integer(&self, n: usize) -> u8 {
        (0..n).fold(self.zero, |acc, _| self.add(acc, self.one))
    }

    /// Smallest `k > 0` with `k·a = 0`.
    pub fn additive_order(&self, a: u8) -> usize {
        let mut s = a;
        let mut k = 1;
        while s != self.zero {
            s = self.add(s, a);
            k += 1;
        }
        k
    }

    /// Whether `map` is a unital ring homomorphism from `self` into `target`.
    pub fn is_unital_hom(&self, target: &FiniteRing, map: &[u8]) -> bool {
        map.len() == self.order
            && map.iter().all(|&v| (v as usize) < target.order)
            && map[self.one as usize] == target.one
            && self.elements().all(|a| {
                self.elements().all(|b| {
                    map[self.add(a, b) as usize] == target.add(map[a as usize], map[b as usize])
                        && map[self.mul(a, b) as usize] == target.mul(map[a as usize], map[b as usize])
                })
            })
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.name, self.order)
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Builds a ring from a spec such as `Z6`, `Z2xZ3`, `F4` or `table(path)`.
pub fn make_ring(spec: &str) -> Result<FiniteRing> {
    let mut ring: Option<FiniteRing> = None;
    for factor in split_factors(spec)? {
        let next = parse_factor(&factor.text, factor.pos)?;
        ring = Some(match ring {
            None => next,
            Some(r) => r.product(&next)?,
        });
    }
    ring.ok_or_else(|| Error::Parse { pos: 0, msg: "empty ring spec".into() })
}

struct Factor {
    text: String,
    pos: usize,
}

/// Splits on `x` outside of `table(...)`.
fn split_factors(spec: &str) -> Result<Vec<Factor>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in spec.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth.checked_sub(1).ok_or_else(|| Error::Parse { pos: i, msg: "unbalanced ')'".into() })?
            }
            'x' | '×' if depth == 0 => {
                out.push(Factor { text: spec[start..i].to_string(), pos: start });
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse { pos: spec.len(), msg: "unbalanced '('".into() });
    }
    out.push(Factor { text: spec[start..].to_string(), pos: start });
    Ok(out)
}

fn parse_factor(text: &str, pos: usize) -> Result<FiniteRing> {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    let pos = pos + lead;
    let bad = |msg: &str| Error::Parse { pos, msg: format!("{msg}: '{t}'") };
    if let Some(rest) = t.strip_prefix("table(") {
        let path = rest.strip_suffix(')').ok_or_else(|| bad("unterminated table("))?.trim();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
        return FiniteRing::from_json(&format!("table({path})"), &text);
    }
    let number = |s: &str| s.trim_start_matches('/').parse::<usize>().map_err(|_| bad("expected a ring order"));
    if let Some(rest) = t.strip_prefix('Z') {
        return FiniteRing::zn(number(rest)?);
    }
    if let Some(rest) = t.strip_prefix('F') {
        let q = number(rest)?;
        if q == 4 {
            return Ok(FiniteRing::f4());
        }
        if q >= 2 && (2..q).all(|d| q % d != 0) {
            let mut r = FiniteRing::zn(q)?;
            r.name = format!("F{q}");
            return Ok(r);
        }
        return Err(bad("unsupported finite field"));
    }
    Err(bad("unknown ring factor"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z6_has_order_six() {
        let r = make_ring("Z6").unwrap();
        assert_eq!(r.order(), 6);
        assert_eq!(r.idempotents(), vec![0, 1, 3, 4]);
    }

    #[test]
    fn z2_squared_is_all_idempotent() {
        let r = make_ring("Z2xZ2").unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.idempotents().len(), 4);
        assert_eq!(r.element("(1,0)"), Some(2));
    }

    #[test]
    fn z4_idempotents() {
        let r = make_ring("Z4").unwrap();
        assert_eq!(r.idempotents(), vec![0, 1]);
        assert!(r.is_nilpotent(2));
    }

    #[test]
    fn f4_is_a_field() {
        let r = FiniteRing::f4();
        for a in 1..4u8 {
            assert!(r.elements().any(|b| r.mul(a, b) == r.one()));
        }
        assert_eq!(r.mul(2, 2), 3);
    }

    #[test]
    fn bounds_and_errors() {
        assert_eq!(make_ring("Z65"), Err(Error::TooLarge(65)));
        assert_eq!(make_ring("Z8xZ9").unwrap_err(), Error::TooLarge(72));
        assert!(matches!(make_ring("Q3"), Err(Error::Parse { .. })));
        assert!(matches!(make_ring("F6"), Err(Error::Parse { .. })));
        assert_eq!(make_ring("F5").unwrap().order(), 5);
    }

    #[test]
    fn table_rings_are_verified() {
        let good = r#"{"order":2,"add":[[0,1],[1,0]],"mul":[[0,0],[0,1]]}"#;
        assert_eq!(FiniteRing::from_json("t", good).unwrap().order(), 2);
        let bad = r#"{"order":2,"add":[[0,1],[1,0]],"mul":[[0,1],[1,1]]}"#;
        assert!(matches!(FiniteRing::from_json("t", bad), Err(Error::RingAxiom(_))));
        let ragged = r#"{"order":2,"add":[[0,1]],"mul":[[0,0],[0,1]]}"#;
        assert!(matches!(FiniteRing::from_json("t", ragged), Err(Error::RingAxiom(_))));
    }

    #[test]
    fn table_file_spec() {
        let dir = std::env::temp_dir().join("qlab-ring-table-test.json");
        std::fs::write(&dir, r#"{"order":3,"add":[[0,1,2],[1,2,0],[2,0,1]],"mul":[[0,0,0],[0,1,2],[0,2,1]]}"#).unwrap();
        let r = make_ring(&format!("table({})xZ2", dir.display())).unwrap();
        assert_eq!(r.order(), 6);
        assert!(matches!(make_ring("table(/nonexistent/ring.json)"), Err(Error::Io(_))));
    }
}
