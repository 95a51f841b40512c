//! Locally constant functions on the inverse limit of the binary refinement
//! tower: level `n` has `2ⁿ` points and each point of level `n` splits into
//! two points of level `n + 1`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exec::{par_map_range, Execution};
use crate::exactnum::rational::render;
use crate::exactnum::Rational;
use crate::finalg::CheckReport;
use crate::parse::{whole, Parser};

/// Largest supported depth.
pub const MAX_DEPTH: usize = 20;

/// A table of `2^depth` values, one per length-`depth` binary cylinder.
///
/// Values built by [`CylinderFunction::new`] and the operations are stored at
/// their canonical (minimal) depth; [`lift`] produces a representative at a
/// chosen larger depth.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CylinderFunction {
    depth: usize,
    values: Vec<Rational>,
}

/// Pointwise operations on cylinder functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CylOp {
    Add,
    Sub,
    Mul,
    Join,
    Meet,
}

impl CylOp {
    pub const ALL: [CylOp; 5] = [CylOp::Add, CylOp::Sub, CylOp::Mul, CylOp::Join, CylOp::Meet];

    fn apply(self, a: &Rational, b: &Rational) -> Rational {
        match self {
            CylOp::Add => a + b,
            CylOp::Sub => a - b,
            CylOp::Mul => a * b,
            CylOp::Join => a.max(b).clone(),
            CylOp::Meet => a.min(b).clone(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CylOp::Add => "add",
            CylOp::Sub => "sub",
            CylOp::Mul => "mul",
            CylOp::Join => "join",
            CylOp::Meet => "meet",
        }
    }
}

/// Smallest depth whose table produces `values` by duplication.
pub(crate) fn canonical_depth<T: PartialEq>(depth: usize, values: &[T]) -> usize {
    let mut d = depth;
    while d > 0 {
        let stride = 1usize << (depth - d);
        let halves = (0..1usize << (d - 1)).all(|i| values[2 * i * stride] == values[(2 * i + 1) * stride]);
        if !halves {
            break;
        }
        d -= 1;
    }
    d
}

/// The depth-`d` table underlying `values` given `canonical_depth` returned `d`.
fn thin<T: Clone>(depth: usize, values: &[T], d: usize) -> Vec<T> {
    let stride = 1usize << (depth - d);
    values.iter().step_by(stride).cloned().collect()
}

/// Writes each value `2^(to - from)` times into `out`.
pub(crate) fn lift_into<T: Clone>(values: &[T], from: usize, to: usize, out: &mut [T]) {
    let rep = 1usize << (to - from);
    for (i, v) in values.iter().enumerate() {
        for slot in &mut out[i * rep..(i + 1) * rep] {
            *slot = v.clone();
        }
    }
}

/// Index of the cylinder of depth `depth` containing the point with the
/// given prefix; the first bit is the most significant.
pub(crate) fn cell_index(prefix: &[bool], depth: usize) -> usize {
    prefix[..depth].iter().fold(0, |acc, &b| 2 * acc + b as usize)
}

impl CylinderFunction {
    /// The element with the given table, stored at canonical depth.
    pub fn new(depth: usize, values: Vec<Rational>) -> Result<Self> {
        if depth > MAX_DEPTH {
            return Err(Error::DepthMismatch { from: depth, to: MAX_DEPTH });
        }
        if values.len() != 1 << depth {
            return Err(Error::InvalidFunction(format!(
                "depth {depth} needs {} values, got {}",
                1usize << depth,
                values.len()
            )));
        }
        Ok(CylinderFunction { depth, values }.canonical())
    }

    pub fn constant(c: Rational) -> Self {
        CylinderFunction { depth: 0, values: vec![c] }
    }

    /// The 0/1 indicator of the cylinder with the given prefix.
    pub fn indicator(prefix: &[bool]) -> Self {
        let depth = prefix.len();
        let k = cell_index(prefix, depth);
        let values = (0..1usize << depth).map(|i| Rational::from_integer((i == k).into())).collect();
        CylinderFunction { depth, values }.canonical()
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_canonical(&self) -> bool {
        canonical_depth(self.depth, &self.values) == self.depth
    }

    /// The minimal representative of the same element.
    pub fn canonical(&self) -> Self {
        let d = canonical_depth(self.depth, &self.values);
        CylinderFunction { depth: d, values: thin(self.depth, &self.values, d) }
    }

    /// Value at the inverse-limit point with the given prefix.
    pub fn evaluate(&self, prefix: &[bool]) -> Result<&Rational> {
        if prefix.len() < self.depth {
            return Err(Error::DepthMismatch { from: self.depth, to: prefix.len() });
        }
        Ok(&self.values[cell_index(prefix, self.depth)])
    }

    /// Whether every value is 0 or 1.
    pub fn is_idempotent(&self) -> bool {
        self.values.iter().all(|v| v.is_zero() || *v == Rational::from_integer(1.into()))
    }

    pub fn render(&self) -> String {
        let vals: Vec<String> = self.values.iter().map(render).collect();
        format!("cyl({}; {})", self.depth, vals.join(", "))
    }
}

impl fmt::Display for CylinderFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The representative of `f` at depth `m`.
pub fn lift(f: &CylinderFunction, m: usize) -> Result<CylinderFunction> {
    if m < f.depth || m > MAX_DEPTH {
        return Err(Error::DepthMismatch { from: f.depth, to: m });
    }
    let mut values = vec![Rational::zero(); 1 << m];
    lift_into(&f.values, f.depth, m, &mut values);
    Ok(CylinderFunction { depth: m, values })
}

/// Lift both to the larger depth, apply `op` pointwise and canonicalize.
pub fn cyl_arith(f: &CylinderFunction, g: &CylinderFunction, op: CylOp) -> CylinderFunction {
    let m = f.depth.max(g.depth);
    let (lf, lg) = (lift(f, m).expect("m >= depth"), lift(g, m).expect("m >= depth"));
    let values = lf.values.iter().zip(&lg.values).map(|(a, b)| op.apply(a, b)).collect();
    CylinderFunction { depth: m, values }.canonical()
}

/// `max |value|`, the sup over point evaluations.
pub fn cyl_norm(f: &CylinderFunction) -> Rational {
    f.values.iter().map(|v| v.abs()).max().expect("tables are nonempty")
}

/// Parses `cyl(n; v0, ..., v_{2^n - 1})`.
pub fn parse_cylinder(text: &str) -> Result<CylinderFunction> {
    whole(text, cylinder)
}

fn cylinder(p: &mut Parser<'_>) -> Result<CylinderFunction> {
    if !p.eat_ident("cyl") {
        return p.error("expected 'cyl'");
    }
    p.expect('(')?;
    let at = p.pos();
    let depth = p.usize()?;
    if depth > MAX_DEPTH {
        return Err(Error::Parse { pos: at, msg: format!("depth {depth} exceeds {MAX_DEPTH}") });
    }
    p.expect(';')?;
    let mut values = vec![p.signed_number()?];
    while p.eat(',') {
        values.push(p.signed_number()?);
    }
    p.expect(')')?;
    if values.len() != 1 << depth {
        return Err(Error::Parse { pos: at, msg: format!("depth {depth} needs {} values, got {}", 1usize << depth, values.len()) });
    }
    CylinderFunction::new(depth, values)
}

/// All points of level `l`, as prefixes.
pub fn points(l: usize) -> Vec<Vec<bool>> {
    (0..1usize << l).map(|i| (0..l).map(|k| i >> (l - 1 - k) & 1 == 1).collect()).collect()
}

/// Every table of depth exactly `d` with entries in `vals`, canonicalized.
pub fn tables_over(d: usize, vals: &[Rational]) -> Vec<CylinderFunction> {
    let n = 1usize << d;
    let total = vals.len().pow(n as u32);
    (0..total)
        .map(|mut code| {
            let values = (0..n)
                .map(|_| {
                    let v = vals[code % vals.len()].clone();
                    code /= vals.len();
                    v
                })
                .collect();
            CylinderFunction { depth: d, values }.canonical()
        })
        .collect()
}

/// Checks the embedding of the direct limit into functions on the level-`l`
/// points: lifts are injective unital ring-and-lattice homomorphisms,
/// evaluation does not depend on the representative depth, and indicators
/// of cylinders separate the `2^l` points.
pub fn embedding_checks(l: usize, sample: &[CylinderFunction]) -> Result<CheckReport> {
    if l == 0 || l > 12 {
        return Err(Error::DepthMismatch { from: 1, to: l });
    }
    let mut report = CheckReport::default();
    let pts = points(l);
    let sample: Vec<&CylinderFunction> = sample.iter().filter(|f| f.depth <= l).collect();
    let one = CylinderFunction::constant(Rational::from_integer(1.into()));
    for m in 0..=l {
        let lifted = lift(&one, m)?;
        report.check(lifted.values.iter().all(|v| *v == one.values[0]), || format!("lift of 1 to depth {m} is not 1"));
    }
    for f in &sample {
        for m in f.depth..=l {
            let lf = lift(f, m)?;
            report.check(lf.canonical() == **f, || format!("{} does not round-trip through depth {m}", f.render()));
            report.check(cyl_norm(&lf) == cyl_norm(f), || format!("lift of {} to depth {m} changes the norm", f.render()));
            for x in &pts {
                report.check(lf.evaluate(x)? == f.evaluate(x)?, || {
                    format!("{} evaluates differently at depth {m}", f.render())
                });
            }
        }
        let sup = pts.iter().map(|x| f.evaluate(x).map(|v| v.abs())).collect::<Result<Vec<_>>>()?;
        report.check(sup.into_iter().max() == Some(cyl_norm(f)), || format!("norm of {} is not the sup of its values", f.render()));
    }
    for (i, f) in sample.iter().enumerate() {
        for g in &sample[i..] {
            let m = f.depth.max(g.depth);
            let (lf, lg) = (lift(f, l)?, lift(g, l)?);
            report.check((f == g) == (lf == lg), || format!("lift is not injective on {} and {}", f.render(), g.render()));
            for op in CylOp::ALL {
                let h = cyl_arith(f, g, op);
                let lifted = lift(&cyl_arith(&lift(f, m)?, &lift(g, m)?, op), l)?;
                let pointwise = CylinderFunction {
                    depth: l,
                    values: lf.values.iter().zip(&lg.values).map(|(a, b)| op.apply(a, b)).collect(),
                };
                report.check(lift(&h, l)? == pointwise && lifted == pointwise, || {
                    format!("{} does not commute with lifting on {} and {}", op.name(), f.render(), g.render())
                });
                for x in &pts {
                    report.check(*h.evaluate(x)? == op.apply(f.evaluate(x)?, g.evaluate(x)?), || {
                        format!("evaluation does not preserve {} on {} and {}", op.name(), f.render(), g.render())
                    });
                }
            }
        }
    }
    for (i, x) in pts.iter().enumerate() {
        for y in &pts[i + 1..] {
            let k = x.iter().zip(y).position(|(a, b)| a != b).expect("distinct points");
            let e = CylinderFunction::indicator(&x[..=k]);
            let separated = e.depth <= k + 1 && *e.evaluate(x)? != *e.evaluate(y)?;
            report.check(separated, || format!("indicator of depth {} does not separate two points", k + 1));
        }
    }
    Ok(report)
}

impl CylOp {
    fn apply_small(self, a: i8, b: i8) -> i8 {
        match self {
            CylOp::Add => a + b,
            CylOp::Sub => a - b,
            CylOp::Mul => a * b,
            CylOp::Join => a.max(b),
            CylOp::Meet => a.min(b),
        }
    }
}

/// Exhaustive check that every operation commutes with evaluation,
/// `(f op g)(x) = f(x) op g(x)`, over all pairs of tables of depth at most
/// `depth` with entries in `{-1, 0, 1}` and all level-`depth` points. The
/// result of each operation is computed at the larger depth and reduced to
/// canonical form before evaluation. Returns the number of pairs checked and
/// the failures.
pub fn exhaustive_hom_check(depth: usize, exec: Execution) -> (usize, Vec<String>) {
    assert!(depth <= 3, "exhaustive check is limited to depth 3");
    let n = 1usize << depth;
    let total = 3usize.pow(n as u32);
    let decode = |mut code: usize| -> (usize, [i8; 8]) {
        let mut t = [0i8; 8];
        for slot in t.iter_mut().take(n) {
            *slot = (code % 3) as i8 - 1;
            code /= 3;
        }
        let d = canonical_depth(depth, &t[..n]);
        let mut c = [0i8; 8];
        c[..1 << d].copy_from_slice(&thin(depth, &t[..n], d));
        (d, c)
    };
    let tables: Vec<(usize, [i8; 8])> = (0..total).map(decode).collect();
    let pts = points(depth);
    let failures: Vec<Vec<String>> = par_map_range(exec, total, |i| {
        let (df, f) = &tables[i];
        let mut out = Vec::new();
        let mut lf = [0i8; 8];
        let mut lg = [0i8; 8];
        for (dg, g) in &tables {
            let m = (*df).max(*dg);
            lift_into(&f[..1 << df], *df, m, &mut lf[..1 << m]);
            lift_into(&g[..1 << dg], *dg, m, &mut lg[..1 << m]);
            for op in CylOp::ALL {
                let mut h = [0i8; 8];
                for k in 0..1 << m {
                    h[k] = op.apply_small(lf[k], lg[k]);
                }
                let dh = canonical_depth(m, &h[..1 << m]);
                let stride = 1 << (m - dh);
                let bad = pts.iter().any(|x| {
                    h[cell_index(x, dh) * stride] != op.apply_small(f[cell_index(x, *df)], g[cell_index(x, *dg)])
                });
                if bad {
                    out.push(format!("{} fails for {:?} and {:?}", op.name(), &f[..1 << df], &g[..1 << dg]));
                }
            }
        }
        out
    });
    (total * total, failures.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::int;

    fn cyl(depth: usize, vals: &[i64]) -> CylinderFunction {
        CylinderFunction::new(depth, vals.iter().map(|&v| int(v)).collect()).unwrap()
    }

    #[test]
    fn lifting_duplicates() {
        let f = cyl(1, &[3, 5]);
        let l = lift(&f, 2).unwrap();
        assert_eq!(l.values(), &[int(3), int(3), int(5), int(5)]);
        assert_eq!(lift(&f, 1).unwrap(), f);
        assert_eq!(l.canonical(), f);
        assert!(!l.is_canonical());
        assert_eq!(lift(&l, 1).unwrap_err(), Error::DepthMismatch { from: 2, to: 1 });
    }

    #[test]
    fn arithmetic() {
        assert_eq!(cyl_arith(&cyl(1, &[1, 2]), &cyl(2, &[1, 0, 0, 1]), CylOp::Mul), cyl(2, &[1, 0, 0, 2]));
        let f = cyl(2, &[1, -3, 4, 0]);
        assert_eq!(cyl_arith(&f, &CylinderFunction::constant(int(0)), CylOp::Add), f);
        let j = cyl_arith(&cyl(1, &[0, 1]), &cyl(1, &[1, 0]), CylOp::Join);
        assert_eq!(j, CylinderFunction::constant(int(1)));
        assert_eq!(j.depth(), 0);
    }

    #[test]
    fn norms() {
        assert_eq!(cyl_norm(&cyl(1, &[1, -2])), int(2));
        assert_eq!(cyl_norm(&CylinderFunction::constant(int(-7))), int(7));
        let f = cyl(2, &[1, -3, 4, 0]);
        assert_eq!(cyl_norm(&lift(&f, 5).unwrap()), cyl_norm(&f));
    }

    #[test]
    fn canonical_form_is_minimal() {
        let f = cyl(3, &[2, 2, 2, 2, 7, 7, 7, 7]);
        assert_eq!(f.depth(), 1);
        assert_eq!(f.values(), &[int(2), int(7)]);
        let g = cyl(2, &[1, 1, 2, 3]);
        assert_eq!(g.depth(), 2);
    }

    #[test]
    fn literals() {
        let f = parse_cylinder("cyl(2; 1, 1/2, -3, 0)").unwrap();
        assert_eq!(f.render(), "cyl(2; 1, 1/2, -3, 0)");
        assert_eq!(parse_cylinder("cyl(1; 4, 4)").unwrap().render(), "cyl(0; 4)");
        assert!(matches!(parse_cylinder("cyl(2; 1, 2)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_cylinder("cyl(1 1, 2)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_cylinder("cyl(30; 1)"), Err(Error::Parse { .. })));
    }

    #[test]
    fn evaluation_and_separation() {
        let f = cyl(2, &[1, 2, 3, 4]);
        assert_eq!(f.evaluate(&[true, false, true]).unwrap(), &int(3));
        assert!(f.evaluate(&[true]).is_err());
        let x = [false, true, true];
        let y = [false, true, false];
        let e = CylinderFunction::indicator(&x[..3]);
        assert_eq!(e.evaluate(&x).unwrap(), &int(1));
        assert_eq!(e.evaluate(&y).unwrap(), &int(0));
    }

    #[test]
    fn embedding_on_small_tables() {
        let vals = [int(-1), int(0), int(1)];
        let mut sample: Vec<CylinderFunction> = (0..=2).flat_map(|d| tables_over(d, &vals)).collect();
        sample.sort_by_key(|f| f.render());
        sample.dedup();
        sample.truncate(40);
        let report = embedding_checks(3, &sample).unwrap();
        assert!(report.ok(), "{:?}", report.failures);
        assert!(embedding_checks(0, &sample).is_err());
    }

    #[test]
    fn exhaustive_ops_small_depth() {
        let (pairs, failures) = exhaustive_hom_check(2, Execution::Sequential);
        assert_eq!(pairs, 81 * 81);
        assert!(failures.is_empty());
    }

    #[test]
    fn idempotents_form_the_cylinder_algebra() {
        let vals = [int(0), int(1)];
        let idem = tables_over(3, &vals);
        for e in &idem {
            assert!(e.is_idempotent());
            for f in &idem {
                let ef = cyl_arith(e, f, CylOp::Mul);
                assert_eq!(cyl_arith(e, f, CylOp::Meet), ef);
                let join = cyl_arith(&cyl_arith(e, f, CylOp::Add), &ef, CylOp::Sub);
                assert_eq!(cyl_arith(e, f, CylOp::Join), join);
            }
        }
    }
}
