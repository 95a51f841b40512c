use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{AlgebraicNumber, Polynomial, Rational};
use crate::pwfun::{cozero_witness, PiecewiseFunction, RationalFunction};
use crate::topology::{Grid, IntervalSet};

/// A class of functions on dense open sets that agree on a dense subset,
/// stored by its canonical representative.
///
/// The representative has every removable gap filled, so equality of classes
/// is structural equality of representatives.
#[derive(Clone, PartialEq, Eq)]
pub struct QElement {
    rep: PiecewiseFunction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QOp {
    Add,
    Sub,
    Mul,
}

/// Fills each excluded breakpoint where the adjacent pieces extend
/// continuously (no pole, equal one-sided limits).
pub fn fill_removable(f: &PiecewiseFunction) -> PiecewiseFunction {
    let grid = f.grid().clone();
    let mut cells = f.cells().to_vec();
    let last = cells.len() - 1;
    for a in (0..cells.len()).step_by(2) {
        if cells[a].is_some() {
            continue;
        }
        let b = grid.point(a);
        let left = if a > 0 { cells[a - 1].clone() } else { None };
        let right = if a < last { cells[a + 1].clone() } else { None };
        let fill = match (left, right) {
            (Some(l), Some(r)) => {
                b.sign_at(l.den()) != 0 && b.sign_at(r.den()) != 0 && b.sign_at(&l.cross_difference(&r)) == 0
            }
            (Some(l), None) if a == last => b.sign_at(l.den()) != 0,
            (None, Some(r)) if a == 0 => b.sign_at(r.den()) != 0,
            _ => false,
        };
        if fill {
            cells[a] = cells[if a > 0 { a - 1 } else { a + 1 }].clone();
        }
    }
    PiecewiseFunction::build(grid, cells)
}

impl QElement {
    /// Class of `f`; its domain must be dense and open.
    pub fn new(f: &PiecewiseFunction) -> Result<Self> {
        let dom = f.domain();
        dom.require_open()?;
        if !dom.is_dense() {
            return Err(Error::NotDense(dom.render()));
        }
        Ok(QElement { rep: fill_removable(f) })
    }

    pub fn constant(c: Rational) -> Self {
        QElement { rep: PiecewiseFunction::constant(&IntervalSet::full(), c) }
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn identity() -> Self {
        QElement { rep: PiecewiseFunction::identity() }
    }

    pub fn rep(&self) -> &PiecewiseFunction {
        &self.rep
    }

    pub fn domain(&self) -> IntervalSet {
        self.rep.domain()
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn arith(&self, other: &Self, op: QOp) -> Self {
        let r = match op {
            QOp::Add => self.rep.add(&other.rep),
            QOp::Sub => self.rep.sub(&other.rep),
            QOp::Mul => self.rep.mul(&other.rep),
        };
        QElement { rep: fill_removable(&r.expect("dense domains intersect")) }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.arith(o, QOp::Add)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.arith(o, QOp::Sub)
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.arith(o, QOp::Mul)
    }

    pub fn neg(&self) -> Self {
        QElement { rep: self.rep.neg() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QElement { rep: fill_removable(&self.rep.scale(c)) }
    }

    pub fn pow(&self, k: u32) -> Self {
        QElement { rep: fill_removable(&self.rep.pow(k)) }
    }

    pub fn is_idempotent(&self) -> bool {
        &self.mul(self) == self
    }

    /// `1/f` on the cozero set, 0 on the interior of the zero set.
    pub fn quasi_inverse(&self) -> Self {
        let (grid, table) = self.rep.split_at_zeros();
        let vanishes: Vec<bool> = table
            .iter()
            .enumerate()
            .map(|(a, c)| match c {
                None => false,
                Some(r) if Grid::is_point_atom(a) => grid.point(a).sign_at(r.num()) == 0,
                Some(r) => r.is_zero(),
            })
            .collect();
        let interior = crate::topology::interval_set::interior_mask(&vanishes);
        let cells = table
            .iter()
            .enumerate()
            .map(|(a, c)| {
                let r = c.as_ref()?;
                if interior[a] {
                    Some(RationalFunction::zero())
                } else if vanishes[a] {
                    None
                } else {
                    Some(RationalFunction::one().div(r).expect("nonzero cell"))
                }
            })
            .collect();
        let g = PiecewiseFunction::new(grid, cells).expect("quasi-inverse is continuous");
        QElement::new(&g).expect("coz f and int Z(f) have dense open union")
    }

    pub fn render(&self) -> String {
        self.rep.render()
    }
}

impl fmt::Debug for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn q_arith(a: &QElement, b: &QElement, op: QOp) -> QElement {
    a.arith(b, op)
}

pub fn q_equal(a: &QElement, b: &QElement) -> bool {
    a.sub(b).is_zero()
}

/// `e_U`: 1 on `u`, 0 on `[0,1] - cl u`.
pub fn idempotent_of(u: &IntervalSet) -> Result<QElement> {
    u.require_open()?;
    let one = PiecewiseFunction::constant(u, Rational::one());
    QElement::new(&one.extend_by_zero()?)
}

pub fn idem_to_regopen(e: &QElement) -> Result<IntervalSet> {
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    Ok(e.rep.cozero_set())
}

pub fn regopen_to_idem(v: &IntervalSet) -> Result<QElement> {
    v.require_regular()?;
    idempotent_of(v)
}

/// `e <= f` pointwise on the common domain.
pub fn idempotent_le(e: &QElement, f: &QElement) -> bool {
    f.rep.sub(&e.rep).expect("dense domains intersect").is_nonnegative()
}

/// The decomposition `a = a²c` with `u = e + c` a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitDecomposition {
    pub c: QElement,
    pub f: QElement,
    pub e: QElement,
    pub u: QElement,
    /// The inverse of `u`, namely `e + a`.
    pub u_inverse: QElement,
}

impl UnitDecomposition {
    /// Named identities and whether each holds.
    pub fn checks(&self, a: &QElement) -> Vec<(&'static str, bool)> {
        let (c, f, e, u) = (&self.c, &self.f, &self.e, &self.u);
        let one = QElement::one();
        let zero = QElement::zero();
        vec![
            ("a^2 c = a", &a.pow(2).mul(c) == a),
            ("c^2 a = c", &c.pow(2).mul(a) == c),
            ("f a = a", &f.mul(a) == a),
            ("f c = c", &f.mul(c) == c),
            ("e a = 0", e.mul(a) == zero),
            ("e c = 0", e.mul(c) == zero),
            ("a^2 u = a", &a.pow(2).mul(u) == a),
            ("u (e + a) = 1", u.mul(&self.u_inverse) == one),
        ]
    }
}

pub fn unit_decomposition(a: &QElement) -> Result<UnitDecomposition> {
    let b = a.quasi_inverse();
    let c = b.pow(2).mul(a);
    let f = a.mul(&c);
    let e = QElement::one().sub(&f);
    let u = e.add(&c);
    let u_inverse = e.add(a);
    let d = UnitDecomposition { c, f, e, u, u_inverse };
    if let Some((name, _)) = d.checks(a).into_iter().find(|(_, ok)| !ok) {
        return Err(Error::RingAxiom(name.into()));
    }
    Ok(d)
}

/// Whether `f` extends to a function on all of `[0, 1]`.
fn global_extension(f: &PiecewiseFunction) -> Option<PiecewiseFunction> {
    let g = fill_removable(f);
    g.is_global().then_some(g)
}

/// A global `a` with `h a` global and nonzero.
pub fn roq_witness(h: &QElement) -> Result<PiecewiseFunction> {
    if h.is_zero() {
        return Err(Error::ZeroElement);
    }
    if h.rep.is_global() {
        return Ok(PiecewiseFunction::constant(&IntervalSet::full(), Rational::one()));
    }
    let try_a = |a: &PiecewiseFunction| {
        let ha = h.rep.mul(a).ok()?;
        global_extension(&ha).filter(|g| !g.is_zero())?;
        global_extension(a)
    };
    if let Some(a) = cozero_witness(&h.domain()).ok().as_ref().and_then(try_a) {
        return Ok(a);
    }
    let f = localized_bump(h);
    // f' = f / (1 + h² f²)
    let hf = h.rep.mul(&f)?;
    let den = hf.pow(2).add_constant(&Rational::one());
    let f_prime = f.div(&den)?;
    try_a(&f_prime).ok_or_else(|| Error::RingAxiom("no rational-extension witness".into()))
}

/// `(x - l)(r - x)` on a rational `[l, r]` inside a domain cell where `h` is
/// not identically zero, and 0 elsewhere.
fn localized_bump(h: &QElement) -> PiecewiseFunction {
    let grid = h.rep.grid();
    let cells = h.rep.cells();
    let a = (1..cells.len())
        .step_by(2)
        .find(|&a| cells[a].as_ref().is_some_and(|r| !r.is_zero()))
        .expect("nonzero element has a nonzero cell");
    let (lo, hi) = grid.span(a);
    let mid: AlgebraicNumber = lo.rational_between(hi).into();
    let l = lo.rational_between(&mid);
    let r = mid.rational_between(hi);
    let bump = &Polynomial::new(vec![-l.clone(), Rational::one()]) * &Polynomial::new(vec![r.clone(), -Rational::one()]);
    let inside = IntervalSet::interval(l.clone().into(), r.clone().into(), true, true).expect("l < r");
    PiecewiseFunction::union_of(&[
        PiecewiseFunction::polynomial(&inside, bump),
        PiecewiseFunction::constant(&inside.complement(), Rational::zero()),
    ])
    .expect("bump vanishes at its ends")
}

/// An ideal of global functions is dense exactly when the union of the
/// generators' cozero sets is dense.
pub fn dense_ideal_test(gens: &[PiecewiseFunction]) -> bool {
    gens.iter()
        .fold(IntervalSet::empty(), |acc, g| acc.union(&g.cozero_set()))
        .is_dense()
}

/// `num / den` with `den` a non-zero-divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliQuotient {
    num: PiecewiseFunction,
    den: PiecewiseFunction,
}

impl CliQuotient {
    pub fn new(num: PiecewiseFunction, den: PiecewiseFunction) -> Result<Self> {
        for f in [&num, &den] {
            if !f.is_global() {
                return Err(Error::InvalidFunction(format!("{} is not defined on [0,1]", f.render())));
            }
        }
        let coz = den.cozero_set();
        if !coz.is_dense() {
            return Err(Error::NotDense(coz.render()));
        }
        Ok(CliQuotient { num, den })
    }

    pub fn num(&self) -> &PiecewiseFunction {
        &self.num
    }

    pub fn den(&self) -> &PiecewiseFunction {
        &self.den
    }

    pub fn render(&self) -> String {
        format!("quot({}, {})", self.num.render(), self.den.render())
    }
}

pub fn cli_quotient_to_q(c: &CliQuotient) -> QElement {
    let f = c.num.div(&c.den).expect("dense cozero set");
    QElement::new(&f).expect("cozero set of a non-zero-divisor is dense open")
}

/// `(g k, h k)` with `k = 1/(1 + g² + h²)`; both entries are bounded.
pub fn normalize_cli(g: &PiecewiseFunction, h: &PiecewiseFunction) -> Result<CliQuotient> {
    let s = g.pow(2).add(&h.pow(2))?.add_constant(&Rational::one());
    let k = PiecewiseFunction::constant(&IntervalSet::full(), Rational::one()).div(&s)?;
    CliQuotient::new(g.mul(&k)?, h.mul(&k)?)
}

/// Combines functions living on pairwise disjoint open sets.
pub fn glue(parts: &[(IntervalSet, PiecewiseFunction)]) -> Result<PiecewiseFunction> {
    for (i, (e, _)) in parts.iter().enumerate() {
        e.require_open()?;
        for (e2, _) in &parts[..i] {
            let both = e.intersect(e2);
            if !both.is_empty() {
                return Err(Error::OverlappingParts(both.render()));
            }
        }
    }
    let pieces: Vec<PiecewiseFunction> = parts.iter().map(|(e, f)| f.restrict(e)).collect();
    PiecewiseFunction::union_of(&pieces)
}

/// Every dense open domain in the fragment is a cozero set.
pub fn domain_is_cozero_set(a: &QElement) -> bool {
    let d = a.domain();
    cozero_witness(&d).is_ok_and(|w| w.cozero_set() == d)
}
