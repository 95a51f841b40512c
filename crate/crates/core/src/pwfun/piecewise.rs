//! Continuous piecewise-rational functions on subsets of `[0, 1]`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use super::ratfn::RationalFunction;
use crate::error::{Error, Result};
use crate::exactnum::{AlgebraicNumber, Polynomial, Rational};
use crate::topology::{Grid, IntervalSet};

/// A continuous function given by one rational function per atom of a grid.
///
/// `cells[a]` is `None` when atom `a` lies outside the domain. Point atoms in
/// the domain carry the rational function of an adjacent interval atom in the
/// domain (left first), which encodes continuity at junctions. Adjacent atoms
/// with identical data are fused, so the representation is canonical.
#[derive(Clone, PartialEq, Eq)]
pub struct PiecewiseFunction {
    grid: Grid,
    cells: Vec<Option<RationalFunction>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A supremum that may be infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Norm {
    Finite(AlgebraicNumber),
    Infinite,
}

impl Norm {
    pub fn is_finite(&self) -> bool {
        matches!(self, Norm::Finite(_))
    }

    pub fn finite(&self) -> Option<&AlgebraicNumber> {
        match self {
            Norm::Finite(a) => Some(a),
            Norm::Infinite => None,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Norm::Finite(a) => a.render(),
            Norm::Infinite => "infinite".into(),
        }
    }
}

impl PartialOrd for Norm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Norm {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Norm::Finite(a), Norm::Finite(b)) => a.cmp(b),
            (Norm::Finite(_), Norm::Infinite) => Ordering::Less,
            (Norm::Infinite, Norm::Finite(_)) => Ordering::Greater,
            (Norm::Infinite, Norm::Infinite) => Ordering::Equal,
        }
    }
}

/// Enclosure of `|r(x)|` from the isolating bounds of `x`, if the
/// denominator keeps its sign there.
fn abs_enclosure(r: &RationalFunction, x: &AlgebraicNumber) -> Option<(Rational, Rational)> {
    let (lo, hi) = x.bounds();
    let (nl, nh) = r.num().eval_interval(&lo, &hi);
    let (dl, dh) = r.den().eval_interval(&lo, &hi);
    if !(dl.is_positive() || dh.is_negative()) {
        return None;
    }
    let q = [&nl / &dl, &nl / &dh, &nh / &dl, &nh / &dh];
    let (vl, vh) = (q.iter().min().unwrap().clone(), q.iter().max().unwrap().clone());
    Some(if vl.is_negative() && vh.is_positive() {
        (Rational::zero(), (-vl).max(vh))
    } else if vh.is_positive() || vh.is_zero() && vl.is_zero() {
        (vl, vh)
    } else {
        (-vh, -vl)
    })
}

/// Largest `|r(x)|` over the candidates. Candidates whose enclosure lies
/// below another's are dropped before any exact evaluation.
fn max_abs_value(mut cands: Vec<(&RationalFunction, AlgebraicNumber)>) -> AlgebraicNumber {
    const ROUNDS: usize = 16;
    for _ in 0..ROUNDS {
        if cands.len() <= 1 {
            break;
        }
        let encl: Vec<Option<(Rational, Rational)>> = cands.iter().map(|(r, x)| abs_enclosure(r, x)).collect();
        let Some(floor) = encl.iter().flatten().map(|e| e.0.clone()).max() else {
            cands = cands.into_iter().map(|(r, x)| (r, x.refine())).collect();
            continue;
        };
        let kept: Vec<_> = cands
            .into_iter()
            .zip(encl)
            .filter(|(_, e)| e.as_ref().is_none_or(|e| e.1 >= floor))
            .map(|(c, _)| c)
            .collect();
        cands = kept;
        let all_tight = cands.iter().all(|(_, x)| x.is_rational());
        if all_tight {
            break;
        }
        cands = cands
            .into_iter()
            .map(|(r, x)| (r, x.refine().refine().refine().refine()))
            .collect();
    }
    let (exact, pending): (Vec<_>, Vec<_>) = cands.into_iter().partition(|(_, x)| x.is_rational());
    let mut best = AlgebraicNumber::zero();
    for (r, x) in exact.into_iter().chain(pending) {
        if x.is_rational() || exceeds(r, &x, &best) {
            let v = r.eval(&x).expect("pole-free candidate").abs();
            if v > best {
                best = v;
            }
        }
    }
    best
}

/// Whether `|r(x)| > b`, decided by exact signs when `b` is rational.
fn exceeds(r: &RationalFunction, x: &AlgebraicNumber, b: &AlgebraicNumber) -> bool {
    let Some(b) = b.as_rational() else { return true };
    let sd = x.sign_at(r.den());
    let above = x.sign_at(&(r.num() - &r.den().scale(b))) * sd > 0;
    let below = x.sign_at(&(r.num() + &r.den().scale(b))) * sd < 0;
    above || below
}

/// Distinct roots of `p` strictly between `a` and `b`, increasing.
pub fn roots_between(p: &Polynomial, a: &AlgebraicNumber, b: &AlgebraicNumber) -> Vec<AlgebraicNumber> {
    if p.is_zero() || p.is_constant() {
        return Vec::new();
    }
    let lo = a.bounds().0;
    let hi = b.bounds().1;
    crate::exactnum::isolate_real_roots_closed(p, &lo, &hi)
        .into_iter()
        .filter(|r| r > a && r < b)
        .collect()
}

impl PiecewiseFunction {
    /// Validating constructor: checks that denominators have no root on the
    /// closure of each cell within the domain and that adjacent cells agree at
    /// every junction inside the domain.
    pub fn new(grid: Grid, cells: Vec<Option<RationalFunction>>) -> Result<Self> {
        if cells.len() != grid.atom_count() {
            return Err(Error::InvalidFunction("cell table does not match grid".into()));
        }
        for a in (1..cells.len()).step_by(2) {
            if let Some(r) = &cells[a] {
                let (lo, hi) = grid.span(a);
                if !roots_between(r.den(), lo, hi).is_empty() {
                    return Err(Error::InvalidFunction(format!(
                        "denominator of {} vanishes inside ({lo}, {hi})",
                        r.render()
                    )));
                }
            }
        }
        for a in (0..cells.len()).step_by(2) {
            let Some(r) = &cells[a] else { continue };
            let b = grid.point(a);
            if b.sign_at(r.den()) == 0 {
                return Err(Error::InvalidFunction(format!("pole of {} at domain point {b}", r.render())));
            }
            for nb in [a.checked_sub(1), Some(a + 1)].into_iter().flatten() {
                let Some(Some(s)) = cells.get(nb) else { continue };
                if b.sign_at(s.den()) == 0 || b.sign_at(&r.cross_difference(s)) != 0 {
                    return Err(Error::InvalidFunction(format!(
                        "discontinuity at {b}: {} vs {}",
                        r.render(),
                        s.render()
                    )));
                }
            }
        }
        Ok(Self::build(grid, cells))
    }

    /// Canonicalizes a table already known to be valid.
    pub(crate) fn build(mut grid: Grid, mut cells: Vec<Option<RationalFunction>>) -> Self {
        for a in (0..cells.len()).step_by(2) {
            if cells[a].is_none() {
                continue;
            }
            let left = if a > 0 { cells[a - 1].clone() } else { None };
            let right = cells.get(a + 1).cloned().flatten();
            if let Some(r) = left.or(right) {
                cells[a] = Some(r);
            } else if let Some(r) = &cells[a] {
                // isolated point: prefer a constant when the value is rational
                if let Ok(AlgebraicNumber::Rational(v)) = r.eval(grid.point(a)) {
                    cells[a] = Some(RationalFunction::constant(v));
                }
            }
        }
        let mut i = 1;
        while i + 1 < grid.breaks().len() {
            let a = 2 * i;
            if cells[a - 1] == cells[a] && cells[a] == cells[a + 1] {
                grid.remove_break(i);
                cells.drain(a..a + 2);
            } else {
                i += 1;
            }
        }
        PiecewiseFunction { grid, cells }
    }

    /// `r` on the set `domain`.
    pub fn on_set(domain: &IntervalSet, r: RationalFunction) -> Result<Self> {
        let grid = domain.grid();
        let mask = domain.mask_on(&grid);
        let cells = mask.iter().map(|&m| m.then(|| r.clone())).collect();
        Self::new(grid, cells)
    }

    pub fn constant(domain: &IntervalSet, c: Rational) -> Self {
        Self::on_set(domain, RationalFunction::constant(c)).expect("constants are valid")
    }

    pub fn polynomial(domain: &IntervalSet, p: Polynomial) -> Self {
        Self::on_set(domain, RationalFunction::poly(p)).expect("polynomials are valid")
    }

    /// The identity function on `[0, 1]`.
    pub fn identity() -> Self {
        Self::polynomial(&IntervalSet::full(), Polynomial::x())
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn cells(&self) -> &[Option<RationalFunction>] {
        &self.cells
    }

    pub fn domain(&self) -> IntervalSet {
        let mask: Vec<bool> = self.cells.iter().map(Option::is_some).collect();
        IntervalSet::from_mask(&self.grid, &mask)
    }

    pub fn is_global(&self) -> bool {
        self.cells.iter().all(Option::is_some)
    }

    /// Cell table on a finer grid.
    pub fn table_on(&self, grid: &Grid) -> Vec<Option<RationalFunction>> {
        self.grid.refine_table(&self.cells, grid)
    }

    /// Grid refined by the roots of `poly_of(cell)` inside every interval atom.
    fn split_grid(
        grid: &Grid,
        table: &[Option<RationalFunction>],
        poly_of: impl Fn(usize, &RationalFunction) -> Option<Polynomial>,
    ) -> Grid {
        let mut extra = Vec::new();
        for a in (1..table.len()).step_by(2) {
            if let Some(r) = &table[a] {
                if let Some(p) = poly_of(a, r) {
                    let (lo, hi) = grid.span(a);
                    extra.extend(roots_between(&p, lo, hi));
                }
            }
        }
        if extra.is_empty() {
            grid.clone()
        } else {
            grid.with_points(extra)
        }
    }

    /// Splits cells at the zeros of their numerators.
    pub(crate) fn split_at_zeros(&self) -> (Grid, Vec<Option<RationalFunction>>) {
        let grid = Self::split_grid(&self.grid, &self.cells, |_, r| Some(r.num().clone()));
        let table = self.table_on(&grid);
        (grid, table)
    }

    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        let grid = self.grid.merge(&other.grid);
        let a = self.table_on(&grid);
        let b = other.table_on(&grid);
        let out = match op {
            ArithOp::Add | ArithOp::Sub | ArithOp::Mul => {
                let cells = a
                    .iter()
                    .zip(&b)
                    .map(|(x, y)| match (x, y) {
                        (Some(x), Some(y)) => Some(match op {
                            ArithOp::Add => x.add(y),
                            ArithOp::Sub => x.sub(y),
                            _ => x.mul(y),
                        }),
                        _ => None,
                    })
                    .collect();
                Self::build(grid, cells)
            }
            ArithOp::Div => {
                let fine = Self::split_grid(&grid, &b, |a_, r| {
                    a[a_].as_ref().map(|_| r.num().clone())
                });
                let a = self.table_on(&fine);
                let b = other.table_on(&fine);
                let cells = (0..fine.atom_count())
                    .map(|i| match (&a[i], &b[i]) {
                        (Some(x), Some(y)) => {
                            let nonzero = if Grid::is_point_atom(i) {
                                fine.point(i).sign_at(y.num()) != 0
                            } else {
                                !y.is_zero()
                            };
                            nonzero.then(|| x.div(y).expect("nonzero divisor"))
                        }
                        _ => None,
                    })
                    .collect();
                Self::build(fine, cells)
            }
        };
        if out.domain().is_empty() && !(self.domain().is_empty() || other.domain().is_empty()) {
            return Err(Error::EmptyDomain);
        }
        Ok(out)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.arith(o, ArithOp::Add)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.arith(o, ArithOp::Sub)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.arith(o, ArithOp::Mul)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        self.arith(o, ArithOp::Div)
    }

    pub fn neg(&self) -> Self {
        self.map_cells(|r| r.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_cells(|r| r.scale(c))
    }

    pub fn add_constant(&self, c: &Rational) -> Self {
        self.map_cells(|r| r.add(&RationalFunction::constant(c.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        self.map_cells(|r| r.pow(k))
    }

    /// Applies a cellwise map that preserves continuity (a polynomial map, or
    /// any map applied identically on every cell).
    pub(crate) fn map_cells(&self, f: impl Fn(&RationalFunction) -> RationalFunction) -> Self {
        let cells = self.cells.iter().map(|c| c.as_ref().map(&f)).collect();
        Self::build(self.grid.clone(), cells)
    }

    /// `p(f)` for a polynomial `p`.
    pub fn compose_poly(&self, p: &Polynomial) -> Self {
        self.map_cells(|r| {
            p.coeffs().iter().rev().fold(RationalFunction::zero(), |acc, c| {
                acc.mul(r).add(&RationalFunction::constant(c.clone()))
            })
        })
    }

    /// Restriction to `dom ∩ set`.
    pub fn restrict(&self, set: &IntervalSet) -> Self {
        let grid = self.grid.merge(&set.grid());
        let table = self.table_on(&grid);
        let mask = set.mask_on(&grid);
        let cells = table.into_iter().zip(mask).map(|(c, m)| if m { c } else { None }).collect();
        Self::build(grid, cells)
    }

    /// Exact value at `x`.
    pub fn evaluate(&self, x: &AlgebraicNumber) -> Result<AlgebraicNumber> {
        let atom = self
            .grid
            .locate(x)
            .ok_or_else(|| Error::PointOutsideDomain(x.render()))?;
        match &self.cells[atom] {
            Some(r) => r.eval(x),
            None => Err(Error::PointOutsideDomain(x.render())),
        }
    }

    pub fn evaluate_rational(&self, x: &Rational) -> Result<AlgebraicNumber> {
        self.evaluate(&AlgebraicNumber::from_rational(x.clone()))
    }

    pub fn zero_set(&self) -> IntervalSet {
        let (grid, table) = self.split_at_zeros();
        let mask: Vec<bool> = table
            .iter()
            .enumerate()
            .map(|(a, c)| match c {
                None => false,
                Some(r) if Grid::is_point_atom(a) => grid.point(a).sign_at(r.num()) == 0,
                Some(r) => r.is_zero(),
            })
            .collect();
        IntervalSet::from_mask(&grid, &mask)
    }

    pub fn cozero_set(&self) -> IntervalSet {
        self.domain().difference(&self.zero_set())
    }

    /// True when the function vanishes on its whole domain.
    pub fn is_zero(&self) -> bool {
        self.cells.iter().flatten().all(RationalFunction::is_zero)
    }

    fn lattice_op(&self, other: &Self, take_max: bool) -> Self {
        let grid = self.grid.merge(&other.grid);
        let a = self.table_on(&grid);
        let b = other.table_on(&grid);
        let fine = Self::split_grid(&grid, &a, |i, r| b[i].as_ref().map(|s| r.cross_difference(s)));
        let a = self.table_on(&fine);
        let b = other.table_on(&fine);
        let cells = (0..fine.atom_count())
            .map(|i| match (&a[i], &b[i]) {
                (Some(x), Some(y)) => {
                    let diff = x.sub(y);
                    let sign = if Grid::is_point_atom(i) {
                        diff.sign_at(fine.point(i))
                    } else {
                        let (lo, hi) = fine.span(i);
                        let t = lo.rational_between(hi);
                        crate::exactnum::poly::sign_of(&diff.eval_rational(&t).expect("pole-free cell"))
                    };
                    let first = if take_max { sign >= 0 } else { sign <= 0 };
                    Some(if first { x.clone() } else { y.clone() })
                }
                _ => None,
            })
            .collect();
        Self::build(fine, cells)
    }

    /// Pointwise maximum.
    pub fn join(&self, other: &Self) -> Self {
        self.lattice_op(other, true)
    }

    /// Pointwise minimum.
    pub fn meet(&self, other: &Self) -> Self {
        self.lattice_op(other, false)
    }

    pub fn abs(&self) -> Self {
        self.join(&self.neg())
    }

    /// Every value is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.meet(&self.scale(&Rational::zero())) == self.scale(&Rational::zero())
    }

    /// Supremum of `|f|` over the domain.
    pub fn sup_norm(&self) -> Norm {
        let mut cands: Vec<(&RationalFunction, AlgebraicNumber)> = Vec::new();
        for (a, cell) in self.cells.iter().enumerate() {
            let Some(r) = cell else { continue };
            if Grid::is_point_atom(a) {
                cands.push((r, self.grid.point(a).clone()));
                continue;
            }
            if let Some(c) = r.constant_value() {
                cands.push((r, c.into()));
                continue;
            }
            let (lo, hi) = self.grid.span(a);
            for end in [lo, hi] {
                if end.sign_at(r.den()) == 0 {
                    return Norm::Infinite;
                }
                cands.push((r, end.clone()));
            }
            let crit = r.derivative();
            for c in roots_between(crit.num(), lo, hi) {
                cands.push((r, c));
            }
        }
        Norm::Finite(max_abs_value(cands))
    }

    /// `m/(1+m)` with `m = sup_norm(f - g)`, and 1 when `m` is infinite.
    /// Requires the common domain to be dense.
    pub fn natural_metric(&self, other: &Self) -> Result<AlgebraicNumber> {
        let diff = self.sub(other)?;
        let dom = diff.domain();
        if !dom.is_dense() {
            return Err(Error::NotDense(dom.render()));
        }
        Ok(match diff.sup_norm() {
            Norm::Infinite => AlgebraicNumber::one(),
            Norm::Finite(m) => m
                .map_rational_fn(&Polynomial::x(), &Polynomial::from_ints(&[1, 1]))
                .expect("1 + m > 0"),
        })
    }

    /// `f` on its open domain `U`, and 0 on `[0,1] - cl U`.
    pub fn extend_by_zero(&self) -> Result<Self> {
        let u = self.domain();
        u.require_open()?;
        let tilde = u.reg_complement();
        let grid = self.grid.merge(&tilde.grid());
        let table = self.table_on(&grid);
        let mask = tilde.mask_on(&grid);
        let cells = table
            .into_iter()
            .zip(mask)
            .map(|(c, in_tilde)| if in_tilde { Some(RationalFunction::zero()) } else { c })
            .collect();
        Ok(Self::build(grid, cells))
    }

    /// Oscillation at a boundary point of the domain that the function
    /// leaves out: the gap between the one-sided limits, infinite at a pole.
    pub fn oscillation_at(&self, b: &AlgebraicNumber) -> Result<Norm> {
        if self.domain().contains(b) {
            return Err(Error::InteriorPoint(b.render()));
        }
        if !self.domain().closure().contains(b) {
            return Err(Error::NotBoundary(b.render()));
        }
        let grid = self.grid.with_points([b.clone()]);
        let table = self.table_on(&grid);
        let i = grid.locate(b).expect("b in [0,1]");
        let sides: Vec<&RationalFunction> = [i.checked_sub(1), Some(i + 1)]
            .into_iter()
            .flatten()
            .filter_map(|a| table.get(a).and_then(Option::as_ref))
            .collect();
        for r in &sides {
            if b.sign_at(r.den()) == 0 {
                return Ok(Norm::Infinite);
            }
        }
        match sides.as_slice() {
            [l, r] => Ok(Norm::Finite(l.sub(r).eval(b)?.abs())),
            _ => Ok(Norm::Finite(AlgebraicNumber::zero())),
        }
    }

    /// Cellwise derivative. A junction stays in the domain when the one-sided
    /// derivatives present there agree.
    pub fn derivative(&self) -> Self {
        let mut cells: Vec<Option<RationalFunction>> =
            self.cells.iter().map(|c| c.as_ref().map(RationalFunction::derivative)).collect();
        for a in (0..cells.len()).step_by(2) {
            if cells[a].is_none() {
                continue;
            }
            let b = self.grid.point(a);
            let left = if a > 0 { cells[a - 1].clone() } else { None };
            let right = cells.get(a + 1).cloned().flatten();
            cells[a] = match (left, right) {
                (Some(l), Some(r)) => (b.sign_at(&l.cross_difference(&r)) == 0).then_some(l),
                (Some(l), None) => Some(l),
                (None, Some(r)) => Some(r),
                (None, None) => None,
            };
        }
        Self::build(self.grid.clone(), cells)
    }

    pub fn is_locally_constant(&self) -> bool {
        self.cells
            .iter()
            .enumerate()
            .all(|(a, c)| Grid::is_point_atom(a) || c.as_ref().is_none_or(|r| r.constant_value().is_some()))
    }

    pub fn has_finite_range(&self) -> bool {
        self.is_locally_constant()
    }

    /// Distinct values of a locally constant function, or `None`.
    pub fn constant_values(&self) -> Option<Vec<Rational>> {
        if !self.is_locally_constant() {
            return None;
        }
        let mut vals: Vec<Rational> = Vec::new();
        for (a, c) in self.cells.iter().enumerate() {
            let Some(r) = c else { continue };
            let v = if Grid::is_point_atom(a) {
                r.eval(self.grid.point(a)).ok()?.as_rational()?.clone()
            } else {
                r.constant_value()?
            };
            if !vals.contains(&v) {
                vals.push(v);
            }
        }
        vals.sort();
        Some(vals)
    }

    /// Combines functions on sets that meet only where they agree; the
    /// result is re-validated.
    pub fn union_of(parts: &[PiecewiseFunction]) -> Result<Self> {
        let mut grid = Grid::unit();
        for p in parts {
            grid = grid.merge(&p.grid);
        }
        let mut cells: Vec<Option<RationalFunction>> = vec![None; grid.atom_count()];
        for p in parts {
            for (a, c) in p.table_on(&grid).into_iter().enumerate() {
                let Some(r) = c else { continue };
                match &cells[a] {
                    None => cells[a] = Some(r),
                    Some(existing) if existing == &r => {}
                    Some(existing) if Grid::is_point_atom(a) => {
                        if grid.point(a).sign_at(&existing.cross_difference(&r)) != 0 {
                            return Err(Error::OverlappingParts(format!(
                                "conflicting values at {}",
                                grid.point(a)
                            )));
                        }
                    }
                    Some(_) => {
                        let (lo, hi) = grid.span(a);
                        return Err(Error::OverlappingParts(format!("({lo},{hi})")));
                    }
                }
            }
        }
        Self::new(grid, cells)
    }

    /// Textual form `piece(<set>, <expr>); ...`, one piece per cell run.
    pub fn render(&self) -> String {
        let mut out: Vec<String> = Vec::new();
        let n = self.cells.len();
        let mut a = 0;
        while a < n {
            let Some(r) = &self.cells[a] else {
                a += 1;
                continue;
            };
            let start = a;
            let mut end = a;
            while end + 1 < n && self.cells[end + 1].as_ref() == Some(r) {
                end += 1;
            }
            let mask: Vec<bool> = (0..n).map(|i| i >= start && i <= end).collect();
            let set = IntervalSet::from_mask(&self.grid, &mask);
            out.push(format!("piece({}, {})", set.render(), r.render()));
            a = end + 1;
        }
        if out.is_empty() {
            return "piece(empty, 0)".into();
        }
        out.join("; ")
    }
}

impl fmt::Debug for PiecewiseFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for PiecewiseFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
