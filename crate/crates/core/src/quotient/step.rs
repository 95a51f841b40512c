use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::element::QElement;
use crate::error::{Error, Result};
use crate::exactnum::{AlgebraicNumber, Polynomial, Rational};
use crate::pwfun::{roots_between, Norm, PiecewiseFunction, RationalFunction};
use crate::topology::interval_set::interior_mask;
use crate::topology::{Grid, IntervalSet};

/// A locally constant function with finitely many values on a dense open set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepElement {
    rep: PiecewiseFunction,
}

impl StepElement {
    pub fn new(rep: PiecewiseFunction) -> Result<Self> {
        let dom = rep.domain();
        dom.require_open()?;
        if !dom.is_dense() {
            return Err(Error::NotDense(dom.render()));
        }
        if !rep.is_locally_constant() {
            return Err(Error::InvalidFunction(format!("{} is not locally constant", rep.render())));
        }
        Ok(StepElement { rep })
    }

    pub fn rep(&self) -> &PiecewiseFunction {
        &self.rep
    }

    pub fn values(&self) -> Vec<Rational> {
        self.rep.constant_values().expect("locally constant")
    }

    pub fn to_q(&self) -> QElement {
        QElement::new(&self.rep).expect("dense open domain")
    }
}

/// The approximation together with the open sets `U_e`, keyed by `e`.
#[derive(Clone, Debug)]
pub struct StepTrace {
    pub step: StepElement,
    pub parts: Vec<(Rational, IntervalSet)>,
}

/// `k` with `k/n <= v < (k+1)/n`, and whether `v = k/n`.
fn level(v: &AlgebraicNumber, n: &Rational) -> (BigInt, bool) {
    let scaled = v.map_rational_fn(&Polynomial::new(vec![Rational::zero(), n.clone()]), &Polynomial::one())
        .expect("polynomial map");
    let k = scaled.floor();
    let exact = scaled == AlgebraicNumber::from(Rational::from_integer(k.clone()));
    (k, exact)
}

/// Step function within `1/n` of a bounded `g`: on
/// `U_e = g⁻¹(e, e + 1/n) ∪ int g⁻¹(e)` it takes the value `e`, for `e`
/// ranging over the multiples of `1/n`.
pub fn step_approx(g: &QElement, n: u32) -> Result<StepTrace> {
    if n == 0 {
        return Err(Error::InvalidFunction("n must be positive".into()));
    }
    let m = match g.rep().sup_norm() {
        Norm::Infinite => return Err(Error::Unbounded),
        Norm::Finite(m) => m,
    };
    let nr = Rational::from_integer(n.into());
    let kmax: BigInt = m.ceil() * BigInt::from(n) + 1;
    let f = g.rep();
    let mut extra = Vec::new();
    for a in (1..f.cells().len()).step_by(2) {
        let Some(r) = &f.cells()[a] else { continue };
        if r.constant_value().is_some() {
            continue;
        }
        let (lo, hi) = f.grid().span(a);
        let mut k = -kmax.clone();
        while k <= kmax {
            let e = Rational::new(k.clone(), n.into());
            let level_poly = r.sub(&RationalFunction::constant(e));
            extra.extend(roots_between(level_poly.num(), lo, hi));
            k += 1;
        }
    }
    let grid = f.grid().with_points(extra);
    let table = f.table_on(&grid);
    let mut levels: Vec<Option<(BigInt, bool)>> = Vec::with_capacity(table.len());
    for (a, c) in table.iter().enumerate() {
        levels.push(c.as_ref().map(|r| {
            if Grid::is_point_atom(a) {
                level(&r.eval(grid.point(a)).expect("pole-free"), &nr)
            } else {
                let (lo, hi) = grid.span(a);
                let t = lo.rational_between(hi);
                let v: AlgebraicNumber = r.eval_rational(&t).expect("pole-free").into();
                let (k, exact) = level(&v, &nr);
                (k, exact && r.constant_value().is_some())
            }
        }));
    }
    let exact_mask: Vec<bool> = levels.iter().map(|l| l.as_ref().is_some_and(|(_, e)| *e)).collect();
    let interior = interior_mask(&exact_mask);
    let mut by_level: BTreeMap<BigInt, Vec<bool>> = BTreeMap::new();
    let mut cells: Vec<Option<RationalFunction>> = vec![None; table.len()];
    for (a, l) in levels.iter().enumerate() {
        let Some((k, exact)) = l else { continue };
        if *exact && !interior[a] {
            continue;
        }
        by_level.entry(k.clone()).or_insert_with(|| vec![false; table.len()])[a] = true;
        cells[a] = Some(RationalFunction::constant(Rational::new(k.clone(), n.into())));
    }
    let parts = by_level
        .into_iter()
        .map(|(k, mask)| (Rational::new(k, n.into()), IntervalSet::from_mask(&grid, &mask)))
        .collect();
    let rep = PiecewiseFunction::new(grid, cells)?;
    Ok(StepTrace { step: StepElement::new(rep)?, parts })
}
