//! Finite unions of intervals in `[0, 1]` with algebraic endpoints.

use std::fmt;

use super::grid::Grid;
use crate::error::{Error, Result};
use crate::exactnum::AlgebraicNumber;

/// One maximal interval of an [`IntervalSet`]. A point is `lo == hi` with
/// both ends closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub lo: AlgebraicNumber,
    pub hi: AlgebraicNumber,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Piece {
    pub fn new(lo: AlgebraicNumber, hi: AlgebraicNumber, lo_closed: bool, hi_closed: bool) -> Self {
        Piece { lo, hi, lo_closed, hi_closed }
    }

    pub fn point(x: AlgebraicNumber) -> Self {
        Piece { lo: x.clone(), hi: x, lo_closed: true, hi_closed: true }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    fn render(&self) -> String {
        if self.is_point() {
            return format!("{{{}}}", self.lo);
        }
        format!(
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

/// A subset of `[0, 1]`: sorted, pairwise disjoint, maximal pieces.
///
/// Equality is structural on the normalized form, which is canonical.
#[derive(Clone, PartialEq, Eq)]
pub struct IntervalSet {
    pieces: Vec<Piece>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { pieces: Vec::new() }
    }

    /// The ambient space `[0, 1]`.
    pub fn full() -> Self {
        IntervalSet {
            pieces: vec![Piece::new(AlgebraicNumber::zero(), AlgebraicNumber::one(), true, true)],
        }
    }

    pub fn point(x: AlgebraicNumber) -> Result<Self> {
        Self::from_pieces(vec![Piece::point(x)])
    }

    pub fn interval(lo: AlgebraicNumber, hi: AlgebraicNumber, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        Self::from_pieces(vec![Piece::new(lo, hi, lo_closed, hi_closed)])
    }

    /// Open interval `(lo, hi)` intersected with nothing; endpoints must lie in `[0, 1]`.
    pub fn open(lo: AlgebraicNumber, hi: AlgebraicNumber) -> Result<Self> {
        Self::interval(lo, hi, false, false)
    }

    /// Normalizing constructor: pieces may overlap or touch in any order.
    pub fn from_pieces(pieces: Vec<Piece>) -> Result<Self> {
        let zero = AlgebraicNumber::zero();
        let one = AlgebraicNumber::one();
        for p in &pieces {
            if p.lo < zero || p.hi > one {
                return Err(Error::InvalidFunction(format!("piece {} leaves [0,1]", p.render())));
            }
            if p.lo > p.hi || (p.lo == p.hi && !(p.lo_closed && p.hi_closed)) {
                return Err(Error::InvalidFunction(format!("degenerate piece {}", p.render())));
            }
        }
        let grid = Grid::from_points(pieces.iter().flat_map(|p| [p.lo.clone(), p.hi.clone()]));
        let mut mask = vec![false; grid.atom_count()];
        for p in &pieces {
            mark(&grid, p, &mut mask);
        }
        Ok(Self::from_mask(&grid, &mask))
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn endpoints(&self) -> impl Iterator<Item = &AlgebraicNumber> {
        self.pieces.iter().flat_map(|p| [&p.lo, &p.hi])
    }

    /// The coarsest grid on which this set is a union of atoms.
    pub fn grid(&self) -> Grid {
        Grid::from_points(self.endpoints().cloned())
    }

    /// Membership of each atom of `grid`, which must contain all endpoints.
    pub fn mask_on(&self, grid: &Grid) -> Vec<bool> {
        let mut mask = vec![false; grid.atom_count()];
        for p in &self.pieces {
            mark(grid, p, &mut mask);
        }
        mask
    }

    /// Reassembles maximal pieces from an atom mask.
    pub fn from_mask(grid: &Grid, mask: &[bool]) -> Self {
        let mut pieces = Vec::new();
        let mut start: Option<usize> = None;
        for atom in 0..=mask.len() {
            let on = atom < mask.len() && mask[atom];
            match (on, start) {
                (true, None) => start = Some(atom),
                (false, Some(s)) => {
                    let t = atom - 1;
                    let lo = grid.breaks()[s / 2].clone();
                    let hi = grid.breaks()[t.div_ceil(2)].clone();
                    pieces.push(Piece::new(lo, hi, s % 2 == 0, t % 2 == 0));
                    start = None;
                }
                _ => {}
            }
        }
        IntervalSet { pieces }
    }

    fn combine(&self, other: &Self, f: impl Fn(bool, bool) -> bool) -> Self {
        let grid = self.grid().merge(&other.grid());
        let a = self.mask_on(&grid);
        let b = other.mask_on(&grid);
        let mask: Vec<bool> = a.iter().zip(&b).map(|(&x, &y)| f(x, y)).collect();
        Self::from_mask(&grid, &mask)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && !b)
    }

    /// `[0, 1]` minus this set.
    pub fn complement(&self) -> Self {
        Self::full().difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    pub fn contains(&self, x: &AlgebraicNumber) -> bool {
        self.pieces.iter().any(|p| {
            let above = if p.lo_closed { *x >= p.lo } else { *x > p.lo };
            let below = if p.hi_closed { *x <= p.hi } else { *x < p.hi };
            above && below
        })
    }

    /// Closure in `[0, 1]`.
    pub fn closure(&self) -> Self {
        let grid = self.grid();
        Self::from_mask(&grid, &closure_mask(&self.mask_on(&grid)))
    }

    /// Interior relative to `[0, 1]`; the ambient endpoints 0 and 1 count as
    /// interior when the adjacent open interval belongs to the set.
    pub fn interior(&self) -> Self {
        let grid = self.grid();
        Self::from_mask(&grid, &interior_mask(&self.mask_on(&grid)))
    }

    pub fn is_open(&self) -> bool {
        let zero = AlgebraicNumber::zero();
        let one = AlgebraicNumber::one();
        self.pieces.iter().all(|p| {
            !p.is_point() && (!p.lo_closed || p.lo == zero) && (!p.hi_closed || p.hi == one)
        })
    }

    pub fn is_closed(&self) -> bool {
        self.pieces.iter().all(|p| p.lo_closed && p.hi_closed)
    }

    pub fn is_dense(&self) -> bool {
        self.closure() == Self::full()
    }

    /// The open set `[0, 1] - cl(self)`.
    pub fn reg_complement(&self) -> Self {
        self.closure().complement()
    }

    /// `int cl u`, equivalently the double regular complement.
    pub fn regularize(&self) -> Result<Self> {
        self.require_open()?;
        Ok(self.reg_complement().reg_complement())
    }

    pub fn is_regular_open(&self) -> bool {
        self.is_open() && self.reg_complement().reg_complement() == *self
    }

    pub fn require_open(&self) -> Result<()> {
        if self.is_open() {
            Ok(())
        } else {
            Err(Error::NotOpen(self.render()))
        }
    }

    pub fn require_regular(&self) -> Result<()> {
        if self.is_regular_open() {
            Ok(())
        } else {
            Err(Error::NotRegular(self.render()))
        }
    }

    pub fn render(&self) -> String {
        if self.pieces.is_empty() {
            return "empty".into();
        }
        self.pieces.iter().map(Piece::render).collect::<Vec<_>>().join(" u ")
    }
}

fn mark(grid: &Grid, p: &Piece, mask: &mut [bool]) {
    let i = grid.index_of(&p.lo).expect("endpoint on grid");
    let j = grid.index_of(&p.hi).expect("endpoint on grid");
    let first = 2 * i + usize::from(!p.lo_closed);
    let last = 2 * j - usize::from(!p.hi_closed && j > 0);
    if first <= last {
        for m in &mut mask[first..=last] {
            *m = true;
        }
    }
}

pub(crate) fn closure_mask(mask: &[bool]) -> Vec<bool> {
    (0..mask.len())
        .map(|a| {
            mask[a]
                || (a % 2 == 0 && ((a > 0 && mask[a - 1]) || (a + 1 < mask.len() && mask[a + 1])))
        })
        .collect()
}

pub(crate) fn interior_mask(mask: &[bool]) -> Vec<bool> {
    (0..mask.len())
        .map(|a| {
            mask[a]
                && (a % 2 == 1 || ((a == 0 || mask[a - 1]) && (a + 1 == mask.len() || mask[a + 1])))
        })
        .collect()
}

impl fmt::Debug for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
