//! The representable topology of `[0, 1]` and its regular-open algebra.

pub mod grid;
pub mod interval_set;

pub use grid::Grid;
pub use interval_set::{IntervalSet, Piece};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersect,
    Difference,
}

pub fn set_arith(a: &IntervalSet, b: &IntervalSet, op: SetOp) -> IntervalSet {
    match op {
        SetOp::Union => a.union(b),
        SetOp::Intersect => a.intersect(b),
        SetOp::Difference => a.difference(b),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegOp {
    Meet,
    Join,
    Complement,
}

/// Boolean operations on regular open sets: meet is intersection,
/// complement is `u~`, join is `(a~ ∩ b~)~`. `b` is ignored for complement.
pub fn regopen_algebra(a: &IntervalSet, b: &IntervalSet, op: RegOp) -> Result<IntervalSet> {
    a.require_regular()?;
    if op != RegOp::Complement {
        b.require_regular()?;
    }
    Ok(match op {
        RegOp::Meet => a.intersect(b),
        RegOp::Join => a.reg_complement().intersect(&b.reg_complement()).reg_complement(),
        RegOp::Complement => a.reg_complement(),
    })
}

pub fn reg_meet(a: &IntervalSet, b: &IntervalSet) -> Result<IntervalSet> {
    regopen_algebra(a, b, RegOp::Meet)
}

pub fn reg_join(a: &IntervalSet, b: &IntervalSet) -> Result<IntervalSet> {
    regopen_algebra(a, b, RegOp::Join)
}

pub fn reg_not(a: &IntervalSet) -> Result<IntervalSet> {
    regopen_algebra(a, a, RegOp::Complement)
}

/// A space is extremally disconnected when every regular open set is closed.
/// Returns a regular open set that is not closed, if the fragment contains one
/// among the candidates.
pub fn extremal_disconnectedness_witness<'a>(
    candidates: impl IntoIterator<Item = &'a IntervalSet>,
) -> Option<IntervalSet> {
    candidates
        .into_iter()
        .find(|u| u.is_regular_open() && !u.is_closed())
        .cloned()
}
