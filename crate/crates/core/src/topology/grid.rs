//! A finite partition of `[0, 1]` into points and open intervals.
//!
//! Breakpoints `b_0 = 0 < b_1 < ... < b_k = 1` split the unit interval into
//! atoms: atom `2i` is the point `{b_i}` and atom `2i + 1` is the open
//! interval `(b_i, b_{i+1})`. Every set and every piecewise function in the
//! crate is a union of atoms of some grid.

use crate::exactnum::AlgebraicNumber;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    breaks: Vec<AlgebraicNumber>,
}

impl Grid {
    /// The trivial grid `{0}, (0,1), {1}`.
    pub fn unit() -> Self {
        Grid {
            breaks: vec![AlgebraicNumber::zero(), AlgebraicNumber::one()],
        }
    }

    /// Grid on the given points (clamped to `[0, 1]`, deduplicated) plus 0 and 1.
    pub fn from_points(points: impl IntoIterator<Item = AlgebraicNumber>) -> Self {
        let zero = AlgebraicNumber::zero();
        let one = AlgebraicNumber::one();
        let mut breaks: Vec<AlgebraicNumber> = points
            .into_iter()
            .filter(|p| *p > zero && *p < one)
            .collect();
        breaks.push(zero);
        breaks.push(one);
        breaks.sort();
        breaks.dedup();
        Grid { breaks }
    }

    /// Grid whose breakpoints are those of `self` and `other`.
    pub fn merge(&self, other: &Grid) -> Grid {
        let mut out = Vec::with_capacity(self.breaks.len() + other.breaks.len());
        let (mut i, mut j) = (0, 0);
        while i < self.breaks.len() && j < other.breaks.len() {
            match self.breaks[i].cmp(&other.breaks[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.breaks[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.breaks[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(self.breaks[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.breaks[i..]);
        out.extend_from_slice(&other.breaks[j..]);
        Grid { breaks: out }
    }

    pub fn with_points(&self, points: impl IntoIterator<Item = AlgebraicNumber>) -> Grid {
        self.merge(&Grid::from_points(points))
    }

    pub fn breaks(&self) -> &[AlgebraicNumber] {
        &self.breaks
    }

    pub fn atom_count(&self) -> usize {
        2 * self.breaks.len() - 1
    }

    pub fn is_point_atom(atom: usize) -> bool {
        atom.is_multiple_of(2)
    }

    /// The breakpoint of a point atom.
    pub fn point(&self, atom: usize) -> &AlgebraicNumber {
        debug_assert!(Self::is_point_atom(atom));
        &self.breaks[atom / 2]
    }

    /// Endpoints of an interval atom.
    pub fn span(&self, atom: usize) -> (&AlgebraicNumber, &AlgebraicNumber) {
        debug_assert!(!Self::is_point_atom(atom));
        (&self.breaks[atom / 2], &self.breaks[atom / 2 + 1])
    }

    /// Index of `x` among the breakpoints, if it is one.
    pub fn index_of(&self, x: &AlgebraicNumber) -> Option<usize> {
        self.breaks.binary_search(x).ok()
    }

    /// The atom containing `x`, or `None` outside `[0, 1]`.
    pub fn locate(&self, x: &AlgebraicNumber) -> Option<usize> {
        match self.breaks.binary_search(x) {
            Ok(i) => Some(2 * i),
            Err(0) => None,
            Err(i) if i == self.breaks.len() => None,
            Err(i) => Some(2 * i - 1),
        }
    }

    /// Remaps a per-atom table from `self` onto the finer grid `fine`, which
    /// must contain every breakpoint of `self`.
    pub fn refine_table<T: Clone>(&self, table: &[T], fine: &Grid) -> Vec<T> {
        debug_assert_eq!(table.len(), self.atom_count());
        let mut out = Vec::with_capacity(fine.atom_count());
        let mut coarse = 0; // index into self.breaks
        for (i, b) in fine.breaks.iter().enumerate() {
            if coarse < self.breaks.len() && &self.breaks[coarse] == b {
                out.push(table[2 * coarse].clone());
                coarse += 1;
            } else {
                // strictly inside the coarse interval (b_{coarse-1}, b_coarse)
                out.push(table[2 * coarse - 1].clone());
            }
            if i + 1 < fine.breaks.len() {
                // the open interval after b lies inside the coarse atom after b
                out.push(table[2 * coarse - 1].clone());
            }
        }
        out
    }

    /// Drops breakpoint `i` (not 0 or 1), fusing atoms `2i-1, 2i, 2i+1`.
    pub fn remove_break(&mut self, i: usize) {
        debug_assert!(i > 0 && i + 1 < self.breaks.len());
        self.breaks.remove(i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;

    fn a(n: i64, d: i64) -> AlgebraicNumber {
        rat(n, d).into()
    }

    #[test]
    fn atoms_and_location() {
        let g = Grid::from_points([a(1, 2), a(1, 4), a(1, 2)]);
        assert_eq!(g.breaks().len(), 4);
        assert_eq!(g.atom_count(), 7);
        assert_eq!(g.locate(&a(1, 4)), Some(2));
        assert_eq!(g.locate(&a(1, 3)), Some(3));
        assert_eq!(g.locate(&a(0, 1)), Some(0));
        assert_eq!(g.locate(&a(1, 1)), Some(6));
        assert_eq!(g.locate(&a(2, 1)), None);
    }

    #[test]
    fn refine_table_copies_parent_atoms() {
        let g = Grid::from_points([a(1, 2)]);
        let table: Vec<usize> = (0..g.atom_count()).collect();
        let fine = g.with_points([a(1, 4), a(3, 4)]);
        let t = g.refine_table(&table, &fine);
        // 0,(0,1/4),1/4,(1/4,1/2),1/2,(1/2,3/4),3/4,(3/4,1),1
        assert_eq!(t, vec![0, 1, 1, 1, 2, 3, 3, 3, 4]);
    }
}
