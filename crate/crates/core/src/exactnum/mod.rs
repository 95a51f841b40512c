//! Exact scalars: rationals, polynomials, Sturm root isolation and real
//! algebraic numbers.

pub mod algebraic;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod sturm;

pub use algebraic::{isolate_real_roots, isolate_real_roots_closed, AlgebraicNumber};
pub use poly::Polynomial;
pub use rational::Rational;
