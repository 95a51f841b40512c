//! Exact workbench for rings of quotients of function rings, regular-open
//! Boolean algebras and Stone duality for finite rings.

pub mod error;
pub mod exactnum;
pub mod exec;
pub mod finalg;
pub mod limits;
pub mod parse;
pub mod pwfun;
pub mod quotient;
pub mod topology;

pub use error::{Error, Result};
