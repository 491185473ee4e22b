//! Arbitrary-precision computation of the zeros of binomial expansion
//! sections `B_{r,n}(z) = sum_{k=0}^{r} C(n,k) z^k`, the limit curves those
//! zeros accumulate on, and numerical verification of the classical bounds
//! satisfied by the zeros.

pub mod cli;
pub mod complex;
mod erfc;
pub mod error;
pub mod exactpoly;
pub mod geometry;
pub mod real;
pub mod solver;
pub mod verify;

pub use complex::BigComplex;
pub use error::{Error, Result};
