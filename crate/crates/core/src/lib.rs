//! Coxeter-combinatorial core for light leaves.
//!
//! Everything here is exact and allocation-only (`no_std` + `alloc`):
//!
//! * [`coxeter`]: integral realizations, group elements as integer matrices,
//!   roots, reflections and the Bruhat order.
//! * [`lightleaves`]: subexpressions, their `U0/U1/D0/D1` symbols, `Tab(y)`,
//!   cell-module ranks and Jucys-Murphy contents.
//! * [`gram`]: signed monomials in roots, the epsilon-product Gram
//!   determinant and its Shapovalov-type factorization.
//! * [`grothendieck`]: Bruhat ideals, valuations, sum-formula right-hand
//!   sides and the dimension map on the Grothendieck group.
//! * [`decomp`]: interval bounds on decomposition numbers.
//! * [`hecke`]: Hecke algebra and the Kazhdan-Lusztig basis.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod coxeter;
pub mod decomp;
mod error;
pub mod gram;
pub mod grothendieck;
pub mod hecke;
pub mod lightleaves;

pub use coxeter::{CoxeterSystem, Element, Root};
pub use error::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;
