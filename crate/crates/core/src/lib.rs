//! Exact arithmetic for Chow motives built from a curve.
//!
//! Every motive handled here is a finite direct sum of basis classes
//! `λ^b h¹(C) ⊗ 𝕃^c` with positive integer multiplicities, tagged with the
//! genus of the curve. On top of that representation the crate provides
//!
//! * constructors for the motive of the symmetric powers `C^(n)` and for the
//!   moduli space `M_L` of rank-2 bundles with fixed odd determinant, both in
//!   del Bano's form and in the symmetric-power decomposition ([`formulas`]);
//! * Poincaré and Hodge realizations, the generating-function identity behind
//!   the decomposition, and two classical oracles ([`realization`]);
//! * a small expression language for writing motives down ([`dsl`]).
//!
//! The crate is `no_std` and only needs an allocator.
#![no_std]

extern crate alloc;

pub mod dsl;
mod error;
pub mod formulas;
pub mod motive;
pub mod realization;

pub use error::MotiveError;
pub use motive::{BasisKey, Genus, MotiveClass, TatePolynomial};
pub use realization::{BiPolynomial, IntPolynomial};
