//! Exact computational kernel for graded modules over polynomial rings.
//!
//! Everything here is exact: scalars are arbitrary-precision rationals or
//! residues in a prime field, and no floating point appears anywhere.
//! The crate is `no_std` (alloc only); IO, reporting and the CLI live in
//! the companion `tcm` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cech;
pub mod extint;
pub mod filtration;
pub mod free_module;
pub mod groebner;
pub mod hilbert;
pub mod homological;
pub mod monomial;
pub mod monomial_ideal;
pub mod order;
pub mod poly;
pub mod presentation;
pub mod resolution;
pub mod ring;
pub mod scalar;
pub mod tensor;

pub use extint::ExtendedInt;
pub use monomial::{Monomial, Multidegree};
pub use monomial_ideal::MonomialIdeal;
pub use presentation::ModulePresentation;
pub use ring::{Field, PolyRing};
pub use scalar::Scalar;
