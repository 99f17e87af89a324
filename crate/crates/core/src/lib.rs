//! Exact structure-constant engine for finite-dimensional Zinbiel and Leibniz
//! superalgebras.
//!
//! Everything here is pure and allocation-backed only: no IO, no global state.
//! Algebras are carried as dense structure tensors over the rationals, and every
//! check (identities, nilpotency, representations, cocycles, quadratic forms,
//! double extensions) is decided by exact linear algebra.
//!
//! The `zinbiel` companion crate adds the text file formats, JSON reports and
//! the command-line front end.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod envelope;
pub mod exactlin;
pub mod extensions;
pub mod identities;
pub mod representations;
pub mod structure;
pub mod superalgebra;

pub use exactlin::{Matrix, Scalar, Subspace};
pub use identities::{SignedIdentity, VarietyName};
pub use superalgebra::{Element, Parity, SuperAlgebra};
