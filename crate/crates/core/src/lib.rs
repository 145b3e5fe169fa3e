//! Exact log canonical thresholds and multiplicity sequences of monomial
//! ideals, together with the inequality machinery that compares them.
//!
//! Everything here is pure computation over exact integers and rationals
//! (the numeric integrability probe is the one floating-point exception).
//! The crate is `no_std` and only needs `alloc`; file formats and the
//! command-line driver live in the `lct-tools` crate.

#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;

pub mod bounds;
pub mod error;
pub mod groebner;
pub mod lattice;
pub mod lp;
pub mod multiplicities;
pub mod rational;
pub mod thresholds;

pub use error::{Error, Result};
pub use lattice::{ExponentVector, MonomialIdeal, RationalPoint};
pub use rational::{ExtRational, Rational};
