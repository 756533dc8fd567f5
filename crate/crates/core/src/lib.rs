//! Bounded, deterministic verification and falsification procedures for a
//! family of Fermat-type statements: polynomial splitting over Q, equal sums
//! of like powers, and several structured Diophantine systems.
//!
//! Everything here is exact integer arithmetic. The crate is `no_std` and
//! only needs `alloc`; IO, threads and the command line live in the `flt-lab`
//! companion crate.

#![no_std]

extern crate alloc;

pub mod claims;
pub mod diophantine;
pub mod error;
pub mod exactmath;
pub mod polysplit;
pub mod powersum;

pub use error::{Error, Result};
pub use exactmath::ExactInt;
