//! Exact computation of tropical tritangent classes of smooth tropical
//! (3,3)-curves in the tropical plane product `TP^1 x TP^1`.
//!
//! The crate is `no_std` and only needs an allocator. All arithmetic is exact
//! over the rationals.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod arrangement;
pub mod classcomplex;
pub mod curve11;
pub mod curve33;
pub mod eps;
pub mod geometry;
pub mod intersect;
pub mod lifting;
pub mod plane;
pub mod rat;
pub mod tangency;

pub use rat::Rat;
