//! Exact algebra for cubic threefolds: coefficient fields, polynomials, a
//! Buchberger kernel with zero-dimensional point counting, and the
//! Eckardt-point and triple-line pipelines built on top of them.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod consensus;
pub mod cubic;
pub mod error;
pub mod fano;
pub mod field;
pub mod groebner;
pub mod rng;
pub mod univariate;

pub use error::{Error, Result};
