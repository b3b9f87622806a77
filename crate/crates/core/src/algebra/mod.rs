//! Multivariate polynomials over the fields of [`crate::field`].

pub mod linalg;
mod monomial;
mod parse;
mod poly;
mod subst;

pub use monomial::{InnerOrder, Monomial, MonomialOrder, MAX_EXPONENT, MAX_VARS};
pub use poly::{MultiPoly, PolyRing};
pub use subst::reduce_mod_prime;
