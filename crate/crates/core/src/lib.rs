//! Graded annihilators and special submodules of x-divisible right modules
//! over the Frobenius skew polynomial ring R[x,f].
//!
//! The crate is layered bottom-up:
//!
//! * [`field`], [`ring`], [`poly`]: exact arithmetic in F_p[θ₁..θₙ].
//! * [`groebner`]: reduced Gröbner bases and ideal operations.
//! * [`skew`]: the twisted ring R[x,f] and graded two-sided ideals.
//! * [`module`]: x-divisible right modules, Frobenius roots and special
//!   submodules.
//! * [`lab`]: graded annihilators, special ideals, lattices and the
//!   structural checks built on them.
//! * [`suite`]: the built-in verification suite.

pub mod error;
pub mod field;
pub mod groebner;
pub mod lab;
pub mod module;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod skew;
pub mod suite;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use groebner::{Containment, Ideal, IdealOp};
pub use parse::parse_polynomial;
pub use poly::{poly_arith, ArithOp, Polynomial};
pub use ring::{monomial_compare, Budget, Monomial, MonomialOrder, Ring, RingSpec};
