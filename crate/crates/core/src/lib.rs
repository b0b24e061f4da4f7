//! Exact arithmetic for number systems driven by a hold map.
//!
//! A system fixes a digit alphabet (zero plus the `n`-th roots of unity)
//! and a table `hold(x)` giving the digit string of `x + 1`. Everything
//! additive follows from that table alone: [`system::NumberSystem`]
//! carries the digit-level carry arithmetic, [`binding`] realizes systems
//! inside concrete rings (quadratic integer orders, `Z`, or `F_q[X]`),
//! [`quotient`] works in the finite truncations `R_m = R / (X^m)`,
//! [`analysis`] validates candidate systems and reproduces the
//! classification searches, and [`render`] draws the associated tiles.

pub mod analysis;
pub mod binding;
pub mod carry;
pub mod catalog;
pub mod digit;
mod error;
pub mod fq;
pub mod quad;
pub mod quotient;
pub mod render;
pub mod serialize;
pub mod system;

pub use binding::{Element, FqBinding, QuadBinding, SystemBinding};
pub use digit::{Digit, DigitString};
pub use error::{Error, Result};
pub use quad::{OrderKind, OrderSpec, QuadraticInt, Scalar};
pub use system::NumberSystem;

/// Canonical coefficient integer: unbounded.
pub type Coeff = num_bigint::BigInt;

/// Order element over the canonical coefficients.
pub type QuadInt = QuadraticInt<Coeff>;

/// Machine-integer instantiation used by the orbit searches, where every
/// value stays far below the `i64` range.
pub type QuadInt64 = QuadraticInt<i64>;
