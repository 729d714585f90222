//! Rational points on split hyperelliptic curves from monochromatic
//! combinatorial lines, and certified rank growth for full-2-torsion
//! elliptic curves over towers of quadratic fields.
//!
//! The crate is organized by capability:
//!
//! - [`field`]: exact arithmetic over `F_p`, `Q` and `Q_p`, Legendre symbols,
//!   modular and p-adic square roots, square classes.
//! - [`hales_jewett`]: line templates, monochromatic line search, line-free
//!   colorings and exact Hales-Jewett numbers.
//! - [`hyperelliptic`]: the square-class coloring of `[1, 2g+2]^N`, point
//!   certificates, enumeration and brute-force oracles.
//! - [`quadratic_rank`]: steering primes, quadratic points, torsion bounds
//!   from reductions, and independent families.
//! - [`cli`]: the command-line front end used by the `hj-field` binary.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod budget;
pub mod cli;
pub mod error;
pub mod field;
pub mod hales_jewett;
pub mod hyperelliptic;
pub mod quadratic_rank;

pub use budget::Budget;
pub use error::{Error, Result};
pub use field::{FieldTag, Rational};
