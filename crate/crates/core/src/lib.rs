//! Rational interpolation of the exponential function at extended precision,
//! with the large-degree asymptotic apparatus used to check it.

pub mod asym;
pub mod cli;
pub mod error;
pub mod geom;
pub mod interp;
pub mod numkern;

pub use error::{Error, Result};
pub use numkern::{BigComplex, Polynomial, DEFAULT_PRECISION};
