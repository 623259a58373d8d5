//! Rational interpolants of e^z for arbitrary point schemes.

pub mod rh;
pub mod scheme;
pub mod solve;

pub use rh::{assemble_y, orthogonality_defect, RhSolutionY};
pub use scheme::{InterpolationScheme, SchemeFile, SchemePoint};
pub use solve::{hermite_matrix, solve_interpolant, Normalization, RationalInterpolant, ZerosPoles};
