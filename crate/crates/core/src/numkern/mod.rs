//! Precision-parameterized numerical kernels.

pub mod complex;
pub mod linalg;
pub mod newton;
pub mod poly;
pub mod quad;
pub mod roots;

pub use complex::{pi, BigComplex};
pub use linalg::{null_vector, solve, DenseMatrix, NullVector};
pub use newton::{newton_solve, newton_solve_with, JacobianMode, NewtonOptions, NewtonReport};
pub use poly::Polynomial;
pub use quad::{contour_quadrature, gauss_legendre, integrate_segment, Contour, QuadOptions, QuadResult};
pub use roots::{poly_roots, poly_roots_with, RootOptions};

/// Default working precision in bits.
pub const DEFAULT_PRECISION: u32 = 1024;
