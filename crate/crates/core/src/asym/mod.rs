//! Asymptotic apparatus: endpoints, the g-function and friends, error model.

pub mod apparatus;
pub mod cut;
pub mod endpoints;
pub mod error_model;
pub mod eta;
pub mod strong;

pub use apparatus::{reduce_mod_2pi_i, GApparatus, PointEval};
pub use cut::{Cut, Side};
pub use endpoints::{first_order_coefficients, solve_endpoints, solve_endpoints_from, EndpointPair, Provenance, ScaledPoints};
pub use error_model::{pade_constant, ErrorModel, ErrorModelSummary, PADE_CONSTANT_REAL};
pub use eta::{c0_root, eta};
pub use strong::{strong_predict, Which};
