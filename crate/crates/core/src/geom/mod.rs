//! Limit curves, regions and measures for the scaled zeros and poles.

pub mod measure;
pub mod region;
pub mod trace;

pub use measure::{contour_csv, discretize_mu, empirical_moments, empirical_moments_big, measure_moments, moment_discrepancy, DiscreteMeasure};
pub use region::{boundary_distance, classify_region, Region};
pub use trace::{c0_f64, eta64, gamma1, real_axis_crossing, step_halving_gap, trace_gamma1, trace_gamma2, trace_upper, TraceOptions};

use num_complex::Complex64;

/// μ_P on γ₁ and μ_Q, its image under s ↦ −s.
pub fn limit_measures(m: usize) -> crate::Result<(DiscreteMeasure, DiscreteMeasure)> {
    let mu_p = discretize_mu(gamma1(), m)?;
    let mu_q = mu_p.negated();
    Ok((mu_p, mu_q))
}

/// One-sided Hausdorff distance sup_{x∈a} dist(x, polyline b).
pub fn directed_hausdorff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .map(|&p| {
            b.windows(2)
                .map(|w| {
                    let ab = w[1] - w[0];
                    let t = (((p - w[0]) * ab.conj()).re / ab.norm_sqr()).clamp(0.0, 1.0);
                    (p - (w[0] + ab * t)).norm()
                })
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}
