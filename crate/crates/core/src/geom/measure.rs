//! Discretized limit measures and moment comparisons.

use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt::Write as _;

use super::trace::eta64;
use crate::numkern::BigComplex;
use crate::{Error, Result};

/// Point masses approximating a measure on a curve.
#[derive(Clone, Debug)]
pub struct DiscreteMeasure {
    pub nodes: Vec<Complex64>,
    pub weights: Vec<f64>,
}

impl DiscreteMeasure {
    pub fn mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Image under s ↦ −s.
    pub fn negated(&self) -> DiscreteMeasure {
        DiscreteMeasure {
            nodes: self.nodes.iter().map(|z| -z).collect(),
            weights: self.weights.clone(),
        }
    }

    /// Rows "re,im,weight".
    pub fn to_csv(&self) -> String {
        let mut s = String::from("re,im,weight\n");
        for (z, w) in self.nodes.iter().zip(&self.weights) {
            writeln!(s, "{:.17e},{:.17e},{:.17e}", z.re, z.im, w).unwrap();
        }
        s
    }
}

fn point_at(poly: &[Complex64], cum: &[f64], s: f64) -> Complex64 {
    let k = match cum.binary_search_by(|c| c.partial_cmp(&s).unwrap()) {
        Ok(k) => return poly[k],
        Err(k) => k.clamp(1, poly.len() - 1),
    };
    let t = (s - cum[k - 1]) / (cum[k] - cum[k - 1]);
    poly[k - 1] + (poly[k] - poly[k - 1]) * t
}

fn project(z: Complex64) -> Complex64 {
    let mut z = z;
    for _ in 0..8 {
        let f = eta64(z).re;
        let d = super::trace::eta64_prime(z);
        z -= d.conj() * (f / d.norm_sqr());
    }
    z
}

/// dμ = (1/iπ)·√(s²+1)/s ds on an oriented trajectory from i to −i.
///
/// Breakpoints cluster toward both endpoints; each weight is the exact
/// increment of η/(iπ) between consecutive breakpoints, so the weights
/// telescope to the total mass.
pub fn discretize_mu(contour: &[Complex64], m: usize) -> Result<DiscreteMeasure> {
    let mut cum = vec![0.0];
    for w in contour.windows(2) {
        cum.push(cum.last().unwrap() + (w[1] - w[0]).norm());
    }
    let len = *cum.last().unwrap();
    let at = |s: f64| {
        let z = point_at(contour, &cum, s);
        if s <= 0.0 || s >= len {
            z
        } else {
            project(z)
        }
    };
    let breaks: Vec<Complex64> = (0..=m).map(|k| at(0.5 * len * (1.0 - (PI * k as f64 / m as f64).cos()))).collect();
    let mut nodes = Vec::with_capacity(m);
    let mut weights = Vec::with_capacity(m);
    for k in 0..m {
        let sa = 0.5 * len * (1.0 - (PI * k as f64 / m as f64).cos());
        let sb = 0.5 * len * (1.0 - (PI * (k + 1) as f64 / m as f64).cos());
        let (a, b) = (breaks[k], breaks[k + 1]);
        // Increment of η split as √ part plus log of a ratio to stay on one sheet.
        let ra = (a * a + 1.0).sqrt();
        let rb = (b * b + 1.0).sqrt();
        let d_eta = (rb - ra) + ((b / (1.0 + rb)) / (a / (1.0 + ra))).ln();
        let w = d_eta / Complex64::new(0.0, PI);
        if w.im.abs() > 1e-8 {
            return Err(Error::NonRealWeight(w.im));
        }
        nodes.push(at(0.5 * (sa + sb)));
        weights.push(w.re);
    }
    Ok(DiscreteMeasure { nodes, weights })
}

/// ∫ s^k dm for k = 0..=K.
pub fn measure_moments(m: &DiscreteMeasure, k: usize) -> Vec<Complex64> {
    (0..=k)
        .map(|j| m.nodes.iter().zip(&m.weights).map(|(z, w)| z.powu(j as u32) * w).sum())
        .collect()
}

/// (1/N) Σ r^k for k = 0..=K.
pub fn empirical_moments(roots: &[Complex64], k: usize) -> Vec<Complex64> {
    let n = roots.len() as f64;
    (0..=k).map(|j| roots.iter().map(|z| z.powu(j as u32)).sum::<Complex64>() / n).collect()
}

pub fn empirical_moments_big(roots: &[BigComplex], k: usize) -> Vec<Complex64> {
    empirical_moments(&roots.iter().map(|r| r.to_c64()).collect::<Vec<_>>(), k)
}

pub fn moment_discrepancy(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Rows "re,im" for a polyline.
pub fn contour_csv(points: &[Complex64]) -> String {
    let mut s = String::from("re,im\n");
    for z in points {
        writeln!(s, "{:.17e},{:.17e}", z.re, z.im).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::trace::gamma1;

    #[test]
    fn mu_p_is_a_probability_measure() {
        let mu = discretize_mu(gamma1(), 2000).unwrap();
        assert!((mu.mass() - 1.0).abs() < 1e-6, "{}", mu.mass());
        assert!(mu.weights.iter().all(|&w| w > 0.0));
        let m = measure_moments(&mu, 3);
        assert!(m[1].im.abs() < 1e-8);
    }

    #[test]
    fn zeroth_moment_discrepancy_is_zero() {
        let mu = discretize_mu(gamma1(), 500).unwrap();
        let roots = [Complex64::new(-0.5, 0.2), Complex64::new(-0.5, -0.2)];
        let a = measure_moments(&mu, 4);
        let b = empirical_moments(&roots, 4);
        assert!((a[0] - b[0]).norm() < 1e-9);
        assert!(b[1].im.abs() < 1e-15);
    }
}
