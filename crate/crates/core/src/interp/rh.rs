//! The 2×2 matrix built from (p_n, q_n) and the auxiliary type-(n−1, n+1) pair.

use rug::Float;

use super::scheme::InterpolationScheme;
use super::solve::{solve_interpolant, Normalization, RationalInterpolant};
use crate::numkern::{contour_quadrature, BigComplex, Contour, Polynomial, QuadOptions, QuadResult};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct RhSolutionY {
    /// Pair with P_n(z) = p_n(2nz) monic.
    pub main: RationalInterpolant,
    /// Type-(n−1, n+1) pair with q_{n+1}(2nz) monic.
    pub aux: RationalInterpolant,
    pub n: usize,
    /// Radius of the circle Γ_n separating inside from outside.
    pub gamma_radius: f64,
    p_big: Polynomial,
    q_big: Polynomial,
    p_aux: Polynomial,
    q_aux: Polynomial,
    omega: Polynomial,
}

/// Default Γ_n radius: max(1.5, 2·max|ẑ_j|).
pub fn default_gamma_radius(scheme: &InterpolationScheme) -> f64 {
    let m = scheme.scaled_points().iter().map(|p| p.z.abs_f64()).fold(0.0, f64::max);
    (2.0 * m).max(1.5)
}

pub fn assemble_y(scheme: &InterpolationScheme, prec: u32) -> Result<RhSolutionY> {
    let n = scheme.n()?;
    if n < 1 {
        return Err(Error::Unsupported("the RH matrix needs n >= 1".into()));
    }
    let main = solve_interpolant(scheme, prec)?;
    let lead = main.p_scaled().leading();
    if main.p.degree() != n {
        return Err(Error::DegenerateScheme(format!("deg p = {} < n", main.p.degree())));
    }
    let main = main.rescaled(&lead.recip(), Normalization::RawNullVector);
    let aux = solve_interpolant(&scheme.with_degrees(n - 1, n + 1)?, prec)?;
    // Scaling for the auxiliary pair is 2n as well, so σ^{n+1} is the monic factor.
    let aux_q = aux.q.compose_scale(&BigComplex::from_f64(prec, (2 * n) as f64, 0.0));
    if aux_q.degree() != n + 1 {
        return Err(Error::DegenerateScheme("auxiliary q has degree < n+1".into()));
    }
    let aux = aux.rescaled(&aux_q.leading().recip(), Normalization::QScaledMonic);
    let two_n = BigComplex::from_f64(prec, (2 * n) as f64, 0.0);
    Ok(RhSolutionY {
        p_big: main.p.compose_scale(&two_n),
        q_big: main.q.compose_scale(&two_n),
        p_aux: aux.p.compose_scale(&two_n),
        q_aux: aux.q.compose_scale(&two_n),
        omega: scheme.with_prec(prec).omega_scaled(),
        gamma_radius: default_gamma_radius(scheme),
        main,
        aux,
        n,
    })
}

impl RhSolutionY {
    pub fn is_inside(&self, z: &BigComplex) -> bool {
        z.abs_f64() < self.gamma_radius
    }

    /// Matrix entries [[Y11, Y12], [Y21, Y22]] at z off Γ_n.
    pub fn entries(&self, z: &BigComplex) -> [[BigComplex; 2]; 2] {
        let om = self.omega.eval(z);
        let y11 = self.p_big.eval(z);
        let y21 = self.p_aux.eval(z);
        let (y12, y22) = if self.is_inside(z) {
            let nz = z.scale_f64(self.n as f64);
            let en = nz.exp();
            let em = en.recip();
            // e^{−nz}E(z) = P e^{−2nz} + Q, likewise for the auxiliary row.
            let e2 = &em * &em;
            let y12 = &(&(&y11 * &e2) + &self.q_big.eval(z)) / &om;
            let y22 = &(&(&y21 * &e2) + &self.q_aux.eval(z)) / &om;
            (y12, y22)
        } else {
            (&self.q_big.eval(z) / &om, &self.q_aux.eval(z) / &om)
        };
        [[y11, y12], [y21, y22]]
    }

    pub fn det(&self, z: &BigComplex) -> BigComplex {
        let [[a, b], [c, d]] = self.entries(z);
        &(&a * &d) - &(&b * &c)
    }
}

/// ∮ z^j P_n(z) e^{−2nz} / Ω_n(z) dz over the circle of the given radius.
pub fn orthogonality_defect(r: &RationalInterpolant, j: usize, radius: f64) -> Result<QuadResult> {
    let scheme = r.scheme();
    let n = scheme.n()?;
    if j > n {
        return Err(Error::Precondition(format!("j = {j} exceeds n = {n}")));
    }
    let reach = scheme.scaled_points().iter().map(|p| p.z.abs_f64()).fold(0.0, f64::max);
    if radius <= reach {
        return Err(Error::Precondition(format!(
            "radius {radius} does not enclose the scaled points (max modulus {reach})"
        )));
    }
    let prec = r.prec();
    let pn = r.p_scaled();
    let omega = scheme.omega_scaled();
    let two_n = (2 * n) as f64;
    let f = |z: &BigComplex| -> Result<BigComplex> {
        let w = &(&z.powi(j as u32) * &pn.eval(z)) * &z.scale_f64(-two_n).exp();
        Ok(&w / &omega.eval(z))
    };
    let contour = Contour::circle(&BigComplex::zero(prec), radius, 64, prec);
    let opts = QuadOptions {
        tol: Float::with_val(prec, 1) >> (prec as i32 / 2),
        max_nodes: 512,
    };
    contour_quadrature(&f, &contour, 16, &opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_is_one_pade_three() {
        let prec = 512;
        let y = assemble_y(&InterpolationScheme::pade(3, prec), prec).unwrap();
        for (re, im) in [(2.0, 1.0), (0.1, -0.2), (-0.7, 0.4)] {
            let d = y.det(&BigComplex::from_f64(prec, re, im));
            assert!((&d - &BigComplex::one(prec)).abs() < 1e-100, "{d:?}");
        }
        assert!(assemble_y(&InterpolationScheme::pade(0, prec), prec).is_err());
    }

    #[test]
    fn orthogonality_pade_five() {
        let prec = 512;
        let r = solve_interpolant(&InterpolationScheme::pade(5, prec), prec).unwrap();
        let top = orthogonality_defect(&r, 5, 1.5).unwrap().value.abs();
        assert!(top > 1e-30);
        for j in 0..5 {
            let d = orthogonality_defect(&r, j, 1.5).unwrap().value.abs();
            assert!(d < Float::with_val(prec, &top * 1e-40), "j={j}");
        }
        let circle = InterpolationScheme::circle(5, &Float::with_val(prec, 20), prec);
        let rc = solve_interpolant(&circle, prec).unwrap();
        assert!(orthogonality_defect(&rc, 0, 1.0).is_err());
    }
}
