//! Endpoints a, b of the cut, from h(a) = h(b) = 0.

use num_complex::Complex64;
use rug::Float;
use serde::Serialize;

use super::cut::{Cut, Side};
use crate::interp::InterpolationScheme;
use crate::numkern::{newton_solve, BigComplex, JacobianMode};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    NewtonSolved,
    PadeExact,
}

#[derive(Clone, Debug)]
pub struct EndpointPair {
    pub a: BigComplex,
    pub b: BigComplex,
    pub provenance: Provenance,
    pub residual_a: Float,
    pub residual_b: Float,
}

/// Scaled points ẑ_j for j = 1..2n: all of them except one copy of the
/// canonical ẑ₀ (least modulus, ties broken by real then imaginary part).
#[derive(Clone, Debug)]
pub struct ScaledPoints {
    pub n: usize,
    pub z0: BigComplex,
    /// Distinct locations with their counts among ẑ_1..ẑ_2n.
    pub rest: Vec<(BigComplex, usize)>,
}

impl ScaledPoints {
    pub fn from_scheme(scheme: &InterpolationScheme) -> Result<Self> {
        let n = scheme.n()?;
        if n == 0 {
            return Err(Error::Unsupported("asymptotic apparatus needs n >= 1".into()));
        }
        let pts = scheme.scaled_points();
        let key = |z: &BigComplex| {
            let c = z.to_c64();
            (z.abs(), c.re, c.im)
        };
        let k0 = (0..pts.len())
            .min_by(|&i, &j| {
                let (a, b) = (key(&pts[i].z), key(&pts[j].z));
                a.0.partial_cmp(&b.0).unwrap().then(a.1.total_cmp(&b.1)).then(a.2.total_cmp(&b.2))
            })
            .expect("nonempty scheme");
        let z0 = pts[k0].z.clone();
        let rest = pts
            .iter()
            .enumerate()
            .filter_map(|(i, p)| {
                let m = if i == k0 { p.mult - 1 } else { p.mult };
                (m > 0).then(|| (p.z.clone(), m))
            })
            .collect();
        Ok(ScaledPoints { n, z0, rest })
    }

    pub fn max_modulus(&self) -> f64 {
        self.rest.iter().map(|(z, _)| z.abs_f64()).fold(self.z0.abs_f64(), f64::max)
    }
}

/// h(z) = a + b − 2z + (1/n) Σ R(ẑ_j)/(ẑ_j − z).
pub fn h_value(cut: &Cut, pts: &ScaledPoints, r_hat: &[BigComplex], z: &BigComplex) -> Result<BigComplex> {
    let p = z.prec();
    let mut s = BigComplex::zero(p);
    for ((zj, m), rj) in pts.rest.iter().zip(r_hat) {
        let d = zj - z;
        if d.is_zero() {
            return Err(Error::PoleHit);
        }
        s += &(rj / &d).scale_f64(*m as f64);
    }
    let base = &(&cut.a + &cut.b) - &z.scale_f64(2.0);
    Ok(&base + &s.div_int(pts.n as i64))
}

fn r_at_points(cut: &Cut, pts: &ScaledPoints) -> Result<Vec<BigComplex>> {
    pts.rest.iter().map(|(z, _)| cut.r(z, Side::Auto)).collect()
}

/// (h(a), h(b)) for a candidate pair.
pub fn endpoint_residuals(pts: &ScaledPoints, a: &BigComplex, b: &BigComplex) -> Result<(BigComplex, BigComplex)> {
    let cut = Cut::new(a, b);
    let r_hat = r_at_points(&cut, pts)?;
    Ok((h_value(&cut, pts, &r_hat, a)?, h_value(&cut, pts, &r_hat, b)?))
}

pub fn solve_endpoints(scheme: &InterpolationScheme, prec: u32) -> Result<EndpointPair> {
    solve_endpoints_from(scheme, prec, &BigComplex::i(prec), &-BigComplex::i(prec))
}

/// Newton on (h(a), h(b)) = 0 starting from (a0, b0).
pub fn solve_endpoints_from(scheme: &InterpolationScheme, prec: u32, a0: &BigComplex, b0: &BigComplex) -> Result<EndpointPair> {
    let scheme = scheme.with_prec(prec);
    let pts = ScaledPoints::from_scheme(&scheme)?;
    let t = scheme.t().to_f64();
    if t >= 0.5 {
        return Err(Error::Precondition(format!("t = rho/n = {t} is outside the validity range t < 0.5")));
    }
    let (a0, b0) = (a0.with_prec(prec), b0.with_prec(prec));
    let pade = scheme.rho().is_zero() && a0 == BigComplex::i(prec) && b0 == -BigComplex::i(prec);
    let (a, b, provenance) = if pade {
        (a0, b0, Provenance::PadeExact)
    } else {
        let f = |x: &[BigComplex]| {
            let (ha, hb) = endpoint_residuals(&pts, &x[0], &x[1])?;
            Ok(vec![ha, hb])
        };
        let rep = newton_solve(&f, JacobianMode::FiniteDifference, &[a0, b0]).map_err(|e| match e {
            Error::NoConvergence { iterations, detail } => Error::NoConvergence {
                iterations,
                detail: format!("{detail}; t = {t}"),
            },
            other => other,
        })?;
        (rep.x[0].clone(), rep.x[1].clone(), Provenance::NewtonSolved)
    };
    let (ha, hb) = endpoint_residuals(&pts, &a, &b)?;
    Ok(EndpointPair {
        residual_a: ha.abs(),
        residual_b: hb.abs(),
        a,
        b,
        provenance,
    })
}

/// First-order coefficients (α₁, β₁) with a ≈ i(1 + α₁t), b ≈ −i(1 + β₁t).
///
/// α₁ = −(i/2n) Σ ž_j; β₁ = +(i/2n) Σ ž_j, from linearizing the endpoint
/// equations about (i, −i). The sums run over ž_1..ž_2n.
pub fn first_order_coefficients(scheme: &InterpolationScheme) -> Result<(Complex64, Complex64)> {
    let pts = ScaledPoints::from_scheme(scheme)?;
    let n = pts.n as f64;
    let t = scheme.t().to_f64();
    if t == 0.0 {
        return Ok((Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)));
    }
    // ž = ẑ/t.
    let sum: Complex64 = pts.rest.iter().map(|(z, m)| z.to_c64() * *m as f64).sum::<Complex64>() / t;
    let i = Complex64::i();
    Ok((-i * sum / (2.0 * n), i * sum / (2.0 * n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pade_endpoints_exact() {
        let prec = 512;
        let e = solve_endpoints(&InterpolationScheme::pade(5, prec), prec).unwrap();
        assert_eq!(e.provenance, Provenance::PadeExact);
        assert!(e.residual_a < 1e-150 && e.residual_b < 1e-150);
    }

    #[test]
    fn pade_from_perturbed_start() {
        let prec = 256;
        let a0 = BigComplex::from_f64(prec, 0.0, 1.01);
        let b0 = BigComplex::from_f64(prec, 0.0, -0.99);
        let e = solve_endpoints_from(&InterpolationScheme::pade(3, prec), prec, &a0, &b0).unwrap();
        assert_eq!(e.provenance, Provenance::NewtonSolved);
        assert!((&e.a - &BigComplex::i(prec)).abs() < 1e-45);
        assert!((&e.b + &BigComplex::i(prec)).abs() < 1e-45);
    }

    #[test]
    fn translation_covariance() {
        // All points at ξ: the Padé pair shifted by ξ/(2n).
        let prec = 256;
        let n = 10;
        let xi = BigComplex::from_f64(prec, 1.5, -0.5);
        let s = InterpolationScheme::build(vec![(xi.clone(), 2 * n + 1)], n, n, prec).unwrap();
        let e = solve_endpoints(&s, prec).unwrap();
        let shift = xi.div_int(2 * n as i64);
        assert!((&e.a - &(&BigComplex::i(prec) + &shift)).abs() < 1e-50);
        assert!((&e.b - &(&shift - &BigComplex::i(prec))).abs() < 1e-50);
    }

    #[test]
    fn first_order_deviation_is_quadratic() {
        let prec = 256;
        let n = 10;
        let base = [
            0.0, 0.3, -0.7, 1.0, 0.45, -0.2, 0.9, -1.0, 0.1, 0.6, -0.5, 0.25, 0.8, -0.35, 0.05, -0.9, 0.7, -0.1, 0.4, -0.65, 0.15,
        ];
        let dev = |scale: f64| {
            let pts = base.iter().map(|&x| (BigComplex::from_f64(prec, x * scale, 0.0), 1)).collect();
            let s = InterpolationScheme::build(pts, n, n, prec).unwrap();
            let e = solve_endpoints(&s, prec).unwrap();
            let (alpha, beta) = first_order_coefficients(&s).unwrap();
            let t = s.t().to_f64();
            let i = Complex64::i();
            let da = (e.a.to_c64() - i * (1.0 + alpha * t)).norm();
            let db = (e.b.to_c64() + i * (1.0 + beta * t)).norm();
            da.max(db)
        };
        let (d1, d2) = (dev(2.0), dev(1.0));
        let ratio = d1 / d2;
        assert!((3.0..5.0).contains(&ratio), "{d1:e} {d2:e} {ratio}");
    }
}
