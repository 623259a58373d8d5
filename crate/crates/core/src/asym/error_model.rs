//! Leading-order model of the interpolation error and the constant c_n.

use rug::Float;
use serde::Serialize;

use super::apparatus::{reduce_mod_2pi_i, GApparatus};
use crate::interp::{InterpolationScheme, RationalInterpolant};
use crate::numkern::{pi, BigComplex, Polynomial};
use crate::{Error, Result};

/// Real part of the reference value −2 + log(−4) of 2g(0) + 2ℓ.
pub const PADE_CONSTANT_REAL: f64 = -0.613_705_638_880_109_4;

#[derive(Clone, Debug)]
pub struct ErrorModel {
    pub n: usize,
    /// 2g(0) + 2ℓ.
    pub combo: BigComplex,
    /// combo − (−2 + log 4 + iπ), reduced mod 2πi.
    pub delta: BigComplex,
    pub c_n: BigComplex,
    omega: Polynomial,
    prec: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorModelSummary {
    pub n: usize,
    pub a: [f64; 2],
    pub b: [f64; 2],
    pub g0: [f64; 2],
    pub two_ell: [f64; 2],
    pub delta: [f64; 2],
    pub c_n: [f64; 2],
}

/// −2 + log 4 + iπ.
pub fn pade_constant(prec: u32) -> BigComplex {
    let re = Float::with_val(prec, 4).ln() - 2u32;
    BigComplex::from_parts(re, pi(prec))
}

fn pair(z: &BigComplex) -> [f64; 2] {
    let c = z.to_c64();
    [c.re, c.im]
}

impl ErrorModel {
    pub fn new(scheme: &InterpolationScheme, prec: u32) -> Result<Self> {
        let app = GApparatus::new(scheme, prec)?;
        Self::from_apparatus(scheme, &app)
    }

    pub fn from_apparatus(scheme: &InterpolationScheme, app: &GApparatus) -> Result<Self> {
        if !scheme.is_diagonal() {
            return Err(Error::Precondition("error model needs a diagonal scheme".into()));
        }
        let prec = app.prec();
        let n = app.n();
        let combo = app.two_g0_plus_two_ell()?;
        let delta = reduce_mod_2pi_i(&(&combo - &pade_constant(prec)));
        let c_n = delta.scale_f64(n as f64).div_int(-(2 * n as i64 + 1)).exp();
        Ok(ErrorModel {
            n,
            combo,
            delta,
            c_n,
            omega: scheme.with_prec(prec).omega(),
            prec,
        })
    }

    /// M(z) = ½ ω(z) (2n)^{−(2n+1)} e^z e^{−n(2g(0)+2ℓ)}.
    pub fn model(&self, z: &BigComplex) -> BigComplex {
        let p = self.prec;
        let n = self.n;
        let two_n = Float::with_val(p, 2 * n);
        let k = Float::with_val(p, two_n.ln() * (2 * n + 1) as u32);
        let expo = &(z - &self.combo.scale_f64(n as f64)) - &BigComplex::from_real(k);
        (&self.omega.eval(&z.with_prec(p)) * &expo.exp()).scale_f64(0.5)
    }

    /// e^z + r(z) with r = p/q.
    pub fn actual_error(r: &RationalInterpolant, z: &BigComplex) -> BigComplex {
        let h = z.scale_f64(0.5).exp();
        &(&r.remainder(z) * &h) / &r.q.eval(z)
    }

    pub fn summary(&self, app: &GApparatus) -> Result<ErrorModelSummary> {
        let g0 = app.g(&BigComplex::zero(self.prec))?;
        Ok(ErrorModelSummary {
            n: self.n,
            a: pair(app.a()),
            b: pair(app.b()),
            g0: pair(&g0),
            two_ell: pair(app.two_ell()),
            delta: pair(&self.delta),
            c_n: pair(&self.c_n),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pade_constant_matches_value() {
        let c = pade_constant(128).to_c64();
        assert!((c.re - PADE_CONSTANT_REAL).abs() < 1e-15);
        assert!((c.im - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn pade_c_n_is_one() {
        let prec = 256;
        for n in [3, 7] {
            let m = ErrorModel::new(&InterpolationScheme::pade(n, prec), prec).unwrap();
            assert!(m.delta.abs_f64() < 1e-60);
            assert!((&m.c_n - &BigComplex::one(prec)).abs_f64() < 1e-60);
        }
    }

    #[test]
    fn pade_ten_error_ratio_at_one() {
        let prec = 512;
        let s = InterpolationScheme::pade(10, prec);
        let m = ErrorModel::new(&s, prec).unwrap();
        let r = crate::interp::solve_interpolant(&s, prec).unwrap();
        let z = BigComplex::from_f64(prec, 1.0, 0.0);
        let ratio = &ErrorModel::actual_error(&r, &z) / &m.model(&z);
        assert!((&ratio - &BigComplex::one(prec)).abs_f64() < 0.5);
    }

    #[test]
    fn rejects_off_diagonal() {
        let prec = 128;
        let s = InterpolationScheme::pade(3, prec).with_degrees(2, 4).unwrap();
        assert!(ErrorModel::new(&s, prec).is_err());
    }
}
