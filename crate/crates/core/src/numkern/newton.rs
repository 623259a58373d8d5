//! Damped Newton iteration for small holomorphic systems.

use rug::Float;

use super::linalg::{solve, vec_norm, DenseMatrix};
use super::BigComplex;
use crate::{Error, Result};

pub type System<'a> = dyn Fn(&[BigComplex]) -> Result<Vec<BigComplex>> + 'a;
pub type Jacobian<'a> = dyn Fn(&[BigComplex]) -> Result<DenseMatrix> + 'a;

pub enum JacobianMode<'a> {
    /// Forward differences with step 2^{-prec/3}·max(1, |x_j|).
    FiniteDifference,
    Analytic(&'a Jacobian<'a>),
}

#[derive(Clone, Debug)]
pub struct NewtonOptions {
    pub max_iter: usize,
    /// Stop once ‖F‖ drops below 2^{-(prec - slack_bits)}.
    pub slack_bits: u32,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        NewtonOptions { max_iter: 100, slack_bits: 96 }
    }
}

#[derive(Clone, Debug)]
pub struct NewtonReport {
    pub x: Vec<BigComplex>,
    pub residual: Float,
    pub iterations: usize,
}

fn fd_jacobian(f: &System<'_>, x: &[BigComplex], fx: &[BigComplex]) -> Result<DenseMatrix> {
    let n = x.len();
    let prec = x[0].prec();
    let mut jac = DenseMatrix::zeros(fx.len(), n, prec);
    for j in 0..n {
        let mag = x[j].abs().to_f64().max(1.0);
        let h = BigComplex::from_real(Float::with_val(prec, mag) >> (prec as i32 / 3));
        let mut xp = x.to_vec();
        xp[j] += &h;
        let fp = f(&xp)?;
        for i in 0..fx.len() {
            jac.set(i, j, &(&fp[i] - &fx[i]) / &h);
        }
    }
    Ok(jac)
}

pub fn newton_solve(f: &System<'_>, mode: JacobianMode<'_>, x0: &[BigComplex]) -> Result<NewtonReport> {
    newton_solve_with(f, mode, x0, &NewtonOptions::default())
}

pub fn newton_solve_with(f: &System<'_>, mode: JacobianMode<'_>, x0: &[BigComplex], opts: &NewtonOptions) -> Result<NewtonReport> {
    if x0.is_empty() {
        return Err(Error::Precondition("empty Newton start".into()));
    }
    let prec = x0[0].prec();
    let stop = Float::with_val(prec, 1) >> (prec as i32 - opts.slack_bits as i32);
    let mut x = x0.to_vec();
    let mut fx = f(&x)?;
    let mut res = vec_norm(&fx);
    for it in 0..opts.max_iter {
        if res < stop {
            return Ok(NewtonReport {
                x,
                residual: res,
                iterations: it,
            });
        }
        let jac = match &mode {
            JacobianMode::FiniteDifference => fd_jacobian(f, &x, &fx)?,
            JacobianMode::Analytic(j) => j(&x)?,
        };
        let neg: Vec<BigComplex> = fx.iter().map(|v| -v).collect();
        let step = solve(&jac, &neg)?;
        let mut lambda = 1.0f64;
        let mut accepted = false;
        for _ in 0..30 {
            let xt: Vec<BigComplex> = x.iter().zip(&step).map(|(a, d)| a + &d.scale_f64(lambda)).collect();
            if let Ok(ft) = f(&xt) {
                let rt = vec_norm(&ft);
                if rt.is_finite() && rt < res {
                    x = xt;
                    fx = ft;
                    res = rt;
                    accepted = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if !accepted {
            if res < Float::with_val(prec, &stop) << 32 {
                // Stalled at the rounding floor, just above the target.
                return Ok(NewtonReport {
                    x,
                    residual: res,
                    iterations: it,
                });
            }
            return Err(Error::NoConvergence {
                iterations: it,
                detail: format!("damping failed, |F| = {:e}", res.to_f64()),
            });
        }
    }
    if res < stop {
        return Ok(NewtonReport {
            x,
            residual: res,
            iterations: opts.max_iter,
        });
    }
    Err(Error::NoConvergence {
        iterations: opts.max_iter,
        detail: format!("|F| = {:e}", res.to_f64()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_root_of_minus_one() {
        let prec = 512;
        let f = |x: &[BigComplex]| Ok(vec![&(&x[0] * &x[0]) + &BigComplex::one(prec)]);
        let r = newton_solve(&f, JacobianMode::FiniteDifference, &[BigComplex::from_f64(prec, 0.5, 0.8)]).unwrap();
        assert!((&r.x[0] - &BigComplex::i(prec)).abs() < 1e-120);
    }

    #[test]
    fn analytic_jacobian() {
        let prec = 256;
        let f = |x: &[BigComplex]| Ok(vec![&(&x[0] * &x[0]) - &BigComplex::from_f64(prec, 2.0, 0.0)]);
        let j = |x: &[BigComplex]| Ok(DenseMatrix::from_rows(vec![vec![x[0].scale_f64(2.0)]]));
        let r = newton_solve(&f, JacobianMode::Analytic(&j), &[BigComplex::from_f64(prec, 1.0, 0.0)]).unwrap();
        assert!((r.x[0].to_c64().re - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn singular_jacobian_reported() {
        let prec = 128;
        let f = |_: &[BigComplex]| Ok(vec![BigComplex::one(prec)]);
        let r = newton_solve(&f, JacobianMode::FiniteDifference, &[BigComplex::zero(prec)]);
        assert!(matches!(r, Err(Error::SingularJacobian)));
    }
}
