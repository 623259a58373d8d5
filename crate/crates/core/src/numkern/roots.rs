//! Simultaneous polynomial root finding (Ehrlich–Aberth).

use rug::Float;

use super::{BigComplex, Polynomial};
use crate::{Error, Result};

const GOLDEN: f64 = 0.618_033_988_749_894_9;
/// Coarse precision for the first sweep before polishing at full precision.
const COARSE_PREC: u32 = 128;
/// Extra bits carried while polishing so clusters resolve below the working-precision floor.
const GUARD_BITS: u32 = 32;

#[derive(Clone, Debug)]
pub struct RootOptions {
    pub max_iter: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions { max_iter: 200 }
    }
}

pub fn poly_roots(p: &Polynomial) -> Result<Vec<BigComplex>> {
    poly_roots_with(p, &RootOptions::default())
}

/// Positive root of |a_d| x^d = Σ_{k<d} |a_k| x^k, returned as its natural log.
fn cauchy_log_radius(p: &Polynomial) -> Option<f64> {
    let d = p.degree();
    let la: Vec<f64> = p.coeffs().iter().map(|c| c.mag_log2() * std::f64::consts::LN_2).collect();
    let lead = la[d];
    let rel: Vec<(usize, f64)> = (0..d).filter(|&k| la[k].is_finite()).map(|k| (k, la[k] - lead)).collect();
    if rel.is_empty() {
        return None;
    }
    // log Σ_k exp(rel_k + (k−d) lx), decreasing in lx; find where it crosses 0.
    let f = |lx: f64| {
        let terms: Vec<f64> = rel.iter().map(|&(k, r)| r + (k as f64 - d as f64) * lx).collect();
        let m = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        m + terms.iter().map(|t| (t - m).exp()).sum::<f64>().ln()
    };
    let mut hi = rel.iter().map(|&(k, r)| r / (d - k) as f64).fold(f64::NEG_INFINITY, f64::max) + 1.0;
    while f(hi) > 0.0 {
        hi += 1.0;
    }
    let mut lo = hi - 1.0;
    while f(lo) < 0.0 {
        lo -= 1.0;
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(hi)
}

fn eval_with_derivative(c: &[BigComplex], z: &BigComplex) -> (BigComplex, BigComplex) {
    let prec = z.prec();
    let mut b = c[c.len() - 1].clone();
    let mut dp = BigComplex::zero(prec);
    for a in c[..c.len() - 1].iter().rev() {
        dp = &(&dp * z) + &b;
        b = &(&b * z) + a;
    }
    (b, dp)
}

fn abs_eval(c: &[BigComplex], r: &Float) -> Float {
    let mut acc = Float::new(r.prec());
    for a in c.iter().rev() {
        acc *= r;
        acc += a.abs();
    }
    acc
}

/// Runs Aberth sweeps at the precision of `z`. Returns true when every
/// approximation met a stopping rule.
fn aberth_stage(coeffs: &[BigComplex], z: &mut [BigComplex], radius: f64, max_iter: usize, prec: u32) -> bool {
    let d = z.len();
    let corr_tol = Float::with_val(prec, radius) >> (prec as i32 - 64);
    let mut done = vec![false; d];
    for _ in 0..max_iter {
        for i in 0..d {
            if done[i] {
                continue;
            }
            let (pv, dpv) = eval_with_derivative(coeffs, &z[i]);
            let scale = abs_eval(coeffs, &z[i].abs()) >> prec as i32;
            if pv.abs() <= scale {
                done[i] = true;
                continue;
            }
            let ratio = &pv / &dpv;
            let mut s = BigComplex::zero(prec);
            for j in 0..d {
                if j != i {
                    s += &(&z[i] - &z[j]).recip();
                }
            }
            let denom = &BigComplex::one(prec) - &(&ratio * &s);
            let delta = &ratio / &denom;
            if !delta.is_finite() {
                continue;
            }
            z[i] -= &delta;
            if delta.abs() < corr_tol {
                done[i] = true;
            }
        }
        if done.iter().all(|&x| x) {
            return true;
        }
    }
    false
}

/// All roots of `p`, repeated roots returned as unseparated clusters.
pub fn poly_roots_with(p: &Polynomial, opts: &RootOptions) -> Result<Vec<BigComplex>> {
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::Precondition("poly_roots needs degree >= 1".into()));
    }
    let prec = p.prec();
    let d = p.degree();
    let Some(lr) = cauchy_log_radius(p) else {
        return Ok(vec![BigComplex::zero(prec); d]);
    };
    let radius = lr.exp();
    let mut stages = Vec::new();
    if prec > COARSE_PREC {
        stages.push(COARSE_PREC);
    }
    stages.push(prec + GUARD_BITS);

    let mut z: Vec<BigComplex> = (0..d)
        .map(|k| {
            let frac = (k as f64 * GOLDEN).fract();
            let theta = std::f64::consts::TAU * (k as f64 + 0.5 * frac) / d as f64 + 0.4;
            BigComplex::from_f64(stages[0], radius * theta.cos(), radius * theta.sin())
        })
        .collect();
    let mut converged = false;
    for &sp in &stages {
        let coeffs: Vec<BigComplex> = p.coeffs().iter().map(|c| c.with_prec(sp)).collect();
        for x in z.iter_mut() {
            *x = x.with_prec(sp);
        }
        converged = aberth_stage(&coeffs, &mut z, radius, opts.max_iter, sp);
    }
    if !converged {
        return Err(Error::NoConvergence {
            iterations: opts.max_iter,
            detail: format!("Aberth, degree {d}"),
        });
    }
    Ok(z.iter().map(|x| x.with_prec(prec)).collect())
}
