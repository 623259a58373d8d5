//! Level-curve continuation for Re η(z) = 0 in double precision.

use num_complex::Complex64;
use once_cell::sync::Lazy;
use std::f64::consts::PI;

use crate::{Error, Result};

/// η(z) = √(z²+1) + log(z/(1+√(z²+1))), principal branches.
pub fn eta64(z: Complex64) -> Complex64 {
    let r = (z * z + 1.0).sqrt();
    r + (z / (1.0 + r)).ln()
}

/// η′(z) = √(z²+1)/z with the same square-root branch as [`eta64`].
pub fn eta64_prime(z: Complex64) -> Complex64 {
    (z * z + 1.0).sqrt() / z
}

/// Positive real root of η, by Newton in double precision.
pub fn c0_f64() -> f64 {
    let mut x = 0.5f64;
    for _ in 0..60 {
        let r = (x * x + 1.0).sqrt();
        let f = r + (x / (1.0 + r)).ln();
        let dx = f / (r / x);
        x -= dx;
        if dx.abs() < 1e-16 {
            break;
        }
    }
    x
}

#[derive(Clone, Debug)]
pub struct TraceOptions {
    pub step: f64,
    pub tol: f64,
}

impl Default for TraceOptions {
    fn default() -> Self {
        TraceOptions { step: 1e-3, tol: 1e-12 }
    }
}

/// Pulls z back onto Re η = 0 along the gradient direction.
fn correct(z: Complex64, tol: f64) -> Result<Complex64> {
    let mut z = z;
    for _ in 0..20 {
        let f = eta64(z).re;
        if f.abs() <= 0.1 * tol {
            return Ok(z);
        }
        let d = eta64_prime(z);
        z -= d.conj() * (f / d.norm_sqr());
    }
    let f = eta64(z).re.abs();
    if f > 10.0 * tol {
        return Err(Error::BranchConfusion(f));
    }
    Ok(z)
}

fn tangent(z: Complex64, prev: Complex64) -> Complex64 {
    let d = eta64_prime(z);
    let t = Complex64::i() * d.conj() / d.norm();
    if (t * prev.conj()).re < 0.0 {
        -t
    } else {
        t
    }
}

/// Upper half of γ₁: from i down to the real-axis crossing −c₀, both included.
pub fn trace_upper(opts: &TraceOptions) -> Result<Vec<Complex64>> {
    let i = Complex64::i();
    let c0 = c0_f64();
    let dir0 = Complex64::from_polar(1.0, 7.0 * PI / 6.0);
    let mut z = correct(i + dir0 * 1e-4, opts.tol)?;
    let mut pts = vec![i, z];
    let mut dir = dir0;
    let mut h = opts.step;
    let max_steps = (20.0 / opts.step) as usize + 1000;
    for _ in 0..max_steps {
        let t = tangent(z, dir);
        let zp = z + t * (0.9 * h);
        if zp.im <= 0.0 || (z - Complex64::new(-c0, 0.0)).norm() <= opts.step {
            pts.push(Complex64::new(-c0, 0.0));
            return Ok(pts);
        }
        let zn = correct(zp, opts.tol)?;
        if (zn - z).norm() > opts.step {
            h *= 0.5;
            if h < opts.step * 1e-6 {
                return Err(Error::TraceStalled(format!("{z}")));
            }
            continue;
        }
        h = opts.step;
        dir = zn - z;
        z = zn;
        pts.push(z);
    }
    Err(Error::TraceStalled(format!("{z}")))
}

/// γ₁ from i to −i through the left half-plane, symmetric under conjugation.
pub fn trace_gamma1(opts: &TraceOptions) -> Result<Vec<Complex64>> {
    let upper = trace_upper(opts)?;
    let mut out = upper.clone();
    out.extend(upper.iter().rev().skip(1).map(|z| z.conj()));
    Ok(out)
}

/// γ₂ = −conj(γ₁), from i to −i through the right half-plane.
pub fn trace_gamma2(opts: &TraceOptions) -> Result<Vec<Complex64>> {
    Ok(trace_gamma1(opts)?.into_iter().map(|z| -z.conj()).collect())
}

/// Default-resolution γ₁, traced once.
pub fn gamma1() -> &'static [Complex64] {
    static G: Lazy<Vec<Complex64>> = Lazy::new(|| trace_gamma1(&TraceOptions::default()).expect("default trace succeeds"));
    &G
}

/// Real part where the traced upper arc meets the real axis, extrapolated
/// linearly in Im z from the last two vertices before the snapped endpoint.
pub fn real_axis_crossing(upper: &[Complex64]) -> Option<f64> {
    let k = upper.iter().position(|z| z.im <= 0.0)?;
    if k < 2 {
        return None;
    }
    let (a, b) = (upper[k - 2], upper[k - 1]);
    if a.im == b.im {
        return Some(b.re);
    }
    Some(b.re + (a.re - b.re) * (0.0 - b.im) / (a.im - b.im))
}

/// Worst horizontal gap between `coarse` vertices and the cubic Hermite
/// interpolant of `fine`, both parametrized by Im z (upper halves).
pub fn step_halving_gap(coarse: &[Complex64], fine: &[Complex64]) -> f64 {
    let slope = |z: Complex64| {
        let d = eta64_prime(z);
        let t = Complex64::i() * d.conj();
        t.re / t.im
    };
    let mut worst = 0.0f64;
    // Skip the branch point where the slope is singular.
    for v in coarse.iter().skip(1) {
        if v.im <= 0.0 {
            continue;
        }
        let Some(k) = fine.windows(2).position(|w| w[0].im >= v.im && w[1].im <= v.im) else {
            continue;
        };
        let (a, b) = (fine[k], fine[k + 1]);
        let x = if k == 0 || b.im == 0.0 {
            let s = (v.im - a.im) / (b.im - a.im);
            a.re + s * (b.re - a.re)
        } else {
            let hy = b.im - a.im;
            let s = (v.im - a.im) / hy;
            let (h00, h10, h01, h11) = (
                2.0 * s.powi(3) - 3.0 * s * s + 1.0,
                s.powi(3) - 2.0 * s * s + s,
                -2.0 * s.powi(3) + 3.0 * s * s,
                s.powi(3) - s * s,
            );
            h00 * a.re + h10 * hy * slope(a) + h01 * b.re + h11 * hy * slope(b)
        };
        worst = worst.max((x - v.re).abs());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_values() {
        let v = eta64(Complex64::i());
        assert!((v - Complex64::new(0.0, PI / 2.0)).norm() < 1e-15);
        assert!((c0_f64() - 0.66274).abs() < 1e-5);
        assert!(eta64(Complex64::new(-c0_f64(), 0.0)).re.abs() < 1e-14);
    }

    #[test]
    fn gamma1_shape() {
        let g = gamma1();
        assert_eq!(g[0], Complex64::i());
        assert_eq!(*g.last().unwrap(), -Complex64::i());
        assert!(g[1..g.len() - 1].iter().all(|z| z.re < 0.0));
        for w in g.windows(2) {
            assert!((w[1] - w[0]).norm() <= 1e-3 + 1e-12);
        }
        for z in &g[1..g.len() - 1] {
            assert!(eta64(*z).re.abs() <= 1e-12);
        }
        let cross = g.iter().find(|z| z.im == 0.0).unwrap();
        assert!((cross.re + 0.66274).abs() < 1e-5);
    }
}
