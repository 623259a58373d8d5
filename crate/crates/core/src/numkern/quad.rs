//! Gauss–Legendre rules at arbitrary precision and composite contour quadrature.

use once_cell::sync::Lazy;
use rug::Float;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::BigComplex;
use crate::{Error, Result};

/// Nodes on [−1, 1] and matching weights.
#[derive(Debug)]
pub struct GaussRule {
    pub nodes: Vec<Float>,
    pub weights: Vec<Float>,
}

type RuleCache = HashMap<(usize, u32), Arc<GaussRule>>;

static RULES: Lazy<Mutex<RuleCache>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre(n: usize, x: &Float) -> (Float, Float) {
    let prec = x.prec();
    let mut p0 = Float::with_val(prec, 1);
    let mut p1 = x.clone();
    for k in 2..=n {
        let kf = k as u32;
        let mut p2 = Float::with_val(prec, x * &p1) * (2 * kf - 1);
        p2 -= Float::with_val(prec, &p0 * (kf - 1));
        p2 /= kf;
        p0 = p1;
        p1 = p2;
    }
    let mut dp = Float::with_val(prec, x * &p1);
    dp -= &p0;
    dp *= n as u32;
    let denom = Float::with_val(prec, x.square_ref()) - 1u32;
    (p1, dp / denom)
}

pub fn gauss_legendre(n: usize, prec: u32) -> Arc<GaussRule> {
    assert!(n >= 1);
    if let Some(r) = RULES.lock().unwrap().get(&(n, prec)) {
        return r.clone();
    }
    let mut nodes = vec![Float::new(prec); n];
    let mut weights = vec![Float::new(prec); n];
    let tol = Float::with_val(prec, 1) >> (prec as i32 - 8);
    for k in 0..n.div_ceil(2) {
        let guess = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut x = Float::with_val(prec, guess);
        if n % 2 == 1 && k == n / 2 {
            x = Float::new(prec);
        }
        for _ in 0..200 {
            let (p, dp) = legendre(n, &x);
            let dx = p / &dp;
            x -= &dx;
            if dx.abs() < tol {
                break;
            }
        }
        let (_, dp) = legendre(n, &x);
        let mut w = Float::with_val(prec, 1) - Float::with_val(prec, x.square_ref());
        w *= Float::with_val(prec, dp.square_ref());
        let w = Float::with_val(prec, 2) / w;
        nodes[k] = Float::with_val(prec, -&x);
        nodes[n - 1 - k] = x;
        weights[k] = w.clone();
        weights[n - 1 - k] = w;
    }
    let rule = Arc::new(GaussRule { nodes, weights });
    RULES.lock().unwrap().insert((n, prec), rule.clone());
    rule
}

/// Oriented polyline, optionally closed back to its first vertex.
#[derive(Clone, Debug)]
pub struct Contour {
    pub vertices: Vec<BigComplex>,
    pub closed: bool,
}

impl Contour {
    pub fn open(vertices: Vec<BigComplex>) -> Self {
        Contour { vertices, closed: false }
    }

    /// Regular K-gon inscribed in the circle |z − center| = r, counterclockwise.
    pub fn circle(center: &BigComplex, r: f64, k: usize, prec: u32) -> Self {
        let vertices = (0..k)
            .map(|j| {
                let e = BigComplex::i(prec).scale_real(&pi_frac(prec, 2 * j as u64, k as u64)).exp();
                center + &e.scale_f64(r)
            })
            .collect();
        Contour { vertices, closed: true }
    }

    pub fn segments(&self) -> Vec<(BigComplex, BigComplex)> {
        let v = &self.vertices;
        let mut out: Vec<_> = v.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        if self.closed && v.len() > 1 {
            out.push((v[v.len() - 1].clone(), v[0].clone()));
        }
        out
    }
}

fn pi_frac(prec: u32, num: u64, den: u64) -> Float {
    super::complex::pi(prec) * Float::with_val(prec, num) / den
}

#[derive(Clone, Debug)]
pub struct QuadOptions {
    /// Stop when successive estimates differ by at most tol · ∫|f||dz|.
    pub tol: Float,
    pub max_nodes: usize,
}

impl QuadOptions {
    pub fn bits(prec: u32, bits: i32, max_nodes: usize) -> Self {
        QuadOptions {
            tol: Float::with_val(prec, 1) >> bits,
            max_nodes,
        }
    }
}

#[derive(Clone, Debug)]
pub struct QuadResult {
    pub value: BigComplex,
    pub error: Float,
    /// ∫|f||dz|, the scale against which `error` is judged.
    pub abs_integral: Float,
    pub nodes_per_segment: usize,
}

/// ∫ f over the straight segment [a, b] with an n-point rule; also returns ∫|f||dz|.
pub fn integrate_segment<F>(f: &F, a: &BigComplex, b: &BigComplex, n: usize) -> Result<(BigComplex, Float)>
where
    F: Fn(&BigComplex) -> Result<BigComplex> + ?Sized,
{
    let prec = a.prec();
    let rule = gauss_legendre(n, prec);
    let half = (b - a).scale_f64(0.5);
    let mid = (a + b).scale_f64(0.5);
    let hl = half.abs();
    let mut acc = BigComplex::zero(prec);
    let mut abs = Float::new(prec);
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        let z = &mid + &half.scale_real(x);
        let fz = f(&z)?;
        if !fz.is_finite() {
            return Err(Error::Precondition("integrand not finite at a node".into()));
        }
        abs += Float::with_val(prec, fz.abs() * w);
        acc += &fz.scale_real(w);
    }
    Ok((&acc * &half, abs * hl))
}

/// Composite Gauss–Legendre over every segment, doubling the node count until
/// two successive estimates agree.
pub fn contour_quadrature<F>(f: &F, c: &Contour, nodes_per_segment: usize, opts: &QuadOptions) -> Result<QuadResult>
where
    F: Fn(&BigComplex) -> Result<BigComplex> + ?Sized,
{
    let segs = c.segments();
    let eval = |n: usize| -> Result<(BigComplex, Float)> {
        let prec = segs[0].0.prec();
        let mut v = BigComplex::zero(prec);
        let mut s = Float::new(prec);
        for (a, b) in &segs {
            let (x, y) = integrate_segment(f, a, b, n)?;
            v += &x;
            s += &y;
        }
        Ok((v, s))
    };
    if segs.is_empty() {
        return Err(Error::Precondition("empty contour".into()));
    }
    let mut n = nodes_per_segment.max(1);
    let (mut prev, _) = eval(n)?;
    loop {
        let n2 = 2 * n;
        let (cur, scale) = eval(n2)?;
        let err = (&cur - &prev).abs();
        let ok = err <= Float::with_val(scale.prec(), &opts.tol * &scale);
        if ok {
            return Ok(QuadResult {
                value: cur,
                error: err,
                abs_integral: scale,
                nodes_per_segment: n2,
            });
        }
        if n2 * 2 > opts.max_nodes {
            return Err(Error::ToleranceNotReached { achieved: err.to_f64() });
        }
        prev = cur;
        n = n2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let r = gauss_legendre(5, 256);
        // ∫ x^8 over [−1, 1] = 2/9 is exact for a 5-point rule.
        let mut s = Float::new(256);
        for (x, w) in r.nodes.iter().zip(&r.weights) {
            s += Float::with_val(256, x.clone().pow(8u32)) * w;
        }
        let err = s - Float::with_val(256, 2) / 9u32;
        assert!(err.abs() < 1e-70);
    }

    #[test]
    fn residue_of_inverse() {
        let prec = 1024;
        let c = Contour::circle(&BigComplex::zero(prec), 1.0, 32, prec);
        let opts = QuadOptions::bits(prec, 200, 1024);
        let r = contour_quadrature(&|z: &BigComplex| Ok(z.recip()), &c, 16, &opts).unwrap();
        let two_pi_i = BigComplex::from_real(super::super::complex::pi(prec) * 2u32).mul_i();
        assert!((&r.value - &two_pi_i).abs() < 1e-30);
        let r = contour_quadrature(&|z: &BigComplex| Ok(z.clone()), &c, 8, &opts).unwrap();
        assert!(r.value.abs() < 1e-100);
    }

    #[test]
    fn reports_tolerance_failure() {
        let prec = 128;
        let c = Contour::circle(&BigComplex::zero(prec), 1.0, 4, prec);
        let opts = QuadOptions::bits(prec, 120, 16);
        let near = BigComplex::from_f64(prec, 0.7, 0.7);
        let res = contour_quadrature(&|z: &BigComplex| Ok((z - &near).recip()), &c, 2, &opts);
        assert!(matches!(res, Err(Error::ToleranceNotReached { .. })));
    }
}
