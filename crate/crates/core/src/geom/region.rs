//! Classification of the plane by the closed curve γ₁ ∪ γ₂ and the vertical rays.

use num_complex::Complex64;
use serde::Serialize;

use super::trace::gamma1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Region {
    D0,
    D1Inf,
    D2Inf,
    OnBoundary,
}

/// Distance below which a point counts as on a boundary curve.
pub const BOUNDARY_EPS: f64 = 1e-9;

fn seg_dist(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let t = (((p - a) * ab.conj()).re / ab.norm_sqr()).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Closed polygon: γ₁ from i to −i, then γ₂ back up to i.
fn loop_vertices() -> Vec<Complex64> {
    let g1 = gamma1();
    let mut v: Vec<Complex64> = g1.to_vec();
    // γ₂ traversed from −i to i is the mirror −conj of γ₁ read backwards.
    v.extend(g1.iter().rev().skip(1).take(g1.len() - 2).map(|z| -z.conj()));
    v
}

/// Unsigned distance from z to γ₁ ∪ γ₂ ∪ the vertical rays.
pub fn boundary_distance(z: Complex64) -> f64 {
    let v = loop_vertices();
    let mut d = f64::INFINITY;
    for k in 0..v.len() {
        d = d.min(seg_dist(z, v[k], v[(k + 1) % v.len()]));
    }
    let ray = if z.im >= 1.0 || z.im <= -1.0 {
        z.re.abs()
    } else {
        (z - Complex64::new(0.0, z.im.signum())).norm()
    };
    d.min(ray)
}

pub fn inside_loop(z: Complex64) -> bool {
    let v = loop_vertices();
    let mut inside = false;
    let n = v.len();
    for k in 0..n {
        let (a, b) = (v[k], v[(k + 1) % n]);
        if (a.im > z.im) != (b.im > z.im) {
            let x = a.re + (z.im - a.im) * (b.re - a.re) / (b.im - a.im);
            if z.re < x {
                inside = !inside;
            }
        }
    }
    inside
}

pub fn classify_region(z: Complex64) -> Region {
    if boundary_distance(z) < BOUNDARY_EPS {
        return Region::OnBoundary;
    }
    if inside_loop(z) {
        Region::D0
    } else if z.re < 0.0 {
        Region::D1Inf
    } else {
        Region::D2Inf
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_points() {
        assert_eq!(classify_region(Complex64::new(0.0, 0.0)), Region::D0);
        assert_eq!(classify_region(Complex64::new(-5.0, 0.0)), Region::D1Inf);
        assert_eq!(classify_region(Complex64::new(1.0, 0.0)), Region::D2Inf);
        assert_eq!(classify_region(Complex64::new(0.0, 3.0)), Region::OnBoundary);
        assert_eq!(classify_region(Complex64::new(-0.6, 0.0)), Region::D0);
        assert_eq!(classify_region(Complex64::new(-0.7, 0.0)), Region::D1Inf);
    }
}
