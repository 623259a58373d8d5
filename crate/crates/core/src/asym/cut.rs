//! The cut from a to b and the branch of R(z) = ((z−a)(z−b))^{1/2} analytic off it.

use num_complex::Complex64;
use once_cell::sync::Lazy;
use rug::Float;

use crate::geom::{trace_gamma1, TraceOptions};
use crate::numkern::BigComplex;
use crate::{Error, Result};

/// Which boundary value to take for points on (or numerically on) the cut.
/// `Plus` is the left side of the cut oriented from a to b, facing the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Auto,
    Plus,
    Minus,
}

/// Distance in double precision below which the side is decided at full precision.
const NEAR_CUT: f64 = 1e-10;

static BASE: Lazy<(Vec<Complex64>, Vec<f64>)> = Lazy::new(|| {
    let g = trace_gamma1(&TraceOptions { step: 1e-2, tol: 1e-12 }).expect("coarse trace");
    let mut cum = vec![0.0];
    for w in g.windows(2) {
        cum.push(cum.last().unwrap() + (w[1] - w[0]).norm());
    }
    let total = *cum.last().unwrap();
    (g, cum.into_iter().map(|c| c / total).collect())
});

/// γ₁ deformed so its ends sit at a and b: v + (1−λ)(a−i) + λ(b+i), λ the arclength fraction.
#[derive(Clone, Debug)]
pub struct Cut {
    pub a: BigComplex,
    pub b: BigComplex,
    verts: Vec<Complex64>,
}

impl Cut {
    pub fn new(a: &BigComplex, b: &BigComplex) -> Self {
        let (base, lam) = &*BASE;
        let da = a.to_c64() - Complex64::i();
        let db = b.to_c64() + Complex64::i();
        let verts = base.iter().zip(lam).map(|(v, l)| v + da * (1.0 - l) + db * l).collect();
        Cut {
            a: a.clone(),
            b: b.clone(),
            verts,
        }
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.verts
    }

    /// Vertex k at full precision.
    pub fn vertex(&self, k: usize) -> BigComplex {
        let (base, lam) = &*BASE;
        let p = self.a.prec();
        if k == 0 {
            return self.a.clone();
        }
        if k == base.len() - 1 {
            return self.b.clone();
        }
        let l = Float::with_val(p, lam[k]);
        let one_m = Float::with_val(p, 1) - &l;
        let v = BigComplex::from_c64(p, base[k]);
        let da = &self.a - &BigComplex::i(p);
        let db = &self.b + &BigComplex::i(p);
        &(&v + &da.scale_real(&one_m)) + &db.scale_real(&l)
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// Nearest segment index and double-precision distance.
    pub fn nearest(&self, z: Complex64) -> (usize, f64) {
        let mut best = (0, f64::INFINITY);
        for (k, w) in self.verts.windows(2).enumerate() {
            let ab = w[1] - w[0];
            let t = (((z - w[0]) * ab.conj()).re / ab.norm_sqr()).clamp(0.0, 1.0);
            let d = (z - (w[0] + ab * t)).norm();
            if d < best.1 {
                best = (k, d);
            }
        }
        best
    }

    pub fn distance(&self, z: Complex64) -> f64 {
        self.nearest(z).1
    }

    /// Odd parity of crossings between the rightward ray from z and the cut.
    fn parity(&self, z: Complex64) -> bool {
        let mut odd = false;
        for w in self.verts.windows(2) {
            let (p, q) = (w[0], w[1]);
            if (p.im > z.im) != (q.im > z.im) {
                let x = p.re + (z.im - p.im) * (q.re - p.re) / (q.im - p.im);
                if z.re < x {
                    odd = !odd;
                }
            }
        }
        odd
    }

    /// Whether z lies in the sector west of the cut between the leftward
    /// horizontal rays from a and b, where the principal product is negated.
    pub fn in_omega(&self, z: &BigComplex, side: Side) -> Result<bool> {
        let zc = z.to_c64();
        let (k, d) = self.nearest(zc);
        if d >= NEAR_CUT {
            return Ok(self.parity(zc));
        }
        match side {
            Side::Plus => Ok(false),
            Side::Minus => Ok(true),
            Side::Auto => {
                let p = self.vertex(k);
                let q = self.vertex(k + 1);
                let dir = &q - &p;
                let cross = (&dir.conj() * &(z - &p)).im.clone();
                let rel = Float::with_val(z.prec(), cross.abs_ref()) / dir.abs();
                let tol = Float::with_val(z.prec(), 1) >> (z.prec() as i32 / 8);
                if rel < tol {
                    return Err(Error::OnCut);
                }
                // Left of travel is the Plus side.
                Ok(cross.is_sign_negative())
            }
        }
    }

    /// R(z) with the branch ∼ z at infinity.
    pub fn r(&self, z: &BigComplex, side: Side) -> Result<BigComplex> {
        let v = &(z - &self.a).sqrt() * &(z - &self.b).sqrt();
        Ok(if self.in_omega(z, side)? { -v } else { v })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pade_cut(p: u32) -> Cut {
        Cut::new(&BigComplex::i(p), &-BigComplex::i(p))
    }

    #[test]
    fn pade_branch_values() {
        let p = 256;
        let c = pade_cut(p);
        let r0 = c.r(&BigComplex::zero(p), Side::Auto).unwrap().to_c64();
        assert!((r0 - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let r2 = c.r(&BigComplex::from_f64(p, 2.0, 0.0), Side::Auto).unwrap().to_c64();
        assert!((r2 - Complex64::new(5f64.sqrt(), 0.0)).norm() < 1e-15);
        let rm = c.r(&BigComplex::from_f64(p, -1.0, 0.0), Side::Auto).unwrap().to_c64();
        assert!((rm - Complex64::new(-2f64.sqrt(), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn continuous_across_rays() {
        let p = 256;
        let c = pade_cut(p);
        for x in [-3.0, -0.5, 0.5] {
            let up = c.r(&BigComplex::from_f64(p, x, 1.0 + 1e-9), Side::Auto).unwrap().to_c64();
            let dn = c.r(&BigComplex::from_f64(p, x, 1.0 - 1e-9), Side::Auto).unwrap().to_c64();
            assert!((up - dn).norm() < 1e-6, "x={x}");
        }
    }

    #[test]
    fn on_cut_detection() {
        let p = 256;
        let c = pade_cut(p);
        let v = c.vertex(40);
        assert!(matches!(c.r(&v, Side::Auto), Err(Error::OnCut)));
        let plus = c.r(&v, Side::Plus).unwrap().to_c64();
        let minus = c.r(&v, Side::Minus).unwrap().to_c64();
        assert!((plus + minus).norm() < 1e-12);
    }
}
