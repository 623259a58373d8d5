//! Hermite system for p + q·e^z and the resulting rational interpolant.

use rug::Float;
use serde::Serialize;

use super::scheme::InterpolationScheme;
use crate::numkern::{null_vector, poly_roots, BigComplex, DenseMatrix, Polynomial};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    QAtZeroIsOne,
    QScaledMonic,
    RawNullVector,
}

impl Normalization {
    pub fn as_str(&self) -> &'static str {
        match self {
            Normalization::QAtZeroIsOne => "q_at_zero_is_one",
            Normalization::QScaledMonic => "q_scaled_monic",
            Normalization::RawNullVector => "raw_null_vector",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RationalInterpolant {
    pub p: Polynomial,
    pub q: Polynomial,
    pub normalization: Normalization,
    /// Negligible pivots met while solving (0 for a well-posed scheme).
    pub defect: usize,
    scheme: InterpolationScheme,
    prec: u32,
}

/// Hermite rows over the coefficients of p and q in the basis (z/σ)^k,
/// σ = n1 + n2, each row scaled by a power of two to unit max entry.
pub fn hermite_matrix(scheme: &InterpolationScheme, prec: u32) -> DenseMatrix {
    let (n1, n2) = (scheme.n1(), scheme.n2());
    let cols = n1 + n2 + 2;
    let sigma = Float::with_val(prec, scheme.scale());
    let inv_sigma = Float::with_val(prec, 1) / &sigma;
    let maxdeg = n1.max(n2);
    let maxm = scheme.points().iter().map(|p| p.mult).max().unwrap_or(1);
    let kmax = maxm.max(maxdeg + 1);

    let mut inv_fact = vec![Float::with_val(prec, 1); kmax + 1];
    for k in 1..=kmax {
        inv_fact[k] = Float::with_val(prec, &inv_fact[k - 1] / k as u32);
    }
    // binom[j][i] = C(j, i), exact at these sizes.
    let mut binom = vec![vec![Float::new(prec); maxdeg + 1]; maxdeg + 1];
    for j in 0..=maxdeg {
        binom[j][0] = Float::with_val(prec, 1);
        for i in 1..=j {
            binom[j][i] = Float::with_val(prec, &binom[j][i - 1] * (j - i + 1) as u32) / i as u32;
        }
    }
    let mut inv_sigma_pow = vec![Float::with_val(prec, 1); kmax + 1];
    for k in 1..=kmax {
        inv_sigma_pow[k] = Float::with_val(prec, &inv_sigma_pow[k - 1] * &inv_sigma);
    }

    let mut rows = Vec::with_capacity(scheme.total());
    for pt in scheme.points() {
        let z = pt.z.with_prec(prec);
        let w = z.scale_real(&inv_sigma);
        let w_zero = w.is_zero();
        let mut wpow = vec![BigComplex::one(prec); maxdeg + 1];
        for j in 1..=maxdeg {
            wpow[j] = &wpow[j - 1] * &w;
        }
        let ez = z.exp();
        // t[j][i] = C(j,i) w^{j−i} σ^{−i}: Taylor coefficient i of (ζ/σ)^j at z.
        let m = pt.mult;
        let term = |j: usize, i: usize| -> Option<BigComplex> {
            if i > j || (w_zero && i != j) {
                return None;
            }
            let s = Float::with_val(prec, &binom[j][i] * &inv_sigma_pow[i]);
            Some(wpow[j - i].scale_real(&s))
        };
        let tq: Vec<Vec<Option<BigComplex>>> = (0..=n2).map(|j| (0..m.min(j + 1)).map(|i| term(j, i)).collect()).collect();
        for k in 0..m {
            let mut row = vec![BigComplex::zero(prec); cols];
            for j in k..=n1 {
                if let Some(v) = term(j, k) {
                    row[j] = v;
                }
            }
            for j in 0..=n2 {
                let mut acc = BigComplex::zero(prec);
                for i in 0..=k.min(j) {
                    if let Some(Some(t)) = tq[j].get(i) {
                        acc += &t.scale_real(&inv_fact[k - i]);
                    }
                }
                row[n1 + 1 + j] = &acc * &ez;
            }
            let top = row.iter().map(|x| x.mag_log2()).fold(f64::NEG_INFINITY, f64::max);
            if top.is_finite() {
                let sh = -(top.floor() as i32);
                row = row.iter().map(|x| x.mul_2exp(sh)).collect();
            }
            rows.push(row);
        }
    }
    DenseMatrix::from_rows(rows)
}

/// Solves for (p, q) and normalizes q(0) = 1 when that is well conditioned.
pub fn solve_interpolant(scheme: &InterpolationScheme, prec: u32) -> Result<RationalInterpolant> {
    let scheme = scheme.with_prec(prec);
    let m = hermite_matrix(&scheme, prec);
    let nv = null_vector(&m).map_err(|e| match e {
        Error::NumericalRankDeficiency { defects } => Error::DegenerateScheme(format!("{defects} negligible pivots")),
        other => other,
    })?;
    let n1 = scheme.n1();
    let mut v = nv.v;
    let qhat = &v[n1 + 1..];
    let mut qnorm = Float::new(prec);
    for c in qhat {
        qnorm += c.norm_sqr();
    }
    let qnorm = qnorm.sqrt();
    let thresh = Float::with_val(prec, &qnorm >> (prec as i32 / 4));
    let normalization;
    if qhat[0].abs() > thresh {
        let d = qhat[0].clone();
        v = v.iter().map(|x| x / &d).collect();
        v[n1 + 1] = BigComplex::one(prec);
        normalization = Normalization::QAtZeroIsOne;
    } else if let Some(lead) = qhat.iter().rev().find(|c| !c.is_zero()).cloned() {
        v = v.iter().map(|x| x / &lead).collect();
        normalization = Normalization::QScaledMonic;
    } else {
        normalization = Normalization::RawNullVector;
    }
    let sigma = Float::with_val(prec, scheme.scale());
    let unscale = |c: &[BigComplex]| {
        let mut s = Float::with_val(prec, 1);
        let mut out = Vec::with_capacity(c.len());
        for x in c {
            out.push(x.scale_real(&Float::with_val(prec, 1 / &s)));
            s *= &sigma;
        }
        Polynomial::new(out, prec)
    };
    let p = unscale(&v[..=n1]);
    let q = unscale(&v[n1 + 1..]);
    let mut q = q;
    if normalization == Normalization::QAtZeroIsOne {
        // Keep q(0) exactly one.
        let mut c = q.coeffs().to_vec();
        c[0] = BigComplex::one(prec);
        q = Polynomial::new(c, prec);
    }
    Ok(RationalInterpolant {
        p,
        q,
        normalization,
        defect: nv.defect,
        scheme,
        prec,
    })
}

impl RationalInterpolant {
    pub fn scheme(&self) -> &InterpolationScheme {
        &self.scheme
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn n1(&self) -> usize {
        self.scheme.n1()
    }

    pub fn n2(&self) -> usize {
        self.scheme.n2()
    }

    /// Coefficients of p then q in the (z/σ)^k basis used by the Hermite rows.
    pub fn scaled_coeffs(&self) -> Vec<BigComplex> {
        let sigma = BigComplex::from_f64(self.prec, self.scheme.scale() as f64, 0.0);
        let ps = self.p.compose_scale(&sigma);
        let qs = self.q.compose_scale(&sigma);
        (0..=self.n1()).map(|k| ps.coeff(k)).chain((0..=self.n2()).map(|k| qs.coeff(k))).collect()
    }

    /// Multiplies p and q by the same scalar.
    pub fn rescaled(&self, s: &BigComplex, normalization: Normalization) -> Self {
        RationalInterpolant {
            p: self.p.scale(s),
            q: self.q.scale(s),
            normalization,
            ..self.clone()
        }
    }

    /// r(z) = p(z)/q(z).
    pub fn eval(&self, z: &BigComplex) -> BigComplex {
        &self.p.eval(z) / &self.q.eval(z)
    }

    /// e_n(z) = p(z)e^{−z/2} + q(z)e^{z/2}.
    pub fn remainder(&self, z: &BigComplex) -> BigComplex {
        let h = z.scale_f64(0.5).exp();
        &(&self.p.eval(z) / &h) + &(&self.q.eval(z) * &h)
    }

    /// E_n(z) = e_n(2nz).
    pub fn remainder_scaled(&self, z: &BigComplex) -> BigComplex {
        self.remainder(&z.scale_f64(self.scheme.scale() as f64))
    }

    /// P_n(z) = p(2nz).
    pub fn p_scaled(&self) -> Polynomial {
        self.p.compose_scale(&BigComplex::from_f64(self.prec, self.scheme.scale() as f64, 0.0))
    }

    /// Q_n(z) = q(2nz).
    pub fn q_scaled(&self) -> Polynomial {
        self.q.compose_scale(&BigComplex::from_f64(self.prec, self.scheme.scale() as f64, 0.0))
    }

    /// max over rows of |row·c| / (‖row‖‖c‖).
    pub fn residual_check(&self) -> Float {
        let m = hermite_matrix(&self.scheme, self.prec);
        let c = self.scaled_coeffs();
        let cn = crate::numkern::linalg::vec_norm(&c);
        let r = m.mul_vec(&c);
        let mut worst = Float::new(self.prec);
        for (i, ri) in r.iter().enumerate() {
            let rn = crate::numkern::linalg::vec_norm(m.row(i));
            let rel = ri.abs() / (rn * &cn);
            if rel > worst {
                worst = rel;
            }
        }
        worst
    }

    pub fn zeros_poles(&self) -> Result<ZerosPoles> {
        let roots = |p: &Polynomial| if p.degree() == 0 { Ok(Vec::new()) } else { poly_roots(p) };
        let zeros = roots(&self.p)?;
        let poles = roots(&self.q)?;
        let s = Float::with_val(self.prec, self.scheme.scale());
        let div = |v: &[BigComplex]| v.iter().map(|x| x.scale_real(&Float::with_val(self.prec, 1 / &s))).collect::<Vec<_>>();
        let mut min_modulus: Option<Float> = None;
        for r in zeros.iter().chain(&poles) {
            let a = r.abs();
            if min_modulus.as_ref().is_none_or(|m| a < *m) {
                min_modulus = Some(a);
            }
        }
        Ok(ZerosPoles {
            zeros_scaled: div(&zeros),
            poles_scaled: div(&poles),
            zeros,
            poles,
            min_modulus,
        })
    }
}

#[derive(Clone, Debug)]
pub struct ZerosPoles {
    pub zeros: Vec<BigComplex>,
    pub poles: Vec<BigComplex>,
    pub zeros_scaled: Vec<BigComplex>,
    pub poles_scaled: Vec<BigComplex>,
    /// Smallest modulus over all zeros and poles, if any exist.
    pub min_modulus: Option<Float>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(prec: u32, re: f64, im: f64) -> BigComplex {
        BigComplex::from_f64(prec, re, im)
    }

    #[test]
    fn pade_one_closed_form() {
        let prec = 256;
        let r = solve_interpolant(&InterpolationScheme::pade(1, prec), prec).unwrap();
        assert_eq!(r.normalization, Normalization::QAtZeroIsOne);
        let want_p = [-1.0, -0.5];
        let want_q = [1.0, -0.5];
        for k in 0..2 {
            assert!((r.p.coeff(k).to_c64().re - want_p[k]).abs() < 1e-60);
            assert!((r.q.coeff(k).to_c64().re - want_q[k]).abs() < 1e-60);
        }
        let e1 = r.remainder(&c(prec, 1.0, 0.0)).to_c64().re;
        let want = (-0.5f64).exp() * -1.5 + 0.5f64.exp() * 0.5;
        assert!((e1 - want).abs() < 1e-14);
        assert!((want + 0.0855).abs() < 1e-3);
        assert!(r.remainder(&c(prec, 0.0, 0.0)).abs() < 1e-70);
    }

    #[test]
    fn n_zero_case() {
        let prec = 128;
        let r = solve_interpolant(&InterpolationScheme::pade(0, prec), prec).unwrap();
        assert_eq!(r.p.coeff(0).to_c64().re, -1.0);
        assert_eq!(r.q.coeff(0).to_c64().re, 1.0);
        assert!(r.residual_check().is_zero());
    }

    #[test]
    fn pade_one_roots() {
        let prec = 256;
        let r = solve_interpolant(&InterpolationScheme::pade(1, prec), prec).unwrap();
        let zp = r.zeros_poles().unwrap();
        assert!((zp.zeros[0].to_c64().re + 2.0).abs() < 1e-50);
        assert!((zp.poles[0].to_c64().re - 2.0).abs() < 1e-50);
        assert!((zp.min_modulus.unwrap().to_f64() - 2.0).abs() < 1e-50);
    }
}
