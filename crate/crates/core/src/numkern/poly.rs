use super::BigComplex;

/// Dense polynomial, coefficients in ascending degree order.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<BigComplex>,
    prec: u32,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigComplex>, prec: u32) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs, prec }
    }

    pub fn zero(prec: u32) -> Self {
        Polynomial { coeffs: Vec::new(), prec }
    }

    pub fn constant(c: BigComplex) -> Self {
        let prec = c.prec();
        Polynomial::new(vec![c], prec)
    }

    /// ∏ (z − r)^m over the given roots.
    pub fn from_roots(roots: &[(BigComplex, usize)], prec: u32) -> Self {
        let mut p = Polynomial::constant(BigComplex::one(prec));
        for (r, m) in roots {
            let lin = Polynomial::new(vec![-r, BigComplex::one(prec)], prec);
            for _ in 0..*m {
                p = p.mul(&lin);
            }
        }
        p
    }

    pub fn coeffs(&self) -> &[BigComplex] {
        &self.coeffs
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree after trimming; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigComplex {
        self.coeffs.get(k).cloned().unwrap_or_else(|| BigComplex::zero(self.prec))
    }

    pub fn leading(&self) -> BigComplex {
        self.coeff(self.degree())
    }

    pub fn eval(&self, z: &BigComplex) -> BigComplex {
        let mut acc = BigComplex::zero(self.prec.max(z.prec()));
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }

    /// Values p(z), p'(z), …, p^{(m)}(z).
    pub fn eval_derivs(&self, z: &BigComplex, m: usize) -> Vec<BigComplex> {
        let prec = self.prec.max(z.prec());
        let mut d = vec![BigComplex::zero(prec); m + 1];
        for c in self.coeffs.iter().rev() {
            for k in (1..=m).rev() {
                d[k] = &(&d[k] * z) + &d[k - 1];
            }
            d[0] = &(&d[0] * z) + c;
        }
        // Horner produces Taylor coefficients; convert to derivatives.
        let mut fact = 1.0f64;
        for (k, v) in d.iter_mut().enumerate().skip(1) {
            fact *= k as f64;
            *v = v.scale_f64(fact);
        }
        d
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.prec);
        }
        let prec = self.prec.max(other.prec);
        let mut out = vec![BigComplex::zero(prec); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::new(out, prec)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let prec = self.prec.max(other.prec);
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        Polynomial::new(out, prec)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let prec = self.prec.max(other.prec);
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect();
        Polynomial::new(out, prec)
    }

    pub fn scale(&self, s: &BigComplex) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect(), self.prec)
    }

    /// p(s·z).
    pub fn compose_scale(&self, s: &BigComplex) -> Polynomial {
        let mut pw = BigComplex::one(self.prec);
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw = &pw * s;
        }
        Polynomial::new(out, self.prec)
    }

    pub fn derivative(&self) -> Polynomial {
        let out = self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.scale_f64(k as f64)).collect();
        Polynomial::new(out, self.prec)
    }

    /// Euclidean norm of the coefficient vector.
    pub fn coeff_norm(&self) -> rug::Float {
        let mut s = rug::Float::new(self.prec);
        for c in &self.coeffs {
            s += c.norm_sqr();
        }
        s.sqrt()
    }

    /// Σ |a_k| |z|^k, the scale for backward-error tests.
    pub fn abs_eval(&self, r: &rug::Float) -> rug::Float {
        let mut acc = rug::Float::new(self.prec);
        for c in self.coeffs.iter().rev() {
            acc *= r;
            acc += c.abs();
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    const P: u32 = 256;

    fn c(re: f64, im: f64) -> BigComplex {
        BigComplex::from_f64(P, re, im)
    }

    #[test]
    fn eval_examples() {
        let p = Polynomial::new(vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], P);
        assert!(p.eval(&c(0.0, 1.0)).is_zero());
        let one = Polynomial::constant(c(1.0, 0.0));
        assert_eq!(one.eval(&c(3.0, -7.0)).to_c64(), Complex64::new(1.0, 0.0));
        let omega = Polynomial::from_roots(&[(c(0.0, 0.0), 3)], P);
        assert_eq!(omega.eval(&c(2.0, 0.0)).to_c64(), Complex64::new(8.0, 0.0));
        assert_eq!(omega.degree(), 3);
    }

    #[test]
    fn derivative_values() {
        // z^3 - 2z + 5 at z = 1+i
        let p = Polynomial::new(vec![c(5.0, 0.0), c(-2.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], P);
        let z = c(1.0, 1.0);
        let d = p.eval_derivs(&z, 4);
        let zc = Complex64::new(1.0, 1.0);
        let expect = [
            zc * zc * zc - 2.0 * zc + 5.0,
            3.0 * zc * zc - 2.0,
            6.0 * zc,
            Complex64::new(6.0, 0.0),
            Complex64::new(0.0, 0.0),
        ];
        for (got, want) in d.iter().zip(expect) {
            assert!((got.to_c64() - want).norm() < 1e-13);
        }
        assert!((p.derivative().eval(&z).to_c64() - expect[1]).norm() < 1e-13);
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = Polynomial::new(vec![c(1.0, 0.0), c(0.0, 0.0)], P);
        assert_eq!(p.degree(), 0);
        assert_eq!(p.eval(&c(0.0, 0.0)).to_c64(), Complex64::new(1.0, 0.0));
    }
}
