//! Arbitrary-precision complex scalars on top of MPFR floats.

use num_complex::Complex64;
use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::Error;

/// Complex number with both parts at the same binary precision.
#[derive(Clone, PartialEq)]
pub struct BigComplex {
    pub re: Float,
    pub im: Float,
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.to_c64();
        write!(f, "BigComplex({:e} + {:e}i @{})", c.re, c.im, self.prec())
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re.to_string_radix(10, Some(40)), self.im.to_string_radix(10, Some(40)))
    }
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

impl BigComplex {
    pub fn zero(prec: u32) -> Self {
        BigComplex {
            re: Float::new(prec),
            im: Float::new(prec),
        }
    }

    pub fn one(prec: u32) -> Self {
        Self::from_f64(prec, 1.0, 0.0)
    }

    pub fn i(prec: u32) -> Self {
        Self::from_f64(prec, 0.0, 1.0)
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        BigComplex {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    pub fn from_c64(prec: u32, z: Complex64) -> Self {
        Self::from_f64(prec, z.re, z.im)
    }

    pub fn from_real(re: Float) -> Self {
        let im = Float::new(re.prec());
        BigComplex { re, im }
    }

    pub fn from_parts(re: Float, im: Float) -> Self {
        let prec = re.prec().max(im.prec());
        BigComplex {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    /// Parses decimal strings for the two parts at the given precision.
    pub fn parse(prec: u32, re: &str, im: &str) -> Result<Self, Error> {
        let p = |s: &str| {
            Float::parse(s.trim())
                .map(|v| Float::with_val(prec, v))
                .map_err(|e| Error::Parse(format!("bad decimal {s:?}: {e}")))
        };
        Ok(BigComplex { re: p(re)?, im: p(im)? })
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// Same value rounded to a new precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        BigComplex {
            re: Float::with_val(prec, &self.re),
            im: Float::with_val(prec, &self.im),
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Self {
        BigComplex {
            re: self.re.clone(),
            im: Float::with_val(self.prec(), -&self.im),
        }
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        let mut s = Float::with_val(p, self.re.square_ref());
        s += Float::with_val(p, self.im.square_ref());
        s
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn abs_f64(&self) -> f64 {
        self.abs().to_f64()
    }

    /// Principal argument in (−π, π]; a negative real with signed-zero
    /// imaginary part maps to +π.
    pub fn arg(&self) -> Float {
        let p = self.prec();
        if self.im.is_zero() {
            return if self.re.is_sign_negative() && !self.re.is_zero() {
                pi(p)
            } else {
                Float::new(p)
            };
        }
        Float::with_val(p, self.im.atan2_ref(&self.re))
    }

    /// Rough log2 of the magnitude, cheap enough for pivot search.
    pub fn mag_log2(&self) -> f64 {
        fn part(x: &Float) -> f64 {
            if x.is_zero() {
                return f64::NEG_INFINITY;
            }
            let (m, e) = x.to_f64_exp();
            e as f64 + m.abs().log2()
        }
        part(&self.re).max(part(&self.im))
    }

    pub fn scale_real(&self, s: &Float) -> Self {
        let p = self.prec();
        BigComplex {
            re: Float::with_val(p, &self.re * s),
            im: Float::with_val(p, &self.im * s),
        }
    }

    pub fn scale_f64(&self, s: f64) -> Self {
        let p = self.prec();
        BigComplex {
            re: Float::with_val(p, &self.re * s),
            im: Float::with_val(p, &self.im * s),
        }
    }

    /// Divides by a (possibly negative) integer, rounding once per component.
    pub fn div_int(&self, k: i64) -> Self {
        let p = self.prec();
        BigComplex {
            re: Float::with_val(p, &self.re / k),
            im: Float::with_val(p, &self.im / k),
        }
    }

    /// Multiplies by 2^k exactly.
    pub fn mul_2exp(&self, k: i32) -> Self {
        let mut r = self.clone();
        r.re <<= k;
        r.im <<= k;
        r
    }

    pub fn mul_i(&self) -> Self {
        BigComplex {
            re: Float::with_val(self.prec(), -&self.im),
            im: self.re.clone(),
        }
    }

    pub fn recip(&self) -> Self {
        BigComplex::one(self.prec()) / self
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn powi(&self, k: u32) -> Self {
        let mut acc = BigComplex::one(self.prec());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = base.square();
            }
        }
        acc
    }

    pub fn exp(&self) -> Self {
        let p = self.prec();
        let m = Float::with_val(p, self.re.exp_ref());
        let (s, c) = Float::with_val(p, &self.im).sin_cos(Float::new(p));
        BigComplex {
            re: Float::with_val(p, &m * &c),
            im: m * s,
        }
    }

    /// Principal logarithm, imaginary part in (−π, π].
    pub fn ln(&self) -> Self {
        let p = self.prec();
        let r = Float::with_val(p, self.re.hypot_ref(&self.im)).ln();
        BigComplex { re: r, im: self.arg() }
    }

    /// Principal square root: Re ≥ 0, and for negative reals the root on the
    /// positive imaginary axis.
    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        if self.is_zero() {
            return BigComplex::zero(p);
        }
        let r = self.abs();
        if !self.re.is_sign_negative() {
            let t = Float::with_val(p, &r + &self.re) / 2u32;
            let t = t.sqrt();
            let im = Float::with_val(p, &self.im / &t) / 2u32;
            BigComplex { re: t, im }
        } else {
            let t = Float::with_val(p, &r - &self.re) / 2u32;
            let t = t.sqrt();
            let re = Float::with_val(p, self.im.abs_ref()) / &t / 2u32;
            let im = if self.im.is_sign_negative() && !self.im.is_zero() { -t } else { t };
            BigComplex { re, im }
        }
    }

    /// Principal power z^x for real x.
    pub fn powf(&self, x: f64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.ln();
        l.scale_f64(x).exp()
    }

    pub fn real_pow(base: &Float, e: i64) -> Float {
        Float::with_val(base.prec(), base.pow(e))
    }

    pub fn dist(&self, other: &BigComplex) -> Float {
        (self - other).abs()
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b BigComplex> for &'a BigComplex {
            type Output = BigComplex;
            fn $m(self, o: &'b BigComplex) -> BigComplex {
                let f: fn(&BigComplex, &BigComplex) -> BigComplex = $body;
                f(self, o)
            }
        }
        impl $tr<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, o: BigComplex) -> BigComplex {
                (&self).$m(&o)
            }
        }
        impl<'b> $tr<&'b BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, o: &'b BigComplex) -> BigComplex {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<BigComplex> for &'a BigComplex {
            type Output = BigComplex;
            fn $m(self, o: BigComplex) -> BigComplex {
                self.$m(&o)
            }
        }
    };
}

binop!(Add, add, |a, b| {
    let p = a.prec().max(b.prec());
    BigComplex {
        re: Float::with_val(p, &a.re + &b.re),
        im: Float::with_val(p, &a.im + &b.im),
    }
});
binop!(Sub, sub, |a, b| {
    let p = a.prec().max(b.prec());
    BigComplex {
        re: Float::with_val(p, &a.re - &b.re),
        im: Float::with_val(p, &a.im - &b.im),
    }
});
binop!(Mul, mul, |a, b| {
    let p = a.prec().max(b.prec());
    let mut re = Float::with_val(p, &a.re * &b.re);
    re -= Float::with_val(p, &a.im * &b.im);
    let mut im = Float::with_val(p, &a.re * &b.im);
    im += Float::with_val(p, &a.im * &b.re);
    BigComplex { re, im }
});
binop!(Div, div, |a, b| {
    let p = a.prec().max(b.prec());
    let d = b.norm_sqr();
    let mut re = Float::with_val(p, &a.re * &b.re);
    re += Float::with_val(p, &a.im * &b.im);
    let mut im = Float::with_val(p, &a.im * &b.re);
    im -= Float::with_val(p, &a.re * &b.im);
    re /= &d;
    im /= &d;
    BigComplex { re, im }
});

impl AddAssign<&BigComplex> for BigComplex {
    fn add_assign(&mut self, o: &BigComplex) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&BigComplex> for BigComplex {
    fn sub_assign(&mut self, o: &BigComplex) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&BigComplex> for BigComplex {
    fn mul_assign(&mut self, o: &BigComplex) {
        *self = &*self * o;
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        let p = self.prec();
        BigComplex {
            re: Float::with_val(p, -&self.re),
            im: Float::with_val(p, -&self.im),
        }
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -self.re, im: -self.im }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 256;

    #[test]
    fn sqrt_branches() {
        let m1 = BigComplex::from_f64(P, -1.0, 0.0);
        assert!((m1.sqrt().to_c64() - Complex64::new(0.0, 1.0)).norm() < 1e-60);
        let z = BigComplex::from_f64(P, -3.0, -4.0);
        assert!((z.sqrt().to_c64() - Complex64::new(1.0, -2.0)).norm() < 1e-15);
        let w = BigComplex::from_f64(P, 3.0, 4.0);
        assert!((w.sqrt().to_c64() - Complex64::new(2.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn exp_ln_roundtrip() {
        let z = BigComplex::from_f64(P, 0.3, -2.5);
        let back = z.exp().ln();
        assert!((&back - &z).abs_f64() < 1e-70);
        assert!((BigComplex::from_f64(P, -2.0, 0.0).ln().im.to_f64() - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn division_and_precision() {
        let a = BigComplex::from_f64(P, 1.0, 2.0);
        let b = BigComplex::from_f64(512, 3.0, -1.0);
        let q = &a / &b;
        assert_eq!(q.prec(), 512);
        assert!((&(&q * &b) - &a).abs_f64() < 1e-70);
    }

    #[test]
    fn parse_decimal() {
        let z = BigComplex::parse(P, "0.1", "-2.5e3").unwrap();
        assert!((z.to_c64() - Complex64::new(0.1, -2500.0)).norm() < 1e-12);
        assert!(BigComplex::parse(P, "abc", "0").is_err());
    }

    #[test]
    fn integer_powers() {
        let z = BigComplex::from_f64(P, 0.0, 1.0);
        assert!((z.powi(4).to_c64() - Complex64::new(1.0, 0.0)).norm() < 1e-70);
        assert!((z.powi(0).to_c64() - Complex64::new(1.0, 0.0)).norm() == 0.0);
    }
}
