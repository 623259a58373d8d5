//! Interpolation schemes: points with multiplicities and degree bounds.

use rug::Float;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::numkern::{BigComplex, Polynomial};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct SchemePoint {
    pub z: BigComplex,
    pub mult: usize,
}

#[derive(Clone, Debug)]
pub struct InterpolationScheme {
    points: Vec<SchemePoint>,
    n1: usize,
    n2: usize,
    prec: u32,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct PointSpec {
    pub re: String,
    pub im: String,
    pub mult: usize,
}

/// On-disk form of a scheme; coordinates are decimal strings.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct SchemeFile {
    pub n1: usize,
    pub n2: usize,
    pub points: Vec<PointSpec>,
}

impl InterpolationScheme {
    /// Validates multiplicities and merges exactly coincident locations.
    pub fn build(raw: Vec<(BigComplex, usize)>, n1: usize, n2: usize, prec: u32) -> Result<Self> {
        let mut points: Vec<SchemePoint> = Vec::new();
        for (z, mult) in raw {
            if mult == 0 {
                return Err(Error::Precondition("multiplicity must be >= 1".into()));
            }
            let z = z.with_prec(prec);
            match points.iter_mut().find(|p| p.z == z) {
                Some(p) => p.mult += mult,
                None => points.push(SchemePoint { z, mult }),
            }
        }
        let total: usize = points.iter().map(|p| p.mult).sum();
        if total != n1 + n2 + 1 {
            return Err(Error::CountMismatch {
                got: total,
                expected: n1 + n2 + 1,
            });
        }
        Ok(InterpolationScheme { points, n1, n2, prec })
    }

    /// All 2n+1 conditions at the origin.
    pub fn pade(n: usize, prec: u32) -> Self {
        Self::build(vec![(BigComplex::zero(prec), 2 * n + 1)], n, n, prec).expect("valid Padé scheme")
    }

    /// Simple points r·e^{2πik/m} + center, k = 0..m−1, with m = 2n+1.
    pub fn circle(n: usize, radius: &Float, prec: u32) -> Self {
        let m = 2 * n + 1;
        let pts = (0..m)
            .map(|k| {
                let th = crate::numkern::pi(prec) * Float::with_val(prec, 2 * k) / m as u32;
                let e = BigComplex::from_real(th).mul_i().exp();
                (e.scale_real(radius), 1)
            })
            .collect();
        Self::build(pts, n, n, prec).expect("valid circle scheme")
    }

    pub fn points(&self) -> &[SchemePoint] {
        &self.points
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn total(&self) -> usize {
        self.n1 + self.n2 + 1
    }

    pub fn is_diagonal(&self) -> bool {
        self.n1 == self.n2
    }

    /// n for a diagonal scheme.
    pub fn n(&self) -> Result<usize> {
        if self.is_diagonal() {
            Ok(self.n1)
        } else {
            Err(Error::Unsupported(format!("non-diagonal scheme ({}, {})", self.n1, self.n2)))
        }
    }

    /// Scale 2n used for ẑ = z/(2n); n1 + n2 in general, at least 1.
    pub fn scale(&self) -> usize {
        (self.n1 + self.n2).max(1)
    }

    pub fn rho(&self) -> Float {
        let mut r = Float::new(self.prec);
        for p in &self.points {
            let a = p.z.abs();
            if a > r {
                r = a;
            }
        }
        r
    }

    /// t = ρ/n.
    pub fn t(&self) -> Float {
        self.rho() / (self.scale() as f64 / 2.0)
    }

    /// ẑ_j = z_j/(2n), with multiplicities.
    pub fn scaled_points(&self) -> Vec<SchemePoint> {
        let s = self.scale() as u32;
        self.points
            .iter()
            .map(|p| SchemePoint {
                z: BigComplex {
                    re: Float::with_val(self.prec, &p.z.re / s),
                    im: Float::with_val(self.prec, &p.z.im / s),
                },
                mult: p.mult,
            })
            .collect()
    }

    /// Every ẑ_j repeated by multiplicity.
    pub fn scaled_flat(&self) -> Vec<BigComplex> {
        self.scaled_points().into_iter().flat_map(|p| std::iter::repeat_n(p.z, p.mult)).collect()
    }

    /// ž_j = z_j/(2ρ); empty when ρ = 0.
    pub fn rescaled_points(&self) -> Vec<SchemePoint> {
        let rho = self.rho();
        if rho.is_zero() {
            return Vec::new();
        }
        let two_rho = BigComplex::from_real(rho * 2u32);
        self.points
            .iter()
            .map(|p| SchemePoint {
                z: &p.z / &two_rho,
                mult: p.mult,
            })
            .collect()
    }

    /// ∏ (z − z_j)^{m_j}.
    pub fn omega(&self) -> Polynomial {
        let roots: Vec<_> = self.points.iter().map(|p| (p.z.clone(), p.mult)).collect();
        Polynomial::from_roots(&roots, self.prec)
    }

    /// Ω_n(z) = ∏ (z − ẑ_j)^{m_j}.
    pub fn omega_scaled(&self) -> Polynomial {
        let roots: Vec<_> = self.scaled_points().into_iter().map(|p| (p.z, p.mult)).collect();
        Polynomial::from_roots(&roots, self.prec)
    }

    /// Same degrees, every point negated.
    pub fn reflect(&self) -> Self {
        let pts = self.points.iter().map(|p| (-&p.z, p.mult)).collect();
        Self::build(pts, self.n2, self.n1, self.prec).expect("reflection preserves validity")
    }

    /// Same points with different degree bounds.
    pub fn with_degrees(&self, n1: usize, n2: usize) -> Result<Self> {
        Self::build(self.points.iter().map(|p| (p.z.clone(), p.mult)).collect(), n1, n2, self.prec)
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        let points = self
            .points
            .iter()
            .map(|p| SchemePoint {
                z: p.z.with_prec(prec),
                mult: p.mult,
            })
            .collect();
        InterpolationScheme {
            points,
            n1: self.n1,
            n2: self.n2,
            prec,
        }
    }

    pub fn from_file(f: &SchemeFile, prec: u32) -> Result<Self> {
        if f.points.is_empty() {
            return Err(Error::Parse("scheme has no points".into()));
        }
        let mut raw = Vec::with_capacity(f.points.len());
        for p in &f.points {
            raw.push((BigComplex::parse(prec, &p.re, &p.im)?, p.mult));
        }
        Self::build(raw, f.n1, f.n2, prec)
    }

    pub fn from_json(s: &str, prec: u32) -> Result<Self> {
        let f: SchemeFile = serde_json::from_str(s).map_err(|e| Error::Parse(format!("scheme JSON: {e}")))?;
        Self::from_file(&f, prec)
    }

    /// Decimal form with enough digits to round-trip at the scheme precision.
    pub fn to_file(&self) -> SchemeFile {
        let digits = (self.prec as f64 * std::f64::consts::LOG10_2).ceil() as usize + 2;
        let fmt = |x: &Float| if x.is_zero() { "0".to_string() } else { x.to_string_radix(10, Some(digits)) };
        SchemeFile {
            n1: self.n1,
            n2: self.n2,
            points: self
                .points
                .iter()
                .map(|p| PointSpec {
                    re: fmt(&p.z.re),
                    im: fmt(&p.z.im),
                    mult: p.mult,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("scheme serializes")
    }

    /// Hex SHA-256 of the canonical JSON form.
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(self.to_json().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 256;

    #[test]
    fn pade_scheme() {
        let s = InterpolationScheme::pade(50, P);
        assert_eq!(s.total(), 101);
        assert!(s.rho().is_zero());
        assert!(s.t().is_zero());
        assert_eq!(s.points().len(), 1);
    }

    #[test]
    fn two_point_type_51_50() {
        let x = |v: f64| BigComplex::from_f64(P, v, 0.0);
        let s = InterpolationScheme::build(vec![(x(-50.0), 51), (x(50.0), 51)], 51, 50, P).unwrap();
        assert_eq!(s.total(), 102);
        assert!(InterpolationScheme::build(vec![(x(-50.0), 51), (x(50.0), 51)], 50, 50, P).is_err());
    }

    #[test]
    fn circle_rho_and_t() {
        let s = InterpolationScheme::circle(50, &Float::with_val(P, 60), P);
        assert_eq!(s.points().len(), 101);
        assert!((s.rho().to_f64() - 60.0).abs() < 1e-12);
        assert!((s.t().to_f64() - 1.2).abs() < 1e-12);
    }

    #[test]
    fn merges_duplicates_and_reflects() {
        let a = BigComplex::from_f64(P, 1.0, 2.0);
        let s = InterpolationScheme::build(vec![(a.clone(), 1), (a.clone(), 2)], 1, 1, P).unwrap();
        assert_eq!(s.points().len(), 1);
        assert_eq!(s.points()[0].mult, 3);
        let r = s.reflect();
        assert_eq!(r.points()[0].z, -&a);
        let z = InterpolationScheme::pade(3, P);
        assert!(z.reflect().points()[0].z.is_zero());
    }

    #[test]
    fn json_roundtrip() {
        let json = r#"{"n1":1,"n2":1,"points":[{"re":"0.5","im":"-1","mult":2},{"re":"2","im":"0","mult":1}]}"#;
        let s = InterpolationScheme::from_json(json, P).unwrap();
        let back = InterpolationScheme::from_json(&s.to_json(), P).unwrap();
        assert_eq!(s.points(), back.points());
        assert_eq!(s.hash(), back.hash());
        assert!(InterpolationScheme::from_json("", P).is_err());
        assert!(InterpolationScheme::from_json(r#"{"n1":0,"n2":0,"points":[]}"#, P).is_err());
    }
}
