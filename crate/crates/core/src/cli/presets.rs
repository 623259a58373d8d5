//! The twelve figure presets and the schemes they generate.

use rug::Float;

use crate::interp::InterpolationScheme;
use crate::numkern::BigComplex;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PresetKind {
    /// Two real points ±x of multiplicity 51, type (51, 50).
    TwoPoint,
    /// 101 equispaced points on [−x, x], n = 50.
    Line,
    /// 101 equispaced points on the circle of radius x, n = 50.
    Circle,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FigurePreset {
    pub id: String,
    pub kind: PresetKind,
    /// Decimal parameter exactly as written in the id.
    pub param: String,
    /// Overlay the degree-50 Padé zeros and poles.
    pub overlay: bool,
}

pub const PRESET_IDS: [&str; 12] = [
    "two-point-50",
    "two-point-65",
    "two-point-85",
    "two-point-100",
    "line-60",
    "line-72.5",
    "line-87.5",
    "line-110",
    "circle-60",
    "circle-77.5",
    "circle-92.5",
    "circle-110",
];

impl FigurePreset {
    pub fn from_id(id: &str) -> Result<Self> {
        if !PRESET_IDS.contains(&id) {
            return Err(Error::Parse(format!("unknown preset {id:?}; expected one of {}", PRESET_IDS.join(", "))));
        }
        let (kind, param) = if let Some(p) = id.strip_prefix("two-point-") {
            (PresetKind::TwoPoint, p)
        } else if let Some(p) = id.strip_prefix("line-") {
            (PresetKind::Line, p)
        } else {
            (PresetKind::Circle, id.strip_prefix("circle-").expect("known id"))
        };
        Ok(FigurePreset {
            id: id.to_string(),
            kind,
            param: param.to_string(),
            overlay: true,
        })
    }

    pub fn all() -> Vec<FigurePreset> {
        PRESET_IDS.iter().map(|id| FigurePreset::from_id(id).expect("known id")).collect()
    }

    pub fn scheme(&self, prec: u32) -> Result<InterpolationScheme> {
        let x = Float::parse(&self.param)
            .map(|v| Float::with_val(prec, v))
            .map_err(|e| Error::Parse(format!("{}: {e}", self.param)))?;
        match self.kind {
            PresetKind::TwoPoint => {
                let left = BigComplex::from_real(-x.clone());
                let right = BigComplex::from_real(x);
                InterpolationScheme::build(vec![(left, 51), (right, 51)], 51, 50, prec)
            }
            PresetKind::Line => {
                let pts = (0..=100)
                    .map(|k| {
                        let s = Float::with_val(prec, 2 * k - 100) / 100u32;
                        (BigComplex::from_real(Float::with_val(prec, &x * &s)), 1)
                    })
                    .collect();
                InterpolationScheme::build(pts, 50, 50, prec)
            }
            PresetKind::Circle => Ok(InterpolationScheme::circle(50, &x, prec)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_presets_build() {
        for p in FigurePreset::all() {
            let s = p.scheme(128).unwrap();
            assert_eq!(s.total(), s.n1() + s.n2() + 1, "{}", p.id);
        }
        assert!(FigurePreset::from_id("circle-61").is_err());
    }

    #[test]
    fn preset_shapes() {
        let s = FigurePreset::from_id("two-point-50").unwrap().scheme(128).unwrap();
        assert_eq!((s.n1(), s.n2(), s.points().len()), (51, 50, 2));
        let s = FigurePreset::from_id("circle-60").unwrap().scheme(128).unwrap();
        assert!((s.rho().to_f64() - 60.0).abs() < 1e-12);
        assert!((s.t().to_f64() - 1.2).abs() < 1e-12);
        let s = FigurePreset::from_id("line-72.5").unwrap().scheme(128).unwrap();
        assert_eq!(s.points().len(), 101);
        assert!((s.rho().to_f64() - 72.5).abs() < 1e-12);
    }
}
