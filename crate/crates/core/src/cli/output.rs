//! CSV, JSON and SVG emission with a metadata header.

use std::fmt::Write as _;

use num_complex::Complex64;
use rug::Float;
use serde::Serialize;

use crate::interp::{InterpolationScheme, RationalInterpolant};
use crate::numkern::BigComplex;

#[derive(Clone, Debug, Serialize)]
pub struct Metadata {
    pub precision: u32,
    pub scheme_hash: String,
    pub normalization: String,
    pub n1: usize,
    pub n2: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    /// Conditions dropped from the scheme to fit the type; always 0 here.
    pub truncated_conditions: usize,
}

impl Metadata {
    pub fn new(scheme: &InterpolationScheme, r: &RationalInterpolant, preset: Option<&str>) -> Self {
        Metadata {
            precision: r.prec(),
            scheme_hash: scheme.hash(),
            normalization: r.normalization.as_str().to_string(),
            n1: scheme.n1(),
            n2: scheme.n2(),
            preset: preset.map(str::to_string),
            truncated_conditions: 0,
        }
    }

    fn header_lines(&self) -> Vec<(String, String)> {
        let mut v = vec![
            ("precision".to_string(), self.precision.to_string()),
            ("scheme_hash".to_string(), self.scheme_hash.clone()),
            ("normalization".to_string(), self.normalization.clone()),
            ("type".to_string(), format!("({}, {})", self.n1, self.n2)),
        ];
        if let Some(p) = &self.preset {
            v.push(("preset".to_string(), p.clone()));
        }
        v.push(("truncated_conditions".to_string(), self.truncated_conditions.to_string()));
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    Zero,
    Pole,
    InterpPoint,
    PadeZero,
    PadePole,
}

impl RowKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RowKind::Zero => "zero",
            RowKind::Pole => "pole",
            RowKind::InterpPoint => "interp_point",
            RowKind::PadeZero => "pade_zero",
            RowKind::PadePole => "pade_pole",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Row {
    pub kind: RowKind,
    pub z: Complex64,
}

/// Shortest round-trip decimal for a double, with −0 printed as 0.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x:e}")
    }
}

/// Decimal string carrying the full binary precision of `x`.
pub fn fmt_float(x: &Float) -> String {
    let digits = (x.prec() as f64 * std::f64::consts::LOG10_2).ceil() as usize + 2;
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_string_radix(10, Some(digits))
}

#[derive(Clone, Debug, Serialize)]
pub struct DecimalComplex {
    pub re: String,
    pub im: String,
}

impl From<&BigComplex> for DecimalComplex {
    fn from(z: &BigComplex) -> Self {
        DecimalComplex {
            re: fmt_float(&z.re),
            im: fmt_float(&z.im),
        }
    }
}

pub fn rows_csv(meta: &Metadata, rows: &[Row]) -> String {
    let mut s = String::new();
    for (k, v) in meta.header_lines() {
        let _ = writeln!(s, "# {k}: {v}");
    }
    s.push_str("kind,re,im\n");
    for r in rows {
        let _ = writeln!(s, "{},{},{}", r.kind.as_str(), fmt_f64(r.z.re), fmt_f64(r.z.im));
    }
    s
}

/// Static scatter on the fixed window [−150, 150]², imaginary axis up.
pub fn rows_svg(meta: &Metadata, rows: &[Row]) -> String {
    let mut s = String::new();
    s.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-150 -150 300 300\" width=\"600\" height=\"600\">\n");
    s.push_str("<!--\n");
    for (k, v) in meta.header_lines() {
        let _ = writeln!(s, "{k}: {v}");
    }
    s.push_str("-->\n");
    s.push_str("<rect x=\"-150\" y=\"-150\" width=\"300\" height=\"300\" fill=\"white\"/>\n");
    s.push_str(
        "<g stroke=\"#bbbbbb\" stroke-width=\"0.3\"><line x1=\"-150\" y1=\"0\" x2=\"150\" y2=\"0\"/><line x1=\"0\" y1=\"-150\" x2=\"0\" y2=\"150\"/></g>\n",
    );
    // Reference dots first so the markers sit on top.
    let mut order: Vec<&Row> = rows.iter().filter(|r| matches!(r.kind, RowKind::PadeZero | RowKind::PadePole)).collect();
    order.extend(rows.iter().filter(|r| !matches!(r.kind, RowKind::PadeZero | RowKind::PadePole)));
    for r in order {
        let (x, y) = (r.z.re, -r.z.im);
        if !(x.is_finite() && y.is_finite()) {
            continue;
        }
        let (x, y) = (fmt_coord(x), fmt_coord(y));
        let _ = match r.kind {
            RowKind::Zero => writeln!(
                s,
                "<circle cx=\"{x}\" cy=\"{y}\" r=\"1.6\" fill=\"none\" stroke=\"black\" stroke-width=\"0.4\"/>"
            ),
            RowKind::Pole => writeln!(s, "<circle cx=\"{x}\" cy=\"{y}\" r=\"1.6\" fill=\"black\"/>"),
            RowKind::InterpPoint => writeln!(
                s,
                "<path d=\"M{x} {y}m0 -2.2l2.2 2.2l-2.2 2.2l-2.2 -2.2z\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"0.4\"/>"
            ),
            RowKind::PadeZero | RowKind::PadePole => writeln!(s, "<circle cx=\"{x}\" cy=\"{y}\" r=\"0.6\" fill=\"#888888\"/>"),
        };
    }
    s.push_str("</svg>\n");
    s
}

fn fmt_coord(v: f64) -> String {
    let r = (v * 1000.0).round() / 1000.0;
    if r == 0.0 {
        "0".to_string()
    } else {
        format!("{r}")
    }
}
