//! The three commands as library functions returning in-memory artifacts.

use std::collections::HashMap;
use std::path::Path;
use std::sync::Mutex;

use num_complex::Complex64;
use once_cell::sync::Lazy;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::config::{Command, Format, Grid, RunConfig};
use super::output::{fmt_float, rows_csv, rows_svg, DecimalComplex, Metadata, Row, RowKind};
use super::presets::FigurePreset;
use super::verify::run_suite;
use crate::interp::{solve_interpolant, InterpolationScheme, RationalInterpolant};
use crate::numkern::BigComplex;
use crate::{Error, Result};

/// Everything produced for one scheme; rendered on demand.
#[derive(Clone, Debug)]
pub struct Artifact {
    pub meta: Metadata,
    pub rows: Vec<Row>,
    pub json: serde_json::Value,
}

impl Artifact {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => rows_csv(&self.meta, &self.rows),
            Format::Svg => rows_svg(&self.meta, &self.rows),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
        }
    }

    pub fn count(&self, kind: RowKind) -> usize {
        self.rows.iter().filter(|r| r.kind == kind).count()
    }
}

fn interp_rows(scheme: &InterpolationScheme) -> Vec<Row> {
    let mut rows = Vec::new();
    for p in scheme.points() {
        for _ in 0..p.mult {
            rows.push(Row {
                kind: RowKind::InterpPoint,
                z: p.z.to_c64(),
            });
        }
    }
    rows
}

fn root_rows(r: &RationalInterpolant, zero: RowKind, pole: RowKind) -> Result<Vec<Row>> {
    let zp = r.zeros_poles()?;
    let mut rows: Vec<Row> = zp.zeros.iter().map(|z| Row { kind: zero, z: z.to_c64() }).collect();
    rows.extend(zp.poles.iter().map(|z| Row { kind: pole, z: z.to_c64() }));
    Ok(rows)
}

#[derive(Serialize)]
struct GridValue {
    re: f64,
    im: f64,
    /// |e^z + p(z)/q(z)| as a decimal string.
    error: String,
}

fn grid_values(r: &RationalInterpolant, grid: &Grid) -> Vec<GridValue> {
    let prec = r.prec();
    grid.points()
        .into_iter()
        .map(|(re, im)| {
            let z = BigComplex::from_f64(prec, re, im);
            let e = &(&r.remainder(&z) * &z.scale_f64(0.5).exp()) / &r.q.eval(&z);
            GridValue {
                re,
                im,
                error: e.abs().to_string_radix(10, Some(12)),
            }
        })
        .collect()
}

/// Solves one scheme and collects coefficients, zeros, poles and residuals.
pub fn interpolate(scheme: &InterpolationScheme, prec: u32, preset: Option<&str>, grid: Option<&Grid>) -> Result<Artifact> {
    let scheme = scheme.with_prec(prec);
    let r = solve_interpolant(&scheme, prec)?;
    let meta = Metadata::new(&scheme, &r, preset);
    let zp = r.zeros_poles()?;
    let mut rows = root_rows(&r, RowKind::Zero, RowKind::Pole)?;
    rows.extend(interp_rows(&scheme));
    let coeffs = |p: &crate::Polynomial| (0..=p.degree()).map(|k| DecimalComplex::from(&p.coeff(k))).collect::<Vec<_>>();
    let pairs = |v: &[BigComplex]| v.iter().map(DecimalComplex::from).collect::<Vec<_>>();
    let mut json = json!({
        "metadata": meta,
        "scheme": scheme.to_file(),
        "p": coeffs(&r.p),
        "q": coeffs(&r.q),
        "zeros": pairs(&zp.zeros),
        "poles": pairs(&zp.poles),
        "residual": fmt_float(&r.residual_check()),
        "defect": r.defect,
        "min_modulus": zp.min_modulus.as_ref().map(fmt_float),
    });
    if let Some(g) = grid {
        json["grid"] = serde_json::to_value(grid_values(&r, g))?;
    }
    Ok(Artifact { meta, rows, json })
}

static PADE_OVERLAY: Lazy<Mutex<HashMap<u32, Vec<Row>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Zeros and poles of the degree-50 Padé approximant, cached per precision.
pub fn pade_overlay(prec: u32) -> Result<Vec<Row>> {
    if let Some(v) = PADE_OVERLAY.lock().expect("overlay cache").get(&prec) {
        return Ok(v.clone());
    }
    let r = solve_interpolant(&InterpolationScheme::pade(50, prec), prec)?;
    let rows = root_rows(&r, RowKind::PadeZero, RowKind::PadePole)?;
    PADE_OVERLAY.lock().expect("overlay cache").insert(prec, rows.clone());
    Ok(rows)
}

/// One figure: the preset's zeros, poles and nodes, plus the Padé overlay.
pub fn figure(preset: &FigurePreset, prec: u32) -> Result<Artifact> {
    let scheme = preset.scheme(prec)?;
    let mut art = interpolate(&scheme, prec, Some(&preset.id), None)?;
    if preset.overlay {
        let overlay = pade_overlay(prec)?;
        let extra: Vec<serde_json::Value> = overlay.iter().map(|r| json!({"kind": r.kind, "re": r.z.re, "im": r.z.im})).collect();
        art.json["pade_overlay"] = serde_json::Value::Array(extra);
        art.rows.extend(overlay);
    }
    Ok(art)
}

/// All presets, in preset order; computed in parallel.
pub fn all_figures(prec: u32) -> Vec<(FigurePreset, Result<Artifact>)> {
    // Fill the overlay cache once before fanning out.
    let _ = pade_overlay(prec);
    let presets = FigurePreset::all();
    let arts: Vec<Result<Artifact>> = presets.par_iter().map(|p| figure(p, prec)).collect();
    presets.into_iter().zip(arts).collect()
}

/// Points of the scaled plane where zeros and poles of a diagonal interpolant
/// sit, as plain doubles.
pub fn scaled_roots(r: &RationalInterpolant) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    let zp = r.zeros_poles()?;
    Ok((
        zp.zeros_scaled.iter().map(BigComplex::to_c64).collect(),
        zp.poles_scaled.iter().map(BigComplex::to_c64).collect(),
    ))
}

/// What the binary should print and which exit code to use.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

fn write_or_print(out: Option<&Path>, text: String, stdout: &mut String) -> Result<()> {
    match out {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            std::fs::write(p, text)?;
        }
        None => stdout.push_str(&text),
    }
    Ok(())
}

fn load_scheme(cfg: &RunConfig) -> Result<(InterpolationScheme, Option<String>)> {
    let prec = cfg.precision;
    if let Some(path) = &cfg.scheme {
        let text = std::fs::read_to_string(path)?;
        return Ok((InterpolationScheme::from_json(&text, prec)?, None));
    }
    if let Some(id) = &cfg.preset {
        let p = FigurePreset::from_id(id)?;
        return Ok((p.scheme(prec)?, Some(p.id)));
    }
    let n = cfg.n.ok_or_else(|| Error::Parse("no scheme source given".into()))?;
    Ok((InterpolationScheme::pade(n, prec), None))
}

/// Runs a validated configuration.
pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let mut stdout = String::new();
    match &cfg.command {
        Command::Interpolate => {
            let (scheme, preset) = load_scheme(cfg)?;
            let art = interpolate(&scheme, cfg.precision, preset.as_deref(), cfg.grid.as_ref())?;
            let format = cfg.format.unwrap_or(Format::Json);
            write_or_print(cfg.out.as_deref(), art.render(format), &mut stdout)?;
            Ok(Outcome { stdout, exit_code: 0 })
        }
        Command::Figure => {
            let preset = FigurePreset::from_id(cfg.preset.as_deref().expect("validated"))?;
            let art = figure(&preset, cfg.precision)?;
            let formats = match cfg.format {
                Some(f) => vec![f],
                None if cfg.out.is_some() => vec![Format::Csv, Format::Svg],
                None => vec![Format::Csv],
            };
            for f in formats {
                let path = cfg
                    .out
                    .as_ref()
                    .map(|o| if cfg.format.is_some() { o.clone() } else { o.with_extension(f.extension()) });
                write_or_print(path.as_deref(), art.render(f), &mut stdout)?;
            }
            Ok(Outcome { stdout, exit_code: 0 })
        }
        Command::Verify(suite) => {
            let sweep = cfg.sweep.clone().or(cfg.n.map(|n| vec![n]));
            let report = run_suite(*suite, sweep.as_deref(), cfg.precision);
            // A report file defaults to JSON; the table always reaches stdout.
            let text = match (cfg.format, &cfg.out) {
                (Some(f), _) => report.render(f),
                (None, Some(_)) => report.to_json(),
                (None, None) => report.to_table(),
            };
            write_or_print(cfg.out.as_deref(), text, &mut stdout)?;
            if cfg.out.is_some() {
                stdout.push_str(&report.to_table());
            }
            Ok(Outcome {
                stdout,
                exit_code: if report.all_passed() { 0 } else { 1 },
            })
        }
    }
}
