//! Verification criteria and the suites that group them.

use std::fmt::Write as _;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rug::Float;
use serde::Serialize;

use super::commands::{all_figures, scaled_roots};
use super::config::{Format, Suite};
use super::output::RowKind;
use crate::asym::{c0_root, pade_constant, reduce_mod_2pi_i, solve_endpoints, ErrorModel, GApparatus, Side};
use crate::geom::{
    classify_region, directed_hausdorff, empirical_moments, gamma1, limit_measures, measure_moments, moment_discrepancy, real_axis_crossing, step_halving_gap,
    trace_gamma2, trace_upper, Region, TraceOptions,
};
use crate::interp::{assemble_y, orthogonality_defect, solve_interpolant, InterpolationScheme, RationalInterpolant};
use crate::numkern::BigComplex;
use crate::Result;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: String,
    pub name: String,
    pub passed: bool,
    pub measured: String,
    pub threshold: String,
}

impl CriterionResult {
    fn new(id: &str, name: &str, passed: bool, measured: String, threshold: &str) -> Self {
        CriterionResult {
            id: id.into(),
            name: name.into(),
            passed,
            measured,
            threshold: threshold.into(),
        }
    }

    fn failed(id: &str, name: &str, err: crate::Error, threshold: &str) -> Self {
        CriterionResult::new(id, name, false, format!("error: {err}"), threshold)
    }

    /// `PASS [id] name: measured (threshold)`.
    pub fn line(&self) -> String {
        format!(
            "{} [{}] {}: {} (want {})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.measured,
            self.threshold
        )
    }
}

fn wrap(id: &str, name: &str, threshold: &str, f: impl FnOnce() -> Result<(bool, String)>) -> CriterionResult {
    match f() {
        Ok((ok, m)) => CriterionResult::new(id, name, ok, m, threshold),
        Err(e) => CriterionResult::failed(id, name, e, threshold),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub precision: u32,
    pub criteria: Vec<CriterionResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        for c in &self.criteria {
            let _ = writeln!(s, "{}", c.line());
        }
        let passed = self.criteria.iter().filter(|c| c.passed).count();
        let _ = writeln!(s, "{passed}/{} passed", self.criteria.len());
        s
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = format!("# precision: {}\nid,name,passed,measured,threshold\n", self.precision);
        for c in &self.criteria {
            let _ = writeln!(
                s,
                "{},\"{}\",{},\"{}\",\"{}\"",
                c.id,
                c.name,
                c.passed,
                c.measured.replace('"', "'"),
                c.threshold
            );
        }
        s
    }

    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Svg => self.to_table(),
        }
    }
}

/// Needs at least two values; a single degree shows no trend.
fn strictly_decreasing(v: &[f64]) -> bool {
    v.len() >= 2 && v.windows(2).all(|w| w[1] < w[0])
}

fn fmt_list(v: &[f64]) -> String {
    v.iter().map(|x| format!("{x:.3e}")).collect::<Vec<_>>().join(", ")
}

/// 1: c₀ from the Newton root of η on the positive axis.
pub fn c0_value(prec: u32) -> CriterionResult {
    wrap("1", "c0 root", "|c0 - 0.66274| <= 1e-4, runtime < 1 s", || {
        let t = Instant::now();
        let c0 = c0_root(prec)?.re.to_f64();
        let el = t.elapsed().as_secs_f64();
        Ok(((c0 - 0.66274).abs() <= 1e-4 && el < 1.0, format!("c0 = {c0:.8}, {el:.3} s")))
    })
}

/// 2: Padé endpoints and the constant 2g(0) + 2ℓ.
pub fn pade_endpoints(prec: u32) -> CriterionResult {
    wrap(
        "2",
        "Pade endpoints and 2g(0)+2l",
        "|h| <= 1e-200; |2g(0)+2l - (-2+log4+i pi)| <= 1e-20 mod 2 pi i",
        || {
            let s = InterpolationScheme::pade(10, prec);
            let e = solve_endpoints(&s, prec)?;
            let res = e.residual_a.clone().max(&e.residual_b).to_f64();
            let near = (&e.a - &BigComplex::i(prec)).abs_f64().max((&e.b + &BigComplex::i(prec)).abs_f64());
            let app = GApparatus::from_pair(&s, e, prec)?;
            let target = pade_constant(prec);
            let closed = reduce_mod_2pi_i(&(&app.two_g0_plus_two_ell()? - &target)).abs_f64();
            let g0 = app.g(&BigComplex::zero(prec))?;
            let cont = reduce_mod_2pi_i(&(&(&g0.scale_f64(2.0) + app.two_ell()) - &target)).abs_f64();
            let ok = res <= 1e-200 && near <= 1e-200 && closed <= 1e-20 && cont <= 1e-20;
            Ok((
                ok,
                format!("|h| = {res:.2e}, |(a,b) - (i,-i)| = {near:.2e}, closed form {closed:.2e}, continued {cont:.2e}"),
            ))
        },
    )
}

/// Grid of 25 points in 0 < |z| ≤ 2 avoiding the origin.
fn disk_grid_25() -> Vec<Complex64> {
    let mut v = Vec::with_capacity(25);
    for r in [0.4, 0.8, 1.2, 1.6, 2.0] {
        for k in 0..5 {
            v.push(Complex64::from_polar(r, 2.0 * std::f64::consts::PI * k as f64 / 5.0 + 0.3));
        }
    }
    v
}

/// max over the grid of |(e^z + r(z))/M(z) − 1| for the Padé scheme of degree n.
pub fn pade_error_ratio(n: usize, prec: u32) -> Result<f64> {
    let s = InterpolationScheme::pade(n, prec);
    let m = ErrorModel::new(&s, prec)?;
    let r = solve_interpolant(&s, prec)?;
    let mut worst = 0.0f64;
    for z in disk_grid_25() {
        let z = BigComplex::from_c64(prec, z);
        let ratio = &ErrorModel::actual_error(&r, &z) / &m.model(&z);
        worst = worst.max((&ratio - &BigComplex::one(prec)).abs_f64());
    }
    Ok(worst)
}

/// 3: the error model tracks the actual error better as n grows.
pub fn error_ratio(sweep: &[usize], prec: u32) -> CriterionResult {
    wrap("3", "error model ratio (Pade)", "strictly decreasing in n; <= 0.25 at the largest n", || {
        let v = sweep.par_iter().map(|&n| pade_error_ratio(n, prec)).collect::<Result<Vec<_>>>()?;
        let ok = strictly_decreasing(&v) && *v.last().expect("nonempty sweep") <= 0.25;
        Ok((ok, format!("n = {sweep:?}: {}", fmt_list(&v))))
    })
}

/// |c_n − 1| for the unit-circle scheme at degree n.
pub fn unit_circle_cn_gap(n: usize, prec: u32) -> Result<f64> {
    let s = InterpolationScheme::circle(n, &Float::with_val(prec, 1), prec);
    let m = ErrorModel::new(&s, prec)?;
    Ok((&m.c_n - &BigComplex::one(prec)).abs_f64())
}

/// 4: c_n − 1 shrinks at least like t² for a fixed-radius scheme.
pub fn cn_decay(prec: u32) -> CriterionResult {
    wrap("4", "c_n decay (rho = 1)", "|c_40 - 1| <= |c_20 - 1| / 4", || {
        let v = [20usize, 40].par_iter().map(|&n| unit_circle_cn_gap(n, prec)).collect::<Result<Vec<_>>>()?;
        let ok = v[1] <= 0.25 * v[0];
        Ok((ok, format!("|c_20 - 1| = {:.3e}, |c_40 - 1| = {:.3e}, ratio {:.4}", v[0], v[1], v[1] / v[0])))
    })
}

/// 5: no zeros or poles in the disk of radius ρ_n.
pub fn root_free_disk(prec: u32) -> CriterionResult {
    wrap("5", "root-free disk (circle 0.5 sqrt(n), n = 40)", "min |zero or pole| > rho_n", || {
        let n = 40;
        let rho = Float::with_val(prec, n).sqrt() / 2u32;
        let s = InterpolationScheme::circle(n, &rho, prec);
        let r = solve_interpolant(&s, prec)?;
        let zp = r.zeros_poles()?;
        let m = zp.min_modulus.map(|m| m.to_f64()).unwrap_or(f64::INFINITY);
        let rho = rho.to_f64();
        Ok((m > rho, format!("{} points, min modulus {m:.4} vs rho {rho:.4}", s.total())))
    })
}

fn denominator_gap(n: usize, prec: u32) -> Result<f64> {
    let r = solve_interpolant(&InterpolationScheme::pade(n, prec), prec)?;
    let mut worst = 0.0f64;
    for x in [-0.7, 0.0, 0.7] {
        for y in [-0.7, 0.0, 0.7] {
            let z = BigComplex::from_f64(prec, x, y);
            let target = z.scale_f64(-0.5).exp();
            worst = worst.max((&r.q.eval(&z) - &target).abs_f64());
        }
    }
    Ok(worst)
}

/// 6: the normalized denominator approaches e^{−z/2}.
pub fn denominator_limit(sweep: &[usize], prec: u32) -> CriterionResult {
    wrap("6", "q_n -> exp(-z/2) (Pade)", "<= 0.1 at the largest n and decreasing", || {
        let v = sweep.par_iter().map(|&n| denominator_gap(n, prec)).collect::<Result<Vec<_>>>()?;
        let ok = strictly_decreasing(&v) && *v.last().expect("nonempty sweep") <= 0.1;
        Ok((ok, format!("n = {sweep:?}: {}", fmt_list(&v))))
    })
}

const MOMENTS: usize = 8;

fn moment_gaps(n: usize, prec: u32, mp: &[Complex64], mq: &[Complex64]) -> Result<(f64, f64)> {
    let r = solve_interpolant(&InterpolationScheme::pade(n, prec), prec)?;
    let (zeros, poles) = scaled_roots(&r)?;
    Ok((
        moment_discrepancy(&empirical_moments(&zeros, MOMENTS), mp),
        moment_discrepancy(&empirical_moments(&poles, MOMENTS), mq),
    ))
}

/// 7: scaled zero/pole counting measures approach μ_P and μ_Q.
pub fn weak_convergence(sweep: &[usize], prec: u32) -> CriterionResult {
    wrap(
        "7",
        "moment discrepancy to mu_P / mu_Q (K = 8)",
        "decreasing in n; masses 1 +- 1e-6; weights > 0",
        || {
            let (mu_p, mu_q) = limit_measures(2000)?;
            let masses = [mu_p.mass(), mu_q.mass()];
            let positive = mu_p.weights.iter().all(|&w| w > 0.0);
            let (mp, mq) = (measure_moments(&mu_p, MOMENTS), measure_moments(&mu_q, MOMENTS));
            let v = sweep.par_iter().map(|&n| moment_gaps(n, prec, &mp, &mq)).collect::<Result<Vec<_>>>()?;
            let dp: Vec<f64> = v.iter().map(|x| x.0).collect();
            let dq: Vec<f64> = v.iter().map(|x| x.1).collect();
            let ok = strictly_decreasing(&dp) && strictly_decreasing(&dq) && masses.iter().all(|m| (m - 1.0).abs() <= 1e-6) && positive;
            Ok((
                ok,
                format!(
                    "P: {}; Q: {}; masses {:.9}, {:.9}; positive weights {positive}",
                    fmt_list(&dp),
                    fmt_list(&dq),
                    masses[0],
                    masses[1]
                ),
            ))
        },
    )
}

/// Seven fixed complex nodes for a type-(3, 3) scheme.
pub fn seven_point_scheme(prec: u32) -> Result<InterpolationScheme> {
    let pts = [(0.5, 0.2), (-0.3, 0.7), (1.1, -0.4), (-0.8, -0.6), (0.1, 1.2), (-1.0, 0.1), (0.6, -1.0)];
    InterpolationScheme::build(pts.iter().map(|&(x, y)| (BigComplex::from_f64(prec, x, y), 1)).collect(), 3, 3, prec)
}

/// 20 sample points: 10 inside the unit-scale disk and 10 well outside Γ_n.
fn det_samples(gamma: f64) -> Vec<Complex64> {
    let mut v = Vec::new();
    for k in 0..10 {
        let th = 2.0 * std::f64::consts::PI * k as f64 / 10.0 + 0.17;
        v.push(Complex64::from_polar(0.35 + 0.05 * k as f64, th));
        v.push(Complex64::from_polar(gamma * (1.3 + 0.1 * k as f64), -th));
    }
    v
}

fn det_gap(s: &InterpolationScheme, prec: u32) -> Result<f64> {
    let y = assemble_y(s, prec)?;
    let mut worst = 0.0f64;
    for z in det_samples(y.gamma_radius) {
        let d = y.det(&BigComplex::from_c64(prec, z));
        worst = worst.max((&d - &BigComplex::one(prec)).abs_f64());
    }
    Ok(worst)
}

/// 8: det Y = 1 inside and outside Γ_n.
pub fn det_identity(prec: u32) -> CriterionResult {
    wrap(
        "8",
        "det Y = 1 (Pade n = 3, 7-point scheme n = 3)",
        "|det Y - 1| <= 1e-150 at 20 points",
        || {
            let a = det_gap(&InterpolationScheme::pade(3, prec), prec)?;
            let b = det_gap(&seven_point_scheme(prec)?, prec)?;
            Ok((a <= 1e-150 && b <= 1e-150, format!("Pade {a:.2e}, 7-point {b:.2e}")))
        },
    )
}

/// 9: orthogonality defects for j < n are negligible against j = n.
pub fn orthogonality(prec: u32) -> CriterionResult {
    wrap("9", "orthogonality (Pade n = 15)", "|defect(j)| <= 1e-40 |defect(n)| for j < n", || {
        let n = 15;
        let r = solve_interpolant(&InterpolationScheme::pade(n, prec), prec)?;
        let vals = (0..=n)
            .into_par_iter()
            .map(|j| orthogonality_defect(&r, j, 1.5).map(|q| q.value.abs_f64()))
            .collect::<Result<Vec<_>>>()?;
        let top = vals[n];
        let worst = vals[..n].iter().cloned().fold(0.0, f64::max) / top;
        Ok((
            top > 0.0 && worst <= 1e-40,
            format!("max_j<n |defect(j)| / |defect(n)| = {worst:.2e}, |defect(n)| = {top:.3e}"),
        ))
    })
}

/// 10: the traced γ₁ crosses the axis at −c₀ and is stable under step halving.
pub fn trajectory(prec: u32) -> CriterionResult {
    wrap(
        "10",
        "critical trajectory",
        "crossing within 1e-5 of -c0; halving gap <= 10 tol; endpoints reached",
        || {
            let opts = TraceOptions::default();
            let c0 = c0_root(prec.min(256))?.re.to_f64();
            let coarse = trace_upper(&opts)?;
            let fine = trace_upper(&TraceOptions {
                step: opts.step / 2.0,
                tol: opts.tol,
            })?;
            let cross = real_axis_crossing(&coarse).unwrap_or(f64::NAN);
            let dc = (cross + c0).abs();
            let gap = step_halving_gap(&coarse, &fine);
            let g = gamma1();
            let ends = (g[0] - Complex64::i()).norm().max((g[g.len() - 1] + Complex64::i()).norm());
            let ok = dc <= 1e-5 && gap <= 10.0 * opts.tol && ends <= 1e-10;
            Ok((
                ok,
                format!("crossing {cross:.8} (off by {dc:.2e}), halving gap {gap:.2e}, endpoint error {ends:.1e}"),
            ))
        },
    )
}

/// Largest coefficient entry in modulus; used to fix the global scalar.
fn proportional_gap(a: &[BigComplex], b: &[BigComplex]) -> f64 {
    let k = (0..a.len())
        .max_by(|&i, &j| a[i].abs().partial_cmp(&a[j].abs()).expect("finite"))
        .expect("nonempty");
    let lambda = &b[k] / &a[k];
    let mut num = Float::new(a[0].prec());
    let mut den = Float::new(a[0].prec());
    for (x, y) in a.iter().zip(b) {
        num += (y - &(&lambda * x)).norm_sqr();
        den += y.norm_sqr();
    }
    (num / den).sqrt().to_f64()
}

fn padded(r: &RationalInterpolant, p: bool, len: usize, negate: bool) -> Vec<BigComplex> {
    let poly = if p { &r.p } else { &r.q };
    (0..len).map(|k| if negate && k % 2 == 1 { -poly.coeff(k) } else { poly.coeff(k) }).collect()
}

/// Relative distance between solve(reflect(s)) and (q(−z), p(−z)) up to one scalar.
pub fn reflection_gap(s: &InterpolationScheme, prec: u32) -> Result<f64> {
    let r = solve_interpolant(s, prec)?;
    let t = solve_interpolant(&s.reflect(), prec)?;
    let (n1, n2) = (s.n1(), s.n2());
    let mut lhs = padded(&t, true, n2 + 1, false);
    lhs.extend(padded(&t, false, n1 + 1, false));
    let mut rhs = padded(&r, false, n2 + 1, true);
    rhs.extend(padded(&r, true, n1 + 1, true));
    Ok(proportional_gap(&rhs, &lhs))
}

/// Points drawn from a fixed seed, uniform in the disk of radius 3.
pub fn random_complex_scheme(n1: usize, n2: usize, seed: u64, prec: u32) -> Result<InterpolationScheme> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = (0..n1 + n2 + 1)
        .map(|_| {
            let r = 3.0 * rng.gen::<f64>().sqrt();
            let th = rng.gen_range(0.0..std::f64::consts::TAU);
            (BigComplex::from_c64(prec, Complex64::from_polar(r, th)), 1)
        })
        .collect();
    InterpolationScheme::build(pts, n1, n2, prec)
}

/// 11: the reflected scheme is solved by (q(−z), p(−z)).
pub fn reflection_symmetry(prec: u32) -> CriterionResult {
    wrap("11", "reflection duality", "relative gap <= 2^(-precision/2) on three schemes", || {
        let n = 10;
        let schemes = [
            ("Pade", InterpolationScheme::pade(n, prec)),
            ("circle", InterpolationScheme::circle(n, &(Float::with_val(prec, n).sqrt() / 2u32), prec)),
            ("random", random_complex_scheme(4, 6, 7, prec)?),
        ];
        let tol = 2f64.powf(-(prec as f64) / 2.0);
        let mut parts = Vec::new();
        let mut ok = true;
        for (name, s) in &schemes {
            let g = reflection_gap(s, prec)?;
            ok &= g <= tol;
            parts.push(format!("{name} {g:.2e}"));
        }
        Ok((ok, format!("{} (tol {tol:.2e})", parts.join(", "))))
    })
}

/// 12: every preset completes, circle-60 separates zeros and poles, reruns are byte-identical.
pub fn figures(prec: u32) -> CriterionResult {
    wrap(
        "12",
        "figure presets",
        "12/12 complete; circle-60 zeros Re < 0, poles Re > 0; byte-stable",
        || {
            let first = all_figures(prec);
            let second = all_figures(prec);
            let mut done = 0;
            let mut stable = true;
            let mut separated = false;
            for ((p, a), (_, b)) in first.iter().zip(&second) {
                let (Ok(a), Ok(b)) = (a, b) else { continue };
                done += 1;
                for f in [Format::Csv, Format::Svg, Format::Json] {
                    stable &= a.render(f) == b.render(f);
                }
                if p.id == "circle-60" {
                    let z = a.rows.iter().filter(|r| r.kind == RowKind::Zero).all(|r| r.z.re < 0.0);
                    let q = a.rows.iter().filter(|r| r.kind == RowKind::Pole).all(|r| r.z.re > 0.0);
                    separated = z && q && a.count(RowKind::Zero) == 50 && a.count(RowKind::Pole) == 50;
                }
            }
            let ok = done == 12 && stable && separated;
            Ok((ok, format!("{done}/12 complete, byte-stable {stable}, circle-60 separated {separated}")))
        },
    )
}

/// Runs acceptance criterion `id` (1..=12) with its stated parameters.
pub fn acceptance(id: u32, prec: u32) -> CriterionResult {
    match id {
        1 => c0_value(prec),
        2 => pade_endpoints(prec),
        3 => error_ratio(&[10, 20, 40], prec),
        4 => cn_decay(prec),
        5 => root_free_disk(prec),
        6 => denominator_limit(&[20, 40], prec),
        7 => weak_convergence(&[20, 40], prec),
        8 => det_identity(prec),
        9 => orthogonality(prec),
        10 => trajectory(prec),
        11 => reflection_symmetry(prec),
        12 => figures(prec),
        _ => CriterionResult::new(&id.to_string(), "unknown criterion", false, "no such criterion".into(), "1..=12"),
    }
}

/// Scaled zeros of Padé P_n and Q_n near γ₁ and γ₂.
pub fn hausdorff_to_curves(n: usize, prec: u32) -> CriterionResult {
    wrap("T2.h", "scaled Pade roots near the limit curves", "directed Hausdorff <= 0.25", || {
        let r = solve_interpolant(&InterpolationScheme::pade(n, prec), prec)?;
        let (zeros, poles) = scaled_roots(&r)?;
        let g2 = trace_gamma2(&TraceOptions::default())?;
        let hz = directed_hausdorff(&zeros, gamma1());
        let hp = directed_hausdorff(&poles, &g2);
        Ok((hz <= 0.25 && hp <= 0.25, format!("n = {n}: zeros to gamma1 {hz:.3e}, poles to gamma2 {hp:.3e}")))
    })
}

fn cut_samples(app: &GApparatus, count: usize) -> Vec<BigComplex> {
    let k = app.cut.len();
    (1..=count).map(|j| app.cut.vertex(j * (k - 1) / (count + 1))).collect()
}

/// Branch-sensitive identities of the g-function apparatus on one scheme.
pub fn apparatus_identities(label: &str, s: &InterpolationScheme, prec: u32) -> Vec<CriterionResult> {
    let app = match GApparatus::new(s, prec) {
        Ok(a) => a,
        Err(e) => return vec![CriterionResult::failed(&format!("A.{label}"), "apparatus construction", e, "constructs")],
    };
    let mut out = Vec::new();
    out.push(wrap(
        &format!("A.{label}.var"),
        "variational identity on the cut (20 points)",
        "<= 1e-15",
        || {
            let v = cut_samples(&app, 20)
                .par_iter()
                .map(|z| app.variational_residual(z))
                .collect::<Result<Vec<_>>>()?;
            let m = v.iter().cloned().fold(0.0, f64::max);
            Ok((m <= 1e-15, format!("{m:.2e}")))
        },
    ));
    out.push(wrap(&format!("A.{label}.szego"), "Szego relation D+ D- = 1/(z - z0)", "<= 1e-15", || {
        let v = cut_samples(&app, 10).par_iter().map(|z| app.szego_residual(z)).collect::<Result<Vec<_>>>()?;
        let m = v.iter().cloned().fold(0.0, f64::max);
        Ok((m <= 1e-15, format!("{m:.2e}")))
    }));
    out.push(wrap(&format!("A.{label}.mass"), "circulation of g' and mass of psi", "|. - 1| <= 1e-6", || {
        let circ = app.g_prime_circulation(3.0)?;
        let c = (circ.to_c64() / Complex64::new(0.0, std::f64::consts::TAU) - 1.0).norm();
        let light = GApparatus::from_pair(s, app.pair.clone(), prec.min(256))?;
        let m = (light.psi_mass()?.to_c64() - 1.0).norm();
        Ok((c <= 1e-6 && m <= 1e-6, format!("circulation {c:.2e}, psi mass {m:.2e}")))
    }));
    out.push(wrap(
        &format!("A.{label}.phi"),
        "phi by closed form vs path integral (10 points)",
        "<= 1e-15 mod 2 pi i",
        || {
            let pts = [
                (2.0, 0.0),
                (1.0, 1.0),
                (0.3, 0.4),
                (-0.2, -0.3),
                (-1.0, 0.4),
                (-1.5, -1.5),
                (0.5, -1.8),
                (3.0, 2.0),
                (-3.0, 0.5),
                (0.1, 2.5),
            ];
            let v = pts
                .par_iter()
                .map(|&(x, y)| {
                    let z = BigComplex::from_f64(prec, x, y);
                    let d = &app.phi_algebraic(&z, Side::Auto)? - &app.phi_integral(&z, Side::Auto)?;
                    Ok(reduce_mod_2pi_i(&d).abs_f64())
                })
                .collect::<Result<Vec<_>>>()?;
            let m = v.iter().cloned().fold(0.0, f64::max);
            Ok((m <= 1e-15, format!("{m:.2e}")))
        },
    ));
    out.push(wrap(&format!("A.{label}.inf"), "g(z) - log z at |z| = 1e6", "<= 1e-5", || {
        let z = BigComplex::from_f64(prec, 6e5, 8e5);
        let d = (&app.g(&z)? - &z.ln()).abs_f64();
        Ok((d <= 1e-5, format!("{d:.2e}")))
    }));
    out
}

/// Apparatus checks specific to the Padé case.
pub fn pade_apparatus(prec: u32) -> Vec<CriterionResult> {
    let s = InterpolationScheme::pade(10, prec);
    let app = match GApparatus::new(&s, prec) {
        Ok(a) => a,
        Err(e) => return vec![CriterionResult::failed("A.pade", "apparatus construction", e, "constructs")],
    };
    let mut out = Vec::new();
    out.push(wrap(
        "A.pade.sign",
        "sign of Re phi by region",
        "negative at 5 points of D0/D1inf, positive at 5 of D2inf",
        || {
            let neg = [(0.1, 0.0), (0.2, 0.5), (-0.3, -0.4), (-5.0, 0.0), (-2.0, 1.5)];
            let pos = [(1.0, 0.0), (0.5, -1.5), (2.0, 2.0), (3.0, 0.0), (0.8, 0.9)];
            let mut ok = true;
            let mut worst = (f64::NEG_INFINITY, f64::INFINITY);
            for (pts, want_neg) in [(&neg, true), (&pos, false)] {
                for &(x, y) in pts.iter() {
                    let reg = classify_region(Complex64::new(x, y));
                    ok &= if want_neg {
                        matches!(reg, Region::D0 | Region::D1Inf)
                    } else {
                        reg == Region::D2Inf
                    };
                    let v = app.phi_algebraic(&BigComplex::from_f64(prec, x, y), Side::Auto)?.re.to_f64();
                    if want_neg {
                        ok &= v < 0.0;
                        worst.0 = worst.0.max(v);
                    } else {
                        ok &= v > 0.0;
                        worst.1 = worst.1.min(v);
                    }
                }
            }
            Ok((ok, format!("max over negative set {:.3}, min over positive set {:.3}", worst.0, worst.1)))
        },
    ));
    out.push(wrap("A.pade.gprime", "g'(0) = 1 by central difference", "|g'(0) - 1| <= 1e-10", || {
        let h = BigComplex::from_f64(prec, 0.0, 1e-20);
        let d = &(&app.g(&h)? - &app.g(&-&h)?) / &h.scale_f64(2.0);
        let e = (&d - &BigComplex::one(prec)).abs_f64();
        Ok((e <= 1e-10, format!("{e:.2e}")))
    }));
    out.push(wrap("A.pade.cn", "c_n = 1 for Pade", "|c_n - 1| <= 1e-15", || {
        let m = ErrorModel::from_apparatus(&s, &app)?;
        let e = (&m.c_n - &BigComplex::one(prec)).abs_f64();
        Ok((e <= 1e-15, format!("{e:.2e}")))
    }));
    out
}

/// c_n is a function of the point set, not of its order.
pub fn cn_permutation(prec: u32) -> CriterionResult {
    wrap("A.cn-perm", "c_n under permutation of points", "difference <= 1e-15", || {
        let s = random_complex_scheme(6, 6, 11, prec)?;
        let mut raw: Vec<(BigComplex, usize)> = s.points().iter().map(|p| (p.z.clone(), p.mult)).collect();
        raw.reverse();
        raw.rotate_left(5);
        let t = InterpolationScheme::build(raw, 6, 6, prec)?;
        let a = ErrorModel::new(&s, prec)?;
        let b = ErrorModel::new(&t, prec)?;
        let d = (&a.c_n - &b.c_n).abs_f64();
        Ok((d <= 1e-15, format!("{d:.2e} (c_n = {:.6})", a.c_n.to_c64())))
    })
}

pub fn run_suite(suite: Suite, sweep: Option<&[usize]>, prec: u32) -> Report {
    let criteria = match suite {
        Suite::Theorem1 => vec![
            error_ratio(sweep.unwrap_or(&[10, 20, 40]), prec),
            cn_decay(prec),
            root_free_disk(prec),
            denominator_limit(sweep.unwrap_or(&[20, 40]), prec),
        ],
        Suite::Theorem2 => {
            let sw = sweep.unwrap_or(&[20, 40]);
            vec![weak_convergence(sw, prec), trajectory(prec), hausdorff_to_curves(50, prec), figures(prec)]
        }
        Suite::Apparatus => {
            let mut v = vec![c0_value(prec), pade_endpoints(prec)];
            v.extend(pade_apparatus(prec));
            let circle = InterpolationScheme::circle(10, &Float::with_val(prec, 2), prec);
            v.extend(apparatus_identities("circle", &circle, prec));
            v.push(cn_permutation(prec));
            v.push(det_identity(prec));
            v.push(orthogonality(prec));
            v.push(reflection_symmetry(prec));
            v
        }
    };
    Report {
        suite,
        precision: prec,
        criteria,
    }
}
