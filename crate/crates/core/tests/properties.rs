use expinterp::asym::{solve_endpoints, ErrorModel};
use expinterp::cli::verify::reflection_gap;
use expinterp::geom::{boundary_distance, classify_region, eta64, limit_measures, trace_upper, TraceOptions};
use expinterp::interp::{assemble_y, solve_interpolant, InterpolationScheme, RationalInterpolant};
use expinterp::numkern::linalg::vec_norm;
use expinterp::numkern::{contour_quadrature, null_vector, poly_roots, Contour, DenseMatrix, QuadOptions};
use expinterp::{BigComplex, Polynomial};
use num_complex::Complex64;
use proptest::prelude::*;
use rug::Float;

fn big(prec: u32, (re, im): (f64, f64)) -> BigComplex {
    BigComplex::from_f64(prec, re, im)
}

fn cplx(r: f64) -> impl Strategy<Value = (f64, f64)> {
    (-r..r, -r..r)
}

/// Distinct points with small multiplicities, trimmed to a diagonal type.
type RawScheme = (usize, Vec<((f64, f64), usize)>);

fn scheme_strategy(max_n: usize) -> impl Strategy<Value = RawScheme> {
    (1..=max_n).prop_flat_map(|n| {
        let total = 2 * n + 1;
        (Just(n), prop::collection::vec((cplx(3.0), 1usize..=3), total))
    })
}

fn build(prec: u32, n: usize, raw: &[((f64, f64), usize)]) -> Option<InterpolationScheme> {
    let total = 2 * n + 1;
    let mut pts = Vec::new();
    let mut left = total;
    for &(z, m) in raw {
        if left == 0 {
            break;
        }
        let m = m.min(left);
        // Keep points well separated so the conditions stay independent.
        if pts
            .iter()
            .any(|(w, _): &(BigComplex, usize)| (w.to_c64() - Complex64::new(z.0, z.1)).norm() < 0.05)
        {
            continue;
        }
        pts.push((big(prec, z), m));
        left -= m;
    }
    if left > 0 {
        pts.push((big(prec, (4.0, 0.5)), left));
    }
    InterpolationScheme::build(pts, n, n, prec).ok()
}

fn rel_coeff_gap(a: &Polynomial, b: &Polynomial) -> f64 {
    let d = a.sub(b);
    (d.coeff_norm() / a.coeff_norm().max(&b.coeff_norm())).to_f64()
}

/// ‖p₁q₂ − p₂q₁‖ relative to ‖p₁q₂‖.
fn cross_gap(r1: &RationalInterpolant, r2: &RationalInterpolant) -> f64 {
    let a = r1.p.mul(&r2.q);
    let b = r2.p.mul(&r1.q);
    rel_coeff_gap(&a, &b)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    #[test]
    fn null_vector_residual(seed in prop::collection::vec(cplx(1.0), 12), prec in prop::sample::select(vec![256u32, 512, 1024])) {
        // Three rows of a 3x4 system: full row rank with probability one.
        let rows = seed.chunks(4).map(|c| c.iter().map(|&z| big(prec, z)).collect()).collect();
        let m = DenseMatrix::from_rows(rows);
        let nv = null_vector(&m).unwrap();
        let res = vec_norm(&m.mul_vec(&nv.v)) / (m.norm() * vec_norm(&nv.v));
        prop_assert!(res.to_f64() <= 2f64.powi(-(prec as i32) / 2), "{}", res.to_f64());
    }

    #[test]
    fn roots_reproduce_coefficients(roots in prop::collection::vec(cplx(2.0), 1..20), lead in cplx(2.0)) {
        let prec = 256;
        prop_assume!(lead.0.hypot(lead.1) > 0.1);
        let p = Polynomial::from_roots(&roots.iter().map(|&z| (big(prec, z), 1)).collect::<Vec<_>>(), prec).scale(&big(prec, lead));
        let found = poly_roots(&p).unwrap();
        let rebuilt = Polynomial::from_roots(&found.into_iter().map(|z| (z, 1)).collect::<Vec<_>>(), prec).scale(&p.leading());
        prop_assert!(rel_coeff_gap(&p, &rebuilt) <= 2f64.powi(-(prec as i32) / 2));
    }

    #[test]
    fn quadrature_of_polynomial_vanishes(coeffs in prop::collection::vec(cplx(1.0), 1..8), center in cplx(1.0), r in 0.2f64..2.0) {
        let prec = 256;
        let p = Polynomial::new(coeffs.iter().map(|&c| big(prec, c)).collect(), prec);
        let contour = Contour::circle(&big(prec, center), r, 12, prec);
        let res = contour_quadrature(&|z: &BigComplex| Ok(p.eval(z)), &contour, 16, &QuadOptions::bits(prec, 180, 1024)).unwrap();
        prop_assert!(res.value.abs() <= res.error.clone().max(&(res.abs_integral.clone() >> 170u32)));
    }

    #[test]
    fn interpolation_conditions_hold((n, raw) in scheme_strategy(5)) {
        let prec = 256;
        let Some(s) = build(prec, n, &raw) else { return Ok(()) };
        let r = solve_interpolant(&s, prec).unwrap();
        prop_assert!(r.residual_check().to_f64() <= 2f64.powi(-(prec as i32) / 2));
        prop_assert!(r.p.degree() <= n && r.q.degree() <= n);
    }

    #[test]
    fn reflection_duality((n, raw) in scheme_strategy(4)) {
        let prec = 256;
        let Some(s) = build(prec, n, &raw) else { return Ok(()) };
        prop_assert!(reflection_gap(&s, prec).unwrap() <= 2f64.powi(-(prec as i32) / 2));
    }

    #[test]
    fn conjugate_symmetric_schemes_are_real(n in 1usize..5, pts in prop::collection::vec((0.1f64..3.0, 0.1f64..3.0), 2)) {
        let prec = 256;
        // n conjugate pairs plus one real point.
        let mut raw = vec![(big(prec, (-0.5, 0.0)), 1)];
        for k in 0..n {
            let (x, y) = pts[k % pts.len()];
            let z = (x * (1.0 + k as f64 * 0.37), y + 0.2 * k as f64);
            raw.push((big(prec, z), 1));
            raw.push((big(prec, (z.0, -z.1)), 1));
        }
        let s = InterpolationScheme::build(raw, n, n, prec).unwrap();
        let r = solve_interpolant(&s, prec).unwrap();
        let scale = r.p.coeff_norm().max(&r.q.coeff_norm()).to_f64();
        let worst = r.p.coeffs().iter().chain(r.q.coeffs()).map(|c| c.im.to_f64().abs()).fold(0.0, f64::max);
        prop_assert!(worst <= scale * 2f64.powi(-(prec as i32) / 2), "{worst:e}");
    }

    #[test]
    fn permuted_points_give_the_same_interpolant((n, raw) in scheme_strategy(5), shift in 0usize..7) {
        let prec = 256;
        let Some(s) = build(prec, n, &raw) else { return Ok(()) };
        let mut pts: Vec<(BigComplex, usize)> = s.points().iter().map(|p| (p.z.clone(), p.mult)).collect();
        pts.reverse();
        let k = shift % pts.len();
        pts.rotate_left(k);
        let t = InterpolationScheme::build(pts, n, n, prec).unwrap();
        let r1 = solve_interpolant(&s, prec).unwrap();
        let r2 = solve_interpolant(&t, prec).unwrap();
        prop_assert!(cross_gap(&r1, &r2) <= 2f64.powi(-(prec as i32) / 3));
    }

    #[test]
    fn det_y_is_one((n, raw) in scheme_strategy(3), z in cplx(8.0)) {
        let prec = 256;
        let Some(s) = build(prec, n, &raw) else { return Ok(()) };
        let y = assemble_y(&s, prec).unwrap();
        let d = y.det(&big(prec, z));
        prop_assert!((&d - &BigComplex::one(prec)).abs_f64() <= 1e-40);
    }

    #[test]
    fn region_is_locally_stable(z in cplx(3.0), dir in 0.0f64..std::f64::consts::TAU) {
        let z = Complex64::new(z.0, z.1);
        prop_assume!(boundary_distance(z) > 1e-5);
        let w = z + Complex64::from_polar(1e-6, dir);
        prop_assert_eq!(classify_region(z), classify_region(w));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 4, ..ProptestConfig::default() })]

    #[test]
    fn c_n_ignores_point_order(pts in prop::collection::vec(cplx(1.0), 7), k in 1usize..7) {
        let prec = 256;
        let raw: Vec<(BigComplex, usize)> = pts.iter().map(|&z| (big(prec, z), 1)).collect();
        let Ok(s) = InterpolationScheme::build(raw.clone(), 3, 3, prec) else { return Ok(()) };
        let mut perm = raw;
        perm.rotate_left(k);
        let t = InterpolationScheme::build(perm, 3, 3, prec).unwrap();
        let a = ErrorModel::new(&s, prec).unwrap();
        let b = ErrorModel::new(&t, prec).unwrap();
        prop_assert!((&a.c_n - &b.c_n).abs_f64() <= 1e-15);
    }

    #[test]
    fn endpoints_approach_pade_pair(pts in prop::collection::vec(cplx(1.0), 9)) {
        let prec = 256;
        let dist = |scale: f64| {
            let raw = pts.iter().map(|&(x, y)| (big(prec, (x * scale, y * scale)), 1)).collect();
            let s = InterpolationScheme::build(raw, 4, 4, prec).unwrap();
            let e = solve_endpoints(&s, prec).unwrap();
            (&e.a - &BigComplex::i(prec)).abs_f64().max((&e.b + &BigComplex::i(prec)).abs_f64())
        };
        let (far, near) = (dist(1.0), dist(0.25));
        prop_assert!(near < far, "{far:e} {near:e}");
    }
}

#[test]
fn roots_of_degree_sixty() {
    let prec = 512;
    let roots: Vec<(BigComplex, usize)> = (0..60)
        .map(|k| (big(prec, ((k as f64 * 0.7).cos() * (1.0 + k as f64 / 60.0), (k as f64 * 1.3).sin())), 1))
        .collect();
    let p = Polynomial::from_roots(&roots, prec);
    let found = poly_roots(&p).unwrap();
    let rebuilt = Polynomial::from_roots(&found.into_iter().map(|z| (z, 1)).collect::<Vec<_>>(), prec).scale(&p.leading());
    assert!(rel_coeff_gap(&p, &rebuilt) <= 2f64.powi(-(prec as i32) / 2));
}

#[test]
fn traced_vertices_lie_on_the_level_set() {
    let opts = TraceOptions::default();
    let upper = trace_upper(&opts).unwrap();
    let worst = upper.iter().map(|&z| eta64(z).re.abs()).fold(0.0, f64::max);
    assert!(worst <= opts.tol * 10.0, "{worst:e}");
    assert!(upper[1..upper.len() - 1].iter().all(|z| z.re < 0.0));
    let spacing = upper.windows(2).map(|w| (w[1] - w[0]).norm()).fold(0.0, f64::max);
    assert!(spacing <= opts.step * (1.0 + 1e-9), "{spacing}");
}

#[test]
fn limit_measure_weights_are_positive() {
    let (p, q) = limit_measures(500).unwrap();
    for m in [p, q] {
        assert!(m.weights.iter().all(|&w| w >= -1e-12));
        assert!((m.mass() - 1.0).abs() <= 1e-6);
    }
}

#[test]
fn repeated_solves_are_bit_identical() {
    let prec = 512;
    let s = InterpolationScheme::circle(8, &Float::with_val(prec, 1.7), prec);
    let a = solve_interpolant(&s, prec).unwrap();
    let b = solve_interpolant(&s, prec).unwrap();
    assert_eq!(a.p.coeffs(), b.p.coeffs());
    assert_eq!(a.q.coeffs(), b.q.coeffs());
    let za = a.zeros_poles().unwrap();
    let zb = b.zeros_poles().unwrap();
    assert_eq!(za.zeros, zb.zeros);
    assert_eq!(za.poles, zb.poles);
}
