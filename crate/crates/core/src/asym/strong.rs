//! Leading-order predictions for P_n, Q_n and E_n off the limit curves.

use serde::Serialize;

use super::apparatus::GApparatus;
use super::cut::Side;
use crate::geom::{classify_region, Region};
use crate::numkern::{BigComplex, Polynomial};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Which {
    P,
    Q,
    E,
}

/// Prediction at the scaled point z for the requested quantity. `region` is the
/// caller's claim about z and must agree with the classifier. `omega` is the
/// scaled node polynomial Π(z − ẑ_j) over all 2n+1 points.
pub fn strong_predict(app: &GApparatus, omega: &Polynomial, z: &BigComplex, which: Which, region: Region) -> Result<BigComplex> {
    let got = classify_region(z.to_c64());
    if got != region {
        return Err(Error::WrongRegion(format!("{:?} claimed, {:?} found", region, got)));
    }
    if region == Region::OnBoundary && which != Which::P {
        return Err(Error::WrongRegion("point lies on a limit curve".into()));
    }
    let n = app.n() as f64;
    let e = app.eval(z, Side::Auto)?;
    let p = app.prec();
    let inner = || &e.r_plus() / &e.d_norm;
    let outer = || {
        let d = &e.d_norm * app.d_inf_sq();
        // With P_n monic and Q_n, Ω_n as built by the interp module the outer
        // cases carry a factor 2 relative to −iΩ r⁻ D.
        let w = &(&omega.eval(z) * &e.r_minus()) * &d;
        -(&w.mul_i())
    };
    let two_ell = app.two_ell();
    let v = match which {
        Which::P => &inner() * &e.g.scale_f64(n).exp(),
        Which::Q if region == Region::D0 => {
            let ex = (&e.g - &z.scale_f64(2.0)).scale_f64(n);
            -(&inner() * &ex.exp())
        }
        Which::Q => {
            let ex = (&e.g + two_ell).scale_f64(-n);
            &outer() * &ex.exp()
        }
        Which::E if region == Region::D1Inf => {
            let ex = (&e.g - z).scale_f64(n);
            &inner() * &ex.exp()
        }
        Which::E => {
            let ex = (&(z - &e.g) - two_ell).scale_f64(n);
            &outer() * &ex.exp()
        }
    };
    Ok(v.with_prec(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::{assemble_y, InterpolationScheme};

    fn ratio_err(n: usize, z: (f64, f64), which: Which) -> f64 {
        let prec = 512;
        let s = InterpolationScheme::pade(n, prec);
        let app = GApparatus::new(&s, prec).unwrap();
        let y = assemble_y(&s, prec).unwrap();
        let z = BigComplex::from_f64(prec, z.0, z.1);
        let reg = classify_region(z.to_c64());
        let pred = strong_predict(&app, &s.omega_scaled(), &z, which, reg).unwrap();
        let actual = match which {
            Which::P => y.main.p_scaled().eval(&z),
            Which::Q => y.main.q_scaled().eval(&z),
            Which::E => y.main.remainder_scaled(&z),
        };
        (&(&actual / &pred) - &BigComplex::one(prec)).abs_f64()
    }

    #[test]
    fn pade_p_at_two_improves() {
        let e10 = ratio_err(10, (2.0, 0.0), Which::P);
        let e20 = ratio_err(20, (2.0, 0.0), Which::P);
        assert!(e20 < 0.5 && e20 < e10, "{e10} {e20}");
    }

    #[test]
    fn q_and_e_cases() {
        assert!(ratio_err(20, (0.5, -1.5), Which::Q) < 0.1);
        assert!(ratio_err(20, (-1.5, 0.5), Which::E) < 0.1);
        assert!(ratio_err(20, (0.5, -1.5), Which::E) < 0.1);
    }

    #[test]
    fn region_mismatch_rejected() {
        let prec = 256;
        let s = InterpolationScheme::pade(4, prec);
        let app = GApparatus::new(&s, prec).unwrap();
        let z = BigComplex::from_f64(prec, 2.0, 0.0);
        let r = strong_predict(&app, &s.omega_scaled(), &z, Which::Q, Region::D0);
        assert!(matches!(r, Err(Error::WrongRegion(_))));
        let g1 = crate::geom::gamma1()[400];
        let on = BigComplex::from_c64(prec, g1);
        let r = strong_predict(&app, &s.omega_scaled(), &on, Which::Q, Region::OnBoundary);
        assert!(matches!(r, Err(Error::WrongRegion(_))));
    }
}
