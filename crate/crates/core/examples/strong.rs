//! Strong asymptotics of the Padé numerator, denominator and remainder
//! against the exact values, region by region.

use expinterp::asym::{strong_predict, GApparatus, Which};
use expinterp::geom::classify_region;
use expinterp::interp::{assemble_y, InterpolationScheme};
use expinterp::BigComplex;

fn main() -> expinterp::Result<()> {
    let prec = 512;
    let n = 30;
    let s = InterpolationScheme::pade(n, prec);
    let app = GApparatus::new(&s, prec)?;
    let y = assemble_y(&s, prec)?;
    let omega = s.omega_scaled();
    for (x, im) in [(2.0, 0.0), (0.5, -1.5), (-1.5, 0.5), (0.2, 0.1)] {
        let z = BigComplex::from_f64(prec, x, im);
        let region = classify_region(z.to_c64());
        for which in [Which::P, Which::Q, Which::E] {
            let actual = match which {
                Which::P => y.main.p_scaled().eval(&z),
                Which::Q => y.main.q_scaled().eval(&z),
                Which::E => y.main.remainder_scaled(&z),
            };
            let pred = strong_predict(&app, &omega, &z, which, region)?;
            println!(
                "{:<8} {region:?} {which:?}: |actual/predicted - 1| = {:.3e}",
                format!("{}", z.to_c64()),
                (&(&actual / &pred) - &BigComplex::one(prec)).abs_f64()
            );
        }
    }
    Ok(())
}
