//! Diagonal Padé approximants of exp at the origin, with their errors at z = 1.
//!
//! cargo run --example pade -- 6

use expinterp::interp::{solve_interpolant, InterpolationScheme};
use expinterp::BigComplex;

fn main() -> expinterp::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let prec = 256;
    let one = BigComplex::one(prec);
    for k in 1..=n {
        let r = solve_interpolant(&InterpolationScheme::pade(k, prec), prec)?;
        // The interpolant approximates -exp, so the error is exp + r.
        let err = (&one.exp() + &r.eval(&one)).abs_f64();
        println!("n = {k:2}  |e + r(1)| = {err:.3e}");
    }
    let r = solve_interpolant(&InterpolationScheme::pade(2, prec), prec)?;
    println!("n = 2 numerator:   {:?}", r.p.coeffs().iter().map(|c| c.to_c64().re).collect::<Vec<_>>());
    println!("n = 2 denominator: {:?}", r.q.coeffs().iter().map(|c| c.to_c64().re).collect::<Vec<_>>());
    Ok(())
}
