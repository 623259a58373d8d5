//! Predicted against actual interpolation error on a circular scheme.
//!
//! cargo run --example error_model -- 20 1.0

use expinterp::asym::ErrorModel;
use expinterp::interp::{solve_interpolant, InterpolationScheme};
use expinterp::BigComplex;
use rug::Float;

fn main() -> expinterp::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);
    let rho: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1.0);
    let prec = 1024;
    let s = InterpolationScheme::circle(n, &Float::with_val(prec, rho), prec);
    let model = ErrorModel::new(&s, prec)?;
    let r = solve_interpolant(&s, prec)?;
    println!("n = {n}, radius {rho}: c_n = {:.10}", model.c_n.to_c64());
    for (x, y) in [(0.5, 0.0), (1.5, 0.5), (-0.7, 1.3), (0.0, -1.9)] {
        let z = BigComplex::from_f64(prec, x, y);
        let actual = ErrorModel::actual_error(&r, &z);
        let predicted = model.model(&z);
        println!(
            "z = {:<10} actual {:.4e}  ratio {:.6}",
            format!("{}", z.to_c64()),
            actual.abs_f64(),
            (&actual / &predicted).to_c64()
        );
    }
    Ok(())
}
