//! Endpoints of the cut for a circular scheme, against their first-order expansion.
//!
//! cargo run --example endpoints -- 20 1.5

use expinterp::asym::{first_order_coefficients, solve_endpoints};
use expinterp::interp::InterpolationScheme;
use rug::Float;

fn main() -> expinterp::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);
    let rho: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1.5);
    let prec = 256;
    let s = InterpolationScheme::circle(n, &Float::with_val(prec, rho), prec);
    let e = solve_endpoints(&s, prec)?;
    let (alpha, beta) = first_order_coefficients(&s)?;
    let t = s.t().to_f64();
    let i = num_complex::Complex64::i();
    println!("n = {n}, radius {rho}, t = {t:.4}");
    println!("a = {}   first order {}", e.a.to_c64(), i * (1.0 + alpha * t));
    println!("b = {}   first order {}", e.b.to_c64(), -i * (1.0 + beta * t));
    println!("residuals {:.2e} {:.2e} ({:?})", e.residual_a.to_f64(), e.residual_b.to_f64(), e.provenance);
    Ok(())
}
