//! The 2x2 matrix built from consecutive interpolants: det Y = 1 and the
//! orthogonality of the denominator.

use expinterp::interp::{assemble_y, orthogonality_defect, solve_interpolant, InterpolationScheme};
use expinterp::BigComplex;

fn main() -> expinterp::Result<()> {
    let prec = 512;
    let s = InterpolationScheme::pade(4, prec);
    let y = assemble_y(&s, prec)?;
    for (x, im) in [(0.2, 0.1), (-0.4, 0.3), (5.0, 1.0), (-3.0, -6.0)] {
        let z = BigComplex::from_f64(prec, x, im);
        let det = y.det(&z);
        println!(
            "z = {:<9} inside {:5}  |det Y - 1| = {:.2e}",
            format!("{}", z.to_c64()),
            y.is_inside(&z),
            (&det - &BigComplex::one(prec)).abs_f64()
        );
    }
    let n = 8;
    let r = solve_interpolant(&InterpolationScheme::pade(n, prec), prec)?;
    for j in 0..=n {
        let d = orthogonality_defect(&r, j, 1.5)?;
        println!("j = {j}: |defect| = {:.3e}", d.value.abs_f64());
    }
    Ok(())
}
