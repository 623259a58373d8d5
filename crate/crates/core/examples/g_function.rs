//! The g-function of the Padé scheme: values, the constant 2g(0) + 2l, and
//! the identities that tie the pieces together.

use expinterp::asym::{reduce_mod_2pi_i, GApparatus, Side};
use expinterp::interp::InterpolationScheme;
use expinterp::BigComplex;

fn main() -> expinterp::Result<()> {
    let prec = 256;
    let s = InterpolationScheme::pade(10, prec);
    let app = GApparatus::new(&s, prec)?;
    println!("a = {}, b = {}", app.a().to_c64(), app.b().to_c64());
    println!("2l = {}", app.two_ell().to_c64());
    println!("2g(0) + 2l = {}", reduce_mod_2pi_i(&app.two_g0_plus_two_ell()?).to_c64());
    for (x, y) in [(2.0, 0.0), (0.3, 0.4), (-1.0, 1.0), (1e3, 0.0)] {
        let z = BigComplex::from_f64(prec, x, y);
        let g = app.g(&z)?;
        let phi = app.phi_algebraic(&z, Side::Auto)?;
        println!("z = {:>12}  g = {:.6}  Re phi = {:+.4}", format!("{}", z.to_c64()), g.to_c64(), phi.re.to_f64());
    }
    let k = app.cut.len() / 3;
    let on_cut = app.cut.vertex(k);
    println!("variational residual on the cut: {:.2e}", app.variational_residual(&on_cut)?);
    println!("Szego residual on the cut:       {:.2e}", app.szego_residual(&on_cut)?);
    println!("mass of psi: {:.12}", app.psi_mass()?.to_c64());
    Ok(())
}
