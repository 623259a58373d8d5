//! The numerical kernels on their own: roots, null vectors and contour quadrature.

use expinterp::numkern::{contour_quadrature, null_vector, poly_roots, Contour, DenseMatrix, QuadOptions};
use expinterp::{BigComplex, Polynomial};

fn main() -> expinterp::Result<()> {
    let prec = 256;
    let c = |re: f64, im: f64| BigComplex::from_f64(prec, re, im);

    let p = Polynomial::from_roots(&[(c(1.0, 0.0), 2), (c(0.0, 2.0), 1), (c(-3.0, -0.5), 1)], prec);
    for r in poly_roots(&p)? {
        println!("root {:.12}", r.to_c64());
    }

    let m = DenseMatrix::from_rows(vec![vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 1.0)], vec![c(2.0, 0.0), c(4.0, 0.0), c(6.0, 2.0)]]);
    let nv = null_vector(&m)?;
    println!("null vector residual {:.2e}", expinterp::numkern::linalg::vec_norm(&m.mul_vec(&nv.v)).to_f64());

    // 1/z around the unit circle is 2 pi i.
    let contour = Contour::circle(&c(0.0, 0.0), 1.0, 16, prec);
    let res = contour_quadrature(&|z: &BigComplex| Ok(z.recip()), &contour, 16, &QuadOptions::bits(prec, 200, 1024))?;
    println!("contour integral of 1/z = {:.15}", res.value.to_c64());
    Ok(())
}
