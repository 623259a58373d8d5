use crate::numkern::{newton_solve, BigComplex, JacobianMode};
use crate::Result;

/// η(z) = √(z²+1) + log(z/(1+√(z²+1))) with principal branches.
pub fn eta(z: &BigComplex) -> BigComplex {
    let p = z.prec();
    let r = (&z.square() + &BigComplex::one(p)).sqrt();
    let ratio = z / &(&BigComplex::one(p) + &r);
    &r + &ratio.ln()
}

/// The positive real root c₀ of η, by Newton from 0.5.
pub fn c0_root(prec: u32) -> Result<BigComplex> {
    let f = |x: &[BigComplex]| Ok(vec![eta(&x[0])]);
    let rep = newton_solve(&f, JacobianMode::FiniteDifference, &[BigComplex::from_f64(prec, 0.5, 0.0)])?;
    Ok(rep.x[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_at_i() {
        let v = eta(&BigComplex::i(256));
        assert!(v.re.is_zero() || v.re.to_f64().abs() < 1e-70);
        assert!((v.im.to_f64() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn c0_value() {
        let c0 = c0_root(256).unwrap();
        assert!((c0.re.to_f64() - 0.66274).abs() < 1e-5);
        let neg = eta(&(-&c0));
        assert!(neg.re.to_f64().abs() < 1e-45);
    }
}
