//! Integrals of squared Jacobi functions along the real axis.

use crate::elliptic::EllipticParams;
use crate::error::{Error, Result};
use crate::numeric::real;
use crate::quadrature::gauss_adaptive;
use crate::tolerance;
use std::f64::consts::PI;

use super::jacobi::{jacobi, JacobiCode};
use super::theta::theta;

fn real_modulus(params: &EllipticParams) -> Result<()> {
    params
        .real_modulus()
        .map(|_| ())
        .ok_or_else(|| Error::Precondition("real-axis integrals need a real modulus".into()))
}

fn square_integral(code: JacobiCode, z: f64, params: &EllipticParams) -> Result<f64> {
    real_modulus(params)?;
    if !z.is_finite() {
        return Err(Error::Domain(format!("integration limit {z} is not finite")));
    }
    if z == 0.0 {
        return Ok(0.0);
    }
    let width = 0.5 * params.big_k_real();
    let (v, _) = gauss_adaptive(0.0, z, width, tolerance::EPSILON_INTEGRAL, |u| {
        let j = jacobi(code, real(u), params)?;
        Ok(real((j * j).re))
    })?;
    Ok(v.re)
}

/// Jacobi's epsilon integral `∫₀^z dn(u,k)² du`.
pub fn jacobi_epsilon(z: f64, params: &EllipticParams) -> Result<f64> {
    square_integral(JacobiCode::Dn, z, params)
}

/// `∫₀^z nd(u,k)² du`.
pub fn nd_square_integral(z: f64, params: &EllipticParams) -> Result<f64> {
    square_integral(JacobiCode::Nd, z, params)
}

/// Independent route for [`jacobi_epsilon`]: `Z(z) + (E/K) z` with Jacobi's
/// zeta function `Z(u) = (π/2K) θ4'(πu/2K)/θ4(πu/2K)`.
pub fn jacobi_epsilon_by_zeta(z: f64, params: &EllipticParams) -> Result<f64> {
    real_modulus(params)?;
    let kk = params.big_k_real();
    let arg = real(PI * z / (2.0 * kk));
    let ratio = theta(4, arg, params.tau, 1)? / theta(4, arg, params.tau, 0)?;
    let zeta = PI / (2.0 * kk) * ratio;
    Ok(zeta.re + params.big_e.re / kk * z)
}
