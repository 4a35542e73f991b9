//! Riemann zeta, Dirichlet beta and their completed forms
//!
//! ```text
//! Λ(s)     = π^{-s/2} Γ(s/2) ζ(s)                 Λ(s)     = Λ(1-s)
//! Λ(s, χ4) = 2^s π^{-s/2} Γ((s+1)/2) β(s)         Λ(s, χ4) = Λ(1-s, χ4)
//! ```
//!
//! Both are evaluated directly from the definitions; the reflection is used
//! only where the Gamma factor has a pole cancelled by a trivial zero.

use crate::error::{Error, Result};
use crate::numeric::{gamma, near_gamma_pole, pow_neg, real};
use num_complex::Complex64;
use std::f64::consts::PI;

use super::hurwitz::{hurwitz_regular, hurwitz_zeta, LValue, Method};

/// `ζ(s)`, with a pole error at `s = 1`.
pub fn riemann_zeta(s: Complex64) -> Result<LValue> {
    hurwitz_zeta(s, real(1.0))
}

/// `β(s) = Σ (-1)^m (2m+1)^{-s} = 4^{-s}[ζ(s,1/4) - ζ(s,3/4)]`, entire.
pub fn dirichlet_beta(s: Complex64) -> Result<LValue> {
    let (r1, e1) = hurwitz_regular(s, real(0.25))?;
    let (r3, e3) = hurwitz_regular(s, real(0.75))?;
    let scale = pow_neg(real(4.0), s);
    Ok(LValue {
        value: scale * (r1 - r3),
        abs_error_est: scale.norm() * (e1 + e3),
        method: Method::EulerMaclaurin,
    })
}

const GAMMA_POLE_TOL: f64 = 1e-12;

/// `Λ(s) = π^{-s/2} Γ(s/2) ζ(s)`, with poles at `s = 0` and `s = 1`.
pub fn completed_lambda(s: Complex64) -> Result<LValue> {
    if (s - 1.0).norm() == 0.0 || s.norm() == 0.0 {
        return Err(Error::Pole(format!("Λ(s) has a pole at s = {s}")));
    }
    if near_gamma_pole(0.5 * s, GAMMA_POLE_TOL) {
        let v = completed_lambda(1.0 - s)?;
        return Ok(LValue { method: Method::Reflection, ..v });
    }
    let z = riemann_zeta(s)?;
    let factor = pow_neg(real(PI), 0.5 * s) * gamma(0.5 * s);
    Ok(LValue {
        value: factor * z.value,
        abs_error_est: factor.norm() * z.abs_error_est,
        method: z.method,
    })
}

/// `Λ(s, χ4) = 2^s π^{-s/2} Γ((s+1)/2) β(s)`, entire.
pub fn completed_lambda_chi4(s: Complex64) -> Result<LValue> {
    if near_gamma_pole(0.5 * (s + 1.0), GAMMA_POLE_TOL) {
        let v = completed_lambda_chi4(1.0 - s)?;
        return Ok(LValue { method: Method::Reflection, ..v });
    }
    let b = dirichlet_beta(s)?;
    let factor = pow_neg(real(0.5), s) * pow_neg(real(PI), 0.5 * s) * gamma(0.5 * (s + 1.0));
    Ok(LValue {
        value: factor * b.value,
        abs_error_est: factor.norm() * b.abs_error_est,
        method: b.method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfunc::numbers::euler_f64;
    use crate::numeric::c;

    #[test]
    fn classical_values() {
        assert!((riemann_zeta(real(2.0)).unwrap().value - PI * PI / 6.0).norm() < 1e-13);
        assert!((dirichlet_beta(real(1.0)).unwrap().value - PI / 4.0).norm() < 1e-13);
        assert!((riemann_zeta(real(-1.0)).unwrap().value + 1.0 / 12.0).norm() < 1e-12);
        assert!((dirichlet_beta(real(3.0)).unwrap().value - PI.powi(3) / 32.0).norm() < 1e-12);
        assert!((completed_lambda(real(2.0)).unwrap().value - PI / 6.0).norm() < 1e-13);
    }

    #[test]
    fn beta_at_odd_integers_from_euler_numbers() {
        // β(2n+1) = (-1)^n E_2n π^{2n+1} / (4^{n+1} (2n)!)
        let mut fact = 1.0;
        for n in 0..6 {
            if n > 0 {
                fact *= (2 * n - 1) as f64 * (2 * n) as f64;
            }
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let expected = sign * euler_f64(2 * n).unwrap() * PI.powi(2 * n as i32 + 1)
                / (4f64.powi(n as i32 + 1) * fact);
            let v = dirichlet_beta(real((2 * n + 1) as f64)).unwrap().value;
            assert!((v - expected).norm() < 1e-13, "n={n}");
        }
    }

    #[test]
    fn reflection_symmetries() {
        let s = c(0.3, 1.1);
        let d = completed_lambda(s).unwrap().value - completed_lambda(1.0 - s).unwrap().value;
        assert!(d.norm() < 1e-11, "{d}");
        let s = c(-0.7, 0.4);
        let d = completed_lambda_chi4(s).unwrap().value - completed_lambda_chi4(1.0 - s).unwrap().value;
        assert!(d.norm() < 1e-11, "{d}");
    }

    #[test]
    fn trivial_zeros_cancel_gamma_poles() {
        let v = completed_lambda(real(-2.0)).unwrap();
        assert_eq!(v.method, Method::Reflection);
        assert!((v.value - completed_lambda(real(3.0)).unwrap().value).norm() < 1e-14);
        let w = completed_lambda_chi4(real(-1.0)).unwrap();
        assert_eq!(w.method, Method::Reflection);
        assert!((w.value - completed_lambda_chi4(real(2.0)).unwrap().value).norm() < 1e-14);
        // and continuity across the reflected point
        let near = completed_lambda(real(-2.0 + 1e-6)).unwrap().value;
        assert!((near - v.value).norm() < 1e-5);
    }

    #[test]
    fn poles() {
        assert!(matches!(completed_lambda(real(1.0)), Err(Error::Pole(_))));
        assert!(matches!(completed_lambda(real(0.0)), Err(Error::Pole(_))));
        assert!(matches!(riemann_zeta(real(1.0)), Err(Error::Pole(_))));
        assert!(completed_lambda_chi4(real(0.0)).unwrap().value.is_finite());
    }
}
