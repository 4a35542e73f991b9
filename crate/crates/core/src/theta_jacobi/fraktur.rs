//! The rescaled logarithmic derivative of `θ4`:
//!
//! ```text
//! 𝔣(x, k) = θ4'(w|τ) / θ4(w|τ),   w = -iπτx
//! ```
//!
//! It has period `K/K'`, shifts by `-2i` under `x -> x + i`, and has simple
//! poles at `i/2 + nK/K'`.

use crate::elliptic::EllipticParams;
use crate::error::{Error, Result};
use crate::numeric::I;
use crate::tolerance;
use num_complex::Complex64;
use std::f64::consts::PI;

use super::theta::theta;

/// `𝔣(x, k)` for the modulus carried by `params`.
pub fn fraktur_f(x: Complex64, params: &EllipticParams) -> Result<Complex64> {
    let w = -I * PI * params.tau * x;
    let num = theta(4, w, params.tau, 1)?;
    let den = theta(4, w, params.tau, 0)?;
    let scale = num.norm().max(params.nulls.t4.norm());
    if den.norm() < tolerance::POLE_PROXIMITY * scale {
        return Err(Error::Pole(format!("𝔣 has a pole at x = {x}")));
    }
    Ok(num / den)
}

/// `𝔣(y, k')`, i.e. the same function for the complementary nome
/// `τ' = -1/τ`, with `w = -iπτ'y`.
pub fn fraktur_f_complement(y: Complex64, params: &EllipticParams) -> Result<Complex64> {
    fraktur_f(y, &params.complement()?)
}

/// Sine-series representation `2i Σ sin(2nw)/sin(πnτ)` for real `x`; an
/// independent route used to cross-check [`fraktur_f`].
pub fn fraktur_f_fourier(x: f64, params: &EllipticParams) -> Result<Complex64> {
    let tau = params.tau;
    let w = -I * PI * tau * x;
    if w.im.abs() > 1e-12 * w.norm().max(1.0) {
        return Err(Error::Precondition(
            "the sine series needs a real theta argument".into(),
        ));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 1..400 {
        let nf = n as f64;
        // 1/sin(πnτ) decays like |q|^n
        let term = (2.0 * nf * w.re).sin() * crate::numeric::csc(PI * nf * tau);
        sum += term;
        if term.norm() < 1e-18 && params.q.norm().powf(nf) < 1e-18 {
            return Ok(2.0 * I * sum);
        }
    }
    Err(Error::Truncation { what: "𝔣 sine series", terms: 400 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::params_from_k;
    use crate::numeric::{c, real};

    #[test]
    fn vanishes_at_origin() {
        for &k in &[0.2, 0.6, 0.95] {
            let p = params_from_k(k).unwrap();
            assert!(fraktur_f(real(0.0), &p).unwrap().norm() < 1e-16);
        }
    }

    #[test]
    fn real_period() {
        let p = params_from_k(0.6).unwrap();
        let period = p.big_k / p.big_kprime;
        let x = real(0.37);
        let d = fraktur_f(x + period, &p).unwrap() - fraktur_f(x, &p).unwrap();
        assert!(d.norm() < 1e-11, "{d}");
    }

    #[test]
    fn imaginary_shift() {
        let p = params_from_k(0.7).unwrap();
        let x = real(0.21);
        let d = fraktur_f(x + I, &p).unwrap() - fraktur_f(x, &p).unwrap();
        assert!((d + 2.0 * I).norm() < 1e-11, "{d}");
    }

    #[test]
    fn pole_is_reported() {
        let p = params_from_k(0.6).unwrap();
        let r = fraktur_f(c(0.0, 0.5), &p);
        assert!(matches!(r, Err(Error::Pole(_))), "{r:?}");
    }

    #[test]
    fn sine_series_agrees() {
        for &k in &[0.6, 0.8] {
            let p = params_from_k(k).unwrap();
            for &x in &[0.1, 0.37, -0.9, 2.3] {
                let a = fraktur_f(real(x), &p).unwrap();
                let b = fraktur_f_fourier(x, &p).unwrap();
                assert!((a - b).norm() < 1e-12, "k={k} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn complement_uses_dual_nome() {
        let p = params_from_k(0.6).unwrap();
        let y = 0.3;
        let a = fraktur_f_complement(real(y), &p).unwrap();
        let b = fraktur_f_fourier(y, &p.complement().unwrap()).unwrap();
        assert!((a - b).norm() < 1e-10);
        // w' = πKy/K' is real and so is the nome, hence a real value
        assert!(a.im.abs() < 1e-14);
    }
}
