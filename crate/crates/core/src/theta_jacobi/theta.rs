//! Jacobi theta functions `θ1..θ4(z|τ)` with nome `q = exp(iπτ)`.
//!
//! ```text
//! θ1 = 2 Σ (-1)^n q^((n+1/2)²) sin((2n+1)z)
//! θ2 = 2 Σ        q^((n+1/2)²) cos((2n+1)z)
//! θ3 = 1 + 2 Σ        q^(n²) cos(2nz)
//! θ4 = 1 + 2 Σ (-1)^n q^(n²) cos(2nz)
//! ```
//!
//! Each term is formed as a single exponential `exp(iπτν² ± iωz)` so that a
//! large `|Im z|` never multiplies an overflowing trig factor by an
//! underflowing power of `q`.

use crate::error::{Error, Result};
use crate::numeric::{c, I};
use crate::tolerance;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Truncation policy of the q-series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaSeriesConfig {
    pub tolerance: f64,
    pub max_terms: usize,
}

impl Default for ThetaSeriesConfig {
    fn default() -> Self {
        ThetaSeriesConfig {
            tolerance: tolerance::THETA_SERIES,
            max_terms: tolerance::THETA_MAX_TERMS,
        }
    }
}

/// `θ_index(z|τ)` or its first or second derivative in `z`.
pub fn theta(index: u8, z: Complex64, tau: Complex64, deriv_order: u8) -> Result<Complex64> {
    theta_with(&ThetaSeriesConfig::default(), index, z, tau, deriv_order)
}

/// [`theta`] with an explicit truncation policy.
pub fn theta_with(
    cfg: &ThetaSeriesConfig,
    index: u8,
    z: Complex64,
    tau: Complex64,
    deriv_order: u8,
) -> Result<Complex64> {
    if !(1..=4).contains(&index) {
        return Err(Error::Precondition(format!("theta index {index} is not in 1..=4")));
    }
    if deriv_order > 2 {
        return Err(Error::Precondition(format!("theta derivative order {deriv_order} > 2")));
    }
    if !(tau.im > 0.0) {
        return Err(Error::Domain(format!("tau = {tau} is not in the upper half-plane")));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("theta argument {z} is not finite")));
    }

    // period π, with a sign flip for θ1 and θ2
    let shifts = (z.re / PI).round();
    let z = c(z.re - shifts * PI, z.im);
    let flip = index <= 2 && (shifts as i64).rem_euclid(2) == 1;

    let half = index <= 2;
    let alternating = index == 1 || index == 4;
    let odd = index == 1;
    let m = deriv_order as i32;

    let mut sum = if !half && deriv_order == 0 { c(1.0, 0.0) } else { c(0.0, 0.0) };
    // the terms grow until n ≈ |Im z| / (π Im τ)
    let peak = z.im.abs() / (PI * tau.im);
    let mut small_run = 0;
    let first = if half { 0 } else { 1 };
    for (used, n) in (first..).enumerate() {
        if used >= cfg.max_terms {
            return Err(Error::Truncation { what: "theta q-series", terms: used });
        }
        let nu = if half { n as f64 + 0.5 } else { n as f64 };
        let omega = 2.0 * nu;
        let base = I * PI * tau * (nu * nu);
        let plus = (base + I * omega * z).exp();
        let minus = (base - I * omega * z).exp();
        let dp = (I * omega).powi(m);
        let dm = (-I * omega).powi(m);
        let mut term = if odd {
            (dp * plus - dm * minus) / (2.0 * I)
        } else {
            (dp * plus + dm * minus) * 0.5
        };
        term *= 2.0;
        if alternating && n % 2 == 1 {
            term = -term;
        }
        sum += term;
        if (n as f64) > peak && term.norm() <= cfg.tolerance * sum.norm().max(1.0) {
            small_run += 1;
            if small_run == 2 {
                break;
            }
        } else {
            small_run = 0;
        }
    }
    Ok(if flip { -sum } else { sum })
}

/// `θ2(0|τ)`, `θ3(0|τ)`, `θ4(0|τ)` cached alongside a set of parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct ThetaNulls {
    pub t2: Complex64,
    pub t3: Complex64,
    pub t4: Complex64,
}

impl ThetaNulls {
    pub fn new(tau: Complex64) -> Result<Self> {
        let zero = c(0.0, 0.0);
        Ok(ThetaNulls {
            t2: theta(2, zero, tau, 0)?,
            t3: theta(3, zero, tau, 0)?,
            t4: theta(4, zero, tau, 0)?,
        })
    }
}
