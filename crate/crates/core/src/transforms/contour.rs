//! Numeric Fourier transforms along a horizontal contour.
//!
//! For catalog entries with the contour convention the engine computes
//!
//! ```text
//! F[f](y) = ∫_{ℝ+iε} f(x) e^{2πixy} dx
//! ```
//!
//! on `[-X, X] + iε` with panels of width `1/(2 max(1,|y|))`, doubling the
//! panel count until two successive estimates agree to `tol`. The half-line
//! warm-ups use the same panels on `[0, X]` with a sine or cosine weight.

use crate::error::{Error, Result};
use crate::numeric::{c, I};
use crate::quadrature::{gauss16, gauss_panels};
use crate::tolerance;
use num_complex::Complex64;
use std::f64::consts::PI;

use super::catalog::{TransformConvention, TransformPair};

/// Value of one numeric transform together with its quadrature footprint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourResult {
    pub value: Complex64,
    /// Integrand evaluations in the accepted estimate.
    pub nodes: usize,
    /// Truncation point `X`.
    pub truncation: f64,
}

const MAX_DOUBLINGS: usize = 5;

/// Truncation point for a given tolerance; the envelope decays like
/// `e^{-π|x|}` on the contour and `e^{-x}` on the half line.
pub fn truncation_point(convention: TransformConvention, tol: f64, y: f64) -> f64 {
    let extra = 2.0 + (1.0 + y.abs()).ln();
    match convention {
        TransformConvention::Contour => -tol.ln() / PI + extra,
        _ => -tol.ln() + extra,
    }
}

fn check_inputs(y: f64, tol: f64) -> Result<()> {
    if !y.is_finite() || y.abs() > tolerance::MAX_ABS_Y {
        return Err(Error::Precondition(format!(
            "|y| = {} exceeds the window {}",
            y.abs(),
            tolerance::MAX_ABS_Y
        )));
    }
    if !(tol >= tolerance::MIN_QUADRATURE_TOL) {
        return Err(Error::Precondition(format!(
            "tolerance {tol:e} is below {:e}",
            tolerance::MIN_QUADRATURE_TOL
        )));
    }
    Ok(())
}

/// Numeric transform of `pair` at `y` on the pair's default contour.
pub fn contour_fourier(pair: &TransformPair, y: f64, tol: f64) -> Result<ContourResult> {
    contour_fourier_at(pair, y, tol, pair.contour_offset)
}

/// Numeric transform on the contour `Im x = eps`. Half-line conventions
/// ignore `eps`.
pub fn contour_fourier_at(pair: &TransformPair, y: f64, tol: f64, eps: f64) -> Result<ContourResult> {
    check_inputs(y, tol)?;
    pair.check_offset(eps)?;
    let convention = pair.convention;
    let x_max = truncation_point(convention, tol, y);
    let (a, b) = match convention {
        TransformConvention::Contour => (-x_max, x_max),
        _ => (0.0, x_max),
    };
    let integrand = |t: f64| -> Result<Complex64> {
        match convention {
            TransformConvention::Contour => {
                let x = c(t, eps);
                Ok(pair.lhs_eval(x)? * (2.0 * PI * I * x * y).exp())
            }
            TransformConvention::HalfLineSine => Ok(pair.lhs_eval(c(t, 0.0))? * (t * y).sin()),
            TransformConvention::HalfLineCosine => Ok(pair.lhs_eval(c(t, 0.0))? * (t * y).cos()),
        }
    };
    let width = 0.5 / y.abs().max(1.0);
    let rule = gauss16();
    let mut panels = ((b - a) / width).ceil() as usize;
    let mut coarse = gauss_panels(rule, a, b, panels, integrand)?;
    for _ in 0..MAX_DOUBLINGS {
        panels *= 2;
        let fine = gauss_panels(rule, a, b, panels, integrand)?;
        if (fine - coarse).norm() < tol {
            return Ok(ContourResult { value: fine, nodes: panels * rule.len(), truncation: x_max });
        }
        coarse = fine;
    }
    Err(Error::NonConvergence(format!(
        "transform of pair {} at y = {y} did not settle to {tol:e}",
        pair.id
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::params_from_k;

    fn pair(id: &str, k: f64) -> TransformPair {
        TransformPair::new(id.parse().unwrap(), &params_from_k(k).unwrap()).unwrap()
    }

    #[test]
    fn warm_ups() {
        let v = contour_fourier(&pair("0a", 0.6), 1.0, 1e-12).unwrap().value;
        assert!((v.re - 0.5 * PI * (0.5 * PI).tanh()).abs() < 1e-10, "{v}");
        let v = contour_fourier(&pair("0b", 0.6), 0.0, 1e-12).unwrap().value;
        assert!((v.re - 0.5 * PI).abs() < 1e-10, "{v}");
        let p = pair("0c", 0.6);
        for &y in &[-1.1, 0.0, 0.8] {
            let v = contour_fourier(&p, y, 1e-11).unwrap().value;
            assert!((v - p.closed_form(y).unwrap()).norm() < 1e-9, "y={y}: {v}");
        }
    }

    #[test]
    fn pair_18_spot_value() {
        let p = pair("18", 0.6);
        let v = contour_fourier(&p, 0.7, 1e-11).unwrap().value;
        assert!((v - p.closed_form(0.7).unwrap()).norm() < 1e-9, "{v}");
    }

    #[test]
    fn pair_22_spot_value() {
        let p = pair("22", 0.6);
        let v = contour_fourier(&p, -0.4, 1e-11).unwrap().value;
        assert!((v - p.closed_form(-0.4).unwrap()).norm() < 1e-9, "{v}");
    }

    #[test]
    fn offset_independence() {
        let p = pair("1", 0.6);
        for &y in &[-0.6, 0.35, 1.7] {
            let a = contour_fourier_at(&p, y, 1e-12, 0.2).unwrap().value;
            let b = contour_fourier_at(&p, y, 1e-12, 0.3).unwrap().value;
            assert!((a - b).norm() < 1e-9, "y={y}");
        }
    }

    #[test]
    fn rejected_inputs() {
        let p = pair("1", 0.6);
        assert!(matches!(contour_fourier(&p, 6.5, 1e-10), Err(Error::Precondition(_))));
        assert!(matches!(contour_fourier(&p, 0.1, 1e-13), Err(Error::Precondition(_))));
        assert!(matches!(contour_fourier_at(&p, 0.1, 1e-10, 0.5), Err(Error::Pole(_))));
        assert!(contour_fourier_at(&p, 0.1, 1e-10, 0.0).is_err());
    }

    #[test]
    fn truncation_grows_with_precision_and_frequency() {
        let conv = TransformConvention::Contour;
        assert!(truncation_point(conv, 1e-12, 0.0) > truncation_point(conv, 1e-6, 0.0));
        assert!(truncation_point(conv, 1e-10, 5.0) > truncation_point(conv, 1e-10, 0.0));
        let half = TransformConvention::HalfLineCosine;
        assert!(truncation_point(half, 1e-10, 0.0) > truncation_point(conv, 1e-10, 0.0));
    }
}
