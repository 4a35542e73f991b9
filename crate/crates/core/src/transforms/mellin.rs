//! Numeric Mellin transforms and the reflection formulas that tie a kernel's
//! Mellin transform to that of its Fourier cosine or sine transform:
//!
//! ```text
//! Γ(z) cos(πz/2) G(1-z) = G_c(z)        g even
//! Γ(z) sin(πz/2) G(1-z) = G_s(z)        g odd
//! ```
//!
//! with `g_c(y) = ∫₀^∞ g(x) cos(xy) dx` and `g_s` likewise. The kernels are
//! the catalog integrands `g = f/cosh(πx)` or `f/sinh(πx)` taken on the real
//! line; the transform side comes from the catalog closed form through
//! `g_c(y) = F[g](y/2π)/2` and `g_s(y) = F[g](y/2π)/(2i)`.

use crate::error::{Error, Result};
use crate::numeric::{c, gamma, real, I};
use crate::quadrature::{gauss20, gauss_panels, tanh_sinh_unit};
use crate::theta_jacobi::{jacobi, JacobiCode};
use num_complex::Complex64;
use std::f64::consts::PI;

use super::catalog::{Denominator, Lhs, PairId, TransformConvention, TransformPair};

const HEAD_TOL: f64 = 1e-13;
const TAIL_TOL: f64 = 1e-17;
const MAX_TAIL_PANELS: usize = 4000;

/// `∫₀^∞ g(x) x^{z-1} dx` for `Re z > band_lower`.
///
/// `band_lower` is the order of vanishing of `g` at the origin with the sign
/// flipped: `0` when `g(0) ≠ 0`, `-1` for odd `g`. The head `(0,1)` uses
/// tanh-sinh, the tail unit Gauss panels until they stop contributing.
pub fn mellin_numeric<F>(g: F, z: Complex64, band_lower: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if !(z.re > band_lower) {
        return Err(Error::Domain(format!(
            "the Mellin integral diverges at z = {z}: need Re z > {band_lower}"
        )));
    }
    let zm1 = z - 1.0;
    let weighted = |x: f64| -> Result<Complex64> { Ok(g(x)? * (zm1 * x.ln()).exp()) };
    let head = tanh_sinh_unit(HEAD_TOL, weighted)?;
    let rule = gauss20();
    let mut tail = Complex64::new(0.0, 0.0);
    let mut quiet = 0;
    for j in 0..MAX_TAIL_PANELS {
        let a = 1.0 + j as f64;
        let piece = gauss_panels(rule, a, a + 1.0, 1, weighted)?;
        tail += piece;
        if piece.norm() < TAIL_TOL * (head + tail).norm().max(1.0) {
            quiet += 1;
            if quiet == 3 {
                return Ok(head + tail);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence(format!(
        "Mellin tail at z = {z} still contributing after {MAX_TAIL_PANELS} panels"
    )))
}

/// Which reflection applies to a kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MellinRoute {
    /// Even kernel, cosine transform, `cos(πz/2)`.
    Cosine,
    /// Odd kernel, sine transform, `sin(πz/2)`.
    Sine,
}

impl MellinRoute {
    pub fn band_lower(self) -> f64 {
        match self {
            MellinRoute::Cosine => 0.0,
            MellinRoute::Sine => -1.0,
        }
    }
}

/// A catalog integrand restricted to `(0, ∞)`, regularised at the origin
/// when needed, together with its cosine or sine transform.
#[derive(Debug, Clone)]
pub struct MellinKernel {
    pub pair: TransformPair,
    pub route: MellinRoute,
    // multiple of 1/sinh(πx) subtracted to remove a pole at 0
    subtracted: f64,
}

fn jacobi_is_odd(code: JacobiCode) -> bool {
    code.name().contains('s')
}

fn has_real_pole(code: JacobiCode) -> bool {
    matches!(code.name().as_bytes()[1], b's' | b'c')
}

impl MellinKernel {
    /// Fails with a precondition error for entries whose integrand is not
    /// smooth on the real line.
    pub fn from_pair(pair: &TransformPair) -> Result<Self> {
        let reject = || {
            Err(Error::Precondition(format!(
                "pair {} has no smooth kernel on the real line",
                pair.id
            )))
        };
        let (route, subtracted) = match pair.lhs {
            Lhs::InvCoshUnscaled => (MellinRoute::Cosine, 0.0),
            Lhs::Fraktur => (MellinRoute::Sine, 0.0),
            Lhs::Jacobi(code, den) => {
                if has_real_pole(code) {
                    return reject();
                }
                let odd = jacobi_is_odd(code) ^ (den == Denominator::Sinh);
                let route = if odd { MellinRoute::Sine } else { MellinRoute::Cosine };
                let at_zero = if den == Denominator::Sinh {
                    jacobi(code, real(0.0), &pair.params)?.re
                } else {
                    0.0
                };
                (route, at_zero)
            }
            Lhs::InvSinh | Lhs::InvSinhUnscaled => return reject(),
        };
        Ok(MellinKernel { pair: pair.clone(), route, subtracted })
    }

    /// Kernel for a catalog id.
    pub fn new(id: PairId, params: &crate::elliptic::EllipticParams) -> Result<Self> {
        Self::from_pair(&TransformPair::new(id, params)?)
    }

    /// `g(x)` for real `x > 0`.
    pub fn kernel(&self, x: f64) -> Result<Complex64> {
        match self.pair.lhs {
            // (J(2K'x) - J(0))/sinh(πx) without cancellation near 0
            Lhs::Jacobi(code, _) if self.subtracted != 0.0 => {
                let u = 2.0 * self.pair.params.big_kprime * x;
                Ok(jacobi_minus_origin(code, u, &self.pair.params)? / (PI * x).sinh())
            }
            _ => self.pair.lhs_eval(real(x)),
        }
    }

    /// `g_c(y)` or `g_s(y)` from the closed form.
    pub fn transformed(&self, y: f64) -> Result<Complex64> {
        if self.pair.convention != TransformConvention::Contour {
            // the warm-ups are tabulated as half-line transforms already
            return self.pair.closed_form(y);
        }
        let eta = y / (2.0 * PI);
        let mut fourier = self.pair.closed_form(eta)?;
        if self.subtracted != 0.0 {
            // F[1/sinh(πx)](η) = -i(1 - tanh πη) = -2i/(e^{2πη} + 1)
            fourier += self.subtracted * c(0.0, 2.0 / ((2.0 * PI * eta).exp() + 1.0));
        }
        Ok(match self.route {
            MellinRoute::Cosine => 0.5 * fourier,
            MellinRoute::Sine => fourier / (2.0 * I),
        })
    }
}

// J(u) - J(0) for the codes that are finite at 0, written as products so the
// difference keeps relative accuracy.
fn jacobi_minus_origin(code: JacobiCode, u: Complex64, params: &crate::elliptic::EllipticParams) -> Result<Complex64> {
    let [sn, cn, dn] = crate::theta_jacobi::sn_cn_dn(u, params)?;
    let k2 = params.k * params.k;
    // 1 - cn = sn²/(1 + cn), 1 - dn = k²sn²/(1 + dn)
    let one_m_cn = sn * sn / (1.0 + cn);
    let one_m_dn = k2 * sn * sn / (1.0 + dn);
    Ok(match code {
        JacobiCode::Cn => -one_m_cn,
        JacobiCode::Dn => -one_m_dn,
        // cd - 1 = (cn - dn)/dn = (1-dn - (1-cn))/dn
        JacobiCode::Cd => (one_m_dn - one_m_cn) / dn,
        // nd - 1 = (1 - dn)/dn
        JacobiCode::Nd => one_m_dn / dn,
        _ => jacobi(code, u, params)? - jacobi(code, real(0.0), params)?,
    })
}

/// Both sides of a reflection formula at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionCheck {
    pub route: MellinRoute,
    /// `Γ(z) trig(πz/2) G(1-z)`.
    pub reflected: Complex64,
    /// `G_c(z)` or `G_s(z)`.
    pub transformed: Complex64,
    pub residual: f64,
}

/// Checks the reflection formula for one kernel at `z`.
pub fn mellin_reflection_check(kernel: &MellinKernel, z: Complex64) -> Result<ReflectionCheck> {
    let lower = kernel.route.band_lower();
    let g_mellin = mellin_numeric(|x| kernel.kernel(x), 1.0 - z, lower)?;
    let t_mellin = mellin_numeric(|y| kernel.transformed(y), z, lower)?;
    let half = 0.5 * PI * z;
    let trig = match kernel.route {
        MellinRoute::Cosine => half.cos(),
        MellinRoute::Sine => half.sin(),
    };
    let reflected = gamma(z) * trig * g_mellin;
    Ok(ReflectionCheck {
        route: kernel.route,
        reflected,
        transformed: t_mellin,
        residual: (reflected - t_mellin).norm(),
    })
}
