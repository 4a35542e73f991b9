//! Functional equations relating `Λ_{j,l}(s,τ)` and `Λ_{l,j}(1-s,-1/τ)`.
//!
//! Each of the ten equations reads
//!
//! ```text
//! Λ_A(s,τ) + σ (i/τ) Λ_B(1-s,-1/τ) = R(s,τ)
//! ```
//!
//! with `σ = ±1` and a right side built from `Λ(s)`, `Λ(s,χ4)` and theta
//! nulls. For the partner index `B` the same equation is read at
//! `(1-s, -1/τ)`.

use crate::error::{Error, Result};
use crate::lfunc::{completed_lambda, completed_lambda_chi4};
use crate::numeric::{pow_neg, real, I};
use crate::theta_jacobi::theta;
use num_complex::Complex64;
use std::f64::consts::PI;

use super::index::SeriesIndex;
use super::series::{check_tau, lambda_jl, SeriesEval, SeriesMethod};

/// Right-hand sides of the ten equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RightSide {
    Zero,
    /// `-i θ3²(0|τ) Λ(s,χ4)`
    Theta3Beta,
    /// `-i θ4²(0|τ) (2^{1-s} - 1) Λ(s)`
    Theta4EtaZeta,
    /// `θ3²(0|τ) Λ(s)`
    Theta3Zeta,
    /// `θ4²(0|τ) Λ(s)`
    Theta4Zeta,
    /// `-(i/τ) (2/√π) Λ(s-1,χ4)`
    ShiftedBeta,
    /// `(i/τ) ((s-1)/√π) (1 - 2^{2-s}) Λ(s-1)`
    ShiftedZeta,
    /// `(2/√π) (Λ(s+1,χ4) - (i/τ) Λ(s-1,χ4))`
    BetaPair,
}

/// One functional equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FunctionalEquation {
    pub number: u8,
    pub primary: SeriesIndex,
    pub partner: SeriesIndex,
    pub sigma: i8,
    pub rhs: RightSide,
}

const fn ix(j: u8, l: u8) -> SeriesIndex {
    SeriesIndex { j, l }
}

/// The ten equations in order.
pub const FUNCTIONAL_EQUATIONS: [FunctionalEquation; 10] = [
    FunctionalEquation { number: 1, primary: ix(1, 1), partner: ix(1, 1), sigma: 1, rhs: RightSide::Theta3Beta },
    FunctionalEquation { number: 2, primary: ix(1, 2), partner: ix(2, 1), sigma: 1, rhs: RightSide::Zero },
    FunctionalEquation { number: 3, primary: ix(1, 3), partner: ix(3, 1), sigma: 1, rhs: RightSide::Theta4EtaZeta },
    FunctionalEquation { number: 4, primary: ix(2, 2), partner: ix(2, 2), sigma: 1, rhs: RightSide::Theta3Zeta },
    FunctionalEquation { number: 5, primary: ix(3, 2), partner: ix(2, 3), sigma: 1, rhs: RightSide::Theta4Zeta },
    FunctionalEquation { number: 6, primary: ix(3, 3), partner: ix(3, 3), sigma: -1, rhs: RightSide::Zero },
    FunctionalEquation { number: 7, primary: ix(0, 1), partner: ix(1, 0), sigma: -1, rhs: RightSide::ShiftedBeta },
    FunctionalEquation { number: 8, primary: ix(0, 2), partner: ix(2, 0), sigma: 1, rhs: RightSide::ShiftedZeta },
    FunctionalEquation { number: 9, primary: ix(0, 3), partner: ix(3, 0), sigma: 1, rhs: RightSide::ShiftedZeta },
    FunctionalEquation { number: 10, primary: ix(0, 0), partner: ix(0, 0), sigma: -1, rhs: RightSide::BetaPair },
];

/// The equation that involves `idx`.
pub fn equation_for(idx: SeriesIndex) -> &'static FunctionalEquation {
    FUNCTIONAL_EQUATIONS
        .iter()
        .find(|p| p.primary == idx || p.partner == idx)
        .expect("every index appears in exactly one equation")
}

fn theta_null_sq(index: u8, tau: Complex64) -> Result<Complex64> {
    let t = theta(index, Complex64::new(0.0, 0.0), tau, 0)?;
    Ok(t * t)
}

impl FunctionalEquation {
    /// `R(s,τ)`.
    pub fn right_side(&self, s: Complex64, tau: Complex64) -> Result<Complex64> {
        let inv_sqrt_pi = 1.0 / PI.sqrt();
        let i_over_tau = I / tau;
        Ok(match self.rhs {
            RightSide::Zero => Complex64::new(0.0, 0.0),
            RightSide::Theta3Beta => -I * theta_null_sq(3, tau)? * completed_lambda_chi4(s)?.value,
            RightSide::Theta4EtaZeta => {
                let factor = pow_neg(real(2.0), s - 1.0) - 1.0;
                -I * theta_null_sq(4, tau)? * factor * completed_lambda(s)?.value
            }
            RightSide::Theta3Zeta => theta_null_sq(3, tau)? * completed_lambda(s)?.value,
            RightSide::Theta4Zeta => theta_null_sq(4, tau)? * completed_lambda(s)?.value,
            RightSide::ShiftedBeta => -i_over_tau * 2.0 * inv_sqrt_pi * completed_lambda_chi4(s - 1.0)?.value,
            RightSide::ShiftedZeta => {
                let factor = (s - 1.0) * inv_sqrt_pi * (1.0 - pow_neg(real(2.0), s - 2.0));
                i_over_tau * factor * completed_lambda(s - 1.0)?.value
            }
            RightSide::BetaPair => {
                let up = completed_lambda_chi4(s + 1.0)?.value;
                let down = completed_lambda_chi4(s - 1.0)?.value;
                2.0 * inv_sqrt_pi * (up - i_over_tau * down)
            }
        })
    }

    /// Both sides of the equation at `(s, τ)`.
    pub fn sides(&self, s: Complex64, tau: Complex64) -> Result<(Complex64, Complex64)> {
        let tau_dual = -1.0 / tau;
        let a = lambda_jl(self.primary, s, tau)?.value;
        let b = lambda_jl(self.partner, 1.0 - s, tau_dual)?.value;
        let lhs = a + self.sigma as f64 * (I / tau) * b;
        Ok((lhs, self.right_side(s, tau)?))
    }
}

/// Outcome of one functional-equation check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunceqResidual {
    pub equation: u8,
    pub lhs: Complex64,
    pub rhs: Complex64,
    /// `lhs - rhs`.
    pub residual: Complex64,
}

/// Residual of the equation involving `idx` at `(s, τ)`; for the partner
/// index the equation is read at `(1-s, -1/τ)` so that `idx` always appears
/// as `Λ_idx(s, τ)`.
pub fn funceq_residual(idx: SeriesIndex, s: Complex64, tau: Complex64) -> Result<FunceqResidual> {
    check_tau(tau)?;
    let prop = equation_for(idx);
    let (s0, tau0) = if prop.primary == idx { (s, tau) } else { (1.0 - s, -1.0 / tau) };
    let (lhs, rhs) = prop.sides(s0, tau0)?;
    Ok(FunceqResidual { equation: prop.number, lhs, rhs, residual: lhs - rhs })
}

/// `Λ_idx(s,τ)` solved out of its functional equation.
pub(crate) fn lambda_reflected(idx: SeriesIndex, s: Complex64, tau: Complex64) -> Result<SeriesEval> {
    let prop = equation_for(idx);
    let sigma = prop.sigma as f64;
    let tau_dual = -1.0 / tau;
    let (value, other) = if prop.primary == idx {
        let b = lambda_jl(prop.partner, 1.0 - s, tau_dual)?;
        (prop.right_side(s, tau)? - sigma * (I / tau) * b.value, b)
    } else {
        // Λ_A(1-s,τ') + σ (i/τ') Λ_B(s,τ) = R(1-s,τ')
        let a = lambda_jl(prop.primary, 1.0 - s, tau_dual)?;
        ((prop.right_side(1.0 - s, tau_dual)? - a.value) * tau_dual / (sigma * I), a)
    };
    if other.method == SeriesMethod::Reflected {
        return Err(Error::Precondition(format!("s = {s} cannot be reached from either side")));
    }
    let scale = if prop.primary == idx { (1.0 / tau).norm() } else { tau_dual.norm() };
    Ok(SeriesEval {
        value,
        abs_error_est: scale * other.abs_error_est + 1e-15 * value.norm(),
        rows_used: other.rows_used,
        method: SeriesMethod::Reflected,
    })
}
