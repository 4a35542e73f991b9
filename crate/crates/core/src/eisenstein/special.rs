//! Values at integers and residues at `s = 1`.
//!
//! For `𝔞 = 1` the series is known at odd `s = 2n+1`, for `𝔞 = 0` at even
//! `s = 2n+2`, as a constant times a derivative at `y = 0` of a kernel built
//! from `J(2Ky, k')` (plus an Euler-number or `ζ(2n+2, 1/2)` term for three
//! of the sixteen). The derivatives are taken numerically, never sampling
//! `y = 0` itself.

use crate::elliptic::{params_from_tau, EllipticParams};
use crate::error::{Error, Result};
use crate::lfunc::{euler_number, hurwitz_zeta};
use crate::numeric::{gamma_real, real, I};
use crate::quadrature::derivative_at_zero;
use crate::theta_jacobi::{JacobiCode, KernelFn, KernelName};
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive};
use std::f64::consts::PI;

use super::index::SeriesIndex;
use super::series::lambda_jl;

/// Largest `n` accepted by [`special_value`].
pub const MAX_SPECIAL_N: u32 = 3;

/// A value at an integer point from the derivative formula, alongside the
/// explicit closed form where one is listed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialValue {
    pub idx: SeriesIndex,
    pub n: u32,
    /// The integer argument: `2n+1` when `𝔞 = 1`, `2n+2` when `𝔞 = 0`.
    pub s: u32,
    pub value: Complex64,
    pub closed_form: Option<Complex64>,
}

/// Integer argument at which the `n`-th special value of `idx` sits.
pub fn special_point(idx: SeriesIndex, n: u32) -> u32 {
    if idx.frak_a() == 1 {
        2 * n + 1
    } else {
        2 * n + 2
    }
}

// The kernel as a multiple of a named kernel, and the constant in front of
// the derivative.
fn recipe(idx: SeriesIndex, p: &EllipticParams) -> (KernelName, Complex64, Complex64) {
    use KernelName::*;
    let (k, kp, kk) = (p.k, p.kprime, p.big_k);
    let root = 2.0 * PI.sqrt();
    match (idx.j, idx.l) {
        // (k' cd' - 1)/cosh
        (1, 1) => (Pair(4), -k, I * kk),
        // sn'/sinh
        (1, 2) => (Pair(5), real(1.0), kp * kk),
        // nd'/cosh
        (2, 1) => (Pair(18), real(1.0), -k * kk),
        // sd'/sinh
        (3, 3) => (Pair(15), real(1.0), -I * k * kp * kk),
        (0, 2) => (Fdn, real(1.0), kk),
        (0, 3) => (Fcn, real(1.0), k * kk),
        (2, 0) => (DualOverCosh(JacobiCode::Dn), real(1.0), -kk),
        (3, 0) => (DualOverCosh(JacobiCode::Cn), real(1.0), -kp * kk),
        // (cd' - 1)/sinh
        (1, 3) => (Pair(6), I * k, I * kp * kk / root),
        // (k' sd' + e^{-πy})/cosh
        (3, 1) => (Pair(13), I, I * k * kk / root),
        // (dn' - e^{-πy})/sinh, (cn' - e^{-πy})/sinh, (nd' - e^{-πy})/sinh
        (2, 2) => (Pair(17), I, -kk / root),
        (3, 2) => (Pair(14), I, -kp * kk / root),
        (2, 3) => (Pair(16), I, -k * kk / root),
        (0, 1) => (Fsn, real(1.0), I * k * kk / root),
        (1, 0) => (DualOverCosh(JacobiCode::Sn), real(1.0), -kp * kk / root),
        // (2Ky + K 𝔣(y,k') - K' tanh(πy))/cosh
        (0, 0) => (Pair(25), -I * p.big_kprime, -real(PI.sqrt()) / (4.0 * p.big_kprime)),
        _ => unreachable!("indices are validated on construction"),
    }
}

fn additive_term(idx: SeriesIndex, n: u32) -> Result<Complex64> {
    let nf = n as f64;
    match (idx.j, idx.l) {
        (1, 0) => {
            // |E_{2n+2}| π^{n+1} (n+1)! / (2n+2)!
            let e = euler_number(2 * n as usize + 2)?.abs().to_f64().unwrap_or(f64::NAN);
            let ratio = gamma_real(nf + 2.0) / gamma_real(2.0 * nf + 3.0);
            Ok(real(e * PI.powi(n as i32 + 1) * ratio))
        }
        (2, 0) | (3, 0) => {
            // (2n+1) n! ζ(2n+2, 1/2) / π^{n+3/2}
            let z = hurwitz_zeta(real(2.0 * nf + 2.0), real(0.5))?.value;
            Ok((2.0 * nf + 1.0) * gamma_real(nf + 1.0) * z / PI.powf(nf + 1.5))
        }
        _ => Ok(Complex64::new(0.0, 0.0)),
    }
}

/// `Λ_{j,l}` at its `n`-th integer point from the derivative formula.
pub fn special_value(idx: SeriesIndex, n: u32, params: &EllipticParams) -> Result<SpecialValue> {
    if n > MAX_SPECIAL_N {
        return Err(Error::Precondition(format!("n = {n} exceeds the supported {MAX_SPECIAL_N}")));
    }
    let (name, multiplier, constant) = recipe(idx, params);
    let kernel = KernelFn::new(name, params)?;
    let order = if idx.frak_a() == 1 { 2 * n } else { 2 * n + 1 };
    let h = 0.05 / (1.0 + n as f64);
    let derivative = derivative_at_zero(|y| Ok(multiplier * kernel.eval(y)?), order as usize, h)?;
    let nf = n as f64;
    let shape_gamma = if idx.frak_a() == 1 { gamma_real(nf + 0.5) } else { gamma_real(nf + 1.5) };
    let shape = (-4.0 * PI).powi(-(n as i32)) / shape_gamma;
    let value = additive_term(idx, n)? + constant * shape * derivative;
    let s = special_point(idx, n);
    Ok(SpecialValue { idx, n, s, value, closed_form: closed_form(idx, s, params) })
}

/// The explicitly listed values, in terms of `k`, `k'`, `K`, `K'`, `E`.
pub fn closed_form(idx: SeriesIndex, s: u32, p: &EllipticParams) -> Option<Complex64> {
    let (k, kp, kk, e) = (p.k, p.kprime, p.big_k, p.big_e);
    let (k2, kk2) = (k * k, kk * kk);
    let pi = PI;
    let pi2 = pi * pi;
    let sqpi = pi.sqrt();
    Some(match (idx.j, idx.l, s) {
        (1, 1, 1) => I * (kp - 1.0) * kk / sqpi,
        (1, 1, 3) => I * kk / (2.0 * pi.powf(1.5)) * (pi2 * (kp - 1.0) + 4.0 * kp * k2 * kk2),
        (1, 2, 1) => 2.0 * kp * kk2 / pi.powf(1.5),
        (1, 2, 3) => kp * kk2 / (3.0 * pi.powf(2.5)) * (pi2 + 4.0 * (2.0 - k2) * kk2),
        (2, 1, 1) => -k * kk / sqpi,
        (2, 1, 3) => -k * kk / (2.0 * pi.powf(1.5)) * (pi2 + 4.0 * (k2 - 1.0) * kk2),
        (1, 3, 2) => 2.0 * kp * k2 * kk * kk2 / (pi2 * I),
        (1, 3, 4) => kp * k2 * kk * kk2 / (3.0 * pi.powi(3) * I) * (pi2 + 2.0 * (5.0 * k2 - 4.0) * kk2),
        (3, 1, 2) => k * kk / (pi * I) * (pi - 2.0 * kp * kk),
        (3, 1, 4) => {
            k * kk / (3.0 * pi2 * I) * (pi.powi(3) - 3.0 * pi2 * kp * kk + 4.0 * kp * (1.0 - 2.0 * k2) * kk * kk2)
        }
        (2, 2, 2) => kk / (2.0 * pi2) * (pi2 + 4.0 * (1.0 - k2) * kk2),
        (2, 2, 4) => {
            kk / (24.0 * pi.powi(3))
                * (pi.powi(4) + 8.0 * pi2 * (1.0 - k2) * kk2 + 16.0 * (5.0 - 6.0 * k2 + k2 * k2) * kk2 * kk2)
        }
        (3, 2, 2) => kp * kk / (2.0 * pi2) * (pi2 + 4.0 * kk2),
        (2, 3, 2) => k * kk / (2.0 * pi2) * (pi2 + 4.0 * (k2 - 1.0) * kk2),
        (3, 3, 1) => -I * 2.0 * k * kp * kk2 / pi.powf(1.5),
        (3, 3, 3) => -I * k * kp * kk2 / (3.0 * pi.powf(2.5)) * (pi2 + 4.0 * (2.0 * k2 - 1.0) * kk2),
        (0, 1, 2) => 2.0 * kk / pi * (kp * kp * kk - e),
        (1, 0, 2) => pi / 2.0 - 2.0 / pi * kp * kk2,
        (0, 2, 1) => 2.0 * kk * e / pi.powf(1.5),
        (2, 0, 1) => (pi - 2.0 * kk) / (2.0 * sqpi),
        (0, 3, 1) => 2.0 * kk / pi.powf(1.5) * (e - kp * kp * kk),
        (3, 0, 1) => (pi - 2.0 * kp * kk) / (2.0 * sqpi),
        (0, 0, 2) => (pi2 - 4.0 * kk * e) / (2.0 * pi),
        _ => return None,
    })
}

/// Every `(index, s)` with a listed closed form.
pub fn listed_values() -> Vec<(SeriesIndex, u32)> {
    let probe = params_from_tau(Complex64::new(0.0, 1.0)).expect("τ = i is valid");
    let mut out = Vec::new();
    for idx in SeriesIndex::all() {
        for s in 1..=4 {
            if closed_form(idx, s, &probe).is_some() {
                out.push((idx, s));
            }
        }
    }
    out
}

/// Residue at `s = 1`: numeric and closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residue {
    pub idx: SeriesIndex,
    pub numeric: Complex64,
    pub closed_form: Complex64,
    /// Change between the last two extrapolation inputs.
    pub abs_error_est: f64,
}

/// `lim (s-1) Λ(s,τ)` from symmetric samples at `1 ± h`, `h ∈ {1e-3, 1e-4}`,
/// with one Richardson step.
pub fn residue_at_one(idx: SeriesIndex, tau: Complex64) -> Result<Residue> {
    if !idx.has_pole_at_1() {
        return Err(Error::Precondition(format!("Λ_{idx} is entire; it has no residue at s = 1")));
    }
    let p = params_from_tau(tau)?;
    let closed_form = match (idx.j, idx.l) {
        (3, 1) => -2.0 * I * p.k * p.big_k / PI,
        (2, 2) => 2.0 * p.big_k / PI,
        (3, 2) => 2.0 * p.kprime * p.big_k / PI,
        _ => 2.0 * p.k * p.big_k / PI,
    };
    let sample = |h: f64| -> Result<Complex64> {
        let up = lambda_jl(idx, real(1.0 + h), tau)?.value;
        let down = lambda_jl(idx, real(1.0 - h), tau)?.value;
        Ok(0.5 * h * (up - down))
    };
    let coarse = sample(1e-3)?;
    let fine = sample(1e-4)?;
    let numeric = (100.0 * fine - coarse) / 99.0;
    Ok(Residue { idx, numeric, closed_form, abs_error_est: (numeric - fine).norm() })
}
