//! Evaluation of `ζ_{j,l}` and its completion
//! `Λ_{j,l}(s,τ) = π^{-s/2} Γ((s + 𝔞)/2) ζ_{j,l}(s,τ)`.
//!
//! The main route sums over rows `n`: each row is a Hurwitz zeta
//! (`a = 1`) or alternating Hurwitz zeta (`a = 0`) at shift
//! `w_n = 1/2 + (n + d/2)τ`, weighted by `(±1)^n / sin(...)`, and the weights
//! decay like `e^{-π|n| Im τ}`. This continues every series to `Re s > -1`;
//! further left the functional equation takes over.
//!
//! The truncated double sum is kept as an independent oracle for `Re s > 1`.

use crate::error::{Error, Result};
use crate::lfunc::hurwitz::hurwitz_regular;
use crate::lfunc::alt_hurwitz_zeta;
use crate::numeric::{gamma, near_gamma_pole, pow_neg, real, I};
use crate::tolerance;
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

use super::index::SeriesIndex;

/// How a [`SeriesEval`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesMethod {
    DoubleSum,
    HurwitzRows,
    Reflected,
}

impl SeriesMethod {
    pub fn name(self) -> &'static str {
        match self {
            SeriesMethod::DoubleSum => "double_sum",
            SeriesMethod::HurwitzRows => "hurwitz_rows",
            SeriesMethod::Reflected => "reflected",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEval {
    pub value: Complex64,
    pub abs_error_est: f64,
    pub rows_used: usize,
    pub method: SeriesMethod,
}

/// Left edge of the window served by the row sums.
pub const CONTINUATION_EDGE: f64 = -1.0;
const MAX_ROW_PAIRS: usize = 2000;
const MAX_DIRECT_TERMS: usize = 10_000;

pub(crate) fn check_tau(tau: Complex64) -> Result<()> {
    if !(tau.im > 0.0) || !tau.re.is_finite() {
        return Err(Error::Domain(format!("τ = {tau} is not in the upper half-plane")));
    }
    Ok(())
}

// 1/sin(πz) and 1/cos(πz) through e^{±iπz}, so that the exponentially small
// values far from the real axis neither overflow nor lose digits.
fn inv_sin_pi(z: Complex64) -> Complex64 {
    if z.im >= 0.0 {
        let q = (I * PI * z).exp();
        2.0 * I * q / (q * q - 1.0)
    } else {
        let p = (-I * PI * z).exp();
        2.0 * I * p / (1.0 - p * p)
    }
}

fn inv_cos_pi(z: Complex64) -> Complex64 {
    let q = if z.im >= 0.0 { (I * PI * z).exp() } else { (-I * PI * z).exp() };
    2.0 * q / (q * q + 1.0)
}

/// Row shift `1/2 + (n + d/2)τ` and weight `(1-2b)^n / sin(π(c/2 + (n+d/2)τ))`.
pub(crate) fn row(idx: SeriesIndex, n: i64, tau: Complex64) -> (Complex64, Complex64) {
    let nu = n as f64 + 0.5 * idx.d() as f64;
    let shift = 0.5 + nu * tau;
    let sign = if idx.b() == 1 && n.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
    let denom = if idx.c() == 1 { inv_cos_pi(nu * tau) } else { inv_sin_pi(nu * tau) };
    (shift, sign * denom)
}

// Row indices grouped into mirror pairs: n with -n when d = 0 and with
// -n-1 when d = 1, so that the pole weights of the entire series cancel
// pair by pair.
fn row_group(idx: SeriesIndex, k: usize) -> Vec<i64> {
    let k = k as i64;
    match (idx.d(), k) {
        (0, 0) if idx.omit_n0() => vec![],
        (0, 0) => vec![0],
        (0, _) => vec![k, -k],
        _ => vec![k, -k - 1],
    }
}

/// `π^{-s/2} Γ((s + 𝔞)/2)`.
pub fn gamma_factor(idx: SeriesIndex, s: Complex64) -> Complex64 {
    pow_neg(real(PI), 0.5 * s) * gamma(0.5 * (s + idx.frak_a() as f64))
}

/// `ζ_{j,l}(s,τ)` from Hurwitz rows, with the pole part kept separate:
/// returns `(regular, pole_weight, error, rows)` where
/// `ζ = regular + pole_weight/(s-1)`.
fn rows_sum(idx: SeriesIndex, s: Complex64, tau: Complex64) -> Result<(Complex64, Complex64, f64, usize)> {
    let mut regular = Complex64::new(0.0, 0.0);
    let mut pole_weight = Complex64::new(0.0, 0.0);
    let mut error = 0.0;
    let mut rows = 0;
    let mut quiet = 0;
    for k in 0..MAX_ROW_PAIRS {
        let mut group = Complex64::new(0.0, 0.0);
        for n in row_group(idx, k) {
            let (w, weight) = row(idx, n, tau);
            rows += 1;
            if weight == Complex64::new(0.0, 0.0) {
                continue;
            }
            let (z, e) = if idx.a() == 1 {
                pole_weight += weight;
                hurwitz_regular(s, w)?
            } else {
                let v = alt_hurwitz_zeta(s, w)?;
                (v.value, v.abs_error_est)
            };
            group += weight * z;
            error += weight.norm() * e;
        }
        regular += group;
        if k > 0 && group.norm() <= tolerance::ROW_TRUNCATION * regular.norm().max(1e-300) {
            quiet += 1;
            if quiet == 2 {
                error += group.norm();
                // the pole survives only where the row weights do not cancel
                if !idx.has_pole_at_1() {
                    pole_weight = Complex64::new(0.0, 0.0);
                }
                return Ok((regular, pole_weight, error, rows));
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::Truncation { what: "Eisenstein row sum", terms: MAX_ROW_PAIRS })
}

/// `ζ_{j,l}(s,τ)` by Hurwitz rows.
pub fn zeta_jl(idx: SeriesIndex, s: Complex64, tau: Complex64) -> Result<SeriesEval> {
    check_tau(tau)?;
    if idx.has_pole_at_1() && s == real(1.0) {
        return Err(Error::Pole(format!("ζ_{idx} has a pole at s = 1")));
    }
    let (regular, pole_weight, error, rows) = rows_sum(idx, s, tau)?;
    let value = if pole_weight == Complex64::new(0.0, 0.0) {
        regular
    } else {
        regular + pole_weight / (s - 1.0)
    };
    Ok(SeriesEval { value, abs_error_est: error, rows_used: rows, method: SeriesMethod::HurwitzRows })
}

/// `Λ_{j,l}(s,τ)` for any `s` (away from the pole of the four pole-bearing
/// series). Points with `Re s ≤ -1` or at a pole of the Gamma factor are
/// reached through the functional equation.
pub fn lambda_jl(idx: SeriesIndex, s: Complex64, tau: Complex64) -> Result<SeriesEval> {
    check_tau(tau)?;
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::Domain(format!("s = {s} is not finite")));
    }
    if s.re <= CONTINUATION_EDGE || near_gamma_pole(0.5 * (s + idx.frak_a() as f64), 1e-12) {
        return super::funceq::lambda_reflected(idx, s, tau);
    }
    let z = zeta_jl(idx, s, tau)?;
    let factor = gamma_factor(idx, s);
    Ok(SeriesEval {
        value: factor * z.value,
        abs_error_est: factor.norm() * z.abs_error_est,
        ..z
    })
}

// Σ_{m≥0} (±1)^m (m + N)^{-s} from the first few terms of the Euler-Maclaurin
// and Boole expansions at the base point N.
fn row_tail(alternating: bool, s: Complex64, base: Complex64) -> (Complex64, f64) {
    let p0 = pow_neg(base, s);
    let inv = 1.0 / base;
    let p1 = p0 * inv;
    let p3 = p1 * inv * inv;
    let p5 = p3 * inv * inv;
    let rising3 = s * (s + 1.0) * (s + 2.0);
    let rising5 = rising3 * (s + 3.0) * (s + 4.0);
    if alternating {
        let v = 0.5 * p0 + 0.25 * s * p1 - rising3 / 48.0 * p3;
        (v, (rising5 / 480.0 * p5).norm())
    } else {
        let v = base * p0 / (s - 1.0) + 0.5 * p0 + s / 12.0 * p1 - rising3 / 720.0 * p3;
        (v, (rising5 / 30240.0 * p5).norm())
    }
}

/// Truncated double sum over `|n| ≤ N`, `0 ≤ m ≤ M`, plus an asymptotic
/// correction for the omitted `m > M` part of each row. Requires `Re s > 1`.
pub fn zeta_jl_direct(idx: SeriesIndex, s: Complex64, tau: Complex64, m_max: usize, n_max: usize) -> Result<SeriesEval> {
    check_tau(tau)?;
    if !(s.re > 1.0) {
        return Err(Error::Domain(format!("the double sum needs Re s > 1, got s = {s}")));
    }
    if m_max > MAX_DIRECT_TERMS || n_max > MAX_DIRECT_TERMS {
        return Err(Error::Precondition(format!("M and N are capped at {MAX_DIRECT_TERMS}")));
    }
    let n_max = n_max as i64;
    let alternating = idx.a() == 0;
    let rows: Vec<i64> = (-n_max..=n_max).filter(|&n| !(n == 0 && idx.omit_n0())).collect();
    let per_row: Vec<(Complex64, f64, f64)> = rows
        .par_iter()
        .map(|&n| {
            let (w, weight) = row(idx, n, tau);
            if weight.norm() == 0.0 {
                return (Complex64::new(0.0, 0.0), 0.0, 0.0);
            }
            let mut acc = Complex64::new(0.0, 0.0);
            let mut mag = 0.0;
            for m in 0..=m_max {
                let t = pow_neg(w + m as f64, s);
                mag += t.norm();
                acc += if alternating && m % 2 == 1 { -t } else { t };
            }
            let (tail, tail_err) = row_tail(alternating, s, w + (m_max + 1) as f64);
            let tail = if alternating && m_max % 2 == 0 { -tail } else { tail };
            let value = weight * (acc + tail);
            let err = weight.norm() * (tail_err + f64::EPSILON * mag);
            (value, err, if n.abs() == n_max { value.norm() } else { 0.0 })
        })
        .collect();
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for (v, e, edge) in per_row {
        value += v;
        err += e + edge;
    }
    Ok(SeriesEval { value, abs_error_est: err, rows_used: rows.len(), method: SeriesMethod::DoubleSum })
}

/// `Λ_{j,l}` from the double sum, for cross-checks.
pub fn lambda_jl_direct(idx: SeriesIndex, s: Complex64, tau: Complex64, m_max: usize, n_max: usize) -> Result<SeriesEval> {
    let z = zeta_jl_direct(idx, s, tau, m_max, n_max)?;
    let factor = gamma_factor(idx, s);
    Ok(SeriesEval { value: factor * z.value, abs_error_est: factor.norm() * z.abs_error_est, ..z })
}
