//! Complete elliptic integrals and the coupled constants of one modulus.
//!
//! For a real modulus the quarter periods come from the arithmetic-geometric
//! mean. For a general point `tau` of the upper half-plane everything is read
//! off the theta constants:
//!
//! ```text
//! k = θ2²/θ3²,  k' = θ4²/θ3²,  K = (π/2) θ3²,  K' = -iτK
//! ```
//!
//! and `E` follows from `θ4''(0)/θ4(0) = 4K(K - E)/π²`, which keeps
//! Legendre's relation exact in the complex case as well.

use crate::error::{Error, Result};
use crate::numeric::{c, real, I};
use crate::theta_jacobi::theta::{theta, ThetaNulls};
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

const AGM_MAX_ITER: usize = 40;

struct Agm {
    mean: f64,
    // Σ 2^(n-1) c_n², the E/K correction
    correction: f64,
}

fn agm(k: f64) -> Agm {
    let kp = ((1.0 - k) * (1.0 + k)).sqrt();
    let (mut a, mut b) = (1.0, kp);
    let mut correction = 0.5 * k * k;
    let mut pow = 0.5;
    for _ in 0..AGM_MAX_ITER {
        let cn = 0.5 * (a - b);
        let next_a = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next_a;
        pow *= 2.0;
        correction += pow * cn * cn;
        if cn.abs() <= 1e-17 * a {
            break;
        }
    }
    Agm { mean: a, correction }
}

fn check_modulus(k: f64) -> Result<()> {
    if k > 0.0 && k < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("modulus k = {k} is outside (0, 1)")))
    }
}

/// Complete elliptic integral of the first kind `K(k)` for `0 < k < 1`.
pub fn complete_elliptic_k(k: f64) -> Result<f64> {
    check_modulus(k)?;
    Ok(FRAC_PI_2 / agm(k).mean)
}

/// Complete elliptic integral of the second kind `E(k)` for `0 < k < 1`.
pub fn complete_elliptic_e(k: f64) -> Result<f64> {
    check_modulus(k)?;
    let m = agm(k);
    Ok(FRAC_PI_2 / m.mean * (1.0 - m.correction))
}

/// The constants `(k, k', K, K', E, E', q, τ)` attached to one modulus.
///
/// Built either from a real modulus ([`params_from_k`]) or from a point of
/// the upper half-plane ([`params_from_tau`]); immutable afterwards.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticParams {
    pub k: Complex64,
    pub kprime: Complex64,
    pub big_k: Complex64,
    pub big_kprime: Complex64,
    pub big_e: Complex64,
    pub big_eprime: Complex64,
    pub q: Complex64,
    pub tau: Complex64,
    pub(crate) nulls: ThetaNulls,
    real_modulus: Option<f64>,
}

/// Parameters for a real modulus `0 < k < 1`; `τ = iK'/K` is purely imaginary.
pub fn params_from_k(k: f64) -> Result<EllipticParams> {
    check_modulus(k)?;
    let kp = ((1.0 - k) * (1.0 + k)).sqrt();
    let big_k = complete_elliptic_k(k)?;
    let big_kp = complete_elliptic_k(kp)?;
    let big_e = complete_elliptic_e(k)?;
    let big_ep = complete_elliptic_e(kp)?;
    let tau = c(0.0, big_kp / big_k);
    Ok(EllipticParams {
        k: real(k),
        kprime: real(kp),
        big_k: real(big_k),
        big_kprime: real(big_kp),
        big_e: real(big_e),
        big_eprime: real(big_ep),
        q: real((-PI * big_kp / big_k).exp()),
        tau,
        nulls: ThetaNulls::new(tau)?,
        real_modulus: Some(k),
    })
}

/// Parameters for a point `τ` with `Im τ > 0`, via theta quotients.
pub fn params_from_tau(tau: Complex64) -> Result<EllipticParams> {
    if !(tau.im > 0.0) || !tau.re.is_finite() {
        return Err(Error::Domain(format!("tau = {tau} is not in the upper half-plane")));
    }
    let nulls = ThetaNulls::new(tau)?;
    let t3sq = nulls.t3 * nulls.t3;
    let big_k = FRAC_PI_2 * t3sq;
    let big_kp = -I * tau * big_k;
    let big_e = second_kind_from_theta(tau, big_k)?;
    let big_ep = second_kind_from_theta(-1.0 / tau, big_kp)?;
    Ok(EllipticParams {
        k: nulls.t2 * nulls.t2 / t3sq,
        kprime: nulls.t4 * nulls.t4 / t3sq,
        big_k,
        big_kprime: big_kp,
        big_e,
        big_eprime: big_ep,
        q: (I * PI * tau).exp(),
        tau,
        nulls,
        real_modulus: None,
    })
}

// E = K - (π²/4K) θ4''(0)/θ4(0)
fn second_kind_from_theta(tau: Complex64, big_k: Complex64) -> Result<Complex64> {
    let zero = Complex64::new(0.0, 0.0);
    let ratio = theta(4, zero, tau, 2)? / theta(4, zero, tau, 0)?;
    Ok(big_k - PI * PI / (4.0 * big_k) * ratio)
}

impl EllipticParams {
    /// The real modulus, when the parameters were built from one.
    pub fn real_modulus(&self) -> Option<f64> {
        self.real_modulus
    }

    /// Parameters of the complementary modulus `k'`, i.e. `τ -> -1/τ`.
    pub fn complement(&self) -> Result<EllipticParams> {
        let tau = I * self.big_k / self.big_kprime;
        let tau = match self.real_modulus {
            Some(_) => c(0.0, tau.im),
            None => -1.0 / self.tau,
        };
        Ok(EllipticParams {
            k: self.kprime,
            kprime: self.k,
            big_k: self.big_kprime,
            big_kprime: self.big_k,
            big_e: self.big_eprime,
            big_eprime: self.big_e,
            q: (I * PI * tau).exp(),
            tau,
            nulls: ThetaNulls::new(tau)?,
            real_modulus: self.real_modulus.map(|_| self.kprime.re),
        })
    }

    /// `K E' + K' E - K K' - π/2`, zero by Legendre's relation.
    pub fn legendre_defect(&self) -> Complex64 {
        self.big_k * self.big_eprime + self.big_kprime * self.big_e
            - self.big_k * self.big_kprime
            - FRAC_PI_2
    }

    /// `θ3²(0|τ)`.
    pub fn theta3_sq(&self) -> Complex64 {
        self.nulls.t3 * self.nulls.t3
    }

    /// `θ4²(0|τ)`.
    pub fn theta4_sq(&self) -> Complex64 {
        self.nulls.t4 * self.nulls.t4
    }

    /// `K` as a real number; panics for parameters with complex `K`.
    pub(crate) fn big_k_real(&self) -> f64 {
        debug_assert!(self.big_k.im.abs() <= 1e-12 * self.big_k.re.abs());
        self.big_k.re
    }
}
