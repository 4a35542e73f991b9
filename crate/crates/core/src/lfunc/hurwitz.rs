//! Hurwitz zeta `ζ(s,a)` and its alternating sibling `ζ_E(s,a)` for complex
//! `s` and `a`, continued to all `s` by Euler-Maclaurin summation.
//!
//! After a head sum of `M` terms the tail is
//!
//! ```text
//! Σ_{m≥M} (m+a)^{-s} = N^{1-s}/(s-1) + N^{-s}/2 + Σ_j B_2j/(2j)! (s)_{2j-1} N^{-s-2j+1}
//! ```
//!
//! with `N = M + a`. The pole is split off analytically:
//! `N^{1-s}/(s-1) = 1/(s-1) - log N · φ((1-s) log N)` with `φ(x) = (e^x-1)/x`,
//! so the "regular part" `ζ(s,a) - 1/(s-1)` is computed without ever
//! dividing by `s - 1`. Differences of regular parts give `ζ_E` and `β` with
//! the poles cancelled exactly.

use crate::error::{Error, Result};
use crate::numeric::{exprel, pow_neg, real};
use crate::tolerance;
use num_complex::Complex64;
use std::sync::OnceLock;

use super::numbers::bernoulli_f64;

/// How an [`LValue`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    EulerMaclaurin,
    DirichletSeries,
    Reflection,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::EulerMaclaurin => "euler_maclaurin",
            Method::DirichletSeries => "dirichlet_series",
            Method::Reflection => "reflection",
        }
    }
}

/// A value together with an estimate of its truncation error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LValue {
    pub value: Complex64,
    pub abs_error_est: f64,
    pub method: Method,
}

// B_2j / (2j)! for j = 1..=EM_CORRECTIONS + 1
fn em_coefficients() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = Vec::new();
        let mut fact = 1.0;
        for j in 1..=tolerance::EM_CORRECTIONS + 1 {
            fact *= (2 * j - 1) as f64 * (2 * j) as f64;
            out.push(bernoulli_f64(2 * j).expect("index below cap") / fact);
        }
        out
    })
}

fn check_shift(a: Complex64) -> Result<()> {
    if !a.re.is_finite() || !a.im.is_finite() {
        return Err(Error::Domain(format!("shift a = {a} is not finite")));
    }
    if a.im == 0.0 && a.re <= 0.0 {
        return Err(Error::Domain(format!("shift a = {a} lies on the branch cut")));
    }
    Ok(())
}

fn shift_count(s: Complex64, a: Complex64) -> usize {
    let base = tolerance::EM_MIN_SHIFT.max(s.norm().ceil() as usize + 10);
    base + (-a.re).ceil().max(0.0) as usize
}

// Relative rounding of `x^{-s} = exp(-s log x)` for |x| up to |n|: the
// exponent carries an absolute error of about ε|s log n|.
fn power_roundoff(s: Complex64, n: Complex64) -> f64 {
    f64::EPSILON * (1.0 + s.norm() * n.ln().norm())
}

/// `ζ(s,a) - 1/(s-1)` and a truncation-error estimate.
pub(crate) fn hurwitz_regular(s: Complex64, a: Complex64) -> Result<(Complex64, f64)> {
    check_shift(a)?;
    let m = shift_count(s, a);
    let mut head = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    for i in 0..m {
        let t = pow_neg(a + i as f64, s);
        magnitude += t.norm();
        head += t;
    }
    let n = a + m as f64;
    let log_n = n.ln();
    let n_pow = pow_neg(n, s);
    let mut tail = 0.5 * n_pow;
    // (s)_{2j-1} N^{-s-2j+1}, advanced by (s+2j-1)(s+2j)/N² per step
    let mut rising = s * n_pow / n;
    let inv_n2 = 1.0 / (n * n);
    let coeffs = em_coefficients();
    let mut omitted = 0.0;
    for (j, c) in coeffs.iter().enumerate() {
        let term = *c * rising;
        if j == tolerance::EM_CORRECTIONS {
            omitted = term.norm();
            break;
        }
        tail += term;
        let jj = (j + 1) as f64;
        rising *= (s + 2.0 * jj - 1.0) * (s + 2.0 * jj) * inv_n2;
    }
    let pole_free = -log_n * exprel((1.0 - s) * log_n);
    let value = head + tail + pole_free;
    let roundoff = power_roundoff(s, n) * (magnitude + tail.norm() + pole_free.norm());
    Ok((value, 2.0 * omitted + roundoff))
}

/// Hurwitz zeta `ζ(s,a) = Σ_{m≥0} (m+a)^{-s}` continued to `s ≠ 1`.
pub fn hurwitz_zeta(s: Complex64, a: Complex64) -> Result<LValue> {
    if s == real(1.0) {
        return Err(Error::Pole("ζ(s,a) has a pole at s = 1".into()));
    }
    let (reg, err) = hurwitz_regular(s, a)?;
    Ok(LValue {
        value: reg + 1.0 / (s - 1.0),
        abs_error_est: err,
        method: Method::EulerMaclaurin,
    })
}

// (2^{2j} - 1) B_2j / (2j)! for j = 1..=EM_CORRECTIONS + 1, the Boole
// summation weights
fn boole_coefficients() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        em_coefficients()
            .iter()
            .enumerate()
            .map(|(j, c)| (4f64.powi(j as i32 + 1) - 1.0) * c)
            .collect()
    })
}

/// Alternating Hurwitz zeta `ζ_E(s,a) = Σ_{m≥0} (-1)^m (m+a)^{-s}`, entire in `s`.
///
/// Summed directly with Boole's formula for the tail,
///
/// ```text
/// Σ_{m≥M} (-1)^{m-M} (m+a)^{-s} = N^{-s}/2 + Σ_j (2^{2j}-1) B_2j/(2j)! (s)_{2j-1} N^{-s-2j+1}
/// ```
///
/// so no pole has to cancel and the factor `2^{-s}` of the half-shift
/// splitting never amplifies rounding.
pub fn alt_hurwitz_zeta(s: Complex64, a: Complex64) -> Result<LValue> {
    check_shift(a)?;
    // the tail weights shrink like π^{-2j}, half the rate of the plain sum
    let base = tolerance::EM_MIN_SHIFT.max((1.5 * s.norm()).ceil() as usize + 10);
    let mut m = base + (-a.re).ceil().max(0.0) as usize;
    m += m % 2;
    let mut head = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    for i in 0..m {
        let t = pow_neg(a + i as f64, s);
        magnitude += t.norm();
        if i % 2 == 0 {
            head += t;
        } else {
            head -= t;
        }
    }
    let n = a + m as f64;
    let n_pow = pow_neg(n, s);
    let mut tail = 0.5 * n_pow;
    let mut rising = s * n_pow / n;
    let inv_n2 = 1.0 / (n * n);
    let mut omitted = 0.0;
    for (j, c) in boole_coefficients().iter().enumerate() {
        let term = *c * rising;
        if j == tolerance::EM_CORRECTIONS {
            omitted = term.norm();
            break;
        }
        tail += term;
        let jj = (j + 1) as f64;
        rising *= (s + 2.0 * jj - 1.0) * (s + 2.0 * jj) * inv_n2;
    }
    Ok(LValue {
        value: head + tail,
        abs_error_est: 2.0 * omitted + power_roundoff(s, n) * (magnitude + tail.norm()),
        method: Method::EulerMaclaurin,
    })
}

/// Partial Dirichlet series with an integral tail, valid for `Re s > 1`:
/// `Σ_{m<terms} (m+a)^{-s} + N^{1-s}/(s-1) + N^{-s}/2` with `N = terms + a`.
///
/// Kept as an independent route for cross-checks.
pub fn hurwitz_zeta_series(s: Complex64, a: Complex64, terms: usize) -> Result<LValue> {
    check_shift(a)?;
    if s.re <= 1.0 {
        return Err(Error::Domain(format!("the Dirichlet series needs Re s > 1, got {s}")));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for m in 0..terms {
        sum += pow_neg(a + m as f64, s);
    }
    let n = a + terms as f64;
    let np = pow_neg(n, s);
    let value = sum + n * np / (s - 1.0) + 0.5 * np;
    // next Euler-Maclaurin term
    let err = (s * np / n).norm() / 12.0;
    Ok(LValue { value, abs_error_est: err, method: Method::DirichletSeries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::c;
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn classical_values() {
        let z2 = hurwitz_zeta(real(2.0), real(1.0)).unwrap();
        assert!((z2.value - PI * PI / 6.0).norm() < 1e-13);
        assert!(z2.abs_error_est >= 0.0);
        let ln2 = alt_hurwitz_zeta(real(1.0), real(1.0)).unwrap();
        assert!((ln2.value - LN_2).norm() < 1e-13);
        let half = alt_hurwitz_zeta(real(1.0), real(0.5)).unwrap();
        assert!((half.value - PI / 2.0).norm() < 1e-13);
        let zm1 = hurwitz_zeta(real(-1.0), real(1.0)).unwrap();
        assert!((zm1.value + 1.0 / 12.0).norm() < 1e-12);
    }

    #[test]
    fn half_shift_even_arguments() {
        for n in 0..=2 {
            let s = (2 * n + 2) as f64;
            let v = hurwitz_zeta(real(s), real(0.5)).unwrap().value;
            let z = hurwitz_zeta(real(s), real(1.0)).unwrap().value;
            assert!((v - (2f64.powf(s) - 1.0) * z).norm() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn brute_force_tail_corrected() {
        let s = c(0.5, 2.0);
        let a = c(0.5, 3.7);
        // Re s < 1: the tail-corrected partial sum still converges, with
        // the next Euler-Maclaurin term included by hand
        let terms = 100_000;
        let mut sum = Complex64::new(0.0, 0.0);
        for m in 0..terms {
            sum += pow_neg(a + m as f64, s);
        }
        let n = a + terms as f64;
        let np = pow_neg(n, s);
        let oracle = sum + n * np / (s - 1.0) + 0.5 * np + s * np / n / 12.0;
        let v = hurwitz_zeta(s, a).unwrap();
        assert!((v.value - oracle).norm() < 1e-9, "{} vs {oracle}", v.value);
    }

    #[test]
    fn series_route_agrees_for_convergent_s() {
        for &(s, a) in &[(c(2.5, 1.0), c(0.3, 0.2)), (c(1.5, -4.0), c(2.0, -1.0)), (c(3.0, 0.0), c(0.5, 5.0))] {
            let em = hurwitz_zeta(s, a).unwrap();
            let ds = hurwitz_zeta_series(s, a, 4000).unwrap();
            assert!((em.value - ds.value).norm() < ds.abs_error_est + 1e-12, "s={s} a={a}");
        }
        assert!(hurwitz_zeta_series(real(0.5), real(1.0), 10).is_err());
    }

    #[test]
    fn recurrences() {
        for &(s, a) in &[(c(0.3, 4.0), c(0.7, 1.1)), (c(-0.5, 1.0), c(1.2, -0.4)), (c(5.0, -3.0), c(0.25, 0.0))] {
            let z = hurwitz_zeta(s, a).unwrap().value;
            let z1 = hurwitz_zeta(s, a + 1.0).unwrap().value;
            let d = (z - pow_neg(a, s) - z1).norm();
            assert!(d < 1e-12 * z.norm().max(1.0), "s={s} a={a}: {d:e} {z}");
            let e = alt_hurwitz_zeta(s, a).unwrap().value;
            let e1 = alt_hurwitz_zeta(s, a + 1.0).unwrap().value;
            assert!((e + e1 - pow_neg(a, s)).norm() < 1e-12 * e.norm().max(1.0));
        }
    }

    #[test]
    fn alternating_left_of_the_axis() {
        // 2^{-s}(ζ(s,a/2) - ζ(s,(a+1)/2)) at 40 digits in mpmath, frozen
        let v = alt_hurwitz_zeta(real(-2.18), real(0.1)).unwrap();
        assert!((v.value.re + 0.007_208_169_067_577_764_4).abs() < 1e-14, "{}", v.value);
        let v = alt_hurwitz_zeta(c(-3.0, 5.0), c(0.1, 2.0)).unwrap();
        let want = c(5199.594_191_075_392_7, 15627.285_851_813_571);
        assert!((v.value - want).norm() < 1e-15 * want.norm() + v.abs_error_est);
    }

    #[test]
    fn deep_continuation_within_estimate() {
        // the head sum grows like |a+M|^{-Re s}, so cancellation sets the floor
        let (s, a) = (c(-2.5, 1.0), c(1.2, -0.4));
        let z = hurwitz_zeta(s, a).unwrap();
        let z1 = hurwitz_zeta(s, a + 1.0).unwrap();
        let d = (z.value - pow_neg(a, s) - z1.value).norm();
        assert!(d <= z.abs_error_est + z1.abs_error_est, "{d:e}");
    }

    #[test]
    fn error_estimate_bounds_actual_error() {
        // exact: ζ(4, 1) = π⁴/90
        let v = hurwitz_zeta(real(4.0), real(1.0)).unwrap();
        assert!((v.value - PI.powi(4) / 90.0).norm() <= v.abs_error_est.max(4.0 * f64::EPSILON));
    }

    #[test]
    fn domain_and_pole() {
        assert!(matches!(hurwitz_zeta(real(1.0), real(0.5)), Err(Error::Pole(_))));
        assert!(matches!(hurwitz_zeta(real(2.0), real(-0.5)), Err(Error::Domain(_))));
        assert!(matches!(alt_hurwitz_zeta(real(2.0), real(0.0)), Err(Error::Domain(_))));
        // entire in s
        assert!(alt_hurwitz_zeta(real(1.0), c(0.5, 1.0)).unwrap().value.is_finite());
    }

    fn defect_ratio(s: Complex64, alternating: bool) -> f64 {
        let dir = Complex64::from_polar(1.0, PI / 3.0);
        let defect = |r: f64| {
            let a = dir * r;
            if alternating {
                let v = alt_hurwitz_zeta(s, a).unwrap().value;
                (v - 0.5 * pow_neg(a, s) - s / 4.0 * pow_neg(a, s + 1.0)).norm()
            } else {
                let v = hurwitz_zeta(s, a).unwrap().value;
                (v - a * pow_neg(a, s) / (s - 1.0) - 0.5 * pow_neg(a, s)).norm()
            }
        };
        defect(64.0) / defect(32.0)
    }

    #[test]
    fn asymptotic_orders() {
        for s in [c(0.5, 2.0), c(2.0, 0.0), c(1.3, -1.0)] {
            let predicted = 2f64.powf(-s.re - 1.0);
            let r = defect_ratio(s, false);
            assert!((r / predicted - 1.0).abs() < 0.2, "ζ s={s}: {r} vs {predicted}");
            let predicted = 2f64.powf(-s.re - 3.0);
            let r = defect_ratio(s, true);
            assert!((r / predicted - 1.0).abs() < 0.2, "ζ_E s={s}: {r} vs {predicted}");
        }
    }
}
