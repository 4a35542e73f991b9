//! Small complex-arithmetic helpers shared by the evaluators.

use num_complex::Complex64;
use std::f64::consts::PI;

pub(crate) const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

pub(crate) fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub(crate) fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// The Gamma function for complex argument.
///
/// Returns a non-finite value at the poles `0, -1, -2, ...`.
pub fn gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // reflection
        let s = (PI * z).sin();
        return PI / (s * gamma(1.0 - z));
    }
    let z = z - 1.0;
    let mut x = real(LANCZOS[0]);
    for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
        x += p / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * ((z + 0.5) * t.ln() - t).exp() * x
}

/// Real Gamma, via the complex routine.
pub fn gamma_real(x: f64) -> f64 {
    gamma(real(x)).re
}

/// `true` when `z` is within `tol` of one of `0, -1, -2, ...`.
pub(crate) fn near_gamma_pole(z: Complex64, tol: f64) -> bool {
    z.re < tol && z.im.abs() < tol && (z.re - z.re.round()).abs() < tol
}

/// `exp(z) - 1` without cancellation for small `|z|`.
pub(crate) fn expm1(z: Complex64) -> Complex64 {
    let (a, b) = (z.re, z.im);
    let half = (0.5 * b).sin();
    c(a.exp_m1() * b.cos() - 2.0 * half * half, a.exp() * b.sin())
}

/// `(exp(z) - 1) / z`, equal to 1 at the origin.
pub(crate) fn exprel(z: Complex64) -> Complex64 {
    if z.norm() < 1e-8 {
        1.0 + 0.5 * z
    } else {
        expm1(z) / z
    }
}

/// `1 / sin(z)`, computed without overflow for large `|Im z|`.
pub fn csc(z: Complex64) -> Complex64 {
    if z.im > 0.0 {
        let u = (I * z).exp();
        2.0 * I * u / (u * u - 1.0)
    } else if z.im < 0.0 {
        -csc(-z)
    } else {
        real(1.0 / z.re.sin())
    }
}

/// `1 / cos(z)`, computed without overflow for large `|Im z|`.
pub fn sec(z: Complex64) -> Complex64 {
    if z.im > 0.0 {
        let u = (I * z).exp();
        2.0 * u / (u * u + 1.0)
    } else if z.im < 0.0 {
        sec(-z)
    } else {
        real(1.0 / z.re.cos())
    }
}

/// `b^(-s)` on the principal branch.
#[inline]
pub(crate) fn pow_neg(b: Complex64, s: Complex64) -> Complex64 {
    (-s * b.ln()).exp()
}

/// Arguments this close to zero are treated as sitting on a removable
/// singularity.
pub(crate) fn is_effectively_zero(x: f64) -> bool {
    x.abs() < crate::tolerance::REMOVABLE_ZERO
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_known_values() {
        assert!((gamma_real(0.5) - PI.sqrt()).abs() < 1e-14);
        assert!((gamma_real(5.0) - 24.0).abs() < 1e-12);
        assert!((gamma_real(1.5) - 0.5 * PI.sqrt()).abs() < 1e-14);
        assert!((gamma_real(-0.5) + 2.0 * PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn gamma_reflection_and_recurrence() {
        for &(re, im) in &[(0.3, 1.1), (-0.7, 0.4), (2.5, -3.0), (0.5, 10.0)] {
            let z = c(re, im);
            let refl = gamma(z) * gamma(1.0 - z) * (PI * z).sin();
            assert!((refl - PI).norm() < 1e-12 * PI, "{z}: {refl}");
            let rec = gamma(z + 1.0) - z * gamma(z);
            assert!(rec.norm() < 1e-13 * gamma(z + 1.0).norm().max(1.0));
        }
    }

    #[test]
    fn csc_sec_match_naive_in_moderate_range() {
        for &(re, im) in &[(0.3, 0.7), (-1.2, -2.0), (2.0, 0.0), (0.1, -0.05)] {
            let z = c(re, im);
            assert!((csc(z) - 1.0 / z.sin()).norm() < 1e-14 * csc(z).norm().max(1.0));
            assert!((sec(z) - 1.0 / z.cos()).norm() < 1e-14 * sec(z).norm().max(1.0));
        }
        // no overflow far from the real axis
        let far = c(0.0, 800.0);
        assert!(csc(far).norm() < 1e-300 && csc(far).is_finite());
        assert!(sec(-far).is_finite());
    }

    #[test]
    fn exprel_and_expm1_small_arguments() {
        let z = c(1e-10, -2e-10);
        assert!((exprel(z) - (1.0 + 0.5 * z)).norm() < 1e-18);
        assert!((expm1(z) - z * (1.0 + 0.5 * z)).norm() < 1e-15 * z.norm());
        let big = c(0.4, -0.3);
        assert!((expm1(big) - (big.exp() - 1.0)).norm() < 1e-15);
    }
}
