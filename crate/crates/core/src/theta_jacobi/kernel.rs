//! Named functions of a real variable `y` built from the primitives above:
//! the closed-form Fourier transforms of the catalog pairs, the three
//! double-pole kernels `F_sn`, `F_cn`, `F_dn`, and plain `J(2Ky,k')/cosh(πy)`.
//!
//! Throughout, `J'` stands for `J(2Ky, k')` and `e = exp(πy)`. Differences
//! like `cd' - 1` or `e^{2πy} - 1` that vanish at `y = 0` are formed without
//! cancellation, so the kernels stay accurate right next to their removable
//! points.

use crate::elliptic::EllipticParams;
use crate::error::{Error, Result};
use crate::numeric::{expm1, is_effectively_zero, real, I};
use crate::quadrature::limit_at_zero;
use num_complex::Complex64;
use std::f64::consts::PI;

use super::epsilon::{jacobi_epsilon, nd_square_integral};
use super::fraktur::fraktur_f;
use super::jacobi::{blocks, quotient, JacobiCode};

/// Which kernel a [`KernelFn`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelName {
    /// Closed-form transform of catalog pair `1..=25`.
    Pair(u8),
    Fsn,
    Fcn,
    Fdn,
    /// `J(2Ky, k') / cosh(πy)`.
    DualOverCosh(JacobiCode),
}

/// Symmetry of a kernel under `y -> -y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
    None,
}

/// A kernel bound to one modulus.
#[derive(Debug, Clone)]
pub struct KernelFn {
    pub name: KernelName,
    pub params: EllipticParams,
    pub parity: Parity,
    /// `true` when `y = 0` is a removable singularity of the formula.
    pub singular_at_zero: bool,
    dual: EllipticParams,
}

// Jacobi values at modulus k' with the "minus one" forms alongside.
struct Dual {
    sn: Complex64,
    sd: Complex64,
    nd: Complex64,
    cd: Complex64,
    cd_m1: Complex64,
    nd_m1: Complex64,
    cn_m1: Complex64,
    dn_m1: Complex64,
}

impl KernelFn {
    pub fn new(name: KernelName, params: &EllipticParams) -> Result<Self> {
        if params.real_modulus().is_none() {
            return Err(Error::Precondition("kernels are defined for a real modulus".into()));
        }
        if let KernelName::Pair(id) = name {
            if !(1..=25).contains(&id) {
                return Err(Error::Domain(format!("no catalog pair {id}")));
            }
        }
        let (parity, singular_at_zero) = classify(name);
        Ok(KernelFn {
            name,
            params: *params,
            parity,
            singular_at_zero,
            dual: params.complement()?,
        })
    }

    /// Shorthand for [`kernel_eval`].
    pub fn eval(&self, y: f64) -> Result<Complex64> {
        kernel_eval(self, y)
    }

    fn dual_values(&self, y: f64) -> Result<Dual> {
        let u = real(2.0 * self.params.big_k.re * y);
        let b = blocks(u, &self.dual)?;
        let q = |code| quotient(code, &b, u);
        let (sn, cn, dn) = (q(JacobiCode::Sn)?, q(JacobiCode::Cn)?, q(JacobiCode::Dn)?);
        let m2 = self.dual.k * self.dual.k;
        let mp2 = self.dual.kprime * self.dual.kprime;
        let sn2 = sn * sn;
        Ok(Dual {
            sn,
            sd: sn / dn,
            nd: 1.0 / dn,
            cd: cn / dn,
            cd_m1: -mp2 * sn2 / (dn * (cn + dn)),
            nd_m1: m2 * sn2 / (dn * (1.0 + dn)),
            cn_m1: -sn2 / (1.0 + cn),
            dn_m1: -m2 * sn2 / (1.0 + dn),
        })
    }

    // k² ∫₀^{2Ky} nd(u,k')² du + 2(E - K) y
    fn bracket_nd(&self, y: f64) -> Result<Complex64> {
        let p = &self.params;
        let integral = nd_square_integral(2.0 * p.big_k.re * y, &self.dual)?;
        Ok(p.k * p.k * integral + 2.0 * (p.big_e - p.big_k) * y)
    }

    // ∫₀^{2Ky} dn(u,k')² du + 2(E - K) y
    fn bracket_dn(&self, y: f64) -> Result<Complex64> {
        let p = &self.params;
        let integral = jacobi_epsilon(2.0 * p.big_k.re * y, &self.dual)?;
        Ok(real(integral) + 2.0 * (p.big_e - p.big_k) * y)
    }

    fn raw(&self, y: f64) -> Result<Complex64> {
        let p = &self.params;
        let (k, kp) = (p.k, p.kprime);
        let py = PI * y;
        let e = py.exp();
        let em1 = expm1(real(py));
        let e2m1 = expm1(real(2.0 * py));
        let emm1 = expm1(real(-py));
        let (ch, sh) = (py.cosh(), py.sinh());
        let e2p1 = e * e + 1.0;
        Ok(match self.name {
            KernelName::Fsn => I / k / ch * self.bracket_nd(y)?,
            KernelName::Fcn => 1.0 / k / sh * self.bracket_nd(y)?,
            KernelName::Fdn => self.bracket_dn(y)? / sh,
            KernelName::DualOverCosh(code) => {
                let u = real(2.0 * p.big_k.re * y);
                quotient(code, &blocks(u, &self.dual)?, u)? / ch
            }
            KernelName::Pair(25) => {
                let f = fraktur_f(real(y), &self.dual)?;
                I * p.big_k / p.big_kprime / ch
                    * (f + 2.0 * y - p.big_kprime / p.big_k * py.tanh())
            }
            KernelName::Pair(19) => I / k / ch * self.bracket_nd(y)?,
            KernelName::Pair(20) => 1.0 / k / sh * self.bracket_nd(y)?,
            KernelName::Pair(21) => self.bracket_dn(y)? / sh,
            KernelName::Pair(22) => 2.0 / e2p1 * self.bracket_nd(y)?,
            KernelName::Pair(23) => -2.0 / e2m1 * self.bracket_nd(y)?,
            KernelName::Pair(24) => -2.0 / e2m1 * self.bracket_dn(y)?,
            KernelName::Pair(id) => {
                let d = self.dual_values(y)?;
                match id {
                    1 => -2.0 * k * (kp * d.sd - e) / e2p1,
                    2 => 2.0 * k * d.sd / e2m1,
                    3 => -2.0 * I * (d.cn_m1 - em1) / e2m1,
                    4 => -(kp * d.cd - 1.0) / k / ch,
                    5 => d.sn / sh,
                    6 => -I / k * d.cd_m1 / sh,
                    7 => 2.0 * I * (d.dn_m1 - em1) / e2m1,
                    8 => 2.0 * I * k * (d.nd_m1 - em1) / e2m1,
                    9 => -2.0 * I * k * d.nd / e2p1,
                    10 => 2.0 * I * (kp * d.cd - 1.0) / e2p1,
                    11 => -2.0 * I * d.cd_m1 / e2m1,
                    12 => 2.0 * d.sn / e2m1,
                    13 => -I * (kp * d.sd + (-py).exp()) / ch,
                    14 => -I * (d.cn_m1 - emm1) / sh,
                    15 => d.sd / sh,
                    16 => -I * (d.nd_m1 - emm1) / sh,
                    17 => -I * (d.dn_m1 - emm1) / sh,
                    18 => d.nd / ch,
                    _ => unreachable!("pair ids are validated on construction"),
                }
            }
        })
    }
}

fn classify(name: KernelName) -> (Parity, bool) {
    match name {
        KernelName::Fsn => (Parity::Odd, false),
        KernelName::Fcn | KernelName::Fdn => (Parity::Even, true),
        KernelName::DualOverCosh(code) => {
            let odd = matches!(
                code,
                JacobiCode::Sn | JacobiCode::Sc | JacobiCode::Sd | JacobiCode::Ns | JacobiCode::Cs | JacobiCode::Ds
            );
            (if odd { Parity::Odd } else { Parity::Even }, false)
        }
        KernelName::Pair(id) => {
            let parity = match id {
                4 | 5 | 15 | 18 | 20 | 21 => Parity::Even,
                6 | 19 | 25 => Parity::Odd,
                _ => Parity::None,
            };
            let singular = matches!(
                id,
                2 | 3 | 5 | 6 | 7 | 8 | 11 | 12 | 14 | 15 | 16 | 17 | 20 | 21 | 23 | 24
            );
            (parity, singular)
        }
    }
}

/// Evaluates `f` at `y`; at a removable point the limit is taken from
/// symmetric samples around it.
pub fn kernel_eval(f: &KernelFn, y: f64) -> Result<Complex64> {
    if !y.is_finite() {
        return Err(Error::Domain(format!("kernel argument {y} is not finite")));
    }
    if f.singular_at_zero && is_effectively_zero(y) {
        return limit_at_zero(|t| f.raw(t), 0.05);
    }
    f.raw(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::params_from_k;
    use crate::numeric::c;
    use crate::theta_jacobi::fraktur::fraktur_f_fourier;
    use crate::theta_jacobi::jacobi::jacobi;

    fn p6() -> EllipticParams {
        params_from_k(0.6).unwrap()
    }

    #[test]
    fn parity_is_respected() {
        let p = p6();
        let mut names: Vec<KernelName> = (1..=25).map(KernelName::Pair).collect();
        names.extend([KernelName::Fsn, KernelName::Fcn, KernelName::Fdn]);
        for name in names {
            let f = KernelFn::new(name, &p).unwrap();
            for &y in &[0.13, 0.8, 1.7] {
                let (a, b) = (f.eval(y).unwrap(), f.eval(-y).unwrap());
                match f.parity {
                    Parity::Even => assert!((a - b).norm() < 1e-12, "{name:?} y={y}"),
                    Parity::Odd => assert!((a + b).norm() < 1e-12, "{name:?} y={y}"),
                    Parity::None => {}
                }
            }
        }
    }

    #[test]
    fn fdn_even_near_zero_and_limit() {
        let f = KernelFn::new(KernelName::Fdn, &p6()).unwrap();
        let d = f.eval(1e-4).unwrap() - f.eval(-1e-4).unwrap();
        assert!(d.norm() < 1e-10);
        // B_dn(y) ~ 2E y so the limit is 2E/π
        let lim = f.eval(0.0).unwrap();
        assert!((lim - 2.0 * f.params.big_e / PI).norm() < 1e-11, "{lim}");
    }

    #[test]
    fn fsn_from_primitives() {
        let p = p6();
        let f = KernelFn::new(KernelName::Fsn, &p).unwrap();
        let y = 0.4;
        let dual = p.complement().unwrap();
        let upper = 2.0 * p.big_k.re * y;
        let integrand = |u: f64| {
            let nd = jacobi(JacobiCode::Nd, real(u), &dual)?;
            Ok(nd * nd)
        };
        let rule = crate::quadrature::gauss20();
        let a = crate::quadrature::gauss_panels(rule, 0.0, upper, 6, integrand).unwrap();
        let b = crate::quadrature::gauss_panels(rule, 0.0, upper, 12, integrand).unwrap();
        assert!((a - b).norm() < 1e-11);
        let expected = I / 0.6 * (0.36 * b + 2.0 * (p.big_e - p.big_k) * y) / (PI * y).cosh();
        assert!((f.eval(y).unwrap() - expected).norm() < 1e-11);
    }

    #[test]
    fn fraktur_kernel_two_routes() {
        let p = p6();
        let f = KernelFn::new(KernelName::Pair(25), &p).unwrap();
        let y = 0.3;
        let dual = p.complement().unwrap();
        let series = fraktur_f_fourier(y, &dual).unwrap();
        let expected = I * p.big_k / p.big_kprime / (PI * y).cosh()
            * (series + 2.0 * y - p.big_kprime / p.big_k * (PI * y).tanh());
        assert!((f.eval(y).unwrap() - expected).norm() < 1e-10);
    }

    #[test]
    fn closed_form_spot_values() {
        let p = p6();
        // pair 4 at the origin: (1 - k')/k
        let v = KernelFn::new(KernelName::Pair(4), &p).unwrap().eval(0.0).unwrap();
        assert!((v - (1.0 - 0.8) / 0.6).norm() < 1e-14);
        // pair 9 where 2Ky is the quarter period of k': nd(K', k') = 1/k
        let y = p.big_kprime.re / (2.0 * p.big_k.re);
        let v = KernelFn::new(KernelName::Pair(9), &p).unwrap().eval(y).unwrap();
        let expected = -2.0 * I / ((2.0 * PI * y).exp() + 1.0);
        assert!((v - expected).norm() < 1e-13, "{v} vs {expected}");
    }

    #[test]
    fn removable_points_are_continuous() {
        let p = p6();
        for id in [2u8, 3, 5, 6, 7, 8, 11, 12, 14, 15, 16, 17, 20, 21, 23, 24] {
            let f = KernelFn::new(KernelName::Pair(id), &p).unwrap();
            let at = f.eval(0.0).unwrap();
            let near = f.eval(1e-7).unwrap();
            assert!((at - near).norm() < 1e-5, "pair {id}: {at} vs {near}");
            assert!(at.is_finite());
        }
    }

    #[test]
    fn rejects_bad_input() {
        let p = p6();
        assert!(KernelFn::new(KernelName::Pair(0), &p).is_err());
        assert!(KernelFn::new(KernelName::Pair(26), &p).is_err());
        let pc = crate::elliptic::params_from_tau(c(0.3, 1.2)).unwrap();
        assert!(KernelFn::new(KernelName::Fsn, &pc).is_err());
        let f = KernelFn::new(KernelName::Fsn, &p).unwrap();
        assert!(f.eval(f64::NAN).is_err());
    }
}
