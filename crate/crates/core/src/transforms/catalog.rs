//! The catalog of Fourier pairs.
//!
//! Pairs `1..=24` have the form `f(x) = J(2K'x, k) / h(πx)` with `J` one of
//! the twelve Jacobi functions and `h` either `cosh` or `sinh`; pair `25` is
//! `𝔣(x,k)/cosh(πx)`. Three elliptic-free warm-ups bootstrap the engines:
//!
//! * `0a`: `∫₀^∞ sin(xy)/sinh(x) dx = (π/2) tanh(πy/2)`
//! * `0b`: `∫₀^∞ cos(xy)/cosh(x) dx = (π/2) / cosh(πy/2)`
//! * `0c`: `∫_{ℝ+iε} e^{2πixy}/sinh(πx) dx = -i (1 - tanh(πy))`

use crate::elliptic::EllipticParams;
use crate::error::{Error, Result};
use crate::numeric::{c, real};
use crate::theta_jacobi::{fraktur_f, jacobi, JacobiCode, KernelFn, KernelName, Parity};
use crate::tolerance;
use num_complex::Complex64;
use std::fmt;
use std::f64::consts::PI;
use std::str::FromStr;

/// Catalog identifier: the three warm-ups sort before the numbered pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairId {
    SineWarmUp,
    CosineWarmUp,
    ContourWarmUp,
    Numbered(u8),
}

impl PairId {
    /// Every catalog entry in display order.
    pub fn all() -> Vec<PairId> {
        let mut ids = vec![PairId::SineWarmUp, PairId::CosineWarmUp, PairId::ContourWarmUp];
        ids.extend((1..=25).map(PairId::Numbered));
        ids
    }

    /// The 25 elliptic pairs.
    pub fn numbered() -> Vec<PairId> {
        (1..=25).map(PairId::Numbered).collect()
    }

    pub fn warm_ups() -> Vec<PairId> {
        vec![PairId::SineWarmUp, PairId::CosineWarmUp, PairId::ContourWarmUp]
    }
}

impl fmt::Display for PairId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairId::SineWarmUp => f.write_str("0a"),
            PairId::CosineWarmUp => f.write_str("0b"),
            PairId::ContourWarmUp => f.write_str("0c"),
            PairId::Numbered(n) => write!(f, "{n}"),
        }
    }
}

impl FromStr for PairId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "0a" => Ok(PairId::SineWarmUp),
            "0b" => Ok(PairId::CosineWarmUp),
            "0c" => Ok(PairId::ContourWarmUp),
            t => match t.parse::<u8>() {
                Ok(n) if (1..=25).contains(&n) => Ok(PairId::Numbered(n)),
                _ => Err(Error::Domain(format!("unknown pair `{t}`; expected 0a, 0b, 0c or 1..=25"))),
            },
        }
    }
}

/// How the numeric transform is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformConvention {
    /// `∫_{ℝ+iε} f(x) e^{2πixy} dx`.
    Contour,
    /// `∫₀^∞ f(x) sin(xy) dx`.
    HalfLineSine,
    /// `∫₀^∞ f(x) cos(xy) dx`.
    HalfLineCosine,
}

/// Hyperbolic denominator of a catalog integrand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Denominator {
    Cosh,
    Sinh,
}

/// The integrand `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lhs {
    Jacobi(JacobiCode, Denominator),
    Fraktur,
    /// `1/sinh(x)` on the half line.
    InvSinhUnscaled,
    /// `1/cosh(x)` on the half line.
    InvCoshUnscaled,
    /// `1/sinh(πx)`.
    InvSinh,
}

/// Kinds of singular behaviour, used for grouping in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PoleClass {
    /// Elliptic-free bootstrap identities.
    WarmUp,
    /// Only simple poles.
    Simple,
    /// A double pole where a zero of the denominator meets a pole of `J`.
    Double,
    /// The logarithmic derivative of `θ4`.
    LogDerivative,
}

/// One catalog row bound to a modulus.
#[derive(Debug, Clone)]
pub struct TransformPair {
    pub id: PairId,
    pub lhs: Lhs,
    pub convention: TransformConvention,
    pub contour_offset: f64,
    /// Heights modulo 1 of the pole rows of `f`.
    pub lhs_pole_heights: Vec<f64>,
    /// Parity of the closed-form transform in `y`.
    pub parity: Parity,
    pub class: PoleClass,
    pub params: EllipticParams,
    rhs: Option<KernelFn>,
}

const TABLE: [(JacobiCode, Denominator); 24] = {
    use Denominator::*;
    use JacobiCode::*;
    [
        (Dc, Cosh),
        (Nc, Cosh),
        (Sc, Cosh),
        (Cd, Cosh),
        (Nd, Cosh),
        (Sd, Cosh),
        (Cs, Cosh),
        (Ds, Cosh),
        (Ns, Cosh),
        (Dc, Sinh),
        (Nc, Sinh),
        (Sc, Sinh),
        (Cd, Sinh),
        (Nd, Sinh),
        (Sd, Sinh),
        (Cn, Sinh),
        (Dn, Sinh),
        (Sn, Sinh),
        (Sn, Cosh),
        (Cn, Cosh),
        (Dn, Cosh),
        (Ns, Sinh),
        (Ds, Sinh),
        (Cs, Sinh),
    ]
};

// Pole rows of J(2K'x, k): denominators n and d vanish on Im x = 1/2,
// s and c on the real axis.
fn jacobi_pole_height(code: JacobiCode) -> f64 {
    match code.name().as_bytes()[1] {
        b'n' | b'd' => 0.5,
        _ => 0.0,
    }
}

impl TransformPair {
    /// The catalog row `id` for the modulus in `params` (which must be real).
    pub fn new(id: PairId, params: &EllipticParams) -> Result<Self> {
        if params.real_modulus().is_none() {
            return Err(Error::Precondition("the catalog needs a real modulus".into()));
        }
        let offset = tolerance::CONTOUR_OFFSET;
        let (lhs, convention, heights, class, rhs) = match id {
            PairId::SineWarmUp => (Lhs::InvSinhUnscaled, TransformConvention::HalfLineSine, vec![], PoleClass::WarmUp, None),
            PairId::CosineWarmUp => (Lhs::InvCoshUnscaled, TransformConvention::HalfLineCosine, vec![], PoleClass::WarmUp, None),
            PairId::ContourWarmUp => (Lhs::InvSinh, TransformConvention::Contour, vec![0.0], PoleClass::WarmUp, None),
            PairId::Numbered(25) => (
                Lhs::Fraktur,
                TransformConvention::Contour,
                vec![0.5],
                PoleClass::LogDerivative,
                Some(KernelFn::new(KernelName::Pair(25), params)?),
            ),
            PairId::Numbered(n) => {
                let (code, den) = TABLE[n as usize - 1];
                let mut heights = vec![jacobi_pole_height(code)];
                let den_height = if den == Denominator::Cosh { 0.5 } else { 0.0 };
                if !heights.contains(&den_height) {
                    heights.push(den_height);
                }
                heights.sort_by(f64::total_cmp);
                let class = if n >= 19 { PoleClass::Double } else { PoleClass::Simple };
                (
                    Lhs::Jacobi(code, den),
                    TransformConvention::Contour,
                    heights,
                    class,
                    Some(KernelFn::new(KernelName::Pair(n), params)?),
                )
            }
        };
        let parity = match (&rhs, id) {
            (Some(k), _) => k.parity,
            (None, PairId::SineWarmUp) => Parity::Odd,
            (None, PairId::CosineWarmUp) => Parity::Even,
            (None, _) => Parity::None,
        };
        let pair = TransformPair {
            id,
            lhs,
            convention,
            contour_offset: offset,
            lhs_pole_heights: heights,
            parity,
            class,
            params: *params,
            rhs,
        };
        pair.check_offset(offset)?;
        Ok(pair)
    }

    /// Every catalog row for one modulus.
    pub fn catalog(params: &EllipticParams) -> Result<Vec<TransformPair>> {
        PairId::all().into_iter().map(|id| TransformPair::new(id, params)).collect()
    }

    /// Rejects contour heights that touch a pole row.
    pub fn check_offset(&self, eps: f64) -> Result<()> {
        if self.convention != TransformConvention::Contour {
            return Ok(());
        }
        if !(eps > 0.0 && eps < 1.0) {
            return Err(Error::Precondition(format!("contour offset {eps} is not in (0, 1)")));
        }
        for &h in &self.lhs_pole_heights {
            let d = (eps - h).rem_euclid(1.0);
            if d.min(1.0 - d) < 1e-3 {
                return Err(Error::Pole(format!(
                    "contour Im x = {eps} runs into the pole row at height {h} of pair {}",
                    self.id
                )));
            }
        }
        Ok(())
    }

    /// `f(x)` at complex `x`.
    pub fn lhs_eval(&self, x: Complex64) -> Result<Complex64> {
        let p = &self.params;
        let px = PI * x;
        Ok(match self.lhs {
            Lhs::Jacobi(code, den) => {
                let j = jacobi(code, 2.0 * p.big_kprime * x, p)?;
                match den {
                    Denominator::Cosh => j / px.cosh(),
                    Denominator::Sinh => j / px.sinh(),
                }
            }
            Lhs::Fraktur => fraktur_f(x, p)? / px.cosh(),
            Lhs::InvSinh => 1.0 / px.sinh(),
            Lhs::InvSinhUnscaled => 1.0 / x.sinh(),
            Lhs::InvCoshUnscaled => 1.0 / x.cosh(),
        })
    }

    /// The closed-form transform at real `y`.
    pub fn closed_form(&self, y: f64) -> Result<Complex64> {
        if let Some(k) = &self.rhs {
            return k.eval(y);
        }
        let py = PI * y;
        Ok(match self.id {
            PairId::SineWarmUp => real(0.5 * PI * (0.5 * py).tanh()),
            PairId::CosineWarmUp => real(0.5 * PI / (0.5 * py).cosh()),
            // 1 - tanh(πy) = 2/(e^{2πy} + 1)
            PairId::ContourWarmUp => c(0.0, -2.0 / ((2.0 * py).exp() + 1.0)),
            PairId::Numbered(_) => unreachable!("numbered pairs carry a kernel"),
        })
    }
}

/// Closed form of catalog row `id` at `y`.
pub fn pair_closed_form(id: PairId, y: f64, params: &EllipticParams) -> Result<Complex64> {
    TransformPair::new(id, params)?.closed_form(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::params_from_k;
    use crate::numeric::I;

    #[test]
    fn ids_round_trip_and_order() {
        let all = PairId::all();
        assert_eq!(all.len(), 28);
        for id in &all {
            assert_eq!(id.to_string().parse::<PairId>().unwrap(), *id);
        }
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
        assert!("26".parse::<PairId>().is_err());
        assert!("0d".parse::<PairId>().is_err());
    }

    #[test]
    fn default_offset_avoids_every_pole_row() {
        let p = params_from_k(0.6).unwrap();
        for pair in TransformPair::catalog(&p).unwrap() {
            assert!(pair.lhs_pole_heights.iter().all(|h| *h == 0.0 || *h == 0.5));
            assert!(pair.check_offset(0.25).is_ok());
            if pair.convention == TransformConvention::Contour {
                assert!(pair.check_offset(0.5).is_err() || !pair.lhs_pole_heights.contains(&0.5));
            }
        }
        let p1 = TransformPair::new(PairId::Numbered(1), &p).unwrap();
        assert!(matches!(p1.check_offset(0.5), Err(Error::Pole(_))));
        assert!(p1.check_offset(1.2).is_err());
    }

    #[test]
    fn lhs_decays_along_the_contour() {
        let p = params_from_k(0.6).unwrap();
        for pair in TransformPair::catalog(&p).unwrap() {
            if pair.convention != TransformConvention::Contour {
                continue;
            }
            let at = |t: f64| pair.lhs_eval(c(t, 0.25)).unwrap().norm();
            for &t in &[4.0_f64, -4.0] {
                let ratio = at(t + 2.0 * t.signum()) / at(t);
                // e^{-2π(1-δ)} with δ = 0.1
                assert!(ratio < (-2.0 * PI * 0.9).exp(), "pair {}: {ratio}", pair.id);
            }
        }
    }

    #[test]
    fn lhs_pole_rows_are_where_declared() {
        let p = params_from_k(0.6).unwrap();
        // pair 19: sn(2K'x)/cosh(πx) is singular at x = i/2
        let pair = TransformPair::new(PairId::Numbered(19), &p).unwrap();
        assert!(pair.lhs_eval(c(0.0, 0.5)).is_err() || !pair.lhs_eval(c(0.0, 0.5)).unwrap().is_finite());
        // pair 3: sc has a real pole where cn(2K'x) = 0
        let pair = TransformPair::new(PairId::Numbered(3), &p).unwrap();
        let x = p.big_k / (2.0 * p.big_kprime);
        assert!(pair.lhs_eval(x).is_err());
        assert!(pair.lhs_eval(x + 0.25 * I).unwrap().is_finite());
    }

    #[test]
    fn warm_up_closed_forms() {
        let p = params_from_k(0.6).unwrap();
        let v = pair_closed_form(PairId::CosineWarmUp, 0.0, &p).unwrap();
        assert!((v - PI / 2.0).norm() < 1e-15);
        let v = pair_closed_form(PairId::ContourWarmUp, 0.4, &p).unwrap();
        assert!((v + I * (1.0 - (PI * 0.4).tanh())).norm() < 1e-15);
    }
}
