//! The twelve Jacobi elliptic functions as theta quotients.
//!
//! With `ζ = πz/(2K) = z/θ3²` the four building blocks are
//!
//! ```text
//! S = (θ3/θ2) θ1(ζ),  C = (θ4/θ2) θ2(ζ),  D = (θ4/θ3) θ3(ζ),  N = θ4(ζ)
//! ```
//!
//! and the function with code `pq` is `P/Q`, e.g. `sn = S/N`, `cd = C/D`.

use crate::elliptic::EllipticParams;
use crate::error::{Error, Result};
use crate::tolerance;
use num_complex::Complex64;
use std::fmt;
use std::str::FromStr;

use super::theta::theta;

/// One of the twelve Jacobi elliptic functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JacobiCode {
    Sn,
    Cn,
    Dn,
    Ns,
    Nc,
    Nd,
    Sc,
    Cs,
    Sd,
    Ds,
    Cd,
    Dc,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Letter {
    S,
    C,
    D,
    N,
}

impl JacobiCode {
    pub const ALL: [JacobiCode; 12] = [
        JacobiCode::Sn,
        JacobiCode::Cn,
        JacobiCode::Dn,
        JacobiCode::Ns,
        JacobiCode::Nc,
        JacobiCode::Nd,
        JacobiCode::Sc,
        JacobiCode::Cs,
        JacobiCode::Sd,
        JacobiCode::Ds,
        JacobiCode::Cd,
        JacobiCode::Dc,
    ];

    fn letters(self) -> (Letter, Letter) {
        use JacobiCode::*;
        use Letter::*;
        match self {
            Sn => (S, N),
            Cn => (C, N),
            Dn => (D, N),
            Ns => (N, S),
            Nc => (N, C),
            Nd => (N, D),
            Sc => (S, C),
            Cs => (C, S),
            Sd => (S, D),
            Ds => (D, S),
            Cd => (C, D),
            Dc => (D, C),
        }
    }

    pub fn name(self) -> &'static str {
        use JacobiCode::*;
        match self {
            Sn => "sn",
            Cn => "cn",
            Dn => "dn",
            Ns => "ns",
            Nc => "nc",
            Nd => "nd",
            Sc => "sc",
            Cs => "cs",
            Sd => "sd",
            Ds => "ds",
            Cd => "cd",
            Dc => "dc",
        }
    }

    /// The code with numerator and denominator swapped (`sn -> ns`).
    pub fn reciprocal(self) -> JacobiCode {
        let (p, q) = self.letters();
        Self::ALL.into_iter().find(|c| c.letters() == (q, p)).unwrap()
    }
}

impl fmt::Display for JacobiCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for JacobiCode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        JacobiCode::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown Jacobi function `{s}`")))
    }
}

/// The four theta building blocks `[S, C, D, N]` at `z`.
pub(crate) fn blocks(z: Complex64, params: &EllipticParams) -> Result<[Complex64; 4]> {
    let n = &params.nulls;
    let zeta = z / (n.t3 * n.t3);
    let tau = params.tau;
    Ok([
        n.t3 / n.t2 * theta(1, zeta, tau, 0)?,
        n.t4 / n.t2 * theta(2, zeta, tau, 0)?,
        n.t4 / n.t3 * theta(3, zeta, tau, 0)?,
        theta(4, zeta, tau, 0)?,
    ])
}

fn pick(b: &[Complex64; 4], l: Letter) -> Complex64 {
    match l {
        Letter::S => b[0],
        Letter::C => b[1],
        Letter::D => b[2],
        Letter::N => b[3],
    }
}

pub(crate) fn quotient(code: JacobiCode, b: &[Complex64; 4], z: Complex64) -> Result<Complex64> {
    let (p, q) = code.letters();
    let den = pick(b, q);
    let scale = b.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if den.norm() < tolerance::POLE_PROXIMITY * scale {
        return Err(Error::Pole(format!("{code}({z}) sits on a pole")));
    }
    Ok(pick(b, p) / den)
}

/// Value of the Jacobi function `code` at complex `z` for the given modulus.
pub fn jacobi(code: JacobiCode, z: Complex64, params: &EllipticParams) -> Result<Complex64> {
    quotient(code, &blocks(z, params)?, z)
}

/// `(sn, cn, dn)` at once.
pub fn sn_cn_dn(z: Complex64, params: &EllipticParams) -> Result<[Complex64; 3]> {
    let b = blocks(z, params)?;
    Ok([
        quotient(JacobiCode::Sn, &b, z)?,
        quotient(JacobiCode::Cn, &b, z)?,
        quotient(JacobiCode::Dn, &b, z)?,
    ])
}
