//! The sixteen series `ζ_{j,l}(s,τ)`, labelled by `j = 2a+b` and `l = 2c+d`:
//!
//! ```text
//! ζ_{j,l}(s,τ) = Σ'_{n∈ℤ, m≥0} (2a-1)^m (1-2b)^n [m + 1/2 + (n + d/2)τ]^{-s}
//!                                 / sin(π(c/2 + (n + d/2)τ))
//! ```
//!
//! where the prime drops `n = 0` when `c = d = 0`.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeriesIndex {
    pub j: u8,
    pub l: u8,
}

impl SeriesIndex {
    pub fn new(j: u8, l: u8) -> Result<Self> {
        if j > 3 || l > 3 {
            return Err(Error::Domain(format!("index ({j},{l}) is outside 0..=3")));
        }
        Ok(SeriesIndex { j, l })
    }

    /// All sixteen indices in lexicographic order.
    pub fn all() -> Vec<SeriesIndex> {
        (0..4).flat_map(|j| (0..4).map(move |l| SeriesIndex { j, l })).collect()
    }

    /// `a = 1`: the `m`-sum is a plain Hurwitz zeta; `a = 0`: alternating.
    pub fn a(self) -> u8 {
        self.j >> 1
    }
    /// `b = 1` puts `(-1)^n` on the rows.
    pub fn b(self) -> u8 {
        self.j & 1
    }
    /// `c = 1` turns the denominator into a cosine.
    pub fn c(self) -> u8 {
        self.l >> 1
    }
    /// `d = 1` shifts the rows by `τ/2`.
    pub fn d(self) -> u8 {
        self.l & 1
    }

    /// Parity bit of the Gamma factor `Γ((s + 𝔞)/2)`.
    pub fn frak_a(self) -> u8 {
        ((self.j + self.l) / 2) % 2
    }

    /// The row `n = 0` is dropped exactly for `l = 0`.
    pub fn omit_n0(self) -> bool {
        self.l == 0
    }

    /// The four indices with a simple pole at `s = 1`.
    pub fn has_pole_at_1(self) -> bool {
        matches!((self.j, self.l), (3, 1) | (2, 2) | (3, 2) | (2, 3))
    }

    /// Index of the partner series in the functional equation.
    pub fn dual(self) -> SeriesIndex {
        SeriesIndex { j: self.l, l: self.j }
    }
}

impl fmt::Display for SeriesIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.j, self.l)
    }
}

impl FromStr for SeriesIndex {
    type Err = Error;
    /// Accepts `jl`, `j,l` or `(j,l)`.
    fn from_str(s: &str) -> Result<Self> {
        let digits: Vec<u8> = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(|ch: char| ch == ',' || ch.is_whitespace())
            .flat_map(|part| part.chars())
            .map(|ch| ch.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Domain(format!("cannot parse series index `{s}`")))?;
        match digits[..] {
            [j, l] => SeriesIndex::new(j, l),
            _ => Err(Error::Domain(format!("cannot parse series index `{s}`"))),
        }
    }
}
