//! Exact Bernoulli and Euler numbers up to index 64.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::sync::OnceLock;

/// Largest index served by [`bernoulli_number`] and [`euler_number`].
pub const MAX_INDEX: usize = 64;

fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![BigInt::one(); i + 1];
        for j in 1..i {
            row[j] = &prev[j - 1] + &prev[j];
        }
        rows.push(row);
    }
    rows
}

fn bernoulli_table() -> &'static [BigRational] {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Σ_{j=0}^{m} C(m+1, j) B_j = 0
        let binom = binomials(MAX_INDEX + 1);
        let mut b: Vec<BigRational> = vec![BigRational::one()];
        for m in 1..=MAX_INDEX {
            let mut acc = BigRational::zero();
            for (j, bj) in b.iter().enumerate() {
                acc += BigRational::from_integer(binom[m + 1][j].clone()) * bj;
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        b
    })
}

fn euler_table() -> &'static [BigInt] {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Σ_{j=0}^{m} C(2m, 2j) E_{2j} = 0 for m ≥ 1
        let binom = binomials(MAX_INDEX);
        let mut e: Vec<BigInt> = vec![BigInt::one()];
        for m in 1..=MAX_INDEX / 2 {
            let mut acc = BigInt::zero();
            for (j, ej) in e.iter().enumerate() {
                acc += &binom[2 * m][2 * j] * ej;
            }
            e.push(-acc);
        }
        e
    })
}

fn check_cap(n: usize) -> Result<()> {
    if n > MAX_INDEX {
        Err(Error::Overflow(format!("index {n} exceeds the cap of {MAX_INDEX}")))
    } else {
        Ok(())
    }
}

/// `B_n` with the convention `B_1 = -1/2`.
pub fn bernoulli_number(n: usize) -> Result<BigRational> {
    check_cap(n)?;
    Ok(bernoulli_table()[n].clone())
}

/// The Euler number `E_n` for even `n` (`E_0 = 1, E_2 = -1, E_4 = 5`).
pub fn euler_number(n: usize) -> Result<BigInt> {
    check_cap(n)?;
    if n % 2 == 1 {
        return Err(Error::Precondition(format!("Euler numbers are indexed by even n, got {n}")));
    }
    Ok(euler_table()[n / 2].clone())
}

/// `B_n` rounded to `f64`.
pub fn bernoulli_f64(n: usize) -> Result<f64> {
    Ok(bernoulli_number(n)?.to_f64().unwrap_or(f64::NAN))
}

/// `E_n` rounded to `f64`.
pub fn euler_f64(n: usize) -> Result<f64> {
    Ok(euler_number(n)?.to_f64().unwrap_or(f64::NAN))
}
