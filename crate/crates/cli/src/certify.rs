//! The acceptance suite behind `certify`: one summary row per criterion.
//!
//! Criteria that need a real modulus (the Fourier catalog, the values at
//! integers, Mellin reflection, the `𝔣` checks) are skipped when the run is
//! configured with a complex `τ`. Determinism of repeated runs is checked from
//! outside, by comparing the bytes of two runs.

use elliptika::eisenstein::{
    closed_form, funceq_residual, lambda_jl, lambda_jl_direct, listed_values, residue_at_one, special_value,
    SeriesIndex,
};
use elliptika::lfunc::{alt_hurwitz_zeta, hurwitz_zeta};
use elliptika::theta_jacobi::{fraktur_f, theta};
use elliptika::transforms::{mellin_reflection_check, verify_many, MellinKernel, PairId, TransformPair};
use elliptika::{complete_elliptic_e, complete_elliptic_k, EllipticParams, Error};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::f64::consts::PI;

use crate::commands::special_threshold;
use crate::config::Modulus;
use crate::output::Record;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

/// Summary of one criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub number: u8,
    pub name: &'static str,
    pub status: Status,
    pub points: usize,
    /// Largest discrepancy seen.
    pub worst: f64,
    /// The tightest threshold that applies.
    pub threshold: f64,
    /// Largest discrepancy divided by its own threshold; below 1 passes.
    pub margin: f64,
    pub note: String,
}

impl Outcome {
    pub fn record(&self) -> Record {
        Record::new()
            .with("criterion", self.number)
            .with("name", self.name)
            .with("status", self.status.name())
            .with("points", self.points)
            .with("worst", self.worst)
            .with("threshold", self.threshold)
            .with("margin", self.margin)
            .with("note", self.note.clone())
    }
}

/// Accumulates `(discrepancy, threshold)` samples and errors.
struct Tally {
    number: u8,
    name: &'static str,
    threshold: f64,
    points: usize,
    worst: f64,
    margin: f64,
    errors: Vec<String>,
}

impl Tally {
    fn new(number: u8, name: &'static str, threshold: f64) -> Self {
        Tally { number, name, threshold, points: 0, worst: 0.0, margin: 0.0, errors: Vec::new() }
    }

    fn add(&mut self, discrepancy: f64, threshold: f64) {
        self.points += 1;
        // NaN must count as a failure
        self.worst = if discrepancy.is_nan() { f64::NAN } else { self.worst.max(discrepancy) };
        let m = discrepancy / threshold;
        self.margin = if m.is_nan() { f64::INFINITY } else { self.margin.max(m) };
    }

    fn add_result(&mut self, r: Result<f64, Error>, threshold: f64, what: impl FnOnce() -> String) {
        match r {
            Ok(d) => self.add(d, threshold),
            Err(e) => {
                self.points += 1;
                self.margin = f64::INFINITY;
                self.errors.push(format!("{}: {e}", what()));
            }
        }
    }

    fn finish(self) -> Outcome {
        let pass = self.errors.is_empty() && self.margin < 1.0;
        Outcome {
            number: self.number,
            name: self.name,
            status: if pass { Status::Pass } else { Status::Fail },
            points: self.points,
            worst: self.worst,
            threshold: self.threshold,
            margin: self.margin,
            note: self.errors.first().cloned().unwrap_or_default(),
        }
    }
}

fn skipped(number: u8, name: &'static str, threshold: f64) -> Outcome {
    Outcome {
        number,
        name,
        status: Status::Skip,
        points: 0,
        worst: f64::NAN,
        threshold,
        margin: f64::NAN,
        note: "needs a real modulus".into(),
    }
}

/// Quadrature tolerance for a comparison at `threshold`.
fn quadrature_tol(tol: f64, threshold: f64) -> f64 {
    (tol.min(threshold) / 10.0).max(1e-12)
}

fn catalog_sweep(
    number: u8,
    name: &'static str,
    params: &EllipticParams,
    ids: &[PairId],
    ys: &[f64],
    threshold: f64,
    tol: f64,
) -> Outcome {
    let mut tally = Tally::new(number, name, threshold);
    let pairs: Result<Vec<TransformPair>, Error> = ids.iter().map(|&id| TransformPair::new(id, params)).collect();
    let pairs = match pairs {
        Ok(p) => p,
        Err(e) => {
            tally.add_result(Err(e), threshold, || "catalog".into());
            return tally.finish();
        }
    };
    for row in verify_many(&pairs, ys, quadrature_tol(tol, threshold)) {
        match row {
            Ok(r) => tally.add(r.abs_residual, threshold),
            Err(f) => tally.add_result(Err(f.error), threshold, || format!("pair {} at y = {}", f.pair_id, f.y)),
        }
    }
    tally.finish()
}

const HURWITZ_S: [(f64, f64); 3] = [(2.5, 0.0), (0.5, 1.0), (3.0, -2.0)];
const HURWITZ_RATIO_TOL: f64 = 0.2;

/// Leading-term defects of `ζ(s,a)` and the alternating `ζ_E(s,a)` shrink by
/// `2^{-Re s-1}` and `2^{-Re s-3}` when `|a|` doubles.
fn hurwitz_asymptotics() -> Outcome {
    let mut tally = Tally::new(4, "Hurwitz asymptotics", HURWITZ_RATIO_TOL);
    let dir = Complex64::from_polar(1.0, PI / 3.0);
    let defect = |alternating: bool, s: Complex64, a: Complex64| -> Result<f64, Error> {
        let d = if alternating {
            alt_hurwitz_zeta(s, a)?.value - 0.5 * a.powc(-s) - s / 4.0 * a.powc(-s - 1.0)
        } else {
            hurwitz_zeta(s, a)?.value - a.powc(1.0 - s) / (s - 1.0) - 0.5 * a.powc(-s)
        };
        Ok(d.norm())
    };
    for &(re, im) in &HURWITZ_S {
        let s = Complex64::new(re, im);
        for alternating in [false, true] {
            let predicted = 2f64.powf(-re - if alternating { 3.0 } else { 1.0 });
            let r = defect(alternating, s, 64.0 * dir)
                .and_then(|far| Ok(far / defect(alternating, s, 32.0 * dir)?))
                .map(|observed| (observed / predicted - 1.0).abs());
            tally.add_result(r, HURWITZ_RATIO_TOL, || format!("s = {s}"));
        }
    }
    tally.finish()
}

const ORACLE_TRUNCATION: usize = 600;
const ORACLE_THRESHOLD: f64 = 1e-7;
const ORACLE_SAMPLES: usize = 6;

fn oracle_equivalence(taus: &[Complex64], seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ss: Vec<Complex64> = (0..ORACLE_SAMPLES)
        .map(|_| Complex64::new(rng.gen_range(1.2..3.0), rng.gen_range(-2.0..2.0)))
        .collect();
    let mut jobs = Vec::new();
    for &tau in taus {
        for idx in SeriesIndex::all() {
            for &s in &ss {
                jobs.push((idx, s, tau));
            }
        }
    }
    let results: Vec<Result<f64, Error>> = jobs
        .par_iter()
        .map(|&(idx, s, tau)| {
            let rows = lambda_jl(idx, s, tau)?.value;
            let direct = lambda_jl_direct(idx, s, tau, ORACLE_TRUNCATION, ORACLE_TRUNCATION)?.value;
            Ok((rows - direct).norm())
        })
        .collect();
    let mut tally = Tally::new(5, "row sums against the double sum", ORACLE_THRESHOLD);
    for (&(idx, s, tau), r) in jobs.iter().zip(results) {
        tally.add_result(r, ORACLE_THRESHOLD, || format!("{idx} at s = {s}, τ = {tau}"));
    }
    tally.finish()
}

fn special_values(params: &EllipticParams) -> Outcome {
    let listed = listed_values();
    let results: Vec<_> = listed
        .par_iter()
        .map(|&(idx, s)| -> Result<(u32, f64, f64), Error> {
            let cf = closed_form(idx, s, params).expect("listed values have closed forms");
            let n = if idx.frak_a() == 1 { (s - 1) / 2 } else { (s - 2) / 2 };
            let series = lambda_jl(idx, Complex64::new(s as f64, 0.0), params.tau)?.value;
            let formula = special_value(idx, n, params)?.value;
            Ok((n, (series - cf).norm(), (formula - cf).norm()))
        })
        .collect();
    let mut tally = Tally::new(6, "values at integers", special_threshold(0));
    for (&(idx, s), r) in listed.iter().zip(results) {
        match r {
            Ok((n, series, formula)) => {
                // the closed form must match both the series and the derivative formula
                tally.add(series, special_threshold(0));
                tally.add(formula, special_threshold(n));
            }
            Err(e) => tally.add_result(Err(e), special_threshold(0), || format!("{idx} at s = {s}")),
        }
    }
    tally.finish()
}

pub const FUNCEQ_POINTS: [(f64, f64); 4] = [(0.5, 0.0), (0.5, 1.3), (0.5, -1.3), (-0.25, 0.0)];

fn functional_equations(taus: &[Complex64]) -> Outcome {
    let mut jobs = Vec::new();
    for &tau in taus {
        for idx in SeriesIndex::all() {
            for &(re, im) in &FUNCEQ_POINTS {
                jobs.push((idx, Complex64::new(re, im), tau));
            }
        }
    }
    let results: Vec<_> =
        jobs.par_iter().map(|&(idx, s, tau)| funceq_residual(idx, s, tau).map(|r| r.residual.norm())).collect();
    let mut tally = Tally::new(7, "functional equations", crate::commands::FUNCEQ_THRESHOLD);
    for (&(idx, s, tau), r) in jobs.iter().zip(results) {
        tally.add_result(r, crate::commands::FUNCEQ_THRESHOLD, || format!("{idx} at s = {s}, τ = {tau}"));
    }
    tally.finish()
}

fn residues(tau: Complex64) -> Outcome {
    let threshold = crate::commands::RESIDUE_THRESHOLD;
    let mut tally = Tally::new(8, "residues at s = 1", threshold);
    for idx in SeriesIndex::all().into_iter().filter(|i| i.has_pole_at_1()) {
        let r = residue_at_one(idx, tau).map(|r| (r.numeric - r.closed_form).norm());
        tally.add_result(r, threshold, || format!("{idx}"));
    }
    tally.finish()
}

pub const MELLIN_POINTS: [(f64, f64); 3] = [(0.5, 0.0), (0.6, 0.0), (0.5, 0.5)];
pub const MELLIN_PAIRS: [u8; 2] = [4, 13];

fn mellin(params: &EllipticParams) -> Outcome {
    let threshold = crate::commands::MELLIN_THRESHOLD;
    let mut jobs = Vec::new();
    for &n in &MELLIN_PAIRS {
        for &(re, im) in &MELLIN_POINTS {
            jobs.push((PairId::Numbered(n), Complex64::new(re, im)));
        }
    }
    let results: Vec<_> = jobs
        .par_iter()
        .map(|&(id, z)| mellin_reflection_check(&MellinKernel::new(id, params)?, z).map(|r| r.residual))
        .collect();
    let mut tally = Tally::new(9, "Mellin reflection", threshold);
    for (&(id, z), r) in jobs.iter().zip(results) {
        tally.add_result(r, threshold, || format!("pair {id} at z = {z}"));
    }
    tally.finish()
}

const PERIODICITY_THRESHOLD: f64 = 1e-11;
const THETA_RATIO_THRESHOLD: f64 = 1e-10;

/// Periodicity of `𝔣` and the second logarithmic derivative of `θ4` at the
/// origin against `K` and `E` from their own AGM routes.
fn fraktur_infrastructure(k: f64, params: &EllipticParams) -> Outcome {
    let mut tally = Tally::new(10, "𝔣 periodicity and θ4 curvature", PERIODICITY_THRESHOLD);
    let period = params.big_k / params.big_kprime;
    let i = Complex64::new(0.0, 1.0);
    for x in [0.13, 0.37, -0.8] {
        let x = Complex64::new(x, 0.0);
        let r = (|| -> Result<(f64, f64), Error> {
            let f = fraktur_f(x, params)?;
            let real_shift = (fraktur_f(x + period, params)? - f).norm();
            let imag_shift = (fraktur_f(x + i, params)? - f + 2.0 * i).norm();
            Ok((real_shift, imag_shift))
        })();
        match r {
            Ok((a, b)) => {
                tally.add(a, PERIODICITY_THRESHOLD);
                tally.add(b, PERIODICITY_THRESHOLD);
            }
            Err(e) => tally.add_result(Err(e), PERIODICITY_THRESHOLD, || format!("x = {x}")),
        }
    }
    let curvature = (|| -> Result<f64, Error> {
        let zero = Complex64::new(0.0, 0.0);
        let ratio = theta(4, zero, params.tau, 2)? / theta(4, zero, params.tau, 0)?;
        let big_k = complete_elliptic_k(k)?;
        let big_e = complete_elliptic_e(k)?;
        let expected = 4.0 * big_k * (big_k - big_e) / (PI * PI);
        Ok((ratio - expected).norm() / expected.abs().max(1.0))
    })();
    tally.add_result(curvature, THETA_RATIO_THRESHOLD, || "θ4 curvature".into());
    tally.finish()
}

pub const CATALOG_Y: [f64; 3] = [-1.3, 0.35, 2.0];
pub const WARM_UP_Y: [f64; 3] = [0.25, 1.0, 3.0];
pub const NEAR_REMOVABLE_Y: [f64; 2] = [-0.05, 0.05];

/// `τ` values for the criteria that sweep the upper half-plane.
fn sweep_taus(modulus: &Modulus) -> Vec<Complex64> {
    match modulus {
        Modulus::Real(..) => vec![Complex64::new(0.0, 1.0), Complex64::new(0.3, 1.2)],
        Modulus::Tau(tau, _) => vec![*tau],
    }
}

/// Runs criteria 1 to 10.
pub fn certify(modulus: &Modulus, tol: f64, seed: u64) -> Vec<Outcome> {
    let real = match modulus {
        Modulus::Real(k, p) => Some((*k, p)),
        Modulus::Tau(..) => None,
    };
    let taus = sweep_taus(modulus);
    let mut out = Vec::new();

    out.push(match real {
        Some((_, p)) => catalog_sweep(1, "warm-up identities", p, &PairId::warm_ups()[..2], &WARM_UP_Y, 1e-10, tol),
        None => skipped(1, "warm-up identities", 1e-10),
    });
    out.push(match real {
        Some((_, p)) => catalog_sweep(2, "full catalog", p, &PairId::numbered(), &CATALOG_Y, 1e-8, tol),
        None => skipped(2, "full catalog", 1e-8),
    });
    let double: Vec<PairId> = (19..=24).map(PairId::Numbered).collect();
    out.push(match real {
        Some((_, p)) => catalog_sweep(3, "double poles near y = 0", p, &double, &NEAR_REMOVABLE_Y, 1e-7, tol),
        None => skipped(3, "double poles near y = 0", 1e-7),
    });
    out.push(hurwitz_asymptotics());
    out.push(oracle_equivalence(&taus, seed));
    out.push(match real {
        Some((_, p)) => special_values(p),
        None => skipped(6, "values at integers", special_threshold(0)),
    });
    out.push(functional_equations(&taus));
    out.push(residues(modulus.tau()));
    out.push(match real {
        Some((_, p)) => mellin(p),
        None => skipped(9, "Mellin reflection", crate::commands::MELLIN_THRESHOLD),
    });
    out.push(match real {
        Some((k, p)) => fraktur_infrastructure(k, p),
        None => skipped(10, "𝔣 periodicity and θ4 curvature", PERIODICITY_THRESHOLD),
    });
    out
}
