//! One function per subcommand. Each returns its rows in emission order and
//! the labels of the rows that failed.

use elliptika::eisenstein::{
    funceq_residual, lambda_jl, listed_values, residue_at_one, special_value, SeriesIndex, MAX_SPECIAL_N,
};
use elliptika::transforms::{mellin_reflection_check, verify_many, MellinKernel, PairId, TransformPair};
use elliptika::Error;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::config::Modulus;
use crate::output::Record;
use crate::CliError;

/// Acceptance thresholds for the comparisons that do not depend on `--tol`.
pub const FUNCEQ_THRESHOLD: f64 = 1e-8;
pub const RESIDUE_THRESHOLD: f64 = 1e-6;
pub const MELLIN_THRESHOLD: f64 = 1e-7;

pub fn special_threshold(n: u32) -> f64 {
    if n == 0 {
        1e-8
    } else {
        1e-6
    }
}

/// Rows plus the labels of failing rows.
#[derive(Debug, Default)]
pub struct Report {
    pub records: Vec<Record>,
    pub failures: Vec<String>,
}

impl Report {
    fn push(&mut self, record: Record, ok: bool, label: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(label());
        }
        self.records.push(record);
    }
}

fn lib(e: Error) -> CliError {
    CliError::Compute(e.to_string())
}

pub fn verify_pairs(modulus: &Modulus, pairs: &[PairId], ys: &[f64], tol: f64) -> Result<Report, CliError> {
    let params = modulus.real("verify-pairs")?;
    let catalog: Vec<TransformPair> = pairs
        .iter()
        .map(|&id| TransformPair::new(id, params))
        .collect::<Result<_, _>>()
        .map_err(lib)?;
    let mut report = Report::default();
    for row in verify_many(&catalog, ys, tol) {
        match row {
            Ok(r) => {
                let ok = r.passed();
                let rec = Record::new()
                    .with("pair_id", r.pair_id.to_string())
                    .with("y", r.y)
                    .with("re_num", r.numeric.re)
                    .with("im_num", r.numeric.im)
                    .with("re_cf", r.closed_form.re)
                    .with("im_cf", r.closed_form.im)
                    .with("residual", r.abs_residual)
                    .with("nodes", r.quadrature_nodes)
                    .with("X", r.truncation_x)
                    .with("status", if ok { "pass" } else { "fail" })
                    .with("note", "");
                report.push(rec, ok, || format!("pair {} at y = {}", r.pair_id, r.y));
            }
            Err(f) => {
                let rec = Record::new()
                    .with("pair_id", f.pair_id.to_string())
                    .with("y", f.y)
                    .with("re_num", f64::NAN)
                    .with("im_num", f64::NAN)
                    .with("re_cf", f64::NAN)
                    .with("im_cf", f64::NAN)
                    .with("residual", f64::NAN)
                    .with("nodes", 0usize)
                    .with("X", f64::NAN)
                    .with("status", "error")
                    .with("note", f.error.to_string());
                report.push(rec, false, || format!("pair {} at y = {}: {}", f.pair_id, f.y, f.error));
            }
        }
    }
    Ok(report)
}

/// Closed form of the residue at `s = 1`, as text.
fn residue_formula(idx: SeriesIndex) -> &'static str {
    match (idx.j, idx.l) {
        (3, 1) => "-2ikK/π",
        (2, 2) => "2K/π",
        (3, 2) => "2k'K/π",
        _ => "2kK/π",
    }
}

pub fn eval(modulus: &Modulus, idx: SeriesIndex, s: Complex64) -> Result<Report, CliError> {
    let tau = modulus.tau();
    if idx.has_pole_at_1() && s == Complex64::new(1.0, 0.0) {
        let residue = residue_at_one(idx, tau).map_err(lib)?;
        let r = residue.closed_form;
        return Err(CliError::Usage(format!(
            "Λ_{idx} has a simple pole at s = 1 with residue {} = {:.16e}{:+.16e}i",
            residue_formula(idx),
            r.re,
            r.im
        )));
    }
    let v = lambda_jl(idx, s, tau).map_err(|e| CliError::Usage(format!("Λ_{idx} at s = {s}: {e}")))?;
    let rec = Record::new()
        .with("j", idx.j)
        .with("l", idx.l)
        .with("s_re", s.re)
        .with("s_im", s.im)
        .with("tau_re", tau.re)
        .with("tau_im", tau.im)
        .with("value_re", v.value.re)
        .with("value_im", v.value.im)
        .with("err_est", v.abs_error_est)
        .with("method", v.method.name());
    Ok(Report { records: vec![rec], failures: Vec::new() })
}

/// Whether the equation through `idx` meets a pole of one of its terms at `s`.
fn funceq_pole(idx: SeriesIndex, s: Complex64) -> bool {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    (idx.has_pole_at_1() && s == one) || (idx.dual().has_pole_at_1() && s == zero)
}

pub fn funceq(indices: &[SeriesIndex], ss: &[Complex64], taus: &[Complex64]) -> Result<Report, CliError> {
    let mut jobs = Vec::new();
    for &tau in taus {
        for &idx in indices {
            for &s in ss {
                if !funceq_pole(idx, s) {
                    jobs.push((tau, idx, s));
                }
            }
        }
    }
    let results: Vec<_> = jobs.par_iter().map(|&(tau, idx, s)| funceq_residual(idx, s, tau)).collect();
    let mut report = Report::default();
    for (&(tau, idx, s), r) in jobs.iter().zip(results) {
        let r = r.map_err(lib)?;
        let ok = r.residual.norm() < FUNCEQ_THRESHOLD;
        let rec = Record::new()
            .with("j", idx.j)
            .with("l", idx.l)
            .with("equation", r.equation)
            .with("s_re", s.re)
            .with("s_im", s.im)
            .with("tau_re", tau.re)
            .with("tau_im", tau.im)
            .with("lhs_re", r.lhs.re)
            .with("lhs_im", r.lhs.im)
            .with("rhs_re", r.rhs.re)
            .with("rhs_im", r.rhs.im)
            .with("residual", r.residual.norm())
            .with("status", if ok { "pass" } else { "fail" });
        report.push(rec, ok, || format!("{idx} at s = {s}, τ = {tau}"));
    }
    Ok(report)
}

pub fn residues(tau: Complex64) -> Result<Report, CliError> {
    let mut report = Report::default();
    for idx in SeriesIndex::all().into_iter().filter(|i| i.has_pole_at_1()) {
        let r = residue_at_one(idx, tau).map_err(lib)?;
        let residual = (r.numeric - r.closed_form).norm();
        let ok = residual < RESIDUE_THRESHOLD;
        let rec = Record::new()
            .with("j", idx.j)
            .with("l", idx.l)
            .with("formula", residue_formula(idx))
            .with("numeric_re", r.numeric.re)
            .with("numeric_im", r.numeric.im)
            .with("closed_re", r.closed_form.re)
            .with("closed_im", r.closed_form.im)
            .with("residual", residual)
            .with("err_est", r.abs_error_est)
            .with("status", if ok { "pass" } else { "fail" });
        report.push(rec, ok, || format!("residue of {idx}"));
    }
    Ok(report)
}

/// Values at integer points. For each `(index, n)` the derivative formula is
/// compared with the listed closed form when there is one, and with the
/// series otherwise.
pub fn special_values(modulus: &Modulus, indices: &[SeriesIndex], max_n: u32) -> Result<Report, CliError> {
    let params = *modulus.real("special-values")?;
    if max_n > MAX_SPECIAL_N {
        return Err(CliError::Usage(format!("--n {max_n} exceeds the supported {MAX_SPECIAL_N}")));
    }
    let jobs: Vec<(SeriesIndex, u32)> =
        indices.iter().flat_map(|&idx| (0..=max_n).map(move |n| (idx, n))).collect();
    let results: Vec<_> = jobs
        .par_iter()
        .map(|&(idx, n)| -> Result<_, Error> {
            let sv = special_value(idx, n, &params)?;
            let series = lambda_jl(idx, Complex64::new(sv.s as f64, 0.0), params.tau)?.value;
            Ok((sv, series))
        })
        .collect();
    let mut report = Report::default();
    for r in results {
        let (sv, series) = r.map_err(lib)?;
        let reference = sv.closed_form.unwrap_or(series);
        let residual = (sv.value - reference).norm();
        let ok = residual < special_threshold(sv.n);
        let cf = sv.closed_form.unwrap_or(Complex64::new(f64::NAN, f64::NAN));
        let rec = Record::new()
            .with("j", sv.idx.j)
            .with("l", sv.idx.l)
            .with("n", sv.n)
            .with("s", sv.s)
            .with("formula_re", sv.value.re)
            .with("formula_im", sv.value.im)
            .with("closed_re", cf.re)
            .with("closed_im", cf.im)
            .with("series_re", series.re)
            .with("series_im", series.im)
            .with("residual", residual)
            .with("reference", if sv.closed_form.is_some() { "closed" } else { "series" })
            .with("status", if ok { "pass" } else { "fail" });
        report.push(rec, ok, || format!("{} at s = {}", sv.idx, sv.s));
    }
    Ok(report)
}

/// Closed forms against the series directly, for every listed value.
pub fn listed_against_series(modulus: &Modulus) -> Result<Vec<(SeriesIndex, u32, f64)>, CliError> {
    let params = *modulus.real("special-values")?;
    listed_values()
        .par_iter()
        .map(|&(idx, s)| {
            let cf = elliptika::eisenstein::closed_form(idx, s, &params).expect("listed");
            let v = lambda_jl(idx, Complex64::new(s as f64, 0.0), params.tau).map_err(lib)?.value;
            Ok((idx, s, (v - cf).norm()))
        })
        .collect()
}

pub fn mellin_check(modulus: &Modulus, pairs: &[PairId], zs: &[Complex64]) -> Result<Report, CliError> {
    let params = modulus.real("mellin-check")?;
    let kernels: Vec<MellinKernel> =
        pairs.iter().map(|&id| MellinKernel::new(id, params)).collect::<Result<_, _>>().map_err(lib)?;
    let jobs: Vec<(usize, Complex64)> =
        (0..kernels.len()).flat_map(|i| zs.iter().map(move |&z| (i, z))).collect();
    let results: Vec<_> = jobs.par_iter().map(|&(i, z)| mellin_reflection_check(&kernels[i], z)).collect();
    let mut report = Report::default();
    for (&(i, z), r) in jobs.iter().zip(results) {
        let r = r.map_err(lib)?;
        let ok = r.residual < MELLIN_THRESHOLD;
        let id = kernels[i].pair.id;
        let rec = Record::new()
            .with("pair_id", id.to_string())
            .with("route", format!("{:?}", r.route).to_lowercase())
            .with("z_re", z.re)
            .with("z_im", z.im)
            .with("reflected_re", r.reflected.re)
            .with("reflected_im", r.reflected.im)
            .with("transformed_re", r.transformed.re)
            .with("transformed_im", r.transformed.im)
            .with("residual", r.residual)
            .with("status", if ok { "pass" } else { "fail" });
        report.push(rec, ok, || format!("pair {id} at z = {z}"));
    }
    Ok(report)
}
