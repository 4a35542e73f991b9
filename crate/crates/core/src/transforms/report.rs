//! Verification sweeps and their CSV / JSON-lines rows.

use crate::error::{Error, Result};
use crate::tolerance;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::catalog::{PairId, TransformPair};
use super::contour::contour_fourier;

/// Numeric transform against closed form at one `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub pair_id: PairId,
    pub y: f64,
    pub numeric: Complex64,
    pub closed_form: Complex64,
    pub abs_residual: f64,
    pub quadrature_nodes: usize,
    pub truncation_x: f64,
    pub tol: f64,
}

/// A grid point whose evaluation failed.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyFailure {
    pub pair_id: PairId,
    pub y: f64,
    pub error: Error,
}

impl VerifyReport {
    /// Pass iff the residual is below `10·tol`.
    pub fn passed(&self) -> bool {
        self.abs_residual < tolerance::VERIFY_SLACK * self.tol
    }

    pub const CSV_HEADER: &'static str = "pair_id,y,re_num,im_num,re_cf,im_cf,residual,nodes,X";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e},{:.6e},{},{:.17e}",
            self.pair_id,
            self.y,
            self.numeric.re,
            self.numeric.im,
            self.closed_form.re,
            self.closed_form.im,
            self.abs_residual,
            self.quadrature_nodes,
            self.truncation_x
        )
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Row<'a> {
            pair_id: &'a str,
            y: f64,
            re_num: f64,
            im_num: f64,
            re_cf: f64,
            im_cf: f64,
            residual: f64,
            nodes: usize,
            #[serde(rename = "X")]
            x: f64,
            pass: bool,
        }
        let id = self.pair_id.to_string();
        serde_json::to_string(&Row {
            pair_id: &id,
            y: self.y,
            re_num: self.numeric.re,
            im_num: self.numeric.im,
            re_cf: self.closed_form.re,
            im_cf: self.closed_form.im,
            residual: self.abs_residual,
            nodes: self.quadrature_nodes,
            x: self.truncation_x,
            pass: self.passed(),
        })
        .expect("finite report fields serialize")
    }
}

impl VerifyFailure {
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "pair_id": self.pair_id.to_string(),
            "y": self.y,
            "error": self.error.to_string(),
        })
        .to_string()
    }
}

/// Numeric transform and closed form of one pair at one point.
pub fn verify_point(pair: &TransformPair, y: f64, tol: f64) -> Result<VerifyReport> {
    let numeric = contour_fourier(pair, y, tol)?;
    let closed_form = pair.closed_form(y)?;
    Ok(VerifyReport {
        pair_id: pair.id,
        y,
        numeric: numeric.value,
        closed_form,
        abs_residual: (numeric.value - closed_form).norm(),
        quadrature_nodes: numeric.nodes,
        truncation_x: numeric.truncation,
        tol,
    })
}

/// One outcome per grid point, in grid order; failures do not stop the sweep.
pub fn verify_pair(pair: &TransformPair, ys: &[f64], tol: f64) -> Vec<Result<VerifyReport, VerifyFailure>> {
    ys.par_iter()
        .map(|&y| {
            verify_point(pair, y, tol).map_err(|error| VerifyFailure { pair_id: pair.id, y, error })
        })
        .collect()
}

/// Sweep over several pairs; the result is ordered by pair, then by `y`.
pub fn verify_many(pairs: &[TransformPair], ys: &[f64], tol: f64) -> Vec<Result<VerifyReport, VerifyFailure>> {
    let jobs: Vec<(&TransformPair, f64)> = pairs.iter().flat_map(|p| ys.iter().map(move |&y| (p, y))).collect();
    jobs.par_iter()
        .map(|&(pair, y)| {
            verify_point(pair, y, tol).map_err(|error| VerifyFailure { pair_id: pair.id, y, error })
        })
        .collect()
}
