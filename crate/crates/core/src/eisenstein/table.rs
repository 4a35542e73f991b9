//! CSV rows for tables of `Λ_{j,l}` values.

use num_complex::Complex64;

use super::index::SeriesIndex;
use super::series::SeriesEval;

pub const TABLE_HEADER: &str = "j,l,s_re,s_im,tau_re,tau_im,value_re,value_im,err_est,method";

/// One table row with every float at 17 significant digits.
pub fn table_row(idx: SeriesIndex, s: Complex64, tau: Complex64, eval: &SeriesEval) -> String {
    format!(
        "{},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.3e},{}",
        idx.j,
        idx.l,
        s.re,
        s.im,
        tau.re,
        tau.im,
        eval.value.re,
        eval.value.im,
        eval.abs_error_est,
        eval.method.name()
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eisenstein::lambda_jl;

    #[test]
    fn row_shape() {
        let idx = SeriesIndex::new(2, 2).unwrap();
        let (s, tau) = (Complex64::new(2.0, 0.0), Complex64::new(0.0, 1.0));
        let row = table_row(idx, s, tau, &lambda_jl(idx, s, tau).unwrap());
        assert_eq!(row.split(',').count(), TABLE_HEADER.split(',').count());
        assert!(row.starts_with("2,2,2.0000000000000000e0,"));
        assert!(row.ends_with(",hurwitz_rows"));
    }
}
