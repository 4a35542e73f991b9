//! Run configuration shared by every subcommand.

use clap::{Args, ValueEnum};
use elliptika::eisenstein::SeriesIndex;
use elliptika::transforms::PairId;
use elliptika::{params_from_k, params_from_tau, EllipticParams};
use num_complex::Complex64;
use std::str::FromStr;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Real modulus k in (0, 1).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub k: Option<f64>,

    /// Point τ in the upper half-plane, e.g. `i` or `0.3+1.2i`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub tau: Option<String>,

    /// Quadrature and comparison tolerance, within [1e-12, 1e-6].
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,

    /// Seed for randomized sample points.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for the sweeps.
    #[arg(long, global = true, env = "ELLIPTIKA_THREADS")]
    pub threads: Option<usize>,
}

/// Where the elliptic parameters came from.
#[derive(Debug, Clone)]
pub enum Modulus {
    Real(f64, EllipticParams),
    Tau(Complex64, EllipticParams),
}

impl Modulus {
    pub fn params(&self) -> &EllipticParams {
        match self {
            Modulus::Real(_, p) | Modulus::Tau(_, p) => p,
        }
    }

    pub fn tau(&self) -> Complex64 {
        self.params().tau
    }

    /// Parameters with a real modulus, required by the Fourier catalog.
    pub fn real(&self, what: &str) -> Result<&EllipticParams, CliError> {
        match self {
            Modulus::Real(_, p) => Ok(p),
            Modulus::Tau(..) => Err(CliError::Usage(format!("{what} needs a real modulus; pass --k"))),
        }
    }
}

pub const MIN_TOL: f64 = 1e-12;
pub const MAX_TOL: f64 = 1e-6;

impl GlobalArgs {
    pub fn check_tol(&self) -> Result<f64, CliError> {
        if !(MIN_TOL..=MAX_TOL).contains(&self.tol) {
            return Err(CliError::Usage(format!(
                "tolerance {:e} is outside the supported range [{MIN_TOL:e}, {MAX_TOL:e}]",
                self.tol
            )));
        }
        Ok(self.tol)
    }

    pub fn modulus(&self) -> Result<Modulus, CliError> {
        match (self.k, &self.tau) {
            (Some(_), Some(_)) => Err(CliError::Usage("pass either --k or --tau, not both".into())),
            (None, None) => Err(CliError::Usage("one of --k or --tau is required".into())),
            (Some(k), None) => {
                let p = params_from_k(k).map_err(|e| CliError::Usage(format!("--k {k}: {e}")))?;
                Ok(Modulus::Real(k, p))
            }
            (None, Some(t)) => {
                let tau = parse_complex(t)?;
                let p = params_from_tau(tau).map_err(|e| CliError::Usage(format!("--tau {t}: {e}")))?;
                Ok(Modulus::Tau(tau, p))
            }
        }
    }

    pub fn install_threads(&self) -> Result<(), CliError> {
        if let Some(n) = self.threads {
            if n == 0 {
                return Err(CliError::Usage("--threads must be positive".into()));
            }
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
        }
        Ok(())
    }
}

pub fn parse_complex(s: &str) -> Result<Complex64, CliError> {
    Complex64::from_str(s.trim()).map_err(|_| CliError::Usage(format!("cannot parse `{s}` as a complex number")))
}

pub fn parse_complex_list(s: &str) -> Result<Vec<Complex64>, CliError> {
    s.split(',').map(parse_complex).collect()
}

pub fn parse_real_list(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| CliError::Usage(format!("cannot parse `{t}` as a number"))))
        .collect()
}

/// `all`, `tables` (1..=25), `warmups`, or a comma list such as `0a,4,25`.
pub fn parse_pairs(s: &str) -> Result<Vec<PairId>, CliError> {
    let mut ids = match s.trim() {
        "all" => PairId::all(),
        "tables" => PairId::numbered(),
        "warmups" => PairId::warm_ups(),
        list => list
            .split(',')
            .map(|t| t.parse::<PairId>().map_err(|e| CliError::Usage(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?,
    };
    ids.sort();
    ids.dedup();
    Ok(ids)
}

/// `all` or a comma list of `jl` digits such as `11,22,00`.
pub fn parse_indices(s: &str) -> Result<Vec<SeriesIndex>, CliError> {
    let mut ids = match s.trim() {
        "all" => SeriesIndex::all(),
        list => list
            .split(',')
            .map(|t| t.parse::<SeriesIndex>().map_err(|e| CliError::Usage(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?,
    };
    ids.sort();
    ids.dedup();
    Ok(ids)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists() {
        assert_eq!(parse_pairs("25,0a,4,4").unwrap().len(), 3);
        assert_eq!(parse_pairs("all").unwrap().len(), 28);
        assert!(parse_pairs("26").is_err());
        assert_eq!(parse_indices("all").unwrap().len(), 16);
        assert_eq!(parse_indices("22,11").unwrap()[0], SeriesIndex::new(1, 1).unwrap());
        assert_eq!(parse_real_list("-1.3,0.35,2.0").unwrap(), vec![-1.3, 0.35, 2.0]);
        assert_eq!(parse_complex("0.3+1.2i").unwrap(), Complex64::new(0.3, 1.2));
        assert!(parse_complex("1+").is_err());
    }
}
