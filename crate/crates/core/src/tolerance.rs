//! Every numerical threshold used by the library, in one place.

/// Relative accuracy of the AGM paths for real modulus.
pub const REAL_PATH: f64 = 1e-14;
/// Accuracy expected from the theta-quotient paths at complex `tau`.
pub const COMPLEX_THETA_PATH: f64 = 1e-11;
/// Legendre-relation defect accepted for real modulus.
pub const LEGENDRE_DEFECT: f64 = 1e-12;

/// Relative term size below which a theta q-series is truncated.
pub const THETA_SERIES: f64 = 1e-17;
/// Hard cap on the number of q-series terms.
pub const THETA_MAX_TERMS: usize = 64;

/// A Jacobi quotient whose denominator is smaller than this multiple of the
/// numerator scale is reported as a pole.
pub const POLE_PROXIMITY: f64 = 1e-13;

/// Target absolute error of the `dn^2` / `nd^2` integrals.
pub const EPSILON_INTEGRAL: f64 = 1e-13;

/// Default contour height for the Fourier transforms.
pub const CONTOUR_OFFSET: f64 = 0.25;
/// Multiplier applied to the quadrature tolerance to decide pass/fail.
pub const VERIFY_SLACK: f64 = 10.0;
/// Largest `|y|` accepted by the contour engine.
pub const MAX_ABS_Y: f64 = 6.0;
/// Smallest quadrature tolerance the contour engine will attempt.
pub const MIN_QUADRATURE_TOL: f64 = 1e-12;

/// Shift floor of the Euler-Maclaurin evaluator.
pub const EM_MIN_SHIFT: usize = 15;
/// Number of Bernoulli correction terms in Euler-Maclaurin.
pub const EM_CORRECTIONS: usize = 12;

/// Row-sum truncation threshold of the Eisenstein-type series.
pub const ROW_TRUNCATION: f64 = 1e-18;

/// Disagreement between the two finest Richardson levels that is treated as
/// unstable differentiation.
pub const RICHARDSON_AGREEMENT: f64 = 1e-5;

/// Argument below which a removable singularity at zero is replaced by its
/// limit.
pub const REMOVABLE_ZERO: f64 = 1e-150;
