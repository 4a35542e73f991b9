//! Fourier transforms of the catalog pairs: contour quadrature, closed
//! forms, verification sweeps, and Mellin reflection.

pub mod catalog;
pub mod contour;
pub mod mellin;
pub mod report;

pub use catalog::{pair_closed_form, Denominator, Lhs, PairId, PoleClass, TransformConvention, TransformPair};
pub use contour::{contour_fourier, contour_fourier_at, truncation_point, ContourResult};
pub use mellin::{mellin_numeric, mellin_reflection_check, MellinKernel, MellinRoute, ReflectionCheck};
pub use report::{verify_many, verify_pair, verify_point, VerifyFailure, VerifyReport};
