//! Scalar L-functions: Hurwitz zeta and its alternating form, Riemann zeta,
//! Dirichlet beta, the completed functions, Bernoulli and Euler numbers.

pub mod completed;
pub mod hurwitz;
pub mod numbers;

pub use completed::{completed_lambda, completed_lambda_chi4, dirichlet_beta, riemann_zeta};
pub use hurwitz::{alt_hurwitz_zeta, hurwitz_zeta, hurwitz_zeta_series, LValue, Method};
pub use numbers::{bernoulli_number, euler_number};
