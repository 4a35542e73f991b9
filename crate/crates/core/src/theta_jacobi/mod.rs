//! Theta functions, Jacobi elliptic functions and the kernels built on them.

pub mod epsilon;
pub mod fraktur;
pub mod jacobi;
pub mod kernel;
pub mod theta;

pub use epsilon::{jacobi_epsilon, jacobi_epsilon_by_zeta, nd_square_integral};
pub use fraktur::{fraktur_f, fraktur_f_complement, fraktur_f_fourier};
pub use jacobi::{jacobi, sn_cn_dn, JacobiCode};
pub use kernel::{kernel_eval, KernelFn, KernelName, Parity};
pub use theta::{theta, theta_with, ThetaSeriesConfig};
