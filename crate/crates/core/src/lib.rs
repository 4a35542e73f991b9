//! Numerics for Jacobi elliptic functions, their Fourier transforms, and the
//! Eisenstein-type lattice series whose Mellin transforms they are.

pub mod eisenstein;
pub mod elliptic;
pub mod error;
pub mod lfunc;
pub mod numeric;
pub mod quadrature;
pub mod theta_jacobi;
pub mod tolerance;
pub mod transforms;

pub use elliptic::{complete_elliptic_e, complete_elliptic_k, params_from_k, params_from_tau, EllipticParams};
pub use error::{Error, Result};

// The book's snippets run as doctests so they cannot drift from the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/moduli.md")]
    mod moduli {}
    #[doc = include_str!("../../../book/src/jacobi.md")]
    mod jacobi {}
    #[doc = include_str!("../../../book/src/fourier_pairs.md")]
    mod fourier_pairs {}
    #[doc = include_str!("../../../book/src/mellin.md")]
    mod mellin {}
    #[doc = include_str!("../../../book/src/lattice_series.md")]
    mod lattice_series {}
    #[doc = include_str!("../../../book/src/special_values.md")]
    mod special_values {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
