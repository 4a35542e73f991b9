//! Eisenstein-type double series `ζ_{j,l}(s,τ)`, their completions
//! `Λ_{j,l}`, functional equations, residues and values at integers.

pub mod funceq;
pub mod index;
pub mod series;
pub mod special;
pub mod table;

pub use funceq::{funceq_residual, equation_for, FunceqResidual, FunctionalEquation, RightSide, FUNCTIONAL_EQUATIONS};
pub use index::SeriesIndex;
pub use series::{gamma_factor, lambda_jl, lambda_jl_direct, zeta_jl, zeta_jl_direct, SeriesEval, SeriesMethod};
pub use special::{
    closed_form, listed_values, residue_at_one, special_point, special_value, Residue, SpecialValue, MAX_SPECIAL_N,
};
pub use table::{table_row, TABLE_HEADER};
