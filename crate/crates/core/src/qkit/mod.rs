//! Builders for hypergeometric-type term families and the classical identities
//! expressed with them.

pub mod classical;
pub mod expr;
pub mod family;

pub use classical::{
    classical, classical_catalog, classical_sides, rho3, theta_expr, Params, CLASSICAL,
};
pub use expr::{mono, pfin, pinf, Expr};
pub use family::{
    default_cap, partial_theta, poch_finite, poch_inf, sum_family, sum_family_capped,
    theta_bilateral, HyperFamily, Len, Poch, QStep,
};
