//! Exact arithmetic: polynomials in κ, κ-rational coefficients, polynomials in
//! the fundamental characters z1..z4 and truncated series in an auxiliary t.

pub mod kappa;
pub mod kpoly;
pub mod series;
pub mod zpoly;

pub use kappa::KappaRational;
pub use kpoly::KPoly;
pub use series::{series_div, TauSeries};
pub use zpoly::{Exponent, Var, ZPolynomial};
