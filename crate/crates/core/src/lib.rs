//! Exact Jack-type eigenpolynomials of the trigonometric Calogero–Sutherland
//! operator for the root system D4, written in the fundamental characters
//! z1..z4 with coefficients that are rational functions of the coupling κ.

pub mod algebra;
pub mod error;
pub mod fixture;
pub mod genfun;
pub mod operator;
pub mod parse;
pub mod qspace;
pub mod recurrence;
pub mod rootsystem;
pub mod solver;

pub use algebra::{KPoly, KappaRational, TauSeries, Var, ZPolynomial};
pub use error::Error;
pub use rootsystem::{RootVector, WeightVector};
