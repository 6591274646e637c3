use thiserror::Error;

use crate::rootsystem::{RootVector, WeightVector};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("weight {0} is not dominant")]
    NotDominant(WeightVector),

    #[error("permutation {0:?} must fix node 2 and permute {{1, 3, 4}}")]
    InvalidPermutation([usize; 4]),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("pole at kappa = {kappa}{}", mu.map(|m| format!(" in coefficient mu = {m}")).unwrap_or_default())]
    PoleAtKappa { kappa: String, mu: Option<RootVector> },

    #[error("series denominator has no invertible constant term")]
    NonInvertibleSeries,

    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("z{v} * P{m} leaves a nonzero remainder at exponent {exponent:?}")]
    ResidualNonzero { v: usize, m: WeightVector, exponent: [u32; 4] },

    #[error("point too close to a singular hyperplane (min |sin| = {0:.3e})")]
    NearSingularity(f64),

    #[error("malformed fixture: {0}")]
    Fixture(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Parse(#[from] crate::parse::ParseError),
}
