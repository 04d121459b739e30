//! Empirical copula estimators and the grid evaluations of their processes.
//!
//! Five estimator variants are provided: the plug-in empirical copula based on
//! marginal quantile functions, the rank-based empirical copula, its tie-safe
//! ECDF form, the empirical checkerboard copula (a multilinear extension that
//! is a genuine copula) and the empirical beta copula (indicator smoothing by
//! beta distribution functions). All of them are driven by the matrix of
//! componentwise ranks.

mod beta;
mod copulas;
mod grid;
mod process;
mod sample;

pub use beta::{beta_cdf, beta_cdf_row};
pub use copulas::{
    beta_copula, checkerboard_copula, deheuvels_copula, ecdf_copula, rank_copula,
    CheckerboardTable, EstimatorKind, FittedEstimator,
};
pub use grid::{Grid, GridEvaluation};
pub use process::{process_on_grid, weight_g, WeightedEvalConfig};
pub use sample::{compute_ranks, RankMatrix, Sample};
