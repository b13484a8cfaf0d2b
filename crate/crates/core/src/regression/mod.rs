//! Convex piecewise-linear regression through sparse max-plus solutions.
//!
//! Given samples `(x_i, f_i)` and candidate slopes `a_k`, the model
//! `p(x) = max_k (a_kᵀx + b_k)` interpolates the data when
//! `A ⊞ b = f` with `A_ik = a_kᵀx_i`. A sparse solution `b` picks few
//! regions; the SGLE stays below the data, the SMMAE straddles it.

mod dataset;
mod model;
mod slopes;

pub use dataset::Dataset;
pub use model::{FitMetadata, ModelErrors, PwlModel, Score};
pub use slopes::{
    default_neighbors, gradient_slopes, grid_slopes, SlopeOrigin, SlopeSet, DEFAULT_GRID_CAP,
    GRADIENT_DEDUP_TOLERANCE,
};

use crate::error::{Error, Result};
use crate::ext::ExtReal;
use crate::matrix::{MpMatrix, MpVector};
use crate::solver::{
    greedy_sparse_solve_min, smmae_lift, Estimator, FitProblem, Norm, Objective, SparseSolution,
};

/// `aᵀx`, summed left to right. Shared by the design matrix and model
/// evaluation so that replayed residuals match the solver's bit for bit.
pub(crate) fn dot(a: &[f64], x: &[f64]) -> f64 {
    a.iter().zip(x).map(|(u, v)| u * v).sum()
}

/// The `m × K` matrix `A_ik = a_kᵀx_i`.
pub fn build_design_matrix(data: &Dataset, slopes: &SlopeSet) -> Result<MpMatrix> {
    if slopes.dim() != data.dim() {
        return Err(Error::shape(format!(
            "slopes have dimension {}, data has {}",
            slopes.dim(),
            data.dim()
        )));
    }
    let k = slopes.len();
    let mut values = Vec::with_capacity(data.len() * k);
    for x in data.points() {
        values.extend(slopes.slopes().iter().map(|a| dot(a, x)));
    }
    MpMatrix::from_f64(data.len(), k, &values)
}

/// Fits a model and returns it with the underlying solver output.
///
/// The model always has at least one region: if the empty support already
/// meets the budget, the best single region is kept.
pub fn fit_detailed(
    data: &Dataset,
    slopes: &SlopeSet,
    objective: Objective,
) -> Result<(PwlModel, SparseSolution)> {
    let a = build_design_matrix(data, slopes)?;
    let b = MpVector::new(
        data.targets()
            .iter()
            .map(|&f| ExtReal::from_f64(f))
            .collect(),
    );
    let problem = FitProblem::new(a, b, objective)?;
    let mut solution = greedy_sparse_solve_min(&problem, 1)?;
    if let (Estimator::Smmae, Norm::Lp(_)) = (objective.estimator, objective.norm) {
        solution = smmae_lift(&solution, &problem)?;
    }
    let metadata = FitMetadata {
        norm: objective.norm,
        theta: objective.theta(),
        estimator: objective.estimator,
        errors: None,
        seed: None,
    };
    let mut model = PwlModel::new(
        slopes.slopes().to_vec(),
        solution.x.as_slice().to_vec(),
        metadata,
    )?;
    let score = model.score(data)?;
    model.metadata.errors = Some(ModelErrors {
        rms: score.rms,
        max_abs: score.max_abs,
    });
    Ok((model, solution))
}

/// Fits `max_k (a_kᵀx + b_k)` to `data` over the candidate `slopes`.
pub fn fit(data: &Dataset, slopes: &SlopeSet, objective: Objective) -> Result<PwlModel> {
    fit_detailed(data, slopes, objective).map(|(model, _)| model)
}

/// [`PwlModel::evaluate`] as a free function.
pub fn evaluate(model: &PwlModel, x: &[f64]) -> Result<f64> {
    model.evaluate(x)
}

/// [`PwlModel::score`] as a free function.
pub fn score(model: &PwlModel, data: &Dataset) -> Result<Score> {
    model.score(data)
}
