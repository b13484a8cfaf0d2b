use serde::{Deserialize, Serialize};

use crate::matrix::MpVector;

/// How the finite entries of a solution relate to the principal solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolutionKind {
    /// `x = x̂|_T`; keeps `A ⊞ x ≤ b`.
    Sgle,
    /// SGLE shifted by half its max residual.
    Smmae,
    /// `x̂|_T + E_∞(T)`: the max-norm optimum on the support, produced by the
    /// max-norm search paths.
    LinfProjection,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    /// Column added at this iteration.
    pub index: usize,
    /// Set-function error after adding it: `‖e(T)‖_p`, or `E_∞(T)` on the
    /// max-norm path.
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SolverTrace {
    /// Error of the empty support, in the same units as the step errors.
    pub initial_error: f64,
    pub steps: Vec<TraceStep>,
    /// Principal-solution coordinates clamped from `+∞` to `−∞`.
    pub clamped_columns: Vec<usize>,
}

impl SolverTrace {
    /// The set-function error of the returned support.
    pub fn final_error(&self) -> f64 {
        self.steps.last().map_or(self.initial_error, |s| s.error)
    }
}

/// A sparse approximate solution and its diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseSolution {
    pub x: MpVector,
    /// Selected columns in insertion order.
    pub support: Vec<usize>,
    /// `b − A ⊞ x`; `+∞` where no selected column reaches a row.
    pub residual: MpVector,
    /// `‖b − A ⊞ x‖_p`; `None` on the max-norm path.
    pub error_p: Option<f64>,
    /// `‖b − A ⊞ x‖_∞`.
    pub error_inf: f64,
    pub ratio_bound: Option<f64>,
    pub kind: SolutionKind,
    pub trace: SolverTrace,
}

impl SparseSolution {
    pub fn iterations(&self) -> usize {
        self.trace.steps.len()
    }

    pub fn support_size(&self) -> usize {
        self.support.len()
    }

    /// Support as an ascending list.
    pub fn sorted_support(&self) -> Vec<usize> {
        let mut s = self.support.clone();
        s.sort_unstable();
        s
    }
}
