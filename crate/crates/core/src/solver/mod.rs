//! Sparse approximate solutions of `A ⊞ x ≈ b`.
//!
//! Minimises `|supp(x)|` subject to `‖b − A ⊞ x‖_p ≤ θ` and `A ⊞ x ≤ b`.
//! Fixing the finite entries of `x` to the principal solution loses nothing,
//! so the search is over supports only, driven by the set functions of
//! [`ErrorModel`].

mod certificate;
mod error_fn;
mod greedy;
mod oracle;
mod probe;
mod problem;
mod smmae;
mod solution;

pub use certificate::ratio_certificate;
pub use error_fn::ErrorModel;
pub use greedy::{greedy_sparse_solve, greedy_sparse_solve_min, solve, GreedyState};
pub use oracle::{brute_force_oracle, ORACLE_MAX_COLUMNS};
pub use probe::{submodularity_probe, submodularity_ratio, ProbeReport};
pub use problem::{Budget, Estimator, FitProblem, Norm, Objective};
pub use smmae::smmae_lift;
pub use solution::{SolutionKind, SolverTrace, SparseSolution, TraceStep};

use crate::error::Result;
use crate::tropical::principal_solution;

/// The SGLE `x̂|_T` for a given support, with its residual measured.
pub fn sgle_for_support(problem: &FitProblem, support: &[usize]) -> Result<SparseSolution> {
    let xhat = principal_solution(problem.matrix(), problem.target())?;
    greedy::assemble(
        problem,
        &xhat,
        support.to_vec(),
        SolutionKind::Sgle,
        SolverTrace::default(),
    )
}
