//! Exhaustive search over supports, used to check the greedy solver.
//!
//! Deliberately independent of [`ErrorModel`](super::ErrorModel) and the
//! greedy state: every candidate is evaluated through the plain max-plus
//! product of the projected principal solution.

use crate::error::{Error, Result};
use crate::ext::ExtReal;
use crate::matrix::MpVector;
use crate::norm::{linf_norm, ln_power_sum};
use crate::tropical::{maxplus_product, principal_solution, project_on_support};

use super::greedy::assemble;
use super::problem::{FitProblem, Norm};
use super::solution::{SolutionKind, SolverTrace, SparseSolution};

/// Largest column count the oracle accepts.
pub const ORACLE_MAX_COLUMNS: usize = 20;

/// Returns a minimum-cardinality support meeting the budget, scanning sizes
/// upwards and subsets lexicographically within each size.
///
/// For finite `p` the vector is `x̂|_T`; for the max norm it is
/// `x̂|_T + ‖b − A ⊞ x̂|_T‖_∞ / 2`.
pub fn brute_force_oracle(problem: &FitProblem) -> Result<SparseSolution> {
    let a = problem.matrix();
    let n = a.cols();
    if n > ORACLE_MAX_COLUMNS {
        return Err(Error::Refused(format!(
            "oracle enumerates 2^n supports; n = {n} exceeds the cap of {ORACLE_MAX_COLUMNS}"
        )));
    }
    let xhat = principal_solution(a, problem.target())?;
    let b = problem.target().to_f64();
    let norm = problem.norm();
    let budget = problem.budget();

    let error_of = |support: &[usize]| -> Result<Vec<f64>> {
        if support.is_empty() {
            // Componentwise max of the singleton errors, over usable columns.
            let mut worst = vec![f64::NEG_INFINITY; b.len()];
            let mut any = false;
            for j in (0..n).filter(|&j| !xhat[j].is_bottom()) {
                any = true;
                for (w, e) in worst.iter_mut().zip(residual(problem, &xhat, &[j])?) {
                    *w = w.max(e);
                }
            }
            return Ok(if any {
                worst
            } else {
                vec![f64::INFINITY; b.len()]
            });
        }
        residual(problem, &xhat, support)
    };
    let meets = |e: &[f64]| match norm {
        Norm::Lp(p) => ln_power_sum(e, p) <= budget.ln_epsilon(norm),
        Norm::Inf => linf_norm(e) / 2.0 <= budget.theta(norm),
    };
    let measure = |e: &[f64]| match norm {
        Norm::Lp(p) => (ln_power_sum(e, p) / p).exp(),
        Norm::Inf => linf_norm(e) / 2.0,
    };

    let usable: Vec<usize> = (0..n).filter(|&j| !xhat[j].is_bottom()).collect();
    let full = error_of(&usable)?;
    if !meets(&full) {
        return Err(Error::Infeasible {
            full_support_error: measure(&full),
            budget: problem.theta(),
        });
    }

    let kind = match norm {
        Norm::Lp(_) => SolutionKind::Sgle,
        Norm::Inf => SolutionKind::LinfProjection,
    };
    for size in 0..=usable.len() {
        for subset in Combinations::new(usable.len(), size) {
            let support: Vec<usize> = subset.iter().map(|&i| usable[i]).collect();
            let e = error_of(&support)?;
            if meets(&e) {
                let trace = SolverTrace {
                    initial_error: measure(&e),
                    steps: Vec::new(),
                    clamped_columns: Vec::new(),
                };
                return assemble(problem, &xhat, support, kind, trace);
            }
        }
    }
    unreachable!("the full usable support was checked to be feasible")
}

fn residual(problem: &FitProblem, xhat: &MpVector, support: &[usize]) -> Result<Vec<f64>> {
    let x = project_on_support(xhat, support)?;
    let ax = maxplus_product(problem.matrix(), &x)?;
    Ok(problem
        .target()
        .iter()
        .zip(ax.iter())
        .map(|(b, v): (ExtReal, ExtReal)| b.value() - v.value())
        .collect())
}

/// k-subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        // rightmost position that can still move
        let pos = (0..k).rev().find(|&i| next[i] < self.n - k + i);
        self.current = pos.map(|i| {
            next[i] += 1;
            for t in i + 1..k {
                next[t] = next[t - 1] + 1;
            }
            next
        });
        Some(out)
    }
}
