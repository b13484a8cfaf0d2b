//! Greedy support selection for `min |supp(x)|` subject to an error budget.
//!
//! Each iteration adds the column whose inclusion gives the smallest error.
//! For finite `p` the error set function is decreasing and supermodular, which
//! is what makes the greedy choice come with the certificate of
//! [`ratio_certificate`](super::ratio_certificate). The max-norm variant has
//! no such guarantee and is provided for comparison only.

use crate::error::{Error, Result};
use crate::ext::ExtReal;
use crate::matrix::MpVector;
use crate::norm::{integral_exponent, linf_norm, ln_power_sum, lp_norm, pow};
use crate::tropical::{maxplus_product, project_on_support};

use super::certificate::certificate_from_parts;
use super::error_fn::ErrorModel;
use super::problem::{Budget, Estimator, FitProblem, Norm};
use super::smmae::smmae_lift;
use super::solution::{SolutionKind, SolverTrace, SparseSolution, TraceStep};

/// Domain in which candidate errors are compared.
///
/// `Power` scores are `E_p(T) = Σ e_i^p`. `LogPower` scores are `ln E_p(T)`,
/// used when `m·Δ^p` would leave the double range. `HalfMax` scores are
/// `E_∞(T)`. All three are monotone in the norm, so the argmin and the budget
/// test agree with the θ-domain formulation.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Scorer {
    Power { p: f64, int_p: Option<i32> },
    LogPower { p: f64 },
    HalfMax,
}

impl Scorer {
    pub(crate) fn for_model(norm: Norm, model: &ErrorModel) -> Scorer {
        match norm {
            Norm::Inf => Scorer::HalfMax,
            Norm::Lp(p) => {
                let delta = model.finite_delta();
                let top = delta.powf(p) * model.rows() as f64;
                let in_range =
                    delta == 0.0 || (top.is_finite() && top < 1e300 && delta.powf(p) > 1e-280);
                if in_range {
                    Scorer::Power {
                        p,
                        int_p: integral_exponent(p),
                    }
                } else {
                    Scorer::LogPower { p }
                }
            }
        }
    }

    pub(crate) fn threshold(self, budget: Budget, norm: Norm) -> f64 {
        match self {
            Scorer::Power { .. } => budget.epsilon(norm),
            Scorer::LogPower { .. } => budget.ln_epsilon(norm),
            Scorer::HalfMax => budget.theta(norm),
        }
    }

    pub(crate) fn score(self, e: &[f64]) -> f64 {
        match self {
            Scorer::Power { p, int_p } => e.iter().map(|&v| pow(v, p, int_p)).sum(),
            Scorer::LogPower { p } => ln_power_sum(e, p),
            Scorer::HalfMax => linf_norm(e) / 2.0,
        }
    }

    /// Score of `b − max(cover, column)`. May stop early and return any value
    /// above `bound` once the candidate is known to lose.
    #[inline]
    fn candidate(
        self,
        target: &[f64],
        cover: &[f64],
        column: &[f64],
        bound: f64,
        scratch: &mut Vec<f64>,
    ) -> f64 {
        match self {
            Scorer::Power { p, int_p } => {
                let mut s = 0.0;
                for ((&b, &c), &v) in target.iter().zip(cover).zip(column) {
                    s += pow(b - c.max(v), p, int_p);
                    if s > bound {
                        return s;
                    }
                }
                s
            }
            Scorer::HalfMax => {
                let mut worst = 0.0_f64;
                for ((&b, &c), &v) in target.iter().zip(cover).zip(column) {
                    worst = worst.max(b - c.max(v));
                    if worst / 2.0 > bound {
                        return worst / 2.0;
                    }
                }
                worst / 2.0
            }
            Scorer::LogPower { p } => {
                scratch.clear();
                scratch.extend(
                    target
                        .iter()
                        .zip(cover)
                        .zip(column)
                        .map(|((&b, &c), &v)| b - c.max(v)),
                );
                ln_power_sum(scratch, p)
            }
        }
    }

    /// Converts a score back to `‖e‖_p` (or `E_∞`).
    pub(crate) fn to_norm(self, score: f64) -> f64 {
        match self {
            Scorer::Power { p, .. } => {
                if p == 1.0 {
                    score
                } else {
                    score.powf(1.0 / p)
                }
            }
            Scorer::LogPower { p } => (score / p).exp(),
            Scorer::HalfMax => score,
        }
    }
}

/// Incremental greedy state: the running cover `⋁_{j∈T}(A_j + x̂_j)`.
///
/// The cover never exceeds `b`, so error components stay non-negative.
#[derive(Debug, Clone)]
pub struct GreedyState<'a> {
    model: &'a ErrorModel,
    cover: Vec<f64>,
    selected: Vec<bool>,
    support: Vec<usize>,
}

impl<'a> GreedyState<'a> {
    pub fn new(model: &'a ErrorModel) -> Self {
        GreedyState {
            model,
            cover: vec![f64::NEG_INFINITY; model.rows()],
            selected: vec![false; model.cols()],
            support: Vec::new(),
        }
    }

    pub fn cover(&self) -> &[f64] {
        &self.cover
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn principal_solution(&self) -> &MpVector {
        self.model.principal_solution()
    }

    pub fn insert(&mut self, j: usize) {
        debug_assert!(!self.selected[j]);
        for (c, &v) in self.cover.iter_mut().zip(self.model.shifted_column(j)) {
            *c = c.max(v);
        }
        self.selected[j] = true;
        self.support.push(j);
    }

    /// Best unselected live column under `scorer`, lowest index on ties.
    fn best_candidate(&self, scorer: Scorer) -> Option<(usize, f64)> {
        let target = self.model.target();
        let mut scratch = Vec::new();
        let mut best: Option<(usize, f64)> = None;
        for j in self.model.live_columns().filter(|&j| !self.selected[j]) {
            let bound = best.map_or(f64::INFINITY, |(_, s)| s);
            let s = scorer.candidate(
                target,
                &self.cover,
                self.model.shifted_column(j),
                bound,
                &mut scratch,
            );
            if best.is_none() || s < bound {
                best = Some((j, s));
            }
        }
        best
    }
}

/// Runs the greedy selection on `problem` and returns the unlifted result.
///
/// For finite `p` this is the SGLE `x̂|_T` with the ratio certificate
/// attached. For the max norm the result is `x̂|_T + E_∞(T)`.
///
/// Returns [`Error::Infeasible`] when even the full support misses the budget.
pub fn greedy_sparse_solve(problem: &FitProblem) -> Result<SparseSolution> {
    let model = ErrorModel::new(problem.matrix(), problem.target())?;
    greedy_with_model(problem, &model, 0)
}

/// Like [`greedy_sparse_solve`], but keeps selecting until the support has at
/// least `min_support` columns even when the budget is met earlier. Forced
/// steps void the ratio certificate.
pub fn greedy_sparse_solve_min(problem: &FitProblem, min_support: usize) -> Result<SparseSolution> {
    let model = ErrorModel::new(problem.matrix(), problem.target())?;
    greedy_with_model(problem, &model, min_support)
}

pub(crate) fn greedy_with_model(
    problem: &FitProblem,
    model: &ErrorModel,
    min_support: usize,
) -> Result<SparseSolution> {
    let norm = problem.norm();
    let scorer = Scorer::for_model(norm, model);
    let threshold = scorer.threshold(problem.budget(), norm);

    let full = scorer.score(&model.full_error());
    if full > threshold {
        return Err(Error::Infeasible {
            full_support_error: scorer.to_norm(full),
            budget: problem.theta(),
        });
    }

    let mut state = GreedyState::new(model);
    let mut current = scorer.score(&model.empty_error());
    let mut trace = SolverTrace {
        initial_error: scorer.to_norm(current),
        steps: Vec::new(),
        clamped_columns: model.clamped_columns().to_vec(),
    };
    let min_support = min_support.min(model.live_columns().count());
    let mut forced = false;
    while current > threshold || state.support().len() < min_support {
        forced |= current <= threshold;
        let (j, s) = state.best_candidate(scorer).ok_or_else(|| {
            Error::invalid("greedy ran out of candidate columns before meeting the budget")
        })?;
        state.insert(j);
        current = s;
        trace.steps.push(TraceStep {
            index: j,
            error: scorer.to_norm(s),
        });
    }

    let support = state.support().to_vec();
    let kind = match norm {
        Norm::Lp(_) => SolutionKind::Sgle,
        Norm::Inf => SolutionKind::LinfProjection,
    };
    let mut solution = assemble(problem, model.principal_solution(), support, kind, trace)?;
    if let (Norm::Lp(p), false) = (norm, forced) {
        solution.ratio_bound = certificate_from_parts(
            &solution.trace,
            p,
            model.delta(),
            model.rows(),
            problem.budget(),
            norm,
        );
    }
    Ok(solution)
}

/// Builds the solution vector for `support` and measures its true residual.
pub(crate) fn assemble(
    problem: &FitProblem,
    xhat: &MpVector,
    support: Vec<usize>,
    kind: SolutionKind,
    trace: SolverTrace,
) -> Result<SparseSolution> {
    let mut x = project_on_support(xhat, &support)?;
    if kind == SolutionKind::LinfProjection && !support.is_empty() {
        let shift = residual_inf(problem, &x)? / 2.0;
        x = shift_finite(&x, shift);
    }
    let residual = residual(problem, &x)?;
    let r = residual.to_f64();
    Ok(SparseSolution {
        error_p: problem.norm().order().map(|p| lp_norm(&r, p)),
        error_inf: linf_norm(&r),
        x,
        support,
        residual,
        ratio_bound: None,
        kind,
        trace,
    })
}

pub(crate) fn residual(problem: &FitProblem, x: &MpVector) -> Result<MpVector> {
    let ax = maxplus_product(problem.matrix(), x)?;
    Ok(problem
        .target()
        .iter()
        .zip(ax.iter())
        .map(|(b, v)| ExtReal::from_f64(b.value() - v.value()))
        .collect())
}

fn residual_inf(problem: &FitProblem, x: &MpVector) -> Result<f64> {
    Ok(linf_norm(&residual(problem, x)?.to_f64()))
}

/// Adds `shift` to every finite entry; `−∞` entries stay `−∞`.
pub(crate) fn shift_finite(x: &MpVector, shift: f64) -> MpVector {
    x.iter()
        .map(|v| {
            if v.is_finite() {
                ExtReal::from_f64(v.value() + shift)
            } else {
                v
            }
        })
        .collect()
}

/// Greedy selection followed by the SMMAE lift when the objective asks
/// for it. On the max-norm path the greedy result is already max-norm
/// optimal on its support and is returned as is.
pub fn solve(problem: &FitProblem) -> Result<SparseSolution> {
    let sgle = greedy_sparse_solve(problem)?;
    match (problem.estimator(), problem.norm()) {
        (Estimator::Smmae, Norm::Lp(_)) => smmae_lift(&sgle, problem),
        _ => Ok(sgle),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::MpMatrix;
    use crate::solver::problem::Objective;

    fn worked(norm: Norm, budget: Budget) -> FitProblem {
        let a = MpMatrix::from_rows(&[[0.0, 5.0, 2.0], [4.0, 1.0, 0.0], [0.0, 1.0, 0.0]]).unwrap();
        let b = MpVector::from_f64(&[3.0, 1.0, 0.0]).unwrap();
        FitProblem::new(a, b, Objective::new(norm, budget, Estimator::Sgle).unwrap()).unwrap()
    }

    #[test]
    fn l1_theta_one_picks_three_then_one() {
        let sol = greedy_sparse_solve(&worked(Norm::Lp(1.0), Budget::Theta(1.0))).unwrap();
        assert_eq!(sol.support, vec![2, 0]);
        assert_eq!(sol.error_p, Some(1.0));
        assert_eq!(sol.trace.initial_error, 11.0);
        assert_eq!(
            sol.trace.steps[0],
            TraceStep {
                index: 2,
                error: 2.0
            }
        );
        assert_eq!(sol.x.to_f64(), vec![-3.0, f64::NEG_INFINITY, 0.0]);
        assert!(sol.residual.iter().all(|r| r.value() >= 0.0));
    }

    #[test]
    fn max_norm_zero_budget_needs_everything() {
        let sol = greedy_sparse_solve(&worked(Norm::Inf, Budget::Epsilon(0.0))).unwrap();
        assert_eq!(sol.support, vec![2, 0, 1]);
        let errs: Vec<f64> = sol.trace.steps.iter().map(|s| s.error).collect();
        assert_eq!(errs, vec![0.5, 0.5, 0.0]);
        assert_eq!(sol.kind, SolutionKind::LinfProjection);
        assert!(sol.ratio_bound.is_none());
        assert_eq!(sol.error_inf, 0.0);
    }

    #[test]
    fn budget_met_by_empty_support() {
        let sol = greedy_sparse_solve(&worked(Norm::Lp(2.0), Budget::Theta(1e6))).unwrap();
        assert!(sol.support.is_empty());
        assert_eq!(sol.x, MpVector::bottoms(3));
        assert!(sol.ratio_bound.is_none());
        assert_eq!(sol.iterations(), 0);
        assert!(sol.error_inf.is_infinite());
    }

    #[test]
    fn minimum_support_forces_best_single_column() {
        let sol = greedy_sparse_solve_min(&worked(Norm::Lp(1.0), Budget::Theta(1e6)), 1).unwrap();
        assert_eq!(sol.support, vec![2]);
        assert!(sol.ratio_bound.is_none());
        let unforced =
            greedy_sparse_solve_min(&worked(Norm::Lp(1.0), Budget::Theta(1.0)), 1).unwrap();
        assert_eq!(
            unforced,
            greedy_sparse_solve(&worked(Norm::Lp(1.0), Budget::Theta(1.0))).unwrap()
        );
    }

    #[test]
    fn infeasible_is_reported() {
        let a = MpMatrix::from_rows(&[[0.0], [0.0]]).unwrap();
        let b = MpVector::from_f64(&[0.0, 4.0]).unwrap();
        let obj = Objective::new(Norm::Lp(1.0), Budget::Theta(1.0), Estimator::Sgle).unwrap();
        let err = greedy_sparse_solve(&FitProblem::new(a, b, obj).unwrap()).unwrap_err();
        assert!(err.is_infeasible());
        assert_eq!(
            err,
            Error::Infeasible {
                full_support_error: 4.0,
                budget: 1.0
            }
        );
    }

    #[test]
    fn dead_columns_never_selected() {
        let ninf = f64::NEG_INFINITY;
        let a = MpMatrix::from_rows(&[[ninf, 0.0, 1.0], [ninf, 2.0, 0.0]]).unwrap();
        let b = MpVector::from_f64(&[1.0, 2.0]).unwrap();
        let obj = Objective::new(Norm::Lp(1.0), Budget::Theta(0.0), Estimator::Sgle).unwrap();
        let sol = greedy_sparse_solve(&FitProblem::new(a, b, obj).unwrap()).unwrap();
        assert_eq!(sol.trace.clamped_columns, vec![0]);
        assert!(!sol.support.contains(&0));
        assert_eq!(sol.sorted_support(), sol.x.support());
    }

    #[test]
    fn log_domain_path_matches_power_path_choice() {
        // Same instance scaled so that m·Δ^p overflows: the selected support
        // must not change.
        let a = MpMatrix::from_rows(&[[0.0, 5.0, 2.0], [4.0, 1.0, 0.0], [0.0, 1.0, 0.0]]).unwrap();
        let b = MpVector::from_f64(&[3.0, 1.0, 0.0]).unwrap();
        let scaled_a =
            MpMatrix::from_rows(&[[0.0, 500.0, 200.0], [400.0, 100.0, 0.0], [0.0, 100.0, 0.0]])
                .unwrap();
        let scaled_b = MpVector::from_f64(&[300.0, 100.0, 0.0]).unwrap();
        let obj = |t| Objective::new(Norm::Lp(150.0), Budget::Theta(t), Estimator::Sgle).unwrap();
        let small = greedy_sparse_solve(&FitProblem::new(a, b, obj(0.9)).unwrap()).unwrap();
        let big_problem = FitProblem::new(scaled_a, scaled_b, obj(90.0)).unwrap();
        let model = ErrorModel::new(big_problem.matrix(), big_problem.target()).unwrap();
        assert!(matches!(
            Scorer::for_model(Norm::Lp(150.0), &model),
            Scorer::LogPower { .. }
        ));
        let big = greedy_sparse_solve(&big_problem).unwrap();
        assert_eq!(small.support, big.support);
    }

    #[test]
    fn smmae_through_solve() {
        let mut p = worked(Norm::Lp(1.0), Budget::Theta(2.0));
        p = p.with_objective(
            Objective::new(Norm::Lp(1.0), Budget::Theta(2.0), Estimator::Smmae).unwrap(),
        );
        let sol = solve(&p).unwrap();
        assert_eq!(sol.kind, SolutionKind::Smmae);
        assert_eq!(
            sol.x.to_f64(),
            vec![f64::NEG_INFINITY, f64::NEG_INFINITY, 0.5]
        );
        assert_eq!(sol.error_inf, 0.5);
    }
}
