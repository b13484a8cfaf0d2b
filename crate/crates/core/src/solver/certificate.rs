use crate::error::{Error, Result};
use crate::norm::ln_sub_exp;

use super::error_fn::ErrorModel;
use super::problem::{Budget, FitProblem, Norm};
use super::solution::{SolutionKind, SolverTrace, SparseSolution};

/// Upper bound on `|T_greedy| / |T*|` for a finite-`p` greedy run:
///
/// `1 + ln((m·Δ^p − ε) / (E_p(T_{k−1}) − ε))`
///
/// Evaluated in log space, so `p = 150` does not overflow. Returns `None`
/// when the greedy stopped before its first selection (`k = 0`), and
/// `Some(+∞)` when `E_p(T_{k−1}) − ε` is below double resolution.
pub fn ratio_certificate(solution: &SparseSolution, problem: &FitProblem) -> Result<Option<f64>> {
    let Norm::Lp(p) = problem.norm() else {
        return Err(Error::invalid(
            "the ratio certificate only exists for finite p",
        ));
    };
    if solution.kind == SolutionKind::LinfProjection {
        return Err(Error::invalid(
            "the ratio certificate needs a finite-p greedy solution",
        ));
    }
    let model = ErrorModel::new(problem.matrix(), problem.target())?;
    Ok(certificate_from_parts(
        &solution.trace,
        p,
        model.delta(),
        model.rows(),
        problem.budget(),
        problem.norm(),
    ))
}

pub(crate) fn certificate_from_parts(
    trace: &SolverTrace,
    p: f64,
    delta: f64,
    rows: usize,
    budget: Budget,
    norm: Norm,
) -> Option<f64> {
    let k = trace.steps.len();
    if k == 0 {
        return None;
    }
    let before_last = if k == 1 {
        trace.initial_error
    } else {
        trace.steps[k - 2].error
    };
    let ln_eps = budget.ln_epsilon(norm);
    let ln_top = (rows as f64).ln() + p * delta.ln();
    let ln_num = ln_sub_exp(ln_top, ln_eps);
    let ln_den = ln_sub_exp(p * before_last.ln(), ln_eps);
    if ln_den == f64::NEG_INFINITY || ln_num == f64::INFINITY {
        return Some(f64::INFINITY);
    }
    Some(1.0 + ln_num - ln_den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{MpMatrix, MpVector};
    use crate::solver::problem::{Estimator, Objective};
    use crate::solver::{greedy_sparse_solve, TraceStep};
    use approx::assert_relative_eq;

    #[test]
    fn single_iteration_is_direct_substitution() {
        let trace = SolverTrace {
            initial_error: 4.0,
            steps: vec![TraceStep {
                index: 0,
                error: 1.0,
            }],
            clamped_columns: vec![],
        };
        // p = 2, m = 3, Δ = 3, ε = θ² = 4: 1 + ln((27 − 4)/(16 − 4))
        let got =
            certificate_from_parts(&trace, 2.0, 3.0, 3, Budget::Theta(2.0), Norm::Lp(2.0)).unwrap();
        assert_relative_eq!(got, 1.0 + (23.0f64 / 12.0).ln(), max_relative = 1e-14);
    }

    #[test]
    fn absent_without_iterations() {
        let trace = SolverTrace {
            initial_error: 1.0,
            steps: vec![],
            clamped_columns: vec![],
        };
        assert!(
            certificate_from_parts(&trace, 1.0, 1.0, 1, Budget::Theta(5.0), Norm::Lp(1.0))
                .is_none()
        );
    }

    #[test]
    fn worked_example_l1() {
        let a = MpMatrix::from_rows(&[[0.0, 5.0, 2.0], [4.0, 1.0, 0.0], [0.0, 1.0, 0.0]]).unwrap();
        let b = MpVector::from_f64(&[3.0, 1.0, 0.0]).unwrap();
        let obj = Objective::new(Norm::Lp(1.0), Budget::Theta(1.0), Estimator::Sgle).unwrap();
        let problem = FitProblem::new(a, b, obj).unwrap();
        let sol = greedy_sparse_solve(&problem).unwrap();
        let cert = ratio_certificate(&sol, &problem).unwrap().unwrap();
        // Δ = 6, m = 3, ε = 1, E_1(T_1) = 2: 1 + ln(17/1)
        assert_relative_eq!(cert, 1.0 + 17f64.ln(), max_relative = 1e-14);
        assert_eq!(sol.ratio_bound, Some(cert));
        assert!(cert >= 1.0);
    }

    #[test]
    fn huge_order_stays_finite() {
        let trace = SolverTrace {
            initial_error: 9.0,
            steps: vec![
                TraceStep {
                    index: 0,
                    error: 8.0,
                },
                TraceStep {
                    index: 1,
                    error: 4.0,
                },
            ],
            clamped_columns: vec![],
        };
        let c = certificate_from_parts(
            &trace,
            150.0,
            10.0,
            1000,
            Budget::Theta(5.0),
            Norm::Lp(150.0),
        )
        .unwrap();
        assert!(c.is_finite() && c > 1.0);
        // 1 + ln(1000) + 150 ln(10/8), to leading order
        assert_relative_eq!(
            c,
            1.0 + 1000f64.ln() + 150.0 * (10.0f64 / 8.0).ln(),
            max_relative = 1e-9
        );
    }
}
