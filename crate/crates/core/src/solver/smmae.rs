use crate::error::{Error, Result};
use crate::norm::{linf_norm, lp_norm};

use super::greedy::{residual, shift_finite};
use super::problem::FitProblem;
use super::solution::{SolutionKind, SparseSolution};

/// Lifts an SGLE to the SMMAE estimate by adding half of its max residual to
/// every finite entry.
///
/// On a fixed support this is the max-norm optimum, and its max error is
/// exactly half that of the SGLE. When the SGLE met a budget `θ`, the lifted
/// error is therefore at most `θ/2`.
pub fn smmae_lift(sgle: &SparseSolution, problem: &FitProblem) -> Result<SparseSolution> {
    if sgle.kind != SolutionKind::Sgle {
        return Err(Error::invalid(format!(
            "SMMAE lift expects an SGLE, got {:?}",
            sgle.kind
        )));
    }
    let shift = sgle.error_inf / 2.0;
    let x = shift_finite(&sgle.x, shift);
    let residual = residual(problem, &x)?;
    let r = residual.to_f64();
    Ok(SparseSolution {
        error_p: problem.norm().order().map(|p| lp_norm(&r, p)),
        error_inf: linf_norm(&r),
        x,
        support: sgle.support.clone(),
        residual,
        ratio_bound: sgle.ratio_bound,
        kind: SolutionKind::Smmae,
        trace: sgle.trace.clone(),
    })
}
