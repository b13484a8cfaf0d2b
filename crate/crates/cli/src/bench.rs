//! Random-instance comparison of the ℓ∞-targeted heuristic (high-order ℓp
//! greedy plus SMMAE lift) against the plain greedy on `E_∞`.

use anyhow::{ensure, Result};
use maxplus_sparse::solver::{
    greedy_sparse_solve, solve, Budget, Estimator, FitProblem, Norm, Objective,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::datasets::bench_instance;

/// Slack allowed on the heuristic's ℓ∞ guarantee for the final rounding of
/// the lift.
pub const LINF_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BenchConfig {
    pub rows: usize,
    pub cols: usize,
    pub trials: usize,
    pub seed: u64,
    /// Norm order of the heuristic.
    pub p: f64,
    /// Target ℓ∞ error for both methods.
    pub linf_target: f64,
}

impl BenchConfig {
    pub fn desk(seed: u64) -> Self {
        BenchConfig {
            rows: 200,
            cols: 200,
            trials: 100,
            seed,
            p: 150.0,
            linf_target: 2.5,
        }
    }

    pub fn full_scale(seed: u64) -> Self {
        BenchConfig {
            rows: 1000,
            cols: 1000,
            ..Self::desk(seed)
        }
    }
}

/// One trial; a `None` support means the method reported Infeasible.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub trial: usize,
    pub heuristic_support: Option<usize>,
    pub heuristic_error_inf: Option<f64>,
    pub greedy_support: Option<usize>,
    pub greedy_error_inf: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub config: BenchConfig,
    pub rows: Vec<BenchRow>,
    pub median_heuristic: Option<f64>,
    pub median_greedy: Option<f64>,
}

/// Generator for trial `trial`: the master seed with the trial as stream, so
/// results do not depend on scheduling.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

pub fn run_trial(config: &BenchConfig, trial: usize) -> Result<BenchRow> {
    let mut rng = trial_rng(config.seed, trial);
    let (a, b) = bench_instance(config.rows, config.cols, &mut rng);

    // ‖r‖_∞ ≤ ‖r‖_p ≤ 2δ, and the lift halves the max error.
    let heuristic = Objective::new(
        Norm::Lp(config.p),
        Budget::Theta(2.0 * config.linf_target),
        Estimator::Smmae,
    )?;
    let greedy = Objective::new(
        Norm::Inf,
        Budget::Epsilon(config.linf_target),
        Estimator::Sgle,
    )?;
    let problem = FitProblem::new(a, b, heuristic)?;

    let h = feasible(solve(&problem))?;
    let g = feasible(greedy_sparse_solve(&problem.with_objective(greedy)))?;
    if let Some(h) = &h {
        ensure!(
            h.error_inf <= config.linf_target + LINF_SLACK,
            "trial {trial}: heuristic max error {} exceeds {}",
            h.error_inf,
            config.linf_target
        );
    }
    Ok(BenchRow {
        trial,
        heuristic_support: h.as_ref().map(|s| s.support_size()),
        heuristic_error_inf: h.as_ref().map(|s| s.error_inf),
        greedy_support: g.as_ref().map(|s| s.support_size()),
        greedy_error_inf: g.as_ref().map(|s| s.error_inf),
    })
}

fn feasible<T>(r: maxplus_sparse::Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_infeasible() => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Runs all trials in parallel; rows come back in trial order.
pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    let rows: Vec<BenchRow> = (0..config.trials)
        .into_par_iter()
        .map(|t| run_trial(config, t))
        .collect::<Result<_>>()?;
    let median_heuristic = median(rows.iter().filter_map(|r| r.heuristic_support));
    let median_greedy = median(rows.iter().filter_map(|r| r.greedy_support));
    Ok(BenchReport {
        config: *config,
        rows,
        median_heuristic,
        median_greedy,
    })
}

/// Median of counts; the mean of the two middle values for even lengths.
pub fn median(values: impl Iterator<Item = usize>) -> Option<f64> {
    let mut v: Vec<usize> = values.collect();
    if v.is_empty() {
        return None;
    }
    v.sort_unstable();
    let n = v.len();
    Some(if n % 2 == 1 {
        v[n / 2] as f64
    } else {
        (v[n / 2 - 1] + v[n / 2]) as f64 / 2.0
    })
}

impl BenchReport {
    /// Per-trial rows as CSV; infeasible entries are empty cells.
    pub fn to_csv(&self) -> String {
        let cell = |v: Option<String>| v.unwrap_or_default();
        let mut out = String::from(
            "trial,heuristic_support,heuristic_error_inf,greedy_support,greedy_error_inf\n",
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.trial,
                cell(r.heuristic_support.map(|v| v.to_string())),
                cell(r.heuristic_error_inf.map(|v| v.to_string())),
                cell(r.greedy_support.map(|v| v.to_string())),
                cell(r.greedy_error_inf.map(|v| v.to_string())),
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn medians() {
        assert_eq!(median([3, 1, 2].into_iter()), Some(2.0));
        assert_eq!(median([4, 1, 2, 3].into_iter()), Some(2.5));
        assert_eq!(median(std::iter::empty()), None);
    }

    #[test]
    fn tiny_bench_replays_identically() {
        let config = BenchConfig {
            rows: 5,
            cols: 5,
            trials: 1,
            ..BenchConfig::desk(11)
        };
        let a = run_bench(&config).unwrap();
        assert_eq!(a, run_bench(&config).unwrap());
        assert_eq!(a.rows.len(), 1);
    }

    #[test]
    fn trial_streams_differ() {
        use rand::Rng;
        let a: u64 = trial_rng(1, 0).gen();
        let b: u64 = trial_rng(1, 1).gen();
        assert_ne!(a, b);
        assert_eq!(a, trial_rng(1, 0).gen::<u64>());
    }
}
