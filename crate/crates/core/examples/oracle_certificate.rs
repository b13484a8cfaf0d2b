//! Greedy against the exhaustive optimum on small random systems, with the
//! a-posteriori ratio certificate each greedy run reports.
//!
//! Run with `cargo run --release --example oracle_certificate`.

use maxplus_sparse::norm::lp_norm;
use maxplus_sparse::solver::{
    brute_force_oracle, greedy_sparse_solve, Budget, ErrorModel, Estimator, FitProblem, Norm,
    Objective,
};
use maxplus_sparse::{MpMatrix, MpVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), maxplus_sparse::Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    println!(
        "{:>3} {:>6} {:>8} {:>7} {:>7} {:>8}",
        "#", "p", "theta", "greedy", "oracle", "bound"
    );
    for trial in 0..12 {
        let (m, n) = (8, 12);
        let a: Vec<f64> = (0..m * n).map(|_| rng.gen_range(-5.0..5.0)).collect();
        let b: Vec<f64> = (0..m).map(|_| rng.gen_range(-5.0..5.0)).collect();
        let (a, b) = (MpMatrix::from_f64(m, n, &a)?, MpVector::from_f64(&b)?);
        let p = [1.0, 2.0, 5.0][trial % 3];
        let model = ErrorModel::new(&a, &b)?;
        let (lo, hi) = (
            lp_norm(&model.full_error(), p),
            lp_norm(&model.empty_error(), p),
        );
        let theta = lo + 0.3 * (hi - lo);
        let problem = FitProblem::new(
            a,
            b,
            Objective::new(Norm::Lp(p), Budget::Theta(theta), Estimator::Sgle)?,
        )?;
        let greedy = greedy_sparse_solve(&problem)?;
        let oracle = brute_force_oracle(&problem)?;
        println!(
            "{trial:>3} {p:>6} {theta:>8.3} {:>7} {:>7} {:>8.3}",
            greedy.support_size(),
            oracle.support_size(),
            greedy.ratio_bound.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
