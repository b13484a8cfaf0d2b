//! Max-norm estimates on a random system: the SGLE under an ℓ2 budget, its
//! SMMAE lift that halves the max error, and the direct ℓ∞ search.
//!
//! Run with `cargo run --example max_norm_estimates [seed]`.

use maxplus_sparse::solver::{
    greedy_sparse_solve, smmae_lift, solve, Budget, Estimator, FitProblem, Norm, Objective,
};
use maxplus_sparse::{MpMatrix, MpVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), maxplus_sparse::Error> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (m, n) = (40, 60);
    let a: Vec<f64> = (0..m * n).map(|_| rng.gen_range(0.0..10.0)).collect();
    let b: Vec<f64> = (0..m).map(|_| rng.gen_range(8.0..12.0)).collect();
    let (a, b) = (MpMatrix::from_f64(m, n, &a)?, MpVector::from_f64(&b)?);

    let l2 = FitProblem::new(
        a.clone(),
        b.clone(),
        Objective::new(Norm::Lp(2.0), Budget::Theta(12.0), Estimator::Sgle)?,
    )?;
    let sgle = greedy_sparse_solve(&l2)?;
    let smmae = smmae_lift(&sgle, &l2)?;
    println!("ℓ2 budget 12: |T| = {}", sgle.support_size());
    println!(
        "  SGLE  max error {:.4}, ‖r‖₂ {:.4}",
        sgle.error_inf,
        sgle.error_p.unwrap_or(f64::NAN)
    );
    println!("  SMMAE max error {:.4}", smmae.error_inf);

    let inf = FitProblem::new(
        a,
        b,
        Objective::new(Norm::Inf, Budget::Theta(smmae.error_inf), Estimator::Smmae)?,
    )?;
    let direct = solve(&inf)?;
    println!(
        "ℓ∞ budget {:.4}: |T| = {}, max error {:.4}",
        smmae.error_inf,
        direct.support_size(),
        direct.error_inf
    );
    Ok(())
}
