//! Fits the noisy paraboloid z = x² + y² + N(0, 0.25²) from 500 uniform
//! samples of [−1, 1]², over the slope grid {−10, −9.75, …, 10}².
//!
//! The SGLE stays below every sample; its SMMAE lift halves the max error.
//! With p = 150 and ε = 10⁸ the SMMAE max error is bounded by
//! 10^(8/150)/2 ≈ 0.5653.
//!
//! Run with `cargo run --release --example paraboloid_surface [seed]`.

use maxplus_sparse::regression::{fit_detailed, grid_slopes, Dataset, DEFAULT_GRID_CAP};
use maxplus_sparse::solver::{Budget, Estimator, Norm, Objective};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Normal;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed: u64 = std::env::args().nth(1).map_or(Ok(7), |s| s.parse())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, 0.25)?;
    let mut xs = Vec::new();
    let mut zs = Vec::new();
    for _ in 0..500 {
        let (x, y): (f64, f64) = (rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
        xs.push([x, y]);
        zs.push(x * x + y * y + rng.sample(noise));
    }
    let data = Dataset::new(&xs, &zs)?;
    let slopes = grid_slopes(&[-10.0, -10.0], &[10.0, 10.0], 0.25, DEFAULT_GRID_CAP)?;

    println!(
        "{:>12} | {:>7} {:>7} | {:>7} {:>7} | {:>4}",
        "(eps, p)", "rms", "max", "rms*", "max*", "K"
    );
    for (eps, p) in [
        (210.0, 1.0),
        (300.0, 1.0),
        (120.0, 2.0),
        (220.0, 2.0),
        (50.0, 5.0),
        (1e8, 150.0),
    ] {
        let sgle = Objective::new(Norm::Lp(p), Budget::Epsilon(eps), Estimator::Sgle)?;
        let (a, _) = fit_detailed(&data, &slopes, sgle)?;
        let (b, _) = fit_detailed(
            &data,
            &slopes,
            Objective {
                estimator: Estimator::Smmae,
                ..sgle
            },
        )?;
        let (sa, sb) = (a.score(&data)?, b.score(&data)?);
        println!(
            "{:>12} | {:>7.4} {:>7.4} | {:>7.4} {:>7.4} | {:>4}",
            format!("({eps}, {p})"),
            sa.rms,
            sa.max_abs,
            sb.rms,
            sb.max_abs,
            sa.support
        );
    }
    println!(
        "max-error bound at (1e8, 150): {:.4}",
        1e8f64.powf(1.0 / 150.0) / 2.0
    );
    Ok(())
}
