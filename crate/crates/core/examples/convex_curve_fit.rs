//! Fits f(x) = max(−6x − 6, x/2, x⁵/5 + x/2) on 100 points of [−2, 2] with
//! slopes −20, −19.875, …, 20, for several budgets and norm orders, and prints
//! RMS error, max error and region count of the SGLE and SMMAE fits.
//!
//! Run with `cargo run --release --example convex_curve_fit`.

use maxplus_sparse::regression::{fit, grid_slopes, Dataset, DEFAULT_GRID_CAP};
use maxplus_sparse::solver::{Budget, Estimator, Norm, Objective};

fn f(x: f64) -> f64 {
    (-6.0 * x - 6.0).max(x / 2.0).max(x.powi(5) / 5.0 + x / 2.0)
}

fn main() -> Result<(), maxplus_sparse::Error> {
    let step = 4.0 / 99.0;
    let xs: Vec<[f64; 1]> = (0..100)
        .map(|i| [if i == 99 { 2.0 } else { -2.0 + i as f64 * step }])
        .collect();
    let fs: Vec<f64> = xs.iter().map(|x| f(x[0])).collect();
    let data = Dataset::new(&xs, &fs)?;
    let slopes = grid_slopes(&[-20.0], &[20.0], 0.125, DEFAULT_GRID_CAP)?;

    for p in [1.0, 2.0, 5.0, 150.0] {
        println!("p = {p}");
        println!(
            "{:>6} | {:>8} {:>8} {:>4} | {:>8} {:>8}",
            "theta", "rms", "max", "K", "rms*", "max*"
        );
        for theta in [0.15, 0.25, 0.5, 1.0, 2.0, 3.0, 4.0, 10.0, 15.0, 30.0] {
            let sgle = Objective::new(Norm::Lp(p), Budget::Theta(theta), Estimator::Sgle)?;
            let smmae = Objective {
                estimator: Estimator::Smmae,
                ..sgle
            };
            let a = fit(&data, &slopes, sgle)?.score(&data)?;
            let b = fit(&data, &slopes, smmae)?.score(&data)?;
            println!(
                "{theta:>6} | {:>8.4} {:>8.4} {:>4} | {:>8.4} {:>8.4}",
                a.rms, a.max_abs, a.support, b.rms, b.max_abs
            );
        }
        println!();
    }
    Ok(())
}
