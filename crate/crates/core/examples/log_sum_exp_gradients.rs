//! Fits g(x) = ln(e^x₁ + e^x₂ + e^x₃) on the 11³ integer grid of [−5, 5]³.
//! Candidate slopes are numerical gradients of the data, which keeps the
//! slope count linear in the number of points. Lowering the ℓ2 budget
//! traces RMS error against region count.
//!
//! Run with `cargo run --release --example log_sum_exp_gradients`.

use maxplus_sparse::regression::{default_neighbors, fit, gradient_slopes, Dataset};
use maxplus_sparse::solver::{Budget, Estimator, Norm, Objective};

fn main() -> Result<(), maxplus_sparse::Error> {
    let mut xs = Vec::new();
    for a in -5..=5 {
        for b in -5..=5 {
            for c in -5..=5 {
                xs.push([a as f64, b as f64, c as f64]);
            }
        }
    }
    let fs: Vec<f64> = xs
        .iter()
        .map(|x| x.iter().map(|v| v.exp()).sum::<f64>().ln())
        .collect();
    let data = Dataset::new(&xs, &fs)?;
    let slopes = gradient_slopes(&data, default_neighbors(3))?;
    println!("{} points, {} candidate slopes", data.len(), slopes.len());

    println!("{:>10} {:>4} {:>8} {:>8}", "epsilon", "K", "rms", "max");
    let mut eps = 1331.0;
    loop {
        let obj = Objective::new(Norm::Lp(2.0), Budget::Epsilon(eps), Estimator::Sgle)?;
        let s = fit(&data, &slopes, obj)?.score(&data)?;
        println!(
            "{eps:>10.3} {:>4} {:>8.4} {:>8.4}",
            s.support, s.rms, s.max_abs
        );
        if s.support >= 21 {
            break;
        }
        eps *= 0.7;
    }
    Ok(())
}
