//! Synthetic data for the three reference fits and the random benchmark.

use maxplus_sparse::regression::Dataset;
use maxplus_sparse::{MpMatrix, MpVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Normal;

/// `n` evenly spaced values from `lo` to `hi` inclusive, computed as
/// `lo + i·step` with the last value pinned to `hi`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            (0..n)
                .map(|i| if i + 1 == n { hi } else { lo + i as f64 * step })
                .collect()
        }
    }
}

/// `max(−6x − 6, x/2, x⁵/5 + x/2)`.
pub fn curve(x: f64) -> f64 {
    (-6.0 * x - 6.0).max(x / 2.0).max(x.powi(5) / 5.0 + x / 2.0)
}

/// The noiseless 1-D curve sampled at `points` evenly spaced points of [−2, 2].
pub fn example1(points: usize) -> Dataset {
    let xs: Vec<[f64; 1]> = linspace(-2.0, 2.0, points)
        .into_iter()
        .map(|x| [x])
        .collect();
    let fs: Vec<f64> = xs.iter().map(|x| curve(x[0])).collect();
    Dataset::new(&xs, &fs).expect("curve samples are finite")
}

/// `points` samples of `x² + y² + N(0, 0.25²)` with `x, y ~ U[−1, 1]`.
pub fn example2(points: usize, seed: u64) -> Dataset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, 0.25).expect("valid deviation");
    let mut xs = Vec::with_capacity(points);
    let mut zs = Vec::with_capacity(points);
    for _ in 0..points {
        let (x, y): (f64, f64) = (rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
        xs.push([x, y]);
        zs.push(x * x + y * y + rng.sample(noise));
    }
    Dataset::new(&xs, &zs).expect("paraboloid samples are finite")
}

/// `ln(e^x₁ + e^x₂ + e^x₃)` on the integer grid `{−5, …, 5}³`.
pub fn example3() -> Dataset {
    let mut xs = Vec::with_capacity(1331);
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
    Dataset::new(&xs, &fs).expect("log-sum-exp samples are finite")
}

/// A random instance with `A_ij ~ N(0, 2²)` and `b_i ~ N(0, 1)`.
pub fn bench_instance(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> (MpMatrix, MpVector) {
    let wide = Normal::new(0.0, 2.0).expect("valid deviation");
    let unit = Normal::new(0.0, 1.0).expect("valid deviation");
    let a: Vec<f64> = (0..rows * cols).map(|_| rng.sample(wide)).collect();
    let b: Vec<f64> = (0..rows).map(|_| rng.sample(unit)).collect();
    (
        MpMatrix::from_f64(rows, cols, &a).expect("shape matches"),
        MpVector::from_f64(&b).expect("finite samples"),
    )
}
