//! Samples `L ⊆ S` and `j ∉ S` on a random system and checks that the
//! ℓp error drop from adding `j` never grows with the set, for several p.
//! The max norm is included for contrast: it is not supermodular, and the
//! probe finds violations.
//!
//! Run with `cargo run --example supermodularity_probe`.

use maxplus_sparse::solver::{submodularity_probe, Norm};
use maxplus_sparse::{MpMatrix, MpVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), maxplus_sparse::Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (m, n) = (15, 20);
    let a: Vec<f64> = (0..m * n).map(|_| rng.gen_range(-5.0..5.0)).collect();
    let b: Vec<f64> = (0..m).map(|_| rng.gen_range(-5.0..5.0)).collect();
    let (a, b) = (MpMatrix::from_f64(m, n, &a)?, MpVector::from_f64(&b)?);
    for norm in [
        Norm::Lp(1.0),
        Norm::Lp(2.0),
        Norm::Lp(5.0),
        Norm::Lp(150.0),
        Norm::Inf,
    ] {
        let rep = submodularity_probe(&a, &b, norm, 2000, 11)?;
        println!("{norm:?}: {rep:?}");
    }
    Ok(())
}
