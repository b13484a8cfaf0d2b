//! The 3×3 system `A ⊞ x ≈ b` solved by hand: principal solution, the
//! error vectors of each support, and the greedy path under an ℓ1 budget.
//!
//! Run with `cargo run --example worked_example`.

use maxplus_sparse::solver::{
    greedy_sparse_solve, Budget, ErrorModel, Estimator, FitProblem, Norm, Objective,
};
use maxplus_sparse::tropical::{maxplus_product, principal_solution};
use maxplus_sparse::{MpMatrix, MpVector};

fn main() -> Result<(), maxplus_sparse::Error> {
    let a = MpMatrix::from_rows(&[[0.0, 5.0, 2.0], [4.0, 1.0, 0.0], [0.0, 1.0, 0.0]])?;
    let b = MpVector::from_f64(&[3.0, 1.0, 0.0])?;

    let xhat = principal_solution(&a, &b)?;
    println!("principal solution x̂ = {:?}", xhat.to_f64());
    println!(
        "A ⊞ x̂ = {:?} (≤ b = {:?})",
        maxplus_product(&a, &xhat)?.to_f64(),
        b.to_f64()
    );

    let model = ErrorModel::new(&a, &b)?;
    for support in [vec![0], vec![1], vec![2], vec![0, 2], vec![0, 1, 2]] {
        println!("e({support:?}) = {:?}", model.error_vector(&support)?);
    }

    let objective = Objective::new(Norm::Lp(1.0), Budget::Theta(1.0), Estimator::Sgle)?;
    let solution = greedy_sparse_solve(&FitProblem::new(a, b, objective)?)?;
    for step in &solution.trace.steps {
        println!("add column {} -> ‖e‖₁ = {}", step.index, step.error);
    }
    println!(
        "x = {:?}, residual = {:?}",
        solution.x.to_f64(),
        solution.residual.to_f64()
    );
    println!(
        "certificate |T| / |T*| ≤ {:.4}",
        solution.ratio_bound.unwrap_or(f64::NAN)
    );
    Ok(())
}
