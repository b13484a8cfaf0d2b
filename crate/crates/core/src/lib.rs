//! Sparse approximate solutions to max-plus matrix equations, and their use
//! for fitting convex piecewise-linear functions with few affine pieces.
//!
//! Layers, bottom up:
//!
//! - [`ExtReal`], [`MpMatrix`], [`MpVector`] and the products in [`tropical`]:
//!   max-plus / min-plus algebra and the principal solution.
//! - [`solver`]: the greedy support selection for any `ℓp` budget, the SMMAE
//!   lift for max-norm estimates, an exhaustive oracle, and the
//!   approximation-ratio certificate.
//! - [`regression`]: casting `f(x) ≈ max_k (a_kᵀx + b_k)` as a max-plus
//!   equation and fitting it.
//! - [`io`]: the CSV and JSON formats.
//!
//! ```
//! use maxplus_sparse::{MpMatrix, MpVector};
//! use maxplus_sparse::solver::{greedy_sparse_solve, Budget, Estimator, FitProblem, Norm, Objective};
//!
//! let a = MpMatrix::from_rows(&[[0.0, 5.0, 2.0], [4.0, 1.0, 0.0], [0.0, 1.0, 0.0]])?;
//! let b = MpVector::from_f64(&[3.0, 1.0, 0.0])?;
//! let objective = Objective::new(Norm::Lp(1.0), Budget::Theta(1.0), Estimator::Sgle)?;
//! let solution = greedy_sparse_solve(&FitProblem::new(a, b, objective)?)?;
//! assert_eq!(solution.support, vec![2, 0]);
//! # Ok::<(), maxplus_sparse::Error>(())
//! ```

mod error;
mod ext;
pub mod io;
mod matrix;
pub mod norm;
pub mod regression;
pub mod solver;
pub mod tropical;

pub use error::{Error, Result};
pub use ext::ExtReal;
pub use matrix::{MpMatrix, MpVector};
