//! The set functions `e(T)`, `E_p(T)` and `E_∞(T)` over candidate supports.

use crate::error::{Error, Result};
use crate::matrix::{MpMatrix, MpVector};
use crate::norm::{linf_norm, lp_norm};
use crate::tropical::residuate;

/// Precomputed shifted columns `A_j + x̂_j` for evaluating error vectors.
///
/// `e(T) = b − ⋁_{j∈T}(A_j + x̂_j)` for non-empty `T`, and the componentwise
/// maximum of the singleton error vectors for `T = ∅`. Every component is
/// non-negative because each shifted column lies below `b`.
#[derive(Debug, Clone)]
pub struct ErrorModel {
    rows: usize,
    cols: usize,
    target: Vec<f64>,
    xhat: MpVector,
    clamped: Vec<usize>,
    // column-major, rows entries per column
    shifted: Vec<f64>,
    live: Vec<bool>,
}

impl ErrorModel {
    pub fn new(a: &MpMatrix, b: &MpVector) -> Result<Self> {
        let res = residuate(a, b)?;
        let (rows, cols) = (a.rows(), a.cols());
        let mut shifted = Vec::with_capacity(rows * cols);
        let mut live = vec![false; cols];
        for (j, is_live) in live.iter_mut().enumerate() {
            let xj = res.xhat[j];
            shifted.extend(a.column(j).map(|aij| aij.max_plus_add(xj).value()));
            *is_live = !xj.is_bottom();
        }
        Ok(ErrorModel {
            rows,
            cols,
            target: b.to_f64(),
            xhat: res.xhat,
            clamped: res.clamped,
            shifted,
            live,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn target(&self) -> &[f64] {
        &self.target
    }

    pub fn principal_solution(&self) -> &MpVector {
        &self.xhat
    }

    /// Columns whose principal-solution coordinate was clamped to `−∞`.
    pub fn clamped_columns(&self) -> &[usize] {
        &self.clamped
    }

    /// `A_j + x̂_j`.
    #[inline]
    pub fn shifted_column(&self, j: usize) -> &[f64] {
        &self.shifted[j * self.rows..(j + 1) * self.rows]
    }

    /// A column is live when its `x̂_j` is not `−∞`; dead columns can never
    /// enter a support.
    pub fn is_live(&self, j: usize) -> bool {
        self.live[j]
    }

    pub fn live_columns(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.cols).filter(|&j| self.live[j])
    }

    /// `e(T)`.
    pub fn error_vector(&self, support: &[usize]) -> Result<Vec<f64>> {
        if let Some(&j) = support.iter().find(|&&j| j >= self.cols) {
            return Err(Error::shape(format!(
                "support index {j} out of range for {} columns",
                self.cols
            )));
        }
        if support.is_empty() {
            return Ok(self.empty_error());
        }
        let mut cover = vec![f64::NEG_INFINITY; self.rows];
        for &j in support {
            for (c, &v) in cover.iter_mut().zip(self.shifted_column(j)) {
                *c = c.max(v);
            }
        }
        Ok(self.residual_of_cover(&cover))
    }

    /// `e(∅)`: the componentwise maximum over live singletons.
    pub fn empty_error(&self) -> Vec<f64> {
        let mut low = vec![f64::INFINITY; self.rows];
        for j in self.live_columns() {
            for (l, &v) in low.iter_mut().zip(self.shifted_column(j)) {
                *l = l.min(v);
            }
        }
        // b − (+∞) cannot happen: with no live column every entry stays +∞
        // and the error is reported as +∞.
        self.target
            .iter()
            .zip(&low)
            .map(|(&b, &l)| {
                if l == f64::INFINITY {
                    f64::INFINITY
                } else {
                    b - l
                }
            })
            .collect()
    }

    /// `e(J)` over every column.
    pub fn full_error(&self) -> Vec<f64> {
        let all: Vec<usize> = self.live_columns().collect();
        if all.is_empty() {
            return vec![f64::INFINITY; self.rows];
        }
        self.error_vector(&all).expect("indices in range")
    }

    pub(crate) fn residual_of_cover(&self, cover: &[f64]) -> Vec<f64> {
        self.target
            .iter()
            .zip(cover)
            .map(|(&b, &c)| b - c)
            .collect()
    }

    /// `‖e(T)‖_p`, the p-th root of `E_p(T)`.
    pub fn error_p(&self, support: &[usize], p: f64) -> Result<f64> {
        Ok(lp_norm(&self.error_vector(support)?, p))
    }

    /// `E_∞(T) = ‖e(T)‖_∞ / 2`.
    pub fn error_inf(&self, support: &[usize]) -> Result<f64> {
        Ok(linf_norm(&self.error_vector(support)?) / 2.0)
    }

    /// `Δ = max_{i,j} (b_i − A_ij − x̂_j)` over live columns, i.e. `max e(∅)`.
    pub fn delta(&self) -> f64 {
        linf_norm(&self.empty_error())
    }

    /// Largest finite component of `e(∅)`.
    pub(crate) fn finite_delta(&self) -> f64 {
        self.empty_error()
            .into_iter()
            .filter(|v| v.is_finite())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked() -> ErrorModel {
        let a = MpMatrix::from_rows(&[[0.0, 5.0, 2.0], [4.0, 1.0, 0.0], [0.0, 1.0, 0.0]]).unwrap();
        let b = MpVector::from_f64(&[3.0, 1.0, 0.0]).unwrap();
        ErrorModel::new(&a, &b).unwrap()
    }

    #[test]
    fn error_vectors_worked_example() {
        let m = worked();
        assert_eq!(m.error_vector(&[2]).unwrap(), vec![1.0, 1.0, 0.0]);
        assert_eq!(m.error_vector(&[0, 1, 2]).unwrap(), vec![0.0, 0.0, 0.0]);
        // b − (A_1 + x̂_1) = (3,1,0) − (−3,1,−3)
        assert_eq!(m.error_vector(&[0]).unwrap(), vec![6.0, 0.0, 3.0]);
        assert_eq!(m.error_vector(&[1]).unwrap(), vec![0.0, 2.0, 1.0]);
        assert_eq!(m.empty_error(), vec![6.0, 2.0, 3.0]);
        assert_eq!(m.delta(), 6.0);
    }

    #[test]
    fn error_p_examples() {
        let m = worked();
        assert_eq!(m.error_p(&[2], 1.0).unwrap(), 2.0);
        for p in [1.0, 2.0, 7.5] {
            assert_eq!(m.error_p(&[0, 1, 2], p).unwrap(), 0.0);
        }
    }

    #[test]
    fn error_inf_examples() {
        let m = worked();
        assert_eq!(m.error_inf(&[2]).unwrap(), 0.5);
        assert_eq!(m.error_inf(&[0, 2]).unwrap(), 0.5);
        assert_eq!(m.error_inf(&[1, 2]).unwrap(), 0.5);
        assert_eq!(m.error_inf(&[0, 1, 2]).unwrap(), 0.0);
    }

    #[test]
    fn out_of_range_support() {
        assert!(worked().error_vector(&[3]).is_err());
    }

    #[test]
    fn dead_columns_ignored_by_empty_error() {
        let ninf = f64::NEG_INFINITY;
        let a = MpMatrix::from_rows(&[[0.0, ninf], [1.0, ninf]]).unwrap();
        let b = MpVector::from_f64(&[0.0, 3.0]).unwrap();
        let m = ErrorModel::new(&a, &b).unwrap();
        assert!(!m.is_live(1));
        assert_eq!(m.empty_error(), vec![0.0, 2.0]);
        assert_eq!(m.full_error(), vec![0.0, 2.0]);
    }
}
