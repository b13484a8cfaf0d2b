use log::warn;
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::dataset::Dataset;

/// Default cap on the number of grid slopes.
pub const DEFAULT_GRID_CAP: usize = 200_000;

/// Relative tolerance under which two gradient estimates count as one slope.
pub const GRADIENT_DEDUP_TOLERANCE: f64 = 1e-9;

/// Where a slope set came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SlopeOrigin {
    Grid,
    Explicit,
    Gradients,
}

/// Candidate slope vectors `a_k`, one per column of the design matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SlopeSet {
    dim: usize,
    slopes: Vec<Vec<f64>>,
    origin: SlopeOrigin,
}

impl SlopeSet {
    /// A user-supplied slope list. Exact duplicates are dropped with a
    /// warning, keeping the first occurrence.
    pub fn explicit(slopes: Vec<Vec<f64>>) -> Result<Self> {
        let before = slopes.len();
        let mut kept: Vec<Vec<f64>> = Vec::with_capacity(before);
        for s in slopes {
            if !kept.iter().any(|k| bitwise_eq(k, &s)) {
                kept.push(s);
            }
        }
        if kept.len() < before {
            warn!("dropped {} duplicate slope vectors", before - kept.len());
        }
        Self::checked(kept, SlopeOrigin::Explicit)
    }

    fn checked(slopes: Vec<Vec<f64>>, origin: SlopeOrigin) -> Result<Self> {
        let dim = slopes
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::invalid("slope set is empty"))?;
        if dim == 0 {
            return Err(Error::shape("slope vectors must have dimension at least 1"));
        }
        if let Some(k) = slopes.iter().position(|s| s.len() != dim) {
            return Err(Error::shape(format!(
                "slope {k} has dimension {}, expected {dim}",
                slopes[k].len()
            )));
        }
        if slopes.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::invalid("slope entries must be finite"));
        }
        Ok(SlopeSet {
            dim,
            slopes,
            origin,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of slopes `K`.
    pub fn len(&self) -> usize {
        self.slopes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slopes.is_empty()
    }

    pub fn slopes(&self) -> &[Vec<f64>] {
        &self.slopes
    }

    pub fn get(&self, k: usize) -> &[f64] {
        &self.slopes[k]
    }

    pub fn origin(&self) -> SlopeOrigin {
        self.origin
    }

    pub fn into_inner(self) -> Vec<Vec<f64>> {
        self.slopes
    }
}

fn bitwise_eq(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.to_bits() == y.to_bits())
}

/// Number of grid points per dimension: `⌊(hi − lo)/step⌋ + 1`.
fn grid_counts(lo: &[f64], hi: &[f64], step: f64) -> Result<Vec<usize>> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::invalid(format!(
            "slope step must be positive and finite, got {step}"
        )));
    }
    if lo.len() != hi.len() || lo.is_empty() {
        return Err(Error::shape(format!(
            "grid bounds have dimensions {} and {}",
            lo.len(),
            hi.len()
        )));
    }
    lo.iter()
        .zip(hi)
        .map(|(&l, &h)| {
            if !(l.is_finite() && h.is_finite()) || h < l {
                return Err(Error::invalid(format!("invalid grid interval [{l}, {h}]")));
            }
            // Tolerate ratios like 40/0.125 landing a hair under an integer.
            let r = (h - l) / step;
            Ok((r + 1e-9 * r.max(1.0)).floor() as usize + 1)
        })
        .collect()
}

/// All slopes `lo + i·step` inside the box `[lo, hi]`, per dimension,
/// enumerated lexicographically with the last dimension varying fastest.
///
/// Refuses when the count exceeds `cap`, since `K` grows as
/// `((hi − lo)/step)ⁿ`; use [`gradient_slopes`] in that regime.
pub fn grid_slopes(lo: &[f64], hi: &[f64], step: f64, cap: usize) -> Result<SlopeSet> {
    let counts = grid_counts(lo, hi, step)?;
    let total = counts.iter().try_fold(1usize, |acc, &c| acc.checked_mul(c));
    let total = match total {
        Some(t) if t <= cap => t,
        _ => return Err(Error::Refused(format!(
            "slope grid would have {} slopes (cap {cap}); use gradient slopes for this dimension",
            total.map_or_else(|| "more than usize::MAX".to_string(), |t| t.to_string())
        ))),
    };
    let axes: Vec<Vec<f64>> = counts
        .iter()
        .zip(lo)
        .map(|(&c, &l)| (0..c).map(|i| l + i as f64 * step).collect())
        .collect();
    let mut slopes = Vec::with_capacity(total);
    let mut idx = vec![0usize; counts.len()];
    for _ in 0..total {
        slopes.push(idx.iter().zip(&axes).map(|(&i, axis)| axis[i]).collect());
        for d in (0..idx.len()).rev() {
            idx[d] += 1;
            if idx[d] < counts[d] {
                break;
            }
            idx[d] = 0;
        }
    }
    SlopeSet::checked(slopes, SlopeOrigin::Grid)
}

/// Default neighbourhood size for [`gradient_slopes`]: `2n + 1`.
pub fn default_neighbors(dim: usize) -> usize {
    2 * dim + 1
}

/// Numerical gradients of the data as candidate slopes.
///
/// For each point, an affine function is least-squares fitted to its
/// `k_neighbors` nearest points (Euclidean, the point itself included, ties
/// by index); its linear part is the slope estimate. Rank-deficient
/// neighbourhoods are skipped with a warning. Estimates within a relative
/// [`GRADIENT_DEDUP_TOLERANCE`] of an earlier one are dropped.
pub fn gradient_slopes(data: &Dataset, k_neighbors: usize) -> Result<SlopeSet> {
    let n = data.dim();
    let m = data.len();
    if m <= n {
        return Err(Error::invalid(format!(
            "gradient slopes need more points than dimensions ({m} ≤ {n})"
        )));
    }
    if k_neighbors < n + 1 {
        return Err(Error::invalid(format!(
            "an affine fit in {n} dimensions needs at least {} neighbours, got {k_neighbors}",
            n + 1
        )));
    }
    let k = k_neighbors.min(m);
    let mut slopes: Vec<Vec<f64>> = Vec::new();
    let mut skipped = 0usize;
    let mut order: Vec<(f64, usize)> = Vec::with_capacity(m);
    for i in 0..m {
        let xi = data.point(i);
        order.clear();
        order.extend((0..m).map(|j| (sq_dist(xi, data.point(j)), j)));
        order.select_nth_unstable_by(k - 1, |a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let neighbors = &order[..k];

        let design = DMatrix::from_fn(k, n + 1, |r, c| {
            if c == 0 {
                1.0
            } else {
                data.point(neighbors[r].1)[c - 1] - xi[c - 1]
            }
        });
        let rhs = DVector::from_fn(k, |r, _| data.target(neighbors[r].1));
        match local_gradient(design, rhs) {
            Some(g) => {
                if !slopes.iter().any(|s| near(s, &g)) {
                    slopes.push(g);
                }
            }
            None => skipped += 1,
        }
    }
    if skipped > 0 {
        warn!("skipped {skipped} rank-deficient neighbourhoods while estimating gradients");
    }
    if slopes.is_empty() {
        return Err(Error::invalid(
            "every neighbourhood was rank-deficient; no gradient slopes",
        ));
    }
    SlopeSet::checked(slopes, SlopeOrigin::Gradients)
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Least-squares `[c, g]` for `design · [c, g] ≈ rhs`, or `None` when the
/// design is numerically rank-deficient.
fn local_gradient(design: DMatrix<f64>, rhs: DVector<f64>) -> Option<Vec<f64>> {
    let svd = design.svd(true, true);
    let max = svd.singular_values.max();
    let min = svd.singular_values.min();
    if max.is_nan() || max <= 0.0 || min <= 1e-10 * max {
        return None;
    }
    let coef = svd.solve(&rhs, 0.0).ok()?;
    let g: Vec<f64> = coef.iter().skip(1).copied().collect();
    g.iter().all(|v| v.is_finite()).then_some(g)
}

fn near(a: &[f64], b: &[f64]) -> bool {
    let scale = a.iter().chain(b).fold(1.0f64, |m, v| m.max(v.abs()));
    a.iter()
        .zip(b)
        .all(|(x, y)| (x - y).abs() <= GRADIENT_DEDUP_TOLERANCE * scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_grid_has_one_slope() {
        let s = grid_slopes(&[0.0], &[0.0], 0.3, DEFAULT_GRID_CAP).unwrap();
        assert_eq!(s.slopes(), &[vec![0.0]]);
        assert_eq!(s.origin(), SlopeOrigin::Grid);
    }

    #[test]
    fn one_dimensional_grid() {
        let s = grid_slopes(&[-20.0], &[20.0], 0.125, DEFAULT_GRID_CAP).unwrap();
        assert_eq!(s.len(), 321);
        assert_eq!(s.get(0), &[-20.0]);
        assert_eq!(s.get(1), &[-19.875]);
        assert_eq!(s.get(160), &[0.0]);
        assert_eq!(s.get(320), &[20.0]);
    }

    #[test]
    fn two_dimensional_grid() {
        let s = grid_slopes(&[-10.0, -10.0], &[10.0, 10.0], 0.25, DEFAULT_GRID_CAP).unwrap();
        assert_eq!(s.len(), 81 * 81);
        assert_eq!(s.get(0), &[-10.0, -10.0]);
        assert_eq!(s.get(1), &[-10.0, -9.75]);
        assert_eq!(s.get(81), &[-9.75, -10.0]);
        assert_eq!(s.get(6560), &[10.0, 10.0]);
    }

    #[test]
    fn grid_rejections() {
        assert!(grid_slopes(&[0.0], &[1.0], 0.0, 10).is_err());
        assert!(grid_slopes(&[0.0], &[1.0], -1.0, 10).is_err());
        assert!(grid_slopes(&[1.0], &[0.0], 0.5, 10).is_err());
        let err = grid_slopes(&[-5.0; 4], &[5.0; 4], 0.01, DEFAULT_GRID_CAP).unwrap_err();
        assert!(matches!(&err, Error::Refused(msg) if msg.contains("gradient")));
    }

    #[test]
    fn explicit_dedups_bitwise() {
        let s = SlopeSet::explicit(vec![
            vec![1.0],
            vec![-1.0],
            vec![1.0],
            vec![0.0],
            vec![-0.0],
        ])
        .unwrap();
        assert_eq!(s.slopes(), &[vec![1.0], vec![-1.0], vec![0.0], vec![-0.0]]);
        assert!(SlopeSet::explicit(vec![]).is_err());
        assert!(SlopeSet::explicit(vec![vec![1.0], vec![1.0, 2.0]]).is_err());
    }

    #[test]
    fn gradients_recover_affine_function() {
        let xs: Vec<[f64; 1]> = (0..9).map(|i| [i as f64 * 0.5 - 2.0]).collect();
        let fs: Vec<f64> = xs.iter().map(|x| 2.0 * x[0] + 1.0).collect();
        let data = Dataset::new(&xs, &fs).unwrap();
        for k in [2, 3, 5] {
            let s = gradient_slopes(&data, k).unwrap();
            assert_eq!(s.len(), 1, "k = {k}");
            assert!((s.get(0)[0] - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn gradient_of_square_vanishes_at_symmetric_centre() {
        let xs: Vec<[f64; 1]> = (-5..=5).map(|i| [i as f64 * 0.1]).collect();
        let fs: Vec<f64> = xs.iter().map(|x| x[0] * x[0]).collect();
        let data = Dataset::new(&xs, &fs).unwrap();
        let s = gradient_slopes(&data, 3).unwrap();
        assert!(s.slopes().iter().any(|g| g[0].abs() < 1e-12));
        assert_eq!(s.origin(), SlopeOrigin::Gradients);
    }

    #[test]
    fn rank_deficient_neighbourhoods_are_skipped() {
        // Collinear points in 2-D: every neighbourhood is rank-deficient.
        let xs: Vec<[f64; 2]> = (0..6).map(|i| [i as f64, i as f64]).collect();
        let data = Dataset::new(&xs, &[0.0; 6]).unwrap();
        assert!(gradient_slopes(&data, 5).is_err());
        assert!(gradient_slopes(&data, 2).is_err());
    }
}
