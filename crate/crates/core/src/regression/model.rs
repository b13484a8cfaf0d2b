use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ext::ExtReal;
use crate::solver::{Estimator, Norm};

use super::dataset::Dataset;
use super::dot;

/// Training errors of a model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelErrors {
    pub rms: f64,
    pub max_abs: f64,
}

/// How a model was obtained.
#[derive(Debug, Clone, PartialEq)]
pub struct FitMetadata {
    pub norm: Norm,
    pub theta: f64,
    pub estimator: Estimator,
    pub errors: Option<ModelErrors>,
    /// Seed of the data generator, when the data was synthetic.
    pub seed: Option<u64>,
}

/// Root-mean-square error, max absolute error and region count of a model on
/// a dataset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Score {
    pub rms: f64,
    pub max_abs: f64,
    pub support: usize,
}

/// A convex piecewise-linear function `p(x) = max_k (a_kᵀx + b_k)`.
///
/// Regions with `b_k = −∞` are pruned and never attain the max.
#[derive(Debug, Clone, PartialEq)]
pub struct PwlModel {
    slopes: Vec<Vec<f64>>,
    intercepts: Vec<ExtReal>,
    pub metadata: FitMetadata,
}

impl PwlModel {
    /// Checks shapes and that no intercept is `+∞`.
    pub fn new(
        slopes: Vec<Vec<f64>>,
        intercepts: Vec<ExtReal>,
        metadata: FitMetadata,
    ) -> Result<Self> {
        if slopes.len() != intercepts.len() {
            return Err(Error::shape(format!(
                "{} slopes but {} intercepts",
                slopes.len(),
                intercepts.len()
            )));
        }
        let dim = slopes
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::invalid("model has no regions"))?;
        if dim == 0 || slopes.iter().any(|s| s.len() != dim) {
            return Err(Error::shape(
                "slope vectors must share a non-zero dimension",
            ));
        }
        if slopes.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::invalid("slope entries must be finite"));
        }
        if intercepts.iter().any(|b| b.is_top()) {
            return Err(Error::invalid("intercepts cannot be +inf"));
        }
        Ok(PwlModel {
            slopes,
            intercepts,
            metadata,
        })
    }

    pub fn dim(&self) -> usize {
        self.slopes[0].len()
    }

    pub fn slopes(&self) -> &[Vec<f64>] {
        &self.slopes
    }

    pub fn intercepts(&self) -> &[ExtReal] {
        &self.intercepts
    }

    /// Number of regions with a finite intercept.
    pub fn support(&self) -> usize {
        self.intercepts.iter().filter(|b| b.is_finite()).count()
    }

    /// The model restricted to its finite regions.
    pub fn pruned(&self) -> PwlModel {
        let (slopes, intercepts) = self
            .slopes
            .iter()
            .zip(&self.intercepts)
            .filter(|(_, b)| b.is_finite())
            .map(|(a, b)| (a.clone(), *b))
            .unzip();
        PwlModel {
            slopes,
            intercepts,
            metadata: self.metadata.clone(),
        }
    }

    /// `max_k (a_kᵀx + b_k)` over the finite regions.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim() {
            return Err(Error::shape(format!(
                "point has dimension {}, model has {}",
                x.len(),
                self.dim()
            )));
        }
        self.slopes
            .iter()
            .zip(&self.intercepts)
            .filter(|(_, b)| b.is_finite())
            .map(|(a, b)| dot(a, x) + b.value())
            .reduce(f64::max)
            .ok_or_else(|| Error::invalid("model has no finite intercepts"))
    }

    /// Errors `f_i − p(x_i)` summarised over `data`.
    pub fn score(&self, data: &Dataset) -> Result<Score> {
        let residuals = self.residuals(data)?;
        let m = residuals.len() as f64;
        let rms = (residuals.iter().map(|r| r * r).sum::<f64>() / m).sqrt();
        let max_abs = residuals.iter().fold(0.0f64, |acc, r| acc.max(r.abs()));
        Ok(Score {
            rms,
            max_abs,
            support: self.support(),
        })
    }

    /// `f_i − p(x_i)` for every point of `data`.
    pub fn residuals(&self, data: &Dataset) -> Result<Vec<f64>> {
        data.points()
            .zip(data.targets())
            .map(|(x, f)| Ok(f - self.evaluate(x)?))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meta() -> FitMetadata {
        FitMetadata {
            norm: Norm::Lp(1.0),
            theta: 1.0,
            estimator: Estimator::Sgle,
            errors: None,
            seed: None,
        }
    }

    fn abs_model() -> PwlModel {
        let b = ExtReal::ZERO;
        PwlModel::new(
            vec![vec![1.0], vec![-1.0], vec![5.0]],
            vec![b, b, ExtReal::BOTTOM],
            meta(),
        )
        .unwrap()
    }

    #[test]
    fn evaluates_absolute_value() {
        let m = abs_model();
        assert_eq!(m.evaluate(&[3.0]).unwrap(), 3.0);
        assert_eq!(m.evaluate(&[-2.0]).unwrap(), 2.0);
        // the pruned slope 5 would dominate at x = 3
        assert_eq!(m.support(), 2);
        assert_eq!(m.pruned().slopes().len(), 2);
        assert!(m.evaluate(&[1.0, 2.0]).is_err());
    }

    #[test]
    fn no_finite_region_is_an_error() {
        let m = PwlModel::new(vec![vec![1.0]], vec![ExtReal::BOTTOM], meta()).unwrap();
        assert!(m.evaluate(&[0.0]).is_err());
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(PwlModel::new(vec![vec![1.0]], vec![], meta()).is_err());
        assert!(PwlModel::new(vec![], vec![], meta()).is_err());
        assert!(PwlModel::new(vec![vec![1.0]], vec![ExtReal::TOP], meta()).is_err());
    }

    #[test]
    fn constant_model_rms() {
        let m = PwlModel::new(vec![vec![0.0]], vec![ExtReal::from_f64(1.0)], meta()).unwrap();
        let data = Dataset::new(&[[0.0], [1.0], [2.0]], &[1.0, 3.0, 4.0]).unwrap();
        let s = m.score(&data).unwrap();
        assert!((s.rms - ((0.0 + 4.0 + 9.0) / 3.0f64).sqrt()).abs() < 1e-15);
        assert_eq!(s.max_abs, 3.0);
        assert_eq!(s.support, 1);
    }
}
