use crate::error::{Error, Result};

/// Samples `(x_i, f_i)` with `x_i ∈ ℝⁿ`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    dim: usize,
    inputs: Vec<f64>,
    targets: Vec<f64>,
}

impl Dataset {
    /// Builds a dataset from per-point input vectors and target values.
    pub fn new<R: AsRef<[f64]>>(inputs: &[R], targets: &[f64]) -> Result<Self> {
        let dim = inputs.first().map_or(0, |x| x.as_ref().len());
        let mut flat = Vec::with_capacity(inputs.len() * dim);
        for (i, x) in inputs.iter().enumerate() {
            let x = x.as_ref();
            if x.len() != dim {
                return Err(Error::shape(format!(
                    "point {i} has dimension {}, expected {dim}",
                    x.len()
                )));
            }
            flat.extend_from_slice(x);
        }
        Self::from_flat(dim, flat, targets.to_vec())
    }

    /// Builds a dataset from row-major inputs of width `dim`.
    pub fn from_flat(dim: usize, inputs: Vec<f64>, targets: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::shape("dataset dimension must be at least 1"));
        }
        if targets.is_empty() {
            return Err(Error::shape("dataset needs at least one point"));
        }
        if inputs.len() != dim * targets.len() {
            return Err(Error::shape(format!(
                "{} input values do not form {} points of dimension {dim}",
                inputs.len(),
                targets.len()
            )));
        }
        if let Some(i) = inputs.iter().position(|v| !v.is_finite()) {
            return Err(Error::invalid(format!(
                "input value of point {} is not finite",
                i / dim
            )));
        }
        if let Some((index, &value)) = targets.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFiniteTarget { index, value });
        }
        Ok(Dataset {
            dim,
            inputs,
            targets,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.inputs[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.inputs.chunks_exact(self.dim)
    }

    pub fn target(&self, i: usize) -> f64 {
        self.targets[i]
    }

    pub fn targets(&self) -> &[f64] {
        &self.targets
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accessors() {
        let d = Dataset::new(&[[0.0, 1.0], [2.0, 3.0]], &[5.0, 6.0]).unwrap();
        assert_eq!((d.dim(), d.len()), (2, 2));
        assert_eq!(d.point(1), &[2.0, 3.0]);
        assert_eq!(d.points().count(), 2);
        assert_eq!(d.targets(), &[5.0, 6.0]);
    }

    #[test]
    fn validation() {
        assert!(Dataset::new(&[[0.0]], &[]).is_err());
        assert!(Dataset::new(&[vec![0.0], vec![0.0, 1.0]], &[1.0, 2.0]).is_err());
        assert!(Dataset::new(&[[f64::NAN]], &[1.0]).is_err());
        assert!(matches!(
            Dataset::new(&[[0.0]], &[f64::INFINITY]),
            Err(Error::NonFiniteTarget { index: 0, .. })
        ));
        assert!(Dataset::from_flat(0, vec![], vec![1.0]).is_err());
    }
}
