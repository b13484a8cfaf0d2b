//! Dense max-plus matrices and vectors.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::ext::ExtReal;

/// Dense row-major `m × n` matrix over the extended reals.
#[derive(Debug, Clone, PartialEq)]
pub struct MpMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExtReal>,
}

impl MpMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<ExtReal>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::shape(format!(
                "matrix must be at least 1x1, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(MpMatrix { rows, cols, data })
    }

    /// Builds from plain doubles; `±∞` map to bottom/top, NaN is rejected.
    pub fn from_f64(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        let data = data
            .iter()
            .map(|&v| ExtReal::try_from(v))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows, cols, data)
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(m * n);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != n {
                return Err(Error::shape(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Self::from_f64(m, n, &data)
    }

    /// Max-plus identity: 0 on the diagonal, `−∞` elsewhere.
    pub fn max_plus_identity(n: usize) -> Result<Self> {
        Self::identity_with(n, ExtReal::BOTTOM)
    }

    /// Min-plus identity: 0 on the diagonal, `+∞` elsewhere.
    pub fn min_plus_identity(n: usize) -> Result<Self> {
        Self::identity_with(n, ExtReal::TOP)
    }

    fn identity_with(n: usize, off: ExtReal) -> Result<Self> {
        let mut data = vec![off; n * n];
        for i in 0..n {
            data[i * n + i] = ExtReal::ZERO;
        }
        Self::new(n, n, data)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> ExtReal {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[ExtReal] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = ExtReal> + '_ {
        (0..self.rows).map(move |i| self.get(i, j))
    }

    pub fn entries(&self) -> &[ExtReal] {
        &self.data
    }

    pub fn transpose(&self) -> MpMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            data.extend(self.column(j));
        }
        MpMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Elementwise negation; swaps `−∞` and `+∞`.
    pub fn negated(&self) -> MpMatrix {
        MpMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| -v).collect(),
        }
    }
}

impl Index<(usize, usize)> for MpMatrix {
    type Output = ExtReal;
    fn index(&self, (i, j): (usize, usize)) -> &ExtReal {
        &self.data[i * self.cols + j]
    }
}

/// Vector over the extended reals. Its support is derived, never stored.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MpVector(Vec<ExtReal>);

impl MpVector {
    pub fn new(entries: Vec<ExtReal>) -> Self {
        MpVector(entries)
    }

    pub fn from_f64(values: &[f64]) -> Result<Self> {
        values
            .iter()
            .map(|&v| ExtReal::try_from(v))
            .collect::<Result<Vec<_>>>()
            .map(MpVector)
    }

    pub fn bottoms(n: usize) -> Self {
        MpVector(vec![ExtReal::BOTTOM; n])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[ExtReal] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = ExtReal> + '_ {
        self.0.iter().copied()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|v| v.value()).collect()
    }

    pub fn into_inner(self) -> Vec<ExtReal> {
        self.0
    }

    /// Indices with a value other than `−∞`, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_bottom())
            .map(|(i, _)| i)
            .collect()
    }

    /// Elementwise `≤`; false on length mismatch.
    pub fn le(&self, other: &MpVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Index<usize> for MpVector {
    type Output = ExtReal;
    fn index(&self, i: usize) -> &ExtReal {
        &self.0[i]
    }
}

impl FromIterator<ExtReal> for MpVector {
    fn from_iter<I: IntoIterator<Item = ExtReal>>(iter: I) -> Self {
        MpVector(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_wrong_length() {
        assert!(matches!(
            MpMatrix::from_f64(0, 1, &[]),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            MpMatrix::from_f64(2, 2, &[1.0; 3]),
            Err(Error::Shape(_))
        ));
        assert!(MpMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0]]).is_err());
    }

    #[test]
    fn transpose_and_negate() {
        let a = MpMatrix::from_rows(&[[1.0, f64::NEG_INFINITY, 3.0]]).unwrap();
        let t = a.transpose();
        assert_eq!((t.rows(), t.cols()), (3, 1));
        assert_eq!(t[(2, 0)].value(), 3.0);
        assert!(a.negated()[(0, 1)].is_top());
    }

    #[test]
    fn support_is_derived() {
        let v = MpVector::from_f64(&[f64::NEG_INFINITY, 0.0, f64::INFINITY, -1.0]).unwrap();
        assert_eq!(v.support(), vec![1, 2, 3]);
        assert!(MpVector::bottoms(3).support().is_empty());
    }
}
