//! Max-plus / min-plus products and residuation.
//!
//! The principal solution `x̂ = (−A)ᵀ ⊞′ b` is the greatest vector with
//! `A ⊞ x̂ ≤ b`; the sparse solver and the regression layer are built on it.

use crate::error::{Error, Result};
use crate::ext::{max_plus_add, min_plus_add, ExtReal};
use crate::matrix::{MpMatrix, MpVector};

/// `[A ⊞ x]_i = max_k (a_ik + x_k)`.
pub fn maxplus_product(a: &MpMatrix, x: &MpVector) -> Result<MpVector> {
    check_product_shape(a, x)?;
    Ok((0..a.rows())
        .map(|i| {
            let v = a
                .row(i)
                .iter()
                .zip(x.iter())
                .map(|(aik, xk)| max_plus_add(aik.value(), xk.value()))
                .fold(f64::NEG_INFINITY, f64::max);
            ExtReal::from_f64(v)
        })
        .collect())
}

/// `[A ⊞′ x]_i = min_k (a_ik + x_k)`, with `+∞` absorbing.
pub fn minplus_product(a: &MpMatrix, x: &MpVector) -> Result<MpVector> {
    check_product_shape(a, x)?;
    Ok((0..a.rows())
        .map(|i| {
            let v = a
                .row(i)
                .iter()
                .zip(x.iter())
                .map(|(aik, xk)| min_plus_add(aik.value(), xk.value()))
                .fold(f64::INFINITY, f64::min);
            ExtReal::from_f64(v)
        })
        .collect())
}

fn check_product_shape(a: &MpMatrix, x: &MpVector) -> Result<()> {
    if a.cols() != x.len() {
        return Err(Error::shape(format!(
            "matrix has {} columns but vector has {} entries",
            a.cols(),
            x.len()
        )));
    }
    Ok(())
}

/// Principal solution together with the coordinates that had to be clamped.
#[derive(Debug, Clone, PartialEq)]
pub struct Residuation {
    pub xhat: MpVector,
    /// Columns of `A` that are entirely `−∞`. Pure residuation gives `+∞`
    /// there; such coordinates are set to `−∞` instead.
    pub clamped: Vec<usize>,
}

/// Computes `x̂ = (−A)ᵀ ⊞′ b`.
///
/// `b` must be finite. Every finite `x̂_j` is additionally lowered by the
/// smallest number of ulps needed for `a_ij + x̂_j ≤ b_i` to hold in floating
/// point, so that `A ⊞ x̂ ≤ b` is exact rather than exact-up-to-rounding.
pub fn residuate(a: &MpMatrix, b: &MpVector) -> Result<Residuation> {
    if a.rows() != b.len() {
        return Err(Error::shape(format!(
            "matrix has {} rows but target has {} entries",
            a.rows(),
            b.len()
        )));
    }
    validate_target(b)?;

    let raw = minplus_product(&a.negated().transpose(), b)?;
    let mut clamped = Vec::new();
    let xhat = raw
        .iter()
        .enumerate()
        .map(|(j, v)| {
            if v.is_top() {
                clamped.push(j);
                return ExtReal::BOTTOM;
            }
            if v.is_bottom() {
                return v;
            }
            let mut x = v.value();
            while (0..a.rows()).any(|i| max_plus_add(a.get(i, j).value(), x) > b[i].value()) {
                x = x.next_down();
            }
            ExtReal::from_f64(x)
        })
        .collect();
    Ok(Residuation { xhat, clamped })
}

/// The principal solution `x̂` alone; see [`residuate`].
pub fn principal_solution(a: &MpMatrix, b: &MpVector) -> Result<MpVector> {
    residuate(a, b).map(|r| r.xhat)
}

pub(crate) fn validate_target(b: &MpVector) -> Result<()> {
    match b.iter().enumerate().find(|(_, v)| !v.is_finite()) {
        Some((index, v)) => Err(Error::NonFiniteTarget {
            index,
            value: v.value(),
        }),
        None => Ok(()),
    }
}

/// `x̂|_T`: `x̂` inside `T`, `−∞` elsewhere.
pub fn project_on_support(xhat: &MpVector, support: &[usize]) -> Result<MpVector> {
    let mut out = MpVector::bottoms(xhat.len()).into_inner();
    for &j in support {
        if j >= xhat.len() {
            return Err(Error::shape(format!(
                "support index {j} out of range for length {}",
                xhat.len()
            )));
        }
        out[j] = xhat[j];
    }
    Ok(MpVector::new(out))
}
