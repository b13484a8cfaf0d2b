//! Empirical checks of the structure of the error set functions.
//!
//! For finite `p`, `E_p` is decreasing and supermodular; `E_∞` is decreasing
//! but can have submodularity ratio 0. The probe samples set triples and
//! reports violations and the smallest observed ratio.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{MpMatrix, MpVector};
use crate::norm::{linf_norm, ln_add_exp, ln_power_sum};

use super::error_fn::ErrorModel;
use super::problem::Norm;

/// Relative slack for comparisons between sums of `E_p` values.
const LOG_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeReport {
    pub samples: usize,
    pub supermodular_violations: usize,
    pub monotone_violations: usize,
    /// Smallest submodularity ratio of `−E` over sampled `(L, S)` pairs with a
    /// non-zero denominator; `None` when no sample had one.
    pub min_ratio: Option<f64>,
}

/// Set-function value in a domain where comparisons are safe: `ln E_p` for
/// finite `p`, and `E_∞` itself for the max norm.
fn log_value(model: &ErrorModel, norm: Norm, support: &[usize]) -> Result<f64> {
    let e = model.error_vector(support)?;
    Ok(match norm {
        Norm::Lp(p) => ln_power_sum(&e, p),
        Norm::Inf => (linf_norm(&e) / 2.0).ln(),
    })
}

/// Submodularity ratio of `f = −E` at `(L, S)`:
/// `Σ_{s∈S} [E(L) − E(L∪{s})] / [E(L) − E(L∪S)]`.
///
/// `E` is `E_p` (p-th power domain) for finite `p`, `E_∞` for the max norm.
/// Returns `None` when the denominator is zero.
pub fn submodularity_ratio(
    model: &ErrorModel,
    norm: Norm,
    l: &[usize],
    s: &[usize],
) -> Result<Option<f64>> {
    if s.iter().any(|x| l.contains(x)) {
        return Err(Error::invalid("L and S must be disjoint"));
    }
    let base = log_value(model, norm, l)?;
    if base == f64::NEG_INFINITY {
        return Ok(None);
    }
    // Values are divided by E(L) so that p = 150 stays in range.
    let rel =
        |support: &[usize]| -> Result<f64> { Ok((log_value(model, norm, support)? - base).exp()) };
    let union: Vec<usize> = l.iter().chain(s).copied().collect();
    let den = 1.0 - rel(&union)?;
    if den <= 0.0 {
        return Ok(None);
    }
    let mut num = 0.0;
    for &x in s {
        let mut t = l.to_vec();
        t.push(x);
        num += 1.0 - rel(&t)?;
    }
    Ok(Some(num / den))
}

/// Samples `trials` triples `C ⊆ B ⊆ J`, `k ∉ B` and checks
/// `E(C∪{k}) − E(C) ≤ E(B∪{k}) − E(B)` and `E(B) ≤ E(C)`.
///
/// Comparisons are made on `ln E_p` with a relative slack of 1e-9. For the
/// max norm the inequalities are not expected to hold; the report's
/// `min_ratio` is the interesting output there.
pub fn submodularity_probe(
    a: &MpMatrix,
    b: &MpVector,
    norm: Norm,
    trials: usize,
    seed: u64,
) -> Result<ProbeReport> {
    let model = ErrorModel::new(a, b)?;
    let universe: Vec<usize> = model.live_columns().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ProbeReport {
        samples: 0,
        supermodular_violations: 0,
        monotone_violations: 0,
        min_ratio: None,
    };
    if universe.is_empty() {
        return Ok(report);
    }
    for _ in 0..trials {
        let mut shuffled = universe.clone();
        shuffled.shuffle(&mut rng);
        let k = shuffled[0];
        let rest = &shuffled[1..];
        let b_size = rng.gen_range(0..=rest.len());
        let big: Vec<usize> = rest[..b_size].to_vec();
        let c_size = rng.gen_range(0..=b_size);
        let small: Vec<usize> = big[..c_size].to_vec();

        let with = |s: &[usize]| -> Vec<usize> { s.iter().copied().chain([k]).collect() };
        let e_c = log_value(&model, norm, &small)?;
        let e_ck = log_value(&model, norm, &with(&small))?;
        let e_b = log_value(&model, norm, &big)?;
        let e_bk = log_value(&model, norm, &with(&big))?;

        let (lhs, rhs) = match norm {
            Norm::Lp(_) => (ln_add_exp(e_ck, e_b), ln_add_exp(e_bk, e_c)),
            Norm::Inf => {
                let v = |x: f64| x.exp();
                (v(e_ck) + v(e_b), v(e_bk) + v(e_c))
            }
        };
        if exceeds(lhs, rhs) {
            report.supermodular_violations += 1;
        }
        if exceeds(e_b, e_c) || exceeds(e_bk, e_b) {
            report.monotone_violations += 1;
        }

        let l: Vec<usize> = small.clone();
        let s: Vec<usize> = big[c_size..].iter().copied().chain([k]).collect();
        if let Some(r) = submodularity_ratio(&model, norm, &l, &s)? {
            report.min_ratio = Some(report.min_ratio.map_or(r, |m: f64| m.min(r)));
        }
        report.samples += 1;
    }
    Ok(report)
}

fn exceeds(lhs: f64, rhs: f64) -> bool {
    lhs > rhs && lhs - rhs > LOG_TOLERANCE * rhs.abs().max(1.0)
}
