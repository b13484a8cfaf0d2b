//! Overflow-safe ℓp arithmetic for non-negative error vectors.
//!
//! With `p = 150` and errors of a few units, `Σ e_i^p` is already around
//! `1e100`; scaling by the largest component keeps every term in `[0, 1]`.

/// `e^p` for `e ≥ 0`, using `powi` when `p` is a small integer.
#[inline]
pub(crate) fn pow(e: f64, p: f64, int_p: Option<i32>) -> f64 {
    match int_p {
        Some(k) => e.powi(k),
        None => e.powf(p),
    }
}

pub(crate) fn integral_exponent(p: f64) -> Option<i32> {
    (p.fract() == 0.0 && (1.0..=1024.0).contains(&p)).then_some(p as i32)
}

/// `‖e‖_p = M·(Σ (e_i/M)^p)^{1/p}` with `M = max_i |e_i|`.
///
/// Accepts any `p > 0` (for `p < 1` this is the quasi-norm). An infinite
/// component makes the result `+∞`.
pub fn lp_norm(e: &[f64], p: f64) -> f64 {
    let m = e.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
    if m == 0.0 || m.is_infinite() {
        return m;
    }
    if p == 1.0 {
        return e.iter().map(|v| v.abs()).sum();
    }
    let int_p = integral_exponent(p);
    let s: f64 = e.iter().map(|v| pow(v.abs() / m, p, int_p)).sum();
    m * s.powf(1.0 / p)
}

pub fn linf_norm(e: &[f64]) -> f64 {
    e.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
}

/// `ln Σ e_i^p` for `e ≥ 0`; `−∞` for the zero vector.
pub fn ln_power_sum(e: &[f64], p: f64) -> f64 {
    let m = linf_norm(e);
    if m == 0.0 {
        return f64::NEG_INFINITY;
    }
    if m.is_infinite() {
        return f64::INFINITY;
    }
    let int_p = integral_exponent(p);
    let s: f64 = e.iter().map(|v| pow(v.abs() / m, p, int_p)).sum();
    p * m.ln() + s.ln()
}

/// `ln(e^a − e^b)` for `a ≥ b`. Returns `−∞` when the difference vanishes
/// in floating point.
pub fn ln_sub_exp(a: f64, b: f64) -> f64 {
    if b == f64::NEG_INFINITY {
        return a;
    }
    if a == f64::INFINITY {
        return f64::INFINITY;
    }
    if b >= a {
        return f64::NEG_INFINITY;
    }
    a + (-(b - a).exp()).ln_1p()
}

/// `ln(e^a + e^b)`.
pub fn ln_add_exp(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if hi.is_infinite() {
        return hi;
    }
    hi + (lo - hi).exp().ln_1p()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn euclidean() {
        assert_relative_eq!(lp_norm(&[3.0, 4.0, 0.0], 2.0), 5.0, max_relative = 1e-15);
        assert_eq!(lp_norm(&[1.0, 1.0, 0.0], 1.0), 2.0);
        assert_eq!(lp_norm(&[0.0, 0.0], 7.0), 0.0);
    }

    #[test]
    fn high_order_does_not_overflow() {
        let e = vec![500.0; 1000];
        // 1000^(1/150) * 500
        let expect = 500.0 * 1000f64.powf(1.0 / 150.0);
        assert_relative_eq!(lp_norm(&e, 150.0), expect, max_relative = 1e-12);
        assert!(e.iter().map(|v| v.powf(150.0)).sum::<f64>().is_infinite());
        assert_relative_eq!(
            ln_power_sum(&e, 150.0),
            150.0 * 500f64.ln() + 1000f64.ln(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn infinite_component() {
        assert!(lp_norm(&[1.0, f64::INFINITY], 2.0).is_infinite());
        assert!(ln_power_sum(&[f64::INFINITY], 2.0).is_infinite());
    }

    #[test]
    fn fractional_order() {
        assert_relative_eq!(lp_norm(&[1.0, 1.0], 0.5), 4.0, max_relative = 1e-12);
    }

    #[test]
    fn log_differences() {
        assert_relative_eq!(
            ln_sub_exp(10f64.ln(), 4f64.ln()),
            6f64.ln(),
            max_relative = 1e-14
        );
        assert_eq!(ln_sub_exp(1.0, 1.0), f64::NEG_INFINITY);
        assert_eq!(ln_sub_exp(2.0, f64::NEG_INFINITY), 2.0);
        assert_relative_eq!(
            ln_add_exp(2f64.ln(), 3f64.ln()),
            5f64.ln(),
            max_relative = 1e-14
        );
        assert_eq!(
            ln_add_exp(f64::NEG_INFINITY, f64::NEG_INFINITY),
            f64::NEG_INFINITY
        );
    }
}
