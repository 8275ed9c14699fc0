use crate::error::{Error, Result};

/// `N Δ^{m-1} (A/σ)^m` for `N` variables bounded by `A` whose dependency
/// graph has maximum degree `Δ` and whose sum has standard deviation `σ`.
/// Normality follows when this tends to zero for some fixed `m`.
pub fn janson_quantity(count: usize, max_degree: usize, bound: f64, sigma: f64, m: u32) -> Result<f64> {
    if sigma.is_nan() || sigma <= 0.0 {
        return Err(Error::InvalidParameter(format!("sigma must be positive, got {sigma}")));
    }
    if m < 1 {
        return Err(Error::InvalidParameter("Janson exponent m must be at least 1".into()));
    }
    let m = m as i32;
    Ok(count as f64 * (max_degree as f64).powi(m - 1) * (bound / sigma).powi(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution() {
        assert_eq!(janson_quantity(5, 4, 1.0, 1.0, 3).unwrap(), 80.0);
    }

    #[test]
    fn figure_one_values() {
        let sigma = (13.0f64 / 12.0).sqrt();
        let q = janson_quantity(5, 3, 1.0, sigma, 3).unwrap();
        let expected = 45.0 * (12.0f64 / 13.0).powf(1.5);
        assert!((q - expected).abs() < 1e-12);
        assert!((q - 39.909).abs() < 1e-3);
    }

    #[test]
    fn vanishes_for_large_sigma() {
        let q = janson_quantity(1000, 4, 1.0, 1e6, 3).unwrap();
        assert!(q < 1e-8);
    }

    #[test]
    fn rejects_bad_sigma() {
        assert!(janson_quantity(5, 4, 1.0, 0.0, 3).is_err());
        assert!(janson_quantity(5, 4, 1.0, -1.0, 3).is_err());
        assert!(janson_quantity(5, 4, 1.0, f64::NAN, 3).is_err());
    }
}
