use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::RootedForest;
use crate::poly::{factorial, DescentPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MomentSource {
    Polynomial,
    ClosedForm,
}

impl fmt::Display for MomentSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MomentSource::Polynomial => "polynomial",
            MomentSource::ClosedForm => "closed-form",
        })
    }
}

/// Exact mean and variance of the number of descents of a uniform labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSummary {
    pub n: usize,
    pub mean: BigRational,
    pub variance: BigRational,
    pub source: MomentSource,
}

impl MomentSummary {
    /// Mean and variance agree, whatever their sources.
    pub fn same_moments(&self, other: &MomentSummary) -> bool {
        self.mean == other.mean && self.variance == other.variance
    }
}

fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `E = m/2` and `Var = (2 Σ_roots d_r + Σ_v d_v^2) / 12` with `m` the edge
/// count. For a tree this is `(n-1)/2` and `(2 d_r + Σ d_v^2)/12`; edge
/// pairs in different components are independent, so the forest case adds
/// one root term per component.
pub fn closed_form_moments(f: &RootedForest) -> MomentSummary {
    let root_sum: u64 = f.roots().iter().map(|&r| f.down_degree(r).expect("root in forest") as u64).sum();
    let square_sum: u64 = f.down_degrees().map(|d| (d * d) as u64).sum();
    MomentSummary {
        n: f.size(),
        mean: ratio(f.edge_count() as u64, 2u64),
        variance: ratio(2 * root_sum + square_sum, 12u64),
        source: MomentSource::ClosedForm,
    }
}

/// Mean `Σ k a_k / n!` and variance `Σ k^2 a_k / n! - mean^2`.
pub fn moments_from_poly(p: &DescentPolynomial, n: usize) -> Result<MomentSummary> {
    p.check_normalized(n)?;
    let total = BigInt::from(factorial(n));
    let mut first = BigUint::zero();
    let mut second = BigUint::zero();
    for (k, a) in p.coeffs().iter().enumerate() {
        let k = k as u64;
        first += a * k;
        second += a * (k * k);
    }
    let mean = BigRational::new(first.into(), total.clone());
    let variance = BigRational::new(second.into(), total) - &mean * &mean;
    Ok(MomentSummary { n, mean, variance, source: MomentSource::Polynomial })
}

/// `p_k = a_k / n!`, kept exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentPmf {
    pub n: usize,
    pub probs: Vec<BigRational>,
}

impl DescentPmf {
    pub fn to_f64(&self) -> Vec<f64> {
        self.probs.iter().map(rational_to_f64).collect()
    }

    /// `P(X <= k)` for each atom, accumulated exactly before rounding.
    pub fn cdf_f64(&self) -> Vec<f64> {
        let mut acc = BigRational::zero();
        self.probs
            .iter()
            .map(|p| {
                acc += p;
                rational_to_f64(&acc)
            })
            .collect()
    }
}

pub fn exact_pmf(p: &DescentPolynomial, n: usize) -> Result<DescentPmf> {
    p.check_normalized(n)?;
    let total = BigInt::from(factorial(n));
    let probs = p.coeffs().iter().map(|a| BigRational::new(BigInt::from(a.clone()), total.clone())).collect();
    Ok(DescentPmf { n, probs })
}

/// `(n + D^2 - D + 1) / 12`, the smallest variance a tree on `n` vertices
/// with maximum down-degree `D` can have.
pub fn variance_lower_bound(n: usize, max_down_degree: usize) -> Result<BigRational> {
    let d = max_down_degree;
    if n < 2 || d < 1 || d > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "variance bound needs n >= 2 and 1 <= D <= n-1, got n = {n}, D = {d}"
        )));
    }
    let (n, d) = (n as u64, d as u64);
    Ok(ratio(n + d * d - d + 1, 12u64))
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig() -> RootedForest {
        RootedForest::parse_parent_array("5 5 4 6 6 0").unwrap()
    }

    fn fig_poly() -> DescentPolynomial {
        DescentPolynomial::from_u64s(&[20, 90, 250, 250, 90, 20])
    }

    #[test]
    fn closed_form_figure_one() {
        let m = closed_form_moments(&fig());
        assert_eq!(m.mean, ratio(5, 2));
        assert_eq!(m.variance, ratio(13, 12));
        let single = closed_form_moments(&RootedForest::parse_parent_array("0").unwrap());
        assert!(single.mean.is_zero() && single.variance.is_zero());
    }

    #[test]
    fn closed_form_path() {
        for n in 2..20u64 {
            let parents: Vec<Option<usize>> = (1..=n as usize).map(|i| (i > 1).then(|| i - 1)).collect();
            let m = closed_form_moments(&RootedForest::from_parents(&parents).unwrap());
            assert_eq!(m.variance, ratio(n + 1, 12));
        }
    }

    #[test]
    fn from_polynomial() {
        let m = moments_from_poly(&fig_poly(), 6).unwrap();
        assert_eq!(m.mean, ratio(5, 2));
        assert_eq!(m.variance, ratio(13, 12));
        assert!(m.same_moments(&closed_form_moments(&fig())));

        let point = moments_from_poly(&DescentPolynomial::one(), 1).unwrap();
        assert!(point.mean.is_zero() && point.variance.is_zero());

        let star = moments_from_poly(&DescentPolynomial::from_u64s(&[6, 6, 6, 6]), 4).unwrap();
        assert_eq!(star.mean, ratio(3, 2));
        assert_eq!(star.variance, ratio(5, 4));
        let star_tree = RootedForest::parse_parent_array("0 1 1 1").unwrap();
        assert_eq!(closed_form_moments(&star_tree).variance, ratio(5, 4));

        assert!(matches!(moments_from_poly(&fig_poly(), 5), Err(Error::Normalization { .. })));
    }

    #[test]
    fn pmfs() {
        let edge = exact_pmf(&DescentPolynomial::from_u64s(&[1, 1]), 2).unwrap();
        assert_eq!(edge.probs, vec![ratio(1, 2), ratio(1, 2)]);
        let f = exact_pmf(&fig_poly(), 6).unwrap();
        assert_eq!(f.probs[2], ratio(250, 720));
        assert_eq!(f.cdf_f64().last().copied(), Some(1.0));
        let star = exact_pmf(&DescentPolynomial::from_u64s(&[6, 6, 6, 6]), 4).unwrap();
        assert!(star.probs.iter().all(|p| *p == ratio(1, 4)));
        assert!(exact_pmf(&fig_poly(), 7).is_err());
    }

    #[test]
    fn lower_bound() {
        assert_eq!(variance_lower_bound(6, 2).unwrap(), ratio(3, 4));
        assert!(variance_lower_bound(6, 2).unwrap() <= closed_form_moments(&fig()).variance);
        assert_eq!(variance_lower_bound(2, 1).unwrap(), ratio(1, 4));
        assert!(variance_lower_bound(1, 0).is_err());
        assert!(variance_lower_bound(5, 0).is_err());
        assert!(variance_lower_bound(5, 5).is_err());
    }
}
