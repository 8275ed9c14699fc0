//! Exact descent polynomials and checks on their coefficient sequences.

mod brute;
mod checks;
mod deletion;
pub(crate) mod labeling;
mod polynomial;
mod rank_dp;

use std::fmt;
use std::str::FromStr;

pub use brute::{brute_force_poly, DEFAULT_BRUTE_CAP, MAX_BRUTE_SIZE};
pub use checks::{
    is_log_concave, is_symmetric, is_unimodal, log_concavity_violation, symmetric_unimodal_product_check,
    symmetry_violation, unimodality_violation,
};
pub use deletion::{poly_by_deletion, MemoStore};
pub use labeling::{complement_labeling, descent_count, descent_set, Labeling};
pub use polynomial::{factorial, forest_product, multinomial, DescentPolynomial, PolynomialJson};
pub use rank_dp::{poly_by_rank_dp, RankDescentTable};

use crate::error::Result;
use crate::forest::RootedForest;

/// Default engine: rank tables per component tree, combined with the
/// multinomial product. The empty forest gives the constant 1.
pub fn descent_poly(f: &RootedForest) -> Result<DescentPolynomial> {
    if f.is_empty() {
        return Ok(DescentPolynomial::one());
    }
    if f.is_tree() {
        return Ok(poly_by_rank_dp(f)?.marginal());
    }
    let parts = f
        .components()
        .into_iter()
        .map(|t| Ok((poly_by_rank_dp(&t)?.marginal(), t.size())))
        .collect::<Result<Vec<_>>>()?;
    forest_product(&parts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Brute,
    Deletion,
    RankDp,
    /// Rank tables plus the forest product.
    Auto,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::Deletion => "deletion",
            Algorithm::RankDp => "rank-dp",
            Algorithm::Auto => "auto",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "brute" => Ok(Algorithm::Brute),
            "deletion" => Ok(Algorithm::Deletion),
            "rank-dp" => Ok(Algorithm::RankDp),
            "auto" => Ok(Algorithm::Auto),
            other => Err(format!("unknown algorithm {other:?}")),
        }
    }
}

/// Runs the chosen engine. `RankDp` on a forest falls back to the product
/// over its components, same as `Auto`.
pub fn compute(f: &RootedForest, algorithm: Algorithm, brute_cap: usize) -> Result<DescentPolynomial> {
    match algorithm {
        Algorithm::Brute => brute_force_poly(f, brute_cap),
        Algorithm::Deletion => poly_by_deletion(f, &mut MemoStore::new()),
        Algorithm::RankDp | Algorithm::Auto => descent_poly(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispatcher() {
        let fig = RootedForest::parse_parent_array("5 5 4 6 6 0").unwrap();
        assert_eq!(descent_poly(&fig).unwrap(), DescentPolynomial::from_u64s(&[20, 90, 250, 250, 90, 20]));
        let path = RootedForest::parse_parent_array("0 1 2 3").unwrap();
        assert_eq!(descent_poly(&path).unwrap(), DescentPolynomial::from_u64s(&[1, 11, 11, 1]));
        assert_eq!(descent_poly(&RootedForest::empty()).unwrap(), DescentPolynomial::one());
        let two_edges = RootedForest::parse_parent_array("0 1 0 3").unwrap();
        assert_eq!(descent_poly(&two_edges).unwrap(), DescentPolynomial::from_u64s(&[6, 12, 6]));
    }

    #[test]
    fn all_engines_agree_on_a_forest() {
        let f = RootedForest::parse_parent_array("0 1 1 2 0 5 5 0").unwrap();
        let expected = compute(&f, Algorithm::Brute, 10).unwrap();
        for alg in [Algorithm::Deletion, Algorithm::RankDp, Algorithm::Auto] {
            assert_eq!(compute(&f, alg, 10).unwrap(), expected, "{alg}");
        }
        expected.check_normalized(8).unwrap();
    }
}
