//! Distribution of the descent count of a uniformly random labeling: exact
//! moments and masses, Monte Carlo sampling, and normality diagnostics.

mod janson;
mod moments;
mod normal;
mod pairwise;
mod sample;
mod scan;

pub use janson::janson_quantity;
pub use moments::{
    closed_form_moments, exact_pmf, moments_from_poly, rational_to_f64, variance_lower_bound, DescentPmf,
    MomentSource, MomentSummary,
};
pub use normal::{
    discretized_normal, ks_distance_to_normal, ks_from_cdf, standard_normal_cdf, total_variation,
    tv_to_discretized_normal, LatticeDistribution,
};
pub use pairwise::{pairwise_edge_expectations, PairTally};
pub use sample::{sample_descents, SampleRun, GENERATOR};
pub use scan::{
    clt_scan, row_variance, HypothesisFlag, NormalityReport, ScanConfig, ScanMode, ScanRow, Verdicts,
    DEFAULT_EXACT_CAP, SCHEMA_VERSION,
};

/// Decimal text with 12 significant digits.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn round_sig(x: f64) -> f64 {
    fmt_sig(x).parse().unwrap_or(x)
}
