use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::RootedForest;
use crate::poly::labeling::count_descents;
use crate::stats::moments::DescentPmf;
use crate::stats::normal::{total_variation, LatticeDistribution};

/// Recorded in reports so runs can be reproduced.
pub const GENERATOR: &str = "ChaCha20Rng::seed_from_u64 (rand_chacha 0.3) + Fisher-Yates SliceRandom::shuffle (rand 0.8)";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleRun {
    pub seed: u64,
    pub trials: u64,
    /// `histogram[k]` = number of trials with `k` descents, `k = 0..=edges`.
    pub histogram: Vec<u64>,
}

impl SampleRun {
    pub fn empirical_pmf(&self) -> Vec<f64> {
        self.histogram.iter().map(|&h| h as f64 / self.trials as f64).collect()
    }

    pub fn mean(&self) -> f64 {
        self.histogram.iter().enumerate().map(|(k, &h)| k as f64 * h as f64).sum::<f64>() / self.trials as f64
    }

    pub fn tv_to(&self, exact: &DescentPmf) -> f64 {
        total_variation(&self.empirical_pmf(), &exact.to_f64())
    }
}

impl LatticeDistribution for SampleRun {
    fn cdf(&self) -> Vec<f64> {
        self.empirical_pmf()[..].cdf()
    }
}

impl LatticeDistribution for DescentPmf {
    fn cdf(&self) -> Vec<f64> {
        self.cdf_f64()
    }
}

/// Descent counts of `trials` uniform random labelings. The same
/// `(forest, trials, seed)` always yields the same histogram.
pub fn sample_descents(f: &RootedForest, trials: u64, seed: u64) -> Result<SampleRun> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut labels: Vec<u32> = (1..=f.size() as u32).collect();
    let mut histogram = vec![0u64; f.edge_count() + 1];
    let parents = f.parent_slots();
    for _ in 0..trials {
        labels.shuffle(&mut rng);
        histogram[count_descents(parents, &labels)] += 1;
    }
    Ok(SampleRun { seed, trials, histogram })
}
