//! Distances between lattice distributions on `0..=m` and a normal law.

use std::f64::consts::SQRT_2;

use crate::error::{Error, Result};

/// `Φ(x) = erfc(-x/√2)/2`, using the fdlibm `erfc` port in `libm`
/// (relative error well below 1e-7 across the real line).
pub fn standard_normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / SQRT_2)
}

/// A distribution on the atoms `0, 1, ..., m`.
pub trait LatticeDistribution {
    /// `P(X <= k)` for `k = 0..=m`.
    fn cdf(&self) -> Vec<f64>;
}

impl LatticeDistribution for [f64] {
    fn cdf(&self) -> Vec<f64> {
        let mut acc = 0.0;
        self.iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect()
    }
}

fn check_sd(sd: f64) -> Result<()> {
    if sd > 0.0 && sd.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("standard deviation must be positive, got {sd}")))
    }
}

/// `sup_x |F(x) - Φ((x - mean)/sd)|`. The sup over a step function is
/// attained at an atom, from the left or at the atom itself, so both
/// `F(k-)` and `F(k)` are compared against `Φ` at each `k`.
pub fn ks_distance_to_normal<D: LatticeDistribution + ?Sized>(dist: &D, mean: f64, sd: f64) -> Result<f64> {
    ks_from_cdf(&dist.cdf(), mean, sd)
}

pub fn ks_from_cdf(cdf: &[f64], mean: f64, sd: f64) -> Result<f64> {
    check_sd(sd)?;
    let mut worst: f64 = 0.0;
    let mut left = 0.0;
    for (k, &at) in cdf.iter().enumerate() {
        let phi = standard_normal_cdf((k as f64 - mean) / sd);
        worst = worst.max((left - phi).abs()).max((at - phi).abs());
        left = at;
    }
    Ok(worst.clamp(0.0, 1.0))
}

/// Masses of the normal law binned to the atoms: atom `k` gets
/// `(k - 1/2, k + 1/2]`, the end atoms absorb the tails.
pub fn discretized_normal(atoms: usize, mean: f64, sd: f64) -> Result<Vec<f64>> {
    check_sd(sd)?;
    let edge = |x: f64| standard_normal_cdf((x - mean) / sd);
    Ok((0..atoms)
        .map(|k| {
            let lo = if k == 0 { 0.0 } else { edge(k as f64 - 0.5) };
            let hi = if k + 1 == atoms { 1.0 } else { edge(k as f64 + 0.5) };
            hi - lo
        })
        .collect())
}

/// Total variation between lattice masses and the binned normal.
pub fn tv_to_discretized_normal(masses: &[f64], mean: f64, sd: f64) -> Result<f64> {
    let reference = discretized_normal(masses.len(), mean, sd)?;
    Ok(total_variation(masses, &reference))
}

pub fn total_variation(p: &[f64], q: &[f64]) -> f64 {
    let len = p.len().max(q.len());
    let at = |xs: &[f64], k: usize| xs.get(k).copied().unwrap_or(0.0);
    0.5 * (0..len).map(|k| (at(p, k) - at(q, k)).abs()).sum::<f64>()
}
