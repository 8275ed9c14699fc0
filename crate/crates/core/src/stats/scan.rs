//! Normality scans over a tree family at increasing sizes.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{generate_family, Family, TreeFamilySpec};
use crate::graph::line_graph;
use crate::poly::poly_by_rank_dp;
use crate::stats::janson::janson_quantity;
use crate::stats::moments::{closed_form_moments, exact_pmf, rational_to_f64};
use crate::stats::normal::{ks_distance_to_normal, tv_to_discretized_normal};
use crate::stats::sample::{sample_descents, GENERATOR};
use crate::stats::round_sig;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_EXACT_CAP: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanMode {
    Exact,
    MonteCarlo,
}

impl FromStr for ScanMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "exact" => Ok(ScanMode::Exact),
            "monte-carlo" | "mc" => Ok(ScanMode::MonteCarlo),
            other => Err(format!("unknown scan mode {other:?}")),
        }
    }
}

impl fmt::Display for ScanMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScanMode::Exact => "exact",
            ScanMode::MonteCarlo => "monte-carlo",
        })
    }
}

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub sizes: Vec<usize>,
    pub mode: ScanMode,
    pub janson_m: u32,
    /// Constant `C` in the degree hypothesis `D_n <= C n^{1/2 - ε}`.
    pub c: f64,
    pub epsilon: f64,
    pub seed: u64,
    pub trials: u64,
    pub exact_cap: usize,
    /// Consecutive KS values count as decreasing when `next < prev + tol`.
    pub decrease_tolerance: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            sizes: Vec::new(),
            mode: ScanMode::Exact,
            janson_m: 3,
            c: 1.0,
            epsilon: 0.25,
            seed: 0,
            trials: 100_000,
            exact_cap: DEFAULT_EXACT_CAP,
            decrease_tolerance: 0.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HypothesisFlag {
    Satisfied,
    Violated,
}

impl fmt::Display for HypothesisFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HypothesisFlag::Satisfied => "satisfied",
            HypothesisFlag::Violated => "violated",
        })
    }
}

/// One size of a scan. Float columns are rounded to 12 significant digits.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    pub n: usize,
    #[serde(rename = "D_n")]
    pub max_down_degree: usize,
    /// Maximum degree of the line graph, never above `2 D_n`.
    pub line_graph_max_degree: usize,
    pub sigma2_num: String,
    pub sigma2_den: String,
    pub ks: f64,
    pub tv: f64,
    pub janson_m: u32,
    pub janson_value: f64,
    pub hypothesis_flag: HypothesisFlag,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub ks_strictly_decreasing: bool,
    pub hypothesis_satisfied: bool,
    pub degree_bound_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormalityReport {
    pub schema_version: u32,
    pub family: String,
    pub mode: ScanMode,
    pub janson_m: u32,
    pub c: f64,
    pub epsilon: f64,
    pub seed: u64,
    pub trials: u64,
    pub generator: String,
    pub rows: Vec<ScanRow>,
    pub verdicts: Verdicts,
}

impl NormalityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "n",
            "D_n",
            "sigma2_num",
            "sigma2_den",
            "ks",
            "tv",
            "janson_m",
            "janson_value",
            "hypothesis_flag",
        ])
        .expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.n.to_string(),
                r.max_down_degree.to_string(),
                r.sigma2_num.clone(),
                r.sigma2_den.clone(),
                r.ks.to_string(),
                r.tv.to_string(),
                r.janson_m.to_string(),
                r.janson_value.to_string(),
                r.hypothesis_flag.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is UTF-8")
    }
}

fn scan_row(family: Family, n: usize, cfg: &ScanConfig) -> Result<ScanRow> {
    let tree = generate_family(&TreeFamilySpec::new(family, n))?;
    let moments = closed_form_moments(&tree);
    let mean = rational_to_f64(&moments.mean);
    let sd = rational_to_f64(&moments.variance).sqrt();
    let max_down_degree = tree.max_down_degree();
    let line_graph_max_degree = line_graph(&tree).max_degree();

    let (ks, tv) = match cfg.mode {
        ScanMode::Exact => {
            let pmf = exact_pmf(&poly_by_rank_dp(&tree)?.marginal(), n)?;
            (ks_distance_to_normal(&pmf, mean, sd)?, tv_to_discretized_normal(&pmf.to_f64(), mean, sd)?)
        }
        ScanMode::MonteCarlo => {
            let run = sample_descents(&tree, cfg.trials, cfg.seed)?;
            (ks_distance_to_normal(&run, mean, sd)?, tv_to_discretized_normal(&run.empirical_pmf(), mean, sd)?)
        }
    };
    let janson_value = janson_quantity(n - 1, line_graph_max_degree, 1.0, sd, cfg.janson_m)?;
    let threshold = cfg.c * (n as f64).powf(0.5 - cfg.epsilon);
    let hypothesis_flag = if (max_down_degree as f64) <= threshold {
        HypothesisFlag::Satisfied
    } else {
        HypothesisFlag::Violated
    };
    Ok(ScanRow {
        n,
        max_down_degree,
        line_graph_max_degree,
        sigma2_num: moments.variance.numer().to_string(),
        sigma2_den: moments.variance.denom().to_string(),
        ks: round_sig(ks),
        tv: round_sig(tv),
        janson_m: cfg.janson_m,
        janson_value: round_sig(janson_value),
        hypothesis_flag,
    })
}

/// Builds the family member at each size and measures how far its
/// standardized descent law is from `N(0, 1)`. Verdicts are informational.
pub fn clt_scan(family: Family, cfg: &ScanConfig) -> Result<NormalityReport> {
    if cfg.sizes.is_empty() {
        return Err(Error::InvalidParameter("no sizes given".into()));
    }
    if cfg.sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter("sizes must be strictly increasing".into()));
    }
    if cfg.sizes[0] < 2 {
        return Err(Error::InvalidParameter("scan sizes must be at least 2".into()));
    }
    if cfg.c.is_nan() || cfg.c <= 0.0 || !(0.0..0.5).contains(&cfg.epsilon) || cfg.epsilon <= 0.0 {
        return Err(Error::InvalidParameter("need C > 0 and 0 < epsilon < 1/2".into()));
    }
    let largest = *cfg.sizes.last().expect("nonempty");
    if cfg.mode == ScanMode::Exact && largest > cfg.exact_cap {
        return Err(Error::CapExceeded { what: "exact-mode scan", n: largest, cap: cfg.exact_cap });
    }
    let family = match family {
        Family::Prufer { seed: None } => Family::Prufer { seed: Some(cfg.seed) },
        other => other,
    };

    let rows = cfg.sizes.iter().map(|&n| scan_row(family, n, cfg)).collect::<Result<Vec<_>>>()?;

    let verdicts = Verdicts {
        ks_strictly_decreasing: rows.windows(2).all(|w| w[1].ks < w[0].ks + cfg.decrease_tolerance),
        hypothesis_satisfied: rows.iter().all(|r| r.hypothesis_flag == HypothesisFlag::Satisfied),
        degree_bound_holds: rows.iter().all(|r| r.line_graph_max_degree <= 2 * r.max_down_degree),
    };
    Ok(NormalityReport {
        schema_version: SCHEMA_VERSION,
        family: family.to_string(),
        mode: cfg.mode,
        janson_m: cfg.janson_m,
        c: cfg.c,
        epsilon: cfg.epsilon,
        seed: cfg.seed,
        trials: if cfg.mode == ScanMode::MonteCarlo { cfg.trials } else { 0 },
        generator: GENERATOR.to_string(),
        rows,
        verdicts,
    })
}

/// Exact `σ^2` of a row as a float, for display.
pub fn row_variance(row: &ScanRow) -> f64 {
    let num: f64 = row.sigma2_num.parse::<num_bigint::BigInt>().ok().and_then(|x| x.to_f64()).unwrap_or(f64::NAN);
    let den: f64 = row.sigma2_den.parse::<num_bigint::BigInt>().ok().and_then(|x| x.to_f64()).unwrap_or(f64::NAN);
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(sizes: &[usize]) -> ScanConfig {
        ScanConfig { sizes: sizes.to_vec(), ..Default::default() }
    }

    #[test]
    fn small_path_scan() {
        let report = clt_scan(Family::Path, &cfg(&[10, 20, 40])).unwrap();
        assert_eq!(report.rows.len(), 3);
        assert!(report.verdicts.ks_strictly_decreasing);
        assert!(report.verdicts.hypothesis_satisfied);
        assert!(report.verdicts.degree_bound_holds);
        assert_eq!(report.rows[0].sigma2_num, "11");
        assert_eq!(report.rows[0].sigma2_den, "12");
        assert!(report.rows.iter().all(|r| (0.0..=1.0).contains(&r.ks)));
    }

    #[test]
    fn star_violates_hypothesis() {
        let report = clt_scan(Family::Star, &cfg(&[10, 20])).unwrap();
        assert!(!report.verdicts.hypothesis_satisfied);
        assert!(report.rows.iter().all(|r| r.hypothesis_flag == HypothesisFlag::Violated));
    }

    #[test]
    fn bad_configs() {
        assert!(clt_scan(Family::Path, &cfg(&[])).is_err());
        assert!(clt_scan(Family::Path, &cfg(&[20, 10])).is_err());
        assert!(clt_scan(Family::Path, &cfg(&[1, 10])).is_err());
        let mut big = cfg(&[10, 2000]);
        assert!(matches!(clt_scan(Family::Path, &big), Err(Error::CapExceeded { .. })));
        big.mode = ScanMode::MonteCarlo;
        big.trials = 10;
        assert!(clt_scan(Family::Path, &big).is_ok());
    }

    #[test]
    fn monte_carlo_is_deterministic() {
        let c = ScanConfig { sizes: vec![30], mode: ScanMode::MonteCarlo, trials: 2000, seed: 7, ..Default::default() };
        let a = clt_scan(Family::Prufer { seed: None }, &c).unwrap();
        let b = clt_scan(Family::Prufer { seed: None }, &c).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.family, "prufer:seed=7");
    }

    #[test]
    fn csv_layout() {
        let report = clt_scan(Family::Path, &cfg(&[5])).unwrap();
        let csv = report.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("n,D_n,sigma2_num,sigma2_den,ks,tv,janson_m,janson_value,hypothesis_flag"));
        assert!(lines.next().unwrap().starts_with("5,1,1,2,"));
    }
}
