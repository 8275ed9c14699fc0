//! Command-line front end.
//!
//! Exit codes: 0 success, 2 input error, 3 cap or resource error. Property
//! verdicts (a failed unimodality check, a non-decreasing KS column) never
//! change the exit code.

mod commands;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::family::TreeFamilySpec;
use crate::forest::RootedForest;
use crate::poly::{Algorithm, DEFAULT_BRUTE_CAP};
use crate::stats::{ScanMode, DEFAULT_EXACT_CAP};
use crate::DEFAULT_ENUM_CAP;

#[derive(Debug, Parser)]
#[command(name = "tree-descent", version, about = "Exact descent polynomials of rooted forests")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the descent polynomial of a forest.
    Poly(PolyArgs),
    /// Check symmetry, unimodality and log-concavity of coefficients.
    Check(CheckArgs),
    /// Exact mean and variance of the descent count, two ways.
    Stats(StatsArgs),
    /// Distance to normality along a tree family.
    CltScan(ScanArgs),
    /// One line per unordered rooted tree on n vertices.
    Enumerate(EnumerateArgs),
    /// Descent counts of random labelings.
    Sample(SampleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Brute,
    Deletion,
    RankDp,
    Auto,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Brute => Algorithm::Brute,
            AlgorithmArg::Deletion => Algorithm::Deletion,
            AlgorithmArg::RankDp => Algorithm::RankDp,
            AlgorithmArg::Auto => Algorithm::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    MonteCarlo,
}

impl From<ModeArg> for ScanMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => ScanMode::Exact,
            ModeArg::MonteCarlo => ScanMode::MonteCarlo,
        }
    }
}

/// Exactly one of these selects the input.
#[derive(Debug, Clone, Default, Args)]
pub struct InputArgs {
    /// Parent array, e.g. "5 5 4 6 6 0" (0 marks a root).
    #[arg(long)]
    pub parent: Option<String>,
    /// Nested parentheses, e.g. "((()())(()))".
    #[arg(long)]
    pub nested: Option<String>,
    /// Family spec, e.g. path:12, star:40, dary:3:121, caterpillar:10:2, broom:5:3, prufer:200:seed=7.
    #[arg(long)]
    pub family: Option<String>,
    /// File with one parent array per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "auto")]
    pub algorithm: AlgorithmArg,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    #[arg(long, env = "DESCENT_BRUTE_CAP", default_value_t = DEFAULT_BRUTE_CAP)]
    pub brute_cap: usize,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Check a raw coefficient list instead of a forest.
    #[arg(long)]
    pub coeffs: Option<String>,
    /// Check every rooted tree on this many vertices.
    #[arg(long)]
    pub enumerate: Option<usize>,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    #[arg(long, env = "DESCENT_ENUM_CAP", default_value_t = DEFAULT_ENUM_CAP)]
    pub enum_cap: usize,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Family template: path, star, dary:<d>, caterpillar:<legs>, broom:<bristles>, prufer[:seed=<s>].
    #[arg(long)]
    pub family: String,
    /// Strictly increasing sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long, value_enum, default_value = "exact")]
    pub mode: ModeArg,
    /// Janson exponent.
    #[arg(long, default_value_t = 3)]
    pub m: u32,
    /// Constant C in D_n <= C n^(1/2 - epsilon).
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    #[arg(long, default_value_t = 0.25)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
    pub exact_cap: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    pub n: usize,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    #[arg(long, env = "DESCENT_ENUM_CAP", default_value_t = DEFAULT_ENUM_CAP)]
    pub enum_cap: usize,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest size for which the exact distribution is computed for comparison.
    #[arg(long, default_value_t = 200)]
    pub exact_cap: usize,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

/// A forest together with where it came from.
#[derive(Debug, Clone)]
pub struct Source {
    pub label: String,
    pub forest: RootedForest,
}

impl InputArgs {
    fn given(&self) -> usize {
        [self.parent.is_some(), self.nested.is_some(), self.family.is_some(), self.file.is_some()]
            .iter()
            .filter(|&&b| b)
            .count()
    }

    pub fn is_empty(&self) -> bool {
        self.given() == 0
    }

    /// Reads the single selected input; a file yields one forest per non-blank line.
    pub fn load(&self) -> Result<Vec<Source>> {
        if self.given() != 1 {
            return Err(Error::InvalidParameter(
                "give exactly one of --parent, --nested, --family, --file".into(),
            ));
        }
        if let Some(text) = &self.parent {
            return Ok(vec![Source { label: format!("parent:{text}"), forest: RootedForest::parse_parent_array(text)? }]);
        }
        if let Some(text) = &self.nested {
            return Ok(vec![Source { label: format!("nested:{text}"), forest: RootedForest::parse_nested(text)? }]);
        }
        if let Some(spec) = &self.family {
            let spec: TreeFamilySpec = spec.parse()?;
            let forest = crate::family::generate_family(&spec)?;
            return Ok(vec![Source { label: format!("family:{spec}"), forest }]);
        }
        let path = self.file.as_ref().expect("one input given");
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
        text.lines()
            .enumerate()
            .filter(|(_, line)| !line.trim().is_empty() && !line.trim_start().starts_with('#'))
            .map(|(i, line)| {
                Ok(Source {
                    label: format!("file:{}:{}", path.display(), i + 1),
                    forest: RootedForest::parse_parent_array(line)?,
                })
            })
            .collect()
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match commands::dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
