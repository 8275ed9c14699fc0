//! Parametrised tree families used by the experiments.
//!
//! Spec strings carry the size: `path:12`, `star:40`, `dary:3:121`,
//! `caterpillar:10:2` (spine 10, two legs per spine vertex, 30 vertices),
//! `broom:5:3` (handle 5, three bristles), `prufer:200:seed=7`.
//! Templates omit the size and are used by scans: `path`, `star`, `dary:2`,
//! `caterpillar:2`, `broom:3`, `prufer` or `prufer:seed=7`.

use std::collections::{BinaryHeap, VecDeque};
use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, ParseError, Result};
use crate::forest::RootedForest;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Star,
    /// Complete `arity`-ary tree filled level by level.
    Dary { arity: usize },
    /// Spine path; each spine vertex carries up to `legs` leaves, filled in spine order.
    Caterpillar { legs: usize },
    /// Handle path whose last vertex carries `bristles` leaves.
    Broom { bristles: usize },
    /// Uniform labeled tree via a random Prüfer sequence, rooted at vertex 1.
    Prufer { seed: Option<u64> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeFamilySpec {
    pub family: Family,
    pub n: usize,
}

impl TreeFamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        TreeFamilySpec { family, n }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path => write!(f, "path"),
            Family::Star => write!(f, "star"),
            Family::Dary { arity } => write!(f, "dary:{arity}"),
            Family::Caterpillar { legs } => write!(f, "caterpillar:{legs}"),
            Family::Broom { bristles } => write!(f, "broom:{bristles}"),
            Family::Prufer { seed: None } => write!(f, "prufer"),
            Family::Prufer { seed: Some(s) } => write!(f, "prufer:seed={s}"),
        }
    }
}

fn family_err(spec: &str, reason: impl Into<String>) -> ParseError {
    ParseError::Family { spec: spec.to_string(), reason: reason.into() }
}

fn number(spec: &str, field: &str) -> std::result::Result<usize, ParseError> {
    field.parse().map_err(|_| family_err(spec, format!("expected an integer, got {field:?}")))
}

fn seed_field(spec: &str, field: &str) -> std::result::Result<u64, ParseError> {
    field
        .strip_prefix("seed=")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| family_err(spec, format!("expected seed=<u64>, got {field:?}")))
}

impl FromStr for Family {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        match parts.as_slice() {
            ["path"] => Ok(Family::Path),
            ["star"] => Ok(Family::Star),
            ["dary", d] | ["complete", d] => Ok(Family::Dary { arity: number(s, d)? }),
            ["binary"] => Ok(Family::Dary { arity: 2 }),
            ["caterpillar", legs] => Ok(Family::Caterpillar { legs: number(s, legs)? }),
            ["broom", b] => Ok(Family::Broom { bristles: number(s, b)? }),
            ["prufer"] => Ok(Family::Prufer { seed: None }),
            ["prufer", seed] => Ok(Family::Prufer { seed: Some(seed_field(s, seed)?) }),
            _ => Err(family_err(s, "unknown family template")),
        }
    }
}

impl FromStr for TreeFamilySpec {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let spec = match parts.as_slice() {
            ["path", n] => TreeFamilySpec::new(Family::Path, number(s, n)?),
            ["star", n] => TreeFamilySpec::new(Family::Star, number(s, n)?),
            ["dary", d, n] => TreeFamilySpec::new(Family::Dary { arity: number(s, d)? }, number(s, n)?),
            ["binary", n] => TreeFamilySpec::new(Family::Dary { arity: 2 }, number(s, n)?),
            ["caterpillar", spine, legs] => {
                let (spine, legs) = (number(s, spine)?, number(s, legs)?);
                TreeFamilySpec::new(Family::Caterpillar { legs }, spine * (legs + 1))
            }
            ["broom", handle, bristles] => {
                let (handle, bristles) = (number(s, handle)?, number(s, bristles)?);
                if handle == 0 {
                    return Err(family_err(s, "broom handle must have at least one vertex"));
                }
                TreeFamilySpec::new(Family::Broom { bristles }, handle + bristles)
            }
            ["prufer", n] => TreeFamilySpec::new(Family::Prufer { seed: None }, number(s, n)?),
            ["prufer", n, seed] => {
                TreeFamilySpec::new(Family::Prufer { seed: Some(seed_field(s, seed)?) }, number(s, n)?)
            }
            _ => return Err(family_err(s, "unknown family spec")),
        };
        Ok(spec)
    }
}

impl fmt::Display for TreeFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Dary { arity } => write!(f, "dary:{arity}:{}", self.n),
            Family::Caterpillar { legs } if self.n.is_multiple_of(legs + 1) => {
                write!(f, "caterpillar:{}:{legs}", self.n / (legs + 1))
            }
            Family::Caterpillar { legs } => write!(f, "caterpillar:{legs} (n={})", self.n),
            Family::Broom { bristles } => write!(f, "broom:{}:{bristles}", self.n.saturating_sub(bristles)),
            Family::Prufer { seed: Some(seed) } => write!(f, "prufer:{}:seed={seed}", self.n),
            fam => write!(f, "{fam}:{}", self.n),
        }
    }
}

/// Builds the family member with exactly `spec.n` vertices.
pub fn generate_family(spec: &TreeFamilySpec) -> Result<RootedForest> {
    let n = spec.n;
    if n == 0 {
        return Err(Error::InvalidParameter("family size must be at least 1".into()));
    }
    let parents: Vec<Option<usize>> = match spec.family {
        Family::Path => (1..=n).map(|i| (i > 1).then(|| i - 1)).collect(),
        Family::Star => (1..=n).map(|i| (i > 1).then_some(1)).collect(),
        Family::Dary { arity } => {
            if arity < 1 {
                return Err(Error::InvalidParameter("d-ary arity must be at least 1".into()));
            }
            (1..=n).map(|i| (i > 1).then(|| (i - 2) / arity + 1)).collect()
        }
        Family::Caterpillar { legs } => {
            let spine = n.div_ceil(legs + 1);
            (1..=n)
                .map(|i| match i {
                    1 => None,
                    i if i <= spine => Some(i - 1),
                    i => Some((i - spine - 1) / legs + 1),
                })
                .collect()
        }
        Family::Broom { bristles } => {
            if bristles >= n {
                return Err(Error::InvalidParameter(format!(
                    "broom with {bristles} bristles needs more than {n} vertices"
                )));
            }
            let handle = n - bristles;
            (1..=n)
                .map(|i| match i {
                    1 => None,
                    i if i <= handle => Some(i - 1),
                    _ => Some(handle),
                })
                .collect()
        }
        Family::Prufer { seed } => {
            let mut rng = ChaCha20Rng::seed_from_u64(seed.unwrap_or(0));
            let code: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(1..=n)).collect();
            return prufer_tree(n, &code);
        }
    };
    RootedForest::from_parents(&parents)
}

/// Decodes a Prüfer sequence over `1..=n` and roots the tree at vertex 1.
pub fn prufer_tree(n: usize, code: &[usize]) -> Result<RootedForest> {
    if n == 0 || code.len() != n.saturating_sub(2) || code.iter().any(|&c| c == 0 || c > n) {
        return Err(Error::InvalidParameter(format!("invalid Prüfer sequence for n = {n}")));
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    if n >= 2 {
        let mut degree = vec![1usize; n + 1];
        for &c in code {
            degree[c] += 1;
        }
        let mut leaves: BinaryHeap<Reverse<usize>> =
            (1..=n).filter(|&v| degree[v] == 1).map(Reverse).collect();
        for &c in code {
            let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
            adj[leaf].push(c);
            adj[c].push(leaf);
            degree[c] -= 1;
            if degree[c] == 1 {
                leaves.push(Reverse(c));
            }
        }
        let Reverse(a) = leaves.pop().expect("two leaves remain");
        let Reverse(b) = leaves.pop().expect("two leaves remain");
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut parents = vec![None; n];
    let mut seen = vec![false; n + 1];
    let mut queue = VecDeque::from([1usize]);
    seen[1] = true;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parents[w - 1] = Some(v);
                queue.push_back(w);
            }
        }
    }
    RootedForest::from_parents(&parents)
}
