use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::forest::{NodeId, RootedForest};

/// Bijection from vertices `v_1..v_n` to labels `1..n`; `values[i]` is the label of `v_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    values: Vec<u32>,
}

impl Labeling {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &w in &values {
            let w = w as usize;
            if w == 0 || w > n {
                return Err(Error::NonBijective(format!("label {w} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[w], true) {
                return Err(Error::NonBijective(format!("label {w} repeated")));
            }
        }
        Ok(Labeling { values })
    }

    pub fn identity(n: usize) -> Self {
        Labeling { values: (1..=n as u32).collect() }
    }

    /// Whitespace-separated labels in vertex order.
    pub fn parse(text: &str) -> Result<Self> {
        let values = text
            .split_whitespace()
            .enumerate()
            .map(|(i, tok)| {
                tok.parse::<u32>().map_err(|_| {
                    crate::error::ParseError::MalformedToken { position: i + 1, token: tok.to_string() }.into()
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn label(&self, v: NodeId) -> u32 {
        self.values[v.slot()]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `w'(x) = n + 1 - w(x)`; an involution that swaps descents and ascents.
    pub fn complement(&self) -> Labeling {
        let top = self.values.len() as u32 + 1;
        Labeling { values: self.values.iter().map(|&w| top - w).collect() }
    }
}

pub fn complement_labeling(w: &Labeling, n: usize) -> Result<Labeling> {
    if w.len() != n {
        return Err(Error::NonBijective(format!("labeling has {} labels, expected {n}", w.len())));
    }
    Ok(w.complement())
}

fn check_fits(f: &RootedForest, w: &Labeling) -> Result<()> {
    if w.len() == f.size() {
        Ok(())
    } else {
        Err(Error::NonBijective(format!("{} labels for {} vertices", w.len(), f.size())))
    }
}

/// Non-root vertices whose label exceeds their parent's label.
pub fn descent_set(f: &RootedForest, w: &Labeling) -> Result<BTreeSet<NodeId>> {
    check_fits(f, w)?;
    Ok(f.edges()
        .into_iter()
        .filter(|&(child, parent)| w.label(child) > w.label(parent))
        .map(|(child, _)| child)
        .collect())
}

pub fn descent_count(f: &RootedForest, w: &Labeling) -> Result<usize> {
    check_fits(f, w)?;
    Ok(count_descents(f.parent_slots(), w.values()))
}

pub(crate) fn count_descents(parent: &[Option<NodeId>], labels: &[u32]) -> usize {
    parent
        .iter()
        .zip(labels)
        .filter(|(p, &w)| p.is_some_and(|p| w > labels[p.slot()]))
        .count()
}
