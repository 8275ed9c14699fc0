//! Unordered rooted trees, one per isomorphism class, by Beyer–Hedetniemi
//! successor generation on canonical level sequences.

use crate::error::{Error, Result};
use crate::forest::RootedForest;

pub const DEFAULT_ENUM_CAP: usize = 12;

/// Iterator over rooted trees with `n` vertices. Starts at the path and ends
/// at the star; each step is amortised O(1) on the level sequence.
#[derive(Debug, Clone)]
pub struct RootedTrees {
    levels: Vec<usize>,
    done: bool,
}

/// Fails when `n` is 0 or above `cap`.
pub fn enumerate_rooted_trees(n: usize, cap: usize) -> Result<RootedTrees> {
    if n == 0 || n > cap {
        return Err(Error::CapExceeded { what: "tree enumeration", n, cap });
    }
    Ok(RootedTrees { levels: (0..n).collect(), done: false })
}

/// Parent array for a preorder level sequence (root at level 0).
pub fn tree_from_levels(levels: &[usize]) -> Result<RootedForest> {
    let mut parents = Vec::with_capacity(levels.len());
    // last vertex seen at each depth
    let mut last_at: Vec<usize> = Vec::new();
    for (i, &level) in levels.iter().enumerate() {
        if level > last_at.len() || (i == 0) != (level == 0) {
            return Err(Error::InvalidParameter(format!("invalid level sequence {levels:?}")));
        }
        parents.push(if level == 0 { None } else { Some(last_at[level - 1]) });
        last_at.truncate(level);
        last_at.push(i + 1);
    }
    RootedForest::from_parents(&parents)
}

impl RootedTrees {
    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    fn advance(&mut self) {
        let seq = &mut self.levels;
        // p: last position with level > 1
        let Some(p) = seq.iter().rposition(|&l| l > 1) else {
            self.done = true;
            return;
        };
        let q = seq[..p].iter().rposition(|&l| l == seq[p] - 1).expect("an ancestor level exists");
        let gap = p - q;
        for i in p..seq.len() {
            seq[i] = seq[i - gap];
        }
    }
}

impl Iterator for RootedTrees {
    type Item = RootedForest;

    fn next(&mut self) -> Option<RootedForest> {
        if self.done {
            return None;
        }
        let tree = tree_from_levels(&self.levels).expect("generator keeps sequences valid");
        if self.levels.len() == 1 {
            self.done = true;
        } else {
            self.advance();
        }
        Some(tree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> =
            (1..=6).map(|n| enumerate_rooted_trees(n, 12).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20]);
    }

    #[test]
    fn n4_trees_in_order() {
        let arrays: Vec<String> =
            enumerate_rooted_trees(4, 12).unwrap().map(|t| t.to_parent_array()).collect();
        assert_eq!(arrays, vec!["0 1 2 3", "0 1 2 2", "0 1 2 1", "0 1 1 1"]);
    }

    #[test]
    fn distinct_codes() {
        let codes: std::collections::HashSet<_> =
            enumerate_rooted_trees(7, 12).unwrap().map(|t| canonical_code(&t)).collect();
        assert_eq!(codes.len(), 48);
    }

    #[test]
    fn bounds() {
        assert!(matches!(enumerate_rooted_trees(0, 12), Err(Error::CapExceeded { .. })));
        assert!(matches!(enumerate_rooted_trees(13, 12), Err(Error::CapExceeded { .. })));
        assert!(enumerate_rooted_trees(13, 13).is_ok());
    }

    #[test]
    fn level_sequence_validation() {
        assert!(tree_from_levels(&[0, 2]).is_err());
        assert!(tree_from_levels(&[0, 1, 0]).is_err());
        assert_eq!(tree_from_levels(&[0, 1, 2, 1]).unwrap().to_parent_array(), "0 1 2 1");
    }
}
