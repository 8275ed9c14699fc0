//! AHU canonical codes for unordered rooted forests.

use std::fmt;

use crate::forest::RootedForest;

/// Parenthesis encoding of the unordered isomorphism class of a forest.
///
/// Each vertex encodes as `(` + sorted child codes + `)`, and the forest as
/// its sorted tree codes concatenated. Every tree code is a balanced word, so
/// the concatenation splits back uniquely and equal codes imply isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("codes are ASCII")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn canonical_code(f: &RootedForest) -> CanonicalCode {
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); f.size()];
    let children = f.children_slots();
    for v in f.postorder() {
        let mut parts: Vec<Vec<u8>> =
            children[v.slot()].iter().map(|c| std::mem::take(&mut codes[c.slot()])).collect();
        parts.sort_unstable();
        let mut code = Vec::with_capacity(2 + parts.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for p in parts {
            code.extend_from_slice(&p);
        }
        code.push(b')');
        codes[v.slot()] = code;
    }
    let mut trees: Vec<Vec<u8>> =
        f.roots().iter().map(|r| std::mem::take(&mut codes[r.slot()])).collect();
    trees.sort_unstable();
    CanonicalCode(trees.concat())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(parents: &str) -> CanonicalCode {
        canonical_code(&RootedForest::parse_parent_array(parents).unwrap())
    }

    #[test]
    fn single_vertex() {
        assert_eq!(code("0").as_str(), "()");
        assert_eq!(canonical_code(&RootedForest::empty()).as_str(), "");
    }

    #[test]
    fn child_order_is_forgotten() {
        // root 1 with children 2 (a leaf) and 3 (has child 4), and the mirror
        assert_eq!(code("0 1 1 3"), code("0 1 1 2"));
        assert_eq!(
            canonical_code(&RootedForest::parse_nested("(()(()))").unwrap()),
            canonical_code(&RootedForest::parse_nested("((())())").unwrap())
        );
        // two-leaf star and its mirror
        assert_eq!(
            canonical_code(&RootedForest::parse_nested("(()())").unwrap()),
            code("0 1 1")
        );
    }

    #[test]
    fn component_order_is_forgotten() {
        assert_eq!(code("0 1 0"), code("0 0 2"));
    }

    #[test]
    fn path_and_star_differ() {
        assert_ne!(code("0 1 2"), code("0 1 1"));
        assert_eq!(code("0 1 2").as_str(), "((()))");
        assert_eq!(code("0 1 1").as_str(), "(()())");
    }
}
