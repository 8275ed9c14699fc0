//! The deletion recurrence `A_F(q) = Σ_v q^{d_v} A_{F-v}(q)`.
//!
//! Removing the vertex labeled 1 turns each of its children into a descent
//! and leaves its parent edge an ascent, so summing over which vertex gets
//! label 1 splits all labelings of `F` by the remaining forest.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::forest::RootedForest;
use crate::poly::DescentPolynomial;

/// Polynomials keyed by the unordered class of the forest they belong to.
#[derive(Debug, Clone)]
pub struct MemoStore {
    map: HashMap<CanonicalCode, DescentPolynomial>,
    enabled: bool,
    limit: Option<usize>,
}

impl Default for MemoStore {
    fn default() -> Self {
        Self::new()
    }
}

impl MemoStore {
    pub fn new() -> Self {
        MemoStore { map: HashMap::new(), enabled: true, limit: None }
    }

    /// A store that never remembers anything: the recursion runs in full.
    pub fn disabled() -> Self {
        MemoStore { map: HashMap::new(), enabled: false, limit: None }
    }

    /// Fails with [`Error::MemoExhausted`] instead of growing past `entries`.
    pub fn with_limit(entries: usize) -> Self {
        MemoStore { map: HashMap::new(), enabled: true, limit: Some(entries) }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, code: &CanonicalCode) -> Option<&DescentPolynomial> {
        self.map.get(code)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&CanonicalCode, &DescentPolynomial)> {
        self.map.iter()
    }

    fn insert(&mut self, code: CanonicalCode, p: DescentPolynomial) -> Result<()> {
        if !self.enabled {
            return Ok(());
        }
        if self.limit.is_some_and(|limit| self.map.len() >= limit) {
            return Err(Error::MemoExhausted { entries: self.map.len() });
        }
        self.map.insert(code, p);
        Ok(())
    }
}

pub fn poly_by_deletion(f: &RootedForest, memo: &mut MemoStore) -> Result<DescentPolynomial> {
    if f.is_empty() {
        return Ok(DescentPolynomial::one());
    }
    let code = canonical_code(f);
    if let Some(p) = memo.get(&code) {
        return Ok(p.clone());
    }
    let mut coeffs = vec![BigUint::zero(); f.edge_count() + 1];
    for v in f.vertices() {
        let shift = f.down_degree(v)?;
        let rest = poly_by_deletion(&f.delete_vertex(v)?.forest, memo)?;
        for (k, c) in rest.coeffs().iter().enumerate() {
            coeffs[k + shift] += c;
        }
    }
    let p = DescentPolynomial::from_coeffs(coeffs);
    memo.insert(code, p.clone())?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(parents: &str) -> DescentPolynomial {
        poly_by_deletion(&RootedForest::parse_parent_array(parents).unwrap(), &mut MemoStore::new()).unwrap()
    }

    #[test]
    fn reference_vectors() {
        assert_eq!(poly("0"), DescentPolynomial::one());
        assert_eq!(poly("0 1"), DescentPolynomial::from_u64s(&[1, 1]));
        assert_eq!(poly("5 5 4 6 6 0"), DescentPolynomial::from_u64s(&[20, 90, 250, 250, 90, 20]));
        assert_eq!(poly("0 1 0 3"), DescentPolynomial::from_u64s(&[6, 12, 6]));
        assert_eq!(poly("0 0"), DescentPolynomial::from_u64s(&[2]));
    }

    #[test]
    fn memo_on_and_off_agree() {
        let f = RootedForest::parse_parent_array("5 5 4 6 6 0 6").unwrap();
        let mut on = MemoStore::new();
        let mut off = MemoStore::disabled();
        assert_eq!(poly_by_deletion(&f, &mut on).unwrap(), poly_by_deletion(&f, &mut off).unwrap());
        assert!(off.is_empty());
        assert!(!on.is_empty());
    }

    #[test]
    fn memo_limit_surfaces_as_resource_error() {
        let f = RootedForest::parse_parent_array("5 5 4 6 6 0").unwrap();
        let mut memo = MemoStore::with_limit(3);
        match poly_by_deletion(&f, &mut memo) {
            Err(e @ Error::MemoExhausted { entries: 3 }) => assert_eq!(e.exit_code(), 3),
            other => panic!("unexpected {other:?}"),
        }
    }
}
