//! Ordered pairs of edge-descent indicators, grouped by `E[X_k X_l]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::RootedForest;

/// Counts of ordered edge pairs `(k, l)` by how the two edges meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct PairTally {
    /// `k == l`: `E[X_k X_l] = 1/2`.
    pub equal: u64,
    /// Two children of one vertex: `E = 1/3`.
    pub siblings: u64,
    /// Child edge under its parent edge, either order: `E = 1/6`.
    pub chain: u64,
    /// No shared endpoint: independent, `E = 1/4`.
    pub disjoint: u64,
}

impl PairTally {
    pub fn total(&self) -> u64 {
        self.equal + self.siblings + self.chain + self.disjoint
    }

    /// `Var = Σ_{k,l} (E[X_k X_l] - 1/4)`.
    pub fn variance(&self) -> BigRational {
        let r = |num: i64, den: i64| BigRational::new(BigInt::from(num), BigInt::from(den));
        let weighted = |count: u64, excess: BigRational| excess * BigRational::from_integer(BigInt::from(count));
        weighted(self.equal, r(1, 2) - r(1, 4))
            + weighted(self.siblings, r(1, 3) - r(1, 4))
            + weighted(self.chain, r(1, 6) - r(1, 4))
    }

    /// Counts predicted from down-degrees: `n-1`, `Σ d_v(d_v-1)`,
    /// `Σ_{v≠root} 2 d_v`, and the remainder of `(n-1)^2`.
    pub fn from_degrees(t: &RootedForest) -> PairTally {
        let m = t.edge_count() as u64;
        let mut siblings = 0;
        let mut chain = 0;
        for v in t.vertices() {
            let d = t.down_degree(v).expect("vertex in forest") as u64;
            siblings += d * d.saturating_sub(1);
            if t.parent(v).expect("vertex in forest").is_some() {
                chain += 2 * d;
            }
        }
        PairTally { equal: m, siblings, chain, disjoint: m * m - m - siblings - chain }
    }
}

/// Classifies every ordered pair of edges of a tree by shared endpoints.
pub fn pairwise_edge_expectations(t: &RootedForest) -> Result<PairTally> {
    if !t.is_tree() {
        return Err(Error::NotATree { components: t.roots().len() });
    }
    let edges = t.edges();
    let mut tally = PairTally::default();
    for (k, &(c1, p1)) in edges.iter().enumerate() {
        for (l, &(c2, p2)) in edges.iter().enumerate() {
            if k == l {
                tally.equal += 1;
            } else if p1 == p2 {
                tally.siblings += 1;
            } else if c1 == p2 || c2 == p1 {
                tally.chain += 1;
            } else {
                tally.disjoint += 1;
            }
        }
    }
    Ok(tally)
}
