//! Root-rank / descent tables built bottom-up over a tree.
//!
//! `A(j, d)` counts labelings of a tree whose root receives the `j`-th
//! smallest label and which have `d` descents. Children are merged into
//! their parent one at a time, in stored child order. Merging a finished
//! child subtree `S` (size `s`) into a partial tree `U` (size `u`, root `r`):
//!
//! ```text
//! A'(j, d) = Σ C(j-1, a) C(n-j, s-a) A_U(j-a, d_U) A_S(i, d_S),   d = d_U + d_S + [i > a]
//! ```
//!
//! where `a` counts the labels of `S` below the label of `r`, and `i` is the
//! rank of `S`'s root within `S`. The new edge is a descent exactly when
//! `S`'s root sits above `r`, i.e. `i > a`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forest::RootedForest;
use crate::poly::DescentPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankDescentTable {
    /// `rows[j - 1][d]`, each row of length `n` (descents `0..=n-1`).
    rows: Vec<Vec<BigUint>>,
}

impl RankDescentTable {
    fn point() -> Self {
        RankDescentTable { rows: vec![vec![BigUint::one()]] }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn edges(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    /// `A(j, d)` with `j` 1-based; zero outside the table.
    pub fn get(&self, j: usize, d: usize) -> BigUint {
        j.checked_sub(1)
            .and_then(|r| self.rows.get(r))
            .and_then(|row| row.get(d))
            .cloned()
            .unwrap_or_default()
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    /// Sums over the root rank, giving the descent polynomial.
    pub fn marginal(&self) -> DescentPolynomial {
        let mut coeffs = vec![BigUint::zero(); self.size()];
        for row in &self.rows {
            for (d, x) in row.iter().enumerate() {
                coeffs[d] += x;
            }
        }
        DescentPolynomial::from_coeffs(coeffs)
    }

    pub fn total(&self) -> BigUint {
        self.rows.iter().flatten().sum()
    }
}

/// Binomials `C(x, y)` for `0 <= y <= x < size`.
struct Pascal(Vec<Vec<BigUint>>);

impl Pascal {
    fn new(size: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(size);
        for x in 0..size {
            let mut row = Vec::with_capacity(x + 1);
            row.push(BigUint::one());
            for y in 1..x {
                row.push(&rows[x - 1][y - 1] + &rows[x - 1][y]);
            }
            if x > 0 {
                row.push(BigUint::one());
            }
            rows.push(row);
        }
        Pascal(rows)
    }

    fn get(&self, x: usize, y: usize) -> &BigUint {
        &self.0[x][y]
    }
}

pub fn poly_by_rank_dp(t: &RootedForest) -> Result<RankDescentTable> {
    if !t.is_tree() {
        return Err(Error::NotATree { components: t.roots().len() });
    }
    let pascal = Pascal::new(t.size());
    let mut tables: Vec<Option<RankDescentTable>> = vec![None; t.size()];
    for v in t.postorder() {
        let mut table = RankDescentTable::point();
        for &c in t.children(v)? {
            let child = tables[c.slot()].take().expect("postorder visits children first");
            table = merge(&table, &child, &pascal);
        }
        tables[v.slot()] = Some(table);
    }
    Ok(tables[t.roots()[0].slot()].take().expect("root table built"))
}

fn merge(upper: &RankDescentTable, sub: &RankDescentTable, pascal: &Pascal) -> RankDescentTable {
    let u = upper.size();
    let s = sub.size();
    let n = u + s;
    let mut out = vec![vec![BigUint::zero(); n]; n];

    // below[d] = Σ_{i <= a} A_S(i, d), above[d] = Σ_{i > a} A_S(i, d)
    let mut below = vec![BigUint::zero(); s];
    let mut above = vec![BigUint::zero(); s];
    for row in &sub.rows {
        for (d, x) in row.iter().enumerate() {
            above[d] += x;
        }
    }

    let mut shifted = vec![BigUint::zero(); s + 1];
    let mut conv = vec![BigUint::zero(); n];
    for a in 0..=s {
        if a > 0 {
            for (d, x) in sub.rows[a - 1].iter().enumerate() {
                below[d] += x;
                above[d] -= x;
            }
        }
        // S-side generating row with the new edge's descent folded in
        for (d, slot) in shifted.iter_mut().enumerate() {
            slot.set_zero();
            if d < s {
                *slot += &below[d];
            }
            if d >= 1 {
                *slot += &above[d - 1];
            }
        }
        let lo = shifted.iter().position(|x| !x.is_zero());
        let Some(lo) = lo else { continue };
        let hi = shifted.iter().rposition(|x| !x.is_zero()).expect("nonzero entry exists");

        for (jr, urow) in upper.rows.iter().enumerate() {
            let j = jr + 1 + a;
            let coeff = pascal.get(j - 1, a) * pascal.get(n - j, s - a);
            let mut touched = false;
            for x in conv.iter_mut() {
                x.set_zero();
            }
            for (du, x) in urow.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                touched = true;
                for ds in lo..=hi {
                    let y = &shifted[ds];
                    if !y.is_zero() {
                        conv[du + ds] += x * y;
                    }
                }
            }
            if !touched {
                continue;
            }
            for (target, x) in out[j - 1].iter_mut().zip(&conv) {
                if !x.is_zero() {
                    *target += x * &coeff;
                }
            }
        }
    }
    RankDescentTable { rows: out }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(parents: &str) -> RankDescentTable {
        poly_by_rank_dp(&RootedForest::parse_parent_array(parents).unwrap()).unwrap()
    }

    #[test]
    fn reference_vectors() {
        assert_eq!(table("0").marginal(), DescentPolynomial::one());
        assert_eq!(table("0 1").marginal(), DescentPolynomial::from_u64s(&[1, 1]));
        assert_eq!(table("0 1 2 3").marginal(), DescentPolynomial::from_u64s(&[1, 11, 11, 1]));
        assert_eq!(
            table("5 5 4 6 6 0").marginal(),
            DescentPolynomial::from_u64s(&[20, 90, 250, 250, 90, 20])
        );
    }

    #[test]
    fn star_table_is_rank_determined() {
        let t = table("0 1 1 1");
        for j in 1..=4 {
            for d in 0..4 {
                let expected = if d == 4 - j { 6u32 } else { 0 };
                assert_eq!(t.get(j, d), BigUint::from(expected), "A({j},{d})");
            }
        }
        assert_eq!(t.total(), BigUint::from(24u32));
    }

    #[test]
    fn single_edge_table() {
        // root label 1: child above, one descent; root label 2: none
        let t = table("0 1");
        assert_eq!(t.get(1, 1), BigUint::one());
        assert_eq!(t.get(2, 0), BigUint::one());
        assert_eq!(t.get(1, 0), BigUint::zero());
        assert_eq!(t.get(3, 0), BigUint::zero());
    }

    #[test]
    fn forests_are_rejected() {
        let f = RootedForest::parse_parent_array("0 1 0").unwrap();
        assert!(matches!(poly_by_rank_dp(&f), Err(Error::NotATree { components: 2 })));
        assert!(matches!(poly_by_rank_dp(&RootedForest::empty()), Err(Error::NotATree { components: 0 })));
    }
}
