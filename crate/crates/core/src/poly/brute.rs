use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::forest::RootedForest;
use crate::poly::DescentPolynomial;

pub const DEFAULT_BRUTE_CAP: usize = 10;
/// Counts are accumulated in `u64`, which holds `20!`.
pub const MAX_BRUTE_SIZE: usize = 20;

/// Histogram of descents over all `n!` labelings.
///
/// Labelings are visited with Heap's algorithm; every step swaps the labels
/// of two vertices, so only the edges touching those two are re-examined.
pub fn brute_force_poly(f: &RootedForest, cap: usize) -> Result<DescentPolynomial> {
    let n = f.size();
    let cap = cap.min(MAX_BRUTE_SIZE);
    if n > cap {
        return Err(Error::CapExceeded { what: "brute-force labelings", n, cap });
    }
    if n == 0 {
        return Ok(DescentPolynomial::one());
    }

    let edges: Vec<(usize, usize)> = f.edges().iter().map(|&(c, p)| (c.slot(), p.slot())).collect();
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &(c, p) in &edges {
        incident[c].push((c, p));
        incident[p].push((c, p));
    }

    let mut labels: Vec<u32> = (1..=n as u32).collect();
    let local = |labels: &[u32], a: usize, b: usize| -> usize {
        let here = incident[a].iter();
        let there = incident[b].iter().filter(|&&(c, p)| c != a && p != a);
        here.chain(there).filter(|&&(c, p)| labels[c] > labels[p]).count()
    };

    let mut des = edges.iter().filter(|&&(c, p)| labels[c] > labels[p]).count();
    let mut hist = vec![0u64; edges.len() + 1];
    hist[des] += 1;

    let mut counter = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if counter[i] < i {
            let a = if i % 2 == 0 { 0 } else { counter[i] };
            des -= local(&labels, a, i);
            labels.swap(a, i);
            des += local(&labels, a, i);
            hist[des] += 1;
            counter[i] += 1;
            i = 1;
        } else {
            counter[i] = 0;
            i += 1;
        }
    }
    Ok(DescentPolynomial::from_coeffs(hist.into_iter().map(BigUint::from).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(parents: &str) -> DescentPolynomial {
        brute_force_poly(&RootedForest::parse_parent_array(parents).unwrap(), DEFAULT_BRUTE_CAP).unwrap()
    }

    #[test]
    fn reference_vectors() {
        assert_eq!(poly("5 5 4 6 6 0"), DescentPolynomial::from_u64s(&[20, 90, 250, 250, 90, 20]));
        assert_eq!(poly("0 1 2 3"), DescentPolynomial::from_u64s(&[1, 11, 11, 1]));
        assert_eq!(poly("0 1 1 1"), DescentPolynomial::from_u64s(&[6, 6, 6, 6]));
        assert_eq!(poly("0"), DescentPolynomial::one());
        assert_eq!(poly("0 1 0 3"), DescentPolynomial::from_u64s(&[6, 12, 6]));
        assert_eq!(brute_force_poly(&RootedForest::empty(), 10).unwrap(), DescentPolynomial::one());
    }

    #[test]
    fn cap() {
        let big = RootedForest::parse_parent_array("0 1 2 3 4 5 6 7 8 9 10").unwrap();
        assert!(matches!(brute_force_poly(&big, 10), Err(Error::CapExceeded { n: 11, .. })));
        assert!(brute_force_poly(&big, 99).is_ok());
    }
}
