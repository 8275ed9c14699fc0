//! Shape checks on coefficient sequences. Each `*_violation` returns the
//! first offending index, the boolean forms are convenience wrappers.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::poly::DescentPolynomial;

/// First `k` with `a_k != a_{m-k}`.
pub fn symmetry_violation(a: &[BigUint]) -> Option<usize> {
    let m = a.len().checked_sub(1)?;
    (0..a.len()).find(|&k| a[k] != a[m - k])
}

/// First index where the sequence rises again after having fallen.
pub fn unimodality_violation(a: &[BigUint]) -> Option<usize> {
    let mut falling = false;
    for k in 1..a.len() {
        if a[k] < a[k - 1] {
            falling = true;
        } else if a[k] > a[k - 1] && falling {
            return Some(k);
        }
    }
    None
}

/// First interior `k` with `a_k^2 < a_{k-1} a_{k+1}`.
pub fn log_concavity_violation(a: &[BigUint]) -> Option<usize> {
    (1..a.len().saturating_sub(1)).find(|&k| &a[k] * &a[k] < &a[k - 1] * &a[k + 1])
}

pub fn is_symmetric(p: &DescentPolynomial) -> bool {
    symmetry_violation(p.coeffs()).is_none()
}

pub fn is_unimodal(p: &DescentPolynomial) -> bool {
    unimodality_violation(p.coeffs()).is_none()
}

pub fn is_log_concave(p: &DescentPolynomial) -> bool {
    log_concavity_violation(p.coeffs()).is_none()
}

/// Multiplies two symmetric unimodal polynomials and reports whether the
/// product is again symmetric and unimodal. Inputs that are not symmetric
/// and unimodal are a precondition error, not a `false`.
pub fn symmetric_unimodal_product_check(
    p: &DescentPolynomial,
    q: &DescentPolynomial,
) -> Result<(DescentPolynomial, bool)> {
    for (name, x) in [("left", p), ("right", q)] {
        if !is_symmetric(x) || !is_unimodal(x) {
            return Err(Error::Precondition(format!("{name} factor is not symmetric and unimodal")));
        }
    }
    let product = p.mul(q);
    let ok = is_symmetric(&product) && is_unimodal(&product);
    Ok((product, ok))
}
