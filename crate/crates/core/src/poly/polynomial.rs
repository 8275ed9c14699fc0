use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};

/// Coefficients `a_0..a_m` of a descent polynomial: `a_k` counts labelings
/// with exactly `k` descents, `m` being the edge count of the forest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DescentPolynomial {
    coeffs: Vec<BigUint>,
}

/// JSON shape: `{"n": 6, "edges": 5, "coeffs": ["20", "90", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub n: usize,
    pub edges: usize,
    pub coeffs: Vec<String>,
}

impl DescentPolynomial {
    /// The constant polynomial 1 (empty forest, single vertex).
    pub fn one() -> Self {
        DescentPolynomial { coeffs: vec![BigUint::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<BigUint>) -> Self {
        assert!(!coeffs.is_empty(), "a descent polynomial has at least one coefficient");
        DescentPolynomial { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Whitespace-separated decimal coefficients.
    pub fn parse(text: &str) -> Result<Self> {
        let coeffs = text
            .split_whitespace()
            .enumerate()
            .map(|(i, tok)| {
                tok.parse::<BigUint>().map_err(|_| ParseError::MalformedToken {
                    position: i + 1,
                    token: tok.to_string(),
                })
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter("empty coefficient list".into()));
        }
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigUint> {
        self.coeffs
    }

    /// Edge count `m` of the source forest (the top index).
    pub fn edges(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self, other: &DescentPolynomial) -> DescentPolynomial {
        DescentPolynomial { coeffs: convolve(&self.coeffs, &other.coeffs) }
    }

    pub fn scale(&self, factor: &BigUint) -> DescentPolynomial {
        DescentPolynomial { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    pub fn to_json(&self, n: usize) -> PolynomialJson {
        PolynomialJson {
            n,
            edges: self.edges(),
            coeffs: self.coeffs.iter().map(BigUint::to_string).collect(),
        }
    }

    pub fn from_json(json: &PolynomialJson) -> Result<(Self, usize)> {
        let coeffs = json
            .coeffs
            .iter()
            .map(|c| c.parse::<BigUint>().map_err(|_| ParseError::Json(format!("bad coefficient {c:?}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if coeffs.len() != json.edges + 1 {
            return Err(ParseError::Json(format!(
                "{} coefficients for {} edges",
                coeffs.len(),
                json.edges
            ))
            .into());
        }
        Ok((Self::from_coeffs(coeffs), json.n))
    }

    /// Errors unless the coefficients sum to `n!`.
    pub fn check_normalized(&self, n: usize) -> Result<()> {
        let expected = factorial(n);
        let actual = self.total();
        if actual == expected {
            Ok(())
        } else {
            Err(Error::Normalization { expected, actual })
        }
    }
}

impl fmt::Display for DescentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub(crate) fn convolve(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `n! / (k_1! ... k_m!)` for `n = Σ k_i`.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut total = 0usize;
    let mut acc = BigUint::one();
    for &k in parts {
        // acc *= C(total + k, k), built incrementally so it stays integral
        for i in 1..=k as u64 {
            acc *= total as u64 + i;
            acc /= i;
        }
        total += k;
    }
    acc
}

/// Combines component polynomials: multinomial over sizes times the product.
pub fn forest_product(parts: &[(DescentPolynomial, usize)]) -> Result<DescentPolynomial> {
    if parts.is_empty() {
        return Err(Error::Precondition("forest_product needs at least one part".into()));
    }
    if let Some((_, size)) = parts.iter().find(|(_, size)| *size == 0) {
        return Err(Error::Precondition(format!("component size {size} must be positive")));
    }
    let sizes: Vec<usize> = parts.iter().map(|(_, k)| *k).collect();
    let product = parts[1..].iter().fold(parts[0].0.clone(), |acc, (p, _)| acc.mul(p));
    Ok(product.scale(&multinomial(&sizes)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[1, 1]), BigUint::from(2u32));
        assert_eq!(multinomial(&[2, 2]), BigUint::from(6u32));
        assert_eq!(multinomial(&[3, 2, 1]), BigUint::from(60u32));
        assert_eq!(multinomial(&[5]), BigUint::one());
        assert_eq!(factorial(20).to_string(), "2432902008176640000");
    }

    #[test]
    fn products() {
        let point = DescentPolynomial::one();
        let p = forest_product(&[(point.clone(), 1), (point.clone(), 1)]).unwrap();
        assert_eq!(p, DescentPolynomial::from_u64s(&[2]));
        let edge = DescentPolynomial::from_u64s(&[1, 1]);
        let p = forest_product(&[(edge.clone(), 2), (edge.clone(), 2)]).unwrap();
        assert_eq!(p, DescentPolynomial::from_u64s(&[6, 12, 6]));
        let fig = DescentPolynomial::from_u64s(&[20, 90, 250, 250, 90, 20]);
        assert_eq!(forest_product(&[(fig.clone(), 6)]).unwrap(), fig);
        assert!(forest_product(&[]).is_err());
        assert!(forest_product(&[(point, 0)]).is_err());
    }

    #[test]
    fn json_shape() {
        let fig = DescentPolynomial::from_u64s(&[20, 90, 250, 250, 90, 20]);
        let text = serde_json::to_string(&fig.to_json(6)).unwrap();
        assert_eq!(text, r#"{"n":6,"edges":5,"coeffs":["20","90","250","250","90","20"]}"#);
        let back: PolynomialJson = serde_json::from_str(&text).unwrap();
        assert_eq!(DescentPolynomial::from_json(&back).unwrap(), (fig, 6));
        let bad = PolynomialJson { n: 2, edges: 3, coeffs: vec!["1".into(), "1".into()] };
        assert!(DescentPolynomial::from_json(&bad).is_err());
    }

    #[test]
    fn normalization() {
        let fig = DescentPolynomial::from_u64s(&[20, 90, 250, 250, 90, 20]);
        assert!(fig.check_normalized(6).is_ok());
        assert!(matches!(fig.check_normalized(5), Err(Error::Normalization { .. })));
    }

    #[test]
    fn parse_coefficients() {
        assert_eq!(DescentPolynomial::parse("1 2 1 2").unwrap(), DescentPolynomial::from_u64s(&[1, 2, 1, 2]));
        assert!(DescentPolynomial::parse("").is_err());
        assert!(DescentPolynomial::parse("1 -2").is_err());
    }
}
