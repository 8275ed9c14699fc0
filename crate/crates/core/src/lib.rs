//! Descent polynomials of rooted plane forests.
//!
//! For a forest `F` on `n` vertices, `A_F(q)` sums `q^des(w)` over all `n!`
//! labelings `w`, where a descent is a non-root vertex whose label exceeds
//! its parent's. This crate computes `A_F` exactly by three independent
//! engines, checks symmetry, unimodality and log-concavity of the
//! coefficients, and measures how fast the standardized descent count
//! approaches a normal law along tree families.

pub mod canon;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod forest;
pub mod graph;
pub mod poly;
pub mod stats;

pub use canon::{canonical_code, CanonicalCode};
pub use enumerate::{enumerate_rooted_trees, RootedTrees, DEFAULT_ENUM_CAP};
pub use error::{Error, ParseError, Result};
pub use family::{generate_family, Family, TreeFamilySpec};
pub use forest::{Deletion, NodeId, RootedForest};
pub use graph::{line_graph, SimpleGraph};
pub use poly::{descent_poly, DescentPolynomial};
