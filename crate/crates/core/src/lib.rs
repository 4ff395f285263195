//! Exact Hochschild homology, Hochschild cohomology and cyclic homology of
//! finite-dimensional quiver algebras.
//!
//! Monomial algebras are handled through their path-graded normalized mixed
//! complex and, independently, through the decomposition into cycle
//! algebras over proper cycle orbits. Truncated algebras additionally have
//! closed formulas. Algebras given by structure constants (tensor products,
//! the quantum exterior algebras `A_q`) go through the normalized bar
//! complex.

pub mod aq;
pub mod decomposition;
pub mod error;
pub mod hochschild;
pub mod linalg;
pub mod quiver;
pub mod resolution;
pub mod skoldberg;

pub use error::{Error, Result};
