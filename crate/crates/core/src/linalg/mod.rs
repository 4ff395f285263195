//! Exact linear algebra over `Q` and `F_p`.

pub mod dense;
pub mod field;
pub mod homology;
pub mod sparse;

pub use dense::DenseMatrix;
pub use field::{Field, Scalar};
pub use homology::{homology_dims, BoundarySequence, HomologyReport};
pub use sparse::{SparseMatrix, SparseVec};
