//! Hochschild and cyclic (co)homology engines.

pub mod mixed;
pub mod sc;

pub use mixed::{
    boundary_b_matrix, chain_basis, check_mixed_complex, connes_b_matrix, hc, hc_with, hh, hh0,
    hh_with, ChainBasisElement, EngineOptions, GradedDims, DEFAULT_SIZE_CAP,
};
pub use sc::{sc_hch, sc_hh, sc_hh_unnormalized, ScAlgebra};
