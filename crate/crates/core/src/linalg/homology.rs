//! Homology dimensions of a chain complex given by its boundary matrices.

use rayon::prelude::*;

use super::field::Field;
use super::sparse::SparseMatrix;
use crate::error::{Error, Result};

/// A bounded chain complex `C_N → … → C_1 → C_0`.
///
/// `boundary(n)` is the matrix of `C_n → C_{n−1}` (rows indexed by `C_{n−1}`).
/// Degrees past the stored range have `C_n = 0`.
#[derive(Clone, Debug)]
pub struct BoundarySequence {
    chain_dims: Vec<usize>,
    boundaries: Vec<SparseMatrix>,
}

impl BoundarySequence {
    /// `boundaries[k]` is the differential out of degree `k + 1`.
    pub fn new(chain_dims: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Result<Self> {
        for (k, m) in boundaries.iter().enumerate() {
            let n = k + 1;
            let src = chain_dims.get(n).copied().unwrap_or(0);
            let dst = chain_dims.get(n - 1).copied().unwrap_or(0);
            if m.cols() != src || m.rows() != dst {
                return Err(Error::ShapeMismatch { degree: n });
            }
        }
        Ok(BoundarySequence {
            chain_dims,
            boundaries,
        })
    }

    pub fn chain_dims(&self) -> &[usize] {
        &self.chain_dims
    }

    pub fn chain_dim(&self, n: usize) -> usize {
        self.chain_dims.get(n).copied().unwrap_or(0)
    }

    pub fn boundary(&self, n: usize) -> Option<&SparseMatrix> {
        n.checked_sub(1).and_then(|k| self.boundaries.get(k))
    }

    /// Checks `∂_n ∘ ∂_{n+1} = 0` everywhere.
    pub fn check_composable(&self, field: Field) -> Result<()> {
        for n in 1..self.boundaries.len() {
            let lower = &self.boundaries[n - 1];
            let upper = &self.boundaries[n];
            if !lower.mul(upper, field).is_zero() {
                return Err(Error::NotAComplex { degree: n });
            }
        }
        Ok(())
    }
}

/// Result of [`homology_dims`], with the ranks that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    /// `dims[n] = dim H_n` for `n ≤ n_max`.
    pub dims: Vec<usize>,
    pub chain_dims: Vec<usize>,
    /// `ranks[n] = rank ∂_n` for `n ≤ n_max + 1`, with `ranks[0] = 0`.
    pub ranks: Vec<usize>,
}

impl HomologyReport {
    /// Truncated Euler characteristic identity
    /// `Σ_{n≤N} (−1)ⁿ h_n = Σ_{n≤N} (−1)ⁿ c_n − (−1)ᴺ rank ∂_{N+1}`.
    pub fn euler_consistent(&self) -> bool {
        let top = self.dims.len();
        if top == 0 {
            return true;
        }
        let sign = |n: usize| if n.is_multiple_of(2) { 1i128 } else { -1 };
        let h: i128 = self
            .dims
            .iter()
            .enumerate()
            .map(|(n, &d)| sign(n) * d as i128)
            .sum();
        let c: i128 = self.chain_dims[..top]
            .iter()
            .enumerate()
            .map(|(n, &d)| sign(n) * d as i128)
            .sum();
        h == c - sign(top - 1) * self.ranks[top] as i128
    }
}

/// `dim H_n = dim C_n − rank ∂_n − rank ∂_{n+1}` for `n ≤ n_max`.
///
/// The complex property is verified first; a failure means a wrong
/// differential upstream.
pub fn homology_dims(seq: &BoundarySequence, n_max: usize, field: Field) -> Result<HomologyReport> {
    seq.check_composable(field)?;
    homology_dims_unchecked(seq, n_max, field)
}

/// As [`homology_dims`] without the `∂∂ = 0` check.
pub fn homology_dims_unchecked(
    seq: &BoundarySequence,
    n_max: usize,
    field: Field,
) -> Result<HomologyReport> {
    let ranks: Vec<usize> = (0..=n_max + 1)
        .into_par_iter()
        .map(|n| seq.boundary(n).map_or(0, |m| m.rank(field)))
        .collect();
    let chain_dims: Vec<usize> = (0..=n_max + 1).map(|n| seq.chain_dim(n)).collect();
    let mut dims = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let d = chain_dims[n]
            .checked_sub(ranks[n] + ranks[n + 1])
            .ok_or(Error::NotAComplex { degree: n })?;
        dims.push(d);
    }
    let report = HomologyReport {
        dims,
        chain_dims,
        ranks,
    };
    if !report.euler_consistent() {
        return Err(Error::Mismatch(
            "Euler characteristic bookkeeping failed".into(),
        ));
    }
    Ok(report)
}
