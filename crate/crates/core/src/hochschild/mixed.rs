//! The normalized mixed complex `(A ⊗_{E^e} r^{⊗_E n}, b, B)` of a monomial
//! algebra `A = kQ/I`, where `E` is spanned by the trivial paths and `r` by
//! the nonzero paths of positive length.
//!
//! A basis of the degree-`n` chains is every tuple `(p_0, p_1, …, p_n)` of
//! nonzero paths with `p_1, …, p_n` of positive length and
//! `p_0 p_1 ⋯ p_n` closed (cyclically composable). Both `b` and `B`
//! preserve the total path length `q = Σ len(p_i)`, so everything splits
//! into finite blocks indexed by `q`, computed independently.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{homology_dims, BoundarySequence, SparseMatrix};
use crate::quiver::MonomialAlgebra;

/// Default cap on the number of chain basis elements in one computation.
pub const DEFAULT_SIZE_CAP: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineOptions {
    pub size_cap: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            size_cap: DEFAULT_SIZE_CAP,
        }
    }
}

/// A chain basis element `(p_0, …, p_n)`, stored as basis indices of the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainBasisElement {
    paths: Vec<usize>,
}

impl ChainBasisElement {
    pub fn paths(&self) -> &[usize] {
        &self.paths
    }

    /// Homological degree `n`.
    pub fn n(&self) -> usize {
        self.paths.len() - 1
    }

    /// Total path length.
    pub fn degree(&self, a: &MonomialAlgebra) -> usize {
        self.paths.iter().map(|&i| a.basis()[i].len()).sum()
    }

    pub fn format(&self, a: &MonomialAlgebra) -> String {
        self.paths
            .iter()
            .map(|&i| a.quiver().format_path(&a.basis()[i]))
            .collect::<Vec<_>>()
            .join(" ⊗ ")
    }
}

/// Range of total degrees in which `C_n` can be nonzero.
fn degree_range(a: &MonomialAlgebra, n: usize) -> std::ops::RangeInclusive<usize> {
    let l = a.max_length();
    if n == 0 {
        0..=l
    } else if l == 0 {
        std::ops::RangeInclusive::new(1, 0)
    } else {
        n..=(n + 1) * l
    }
}

/// Basis paths bucketed by source vertex and length.
struct PathTable {
    by_source_len: Vec<Vec<Vec<usize>>>,
}

impl PathTable {
    fn new(a: &MonomialAlgebra) -> PathTable {
        let l = a.max_length();
        let mut by_source_len = vec![vec![Vec::new(); l + 1]; a.quiver().vertex_count()];
        for (i, p) in a.basis().iter().enumerate() {
            by_source_len[p.source()][p.len()].push(i);
        }
        PathTable { by_source_len }
    }

    fn from(&self, v: usize, len: usize) -> &[usize] {
        self.by_source_len[v].get(len).map_or(&[], Vec::as_slice)
    }
}

/// All chains of homological degree `n` and total degree `q`, sorted.
fn enumerate_block(a: &MonomialAlgebra, table: &PathTable, n: usize, q: usize) -> Vec<Vec<usize>> {
    let basis = a.basis();
    let mut out = Vec::new();
    if n == 0 {
        for v in 0..a.quiver().vertex_count() {
            for &p in table.from(v, q) {
                if basis[p].target() == v {
                    out.push(vec![p]);
                }
            }
        }
        out.sort();
        return out;
    }
    if q < n {
        return out;
    }

    fn extend(
        a: &MonomialAlgebra,
        table: &PathTable,
        chain: &mut Vec<usize>,
        n: usize,
        remaining: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let basis = a.basis();
        let slot = chain.len();
        let at = basis[*chain.last().unwrap()].target();
        let home = basis[chain[0]].source();
        let slots_after = n - slot;
        if slots_after == 0 {
            for &p in table.from(at, remaining) {
                if basis[p].target() == home {
                    chain.push(p);
                    out.push(chain.clone());
                    chain.pop();
                }
            }
            return;
        }
        let longest = (remaining - slots_after).min(a.max_length());
        for len in 1..=longest {
            for &p in table.from(at, len) {
                chain.push(p);
                extend(a, table, chain, n, remaining - len, out);
                chain.pop();
            }
        }
    }

    let mut chain = Vec::with_capacity(n + 1);
    for v in 0..a.quiver().vertex_count() {
        for len0 in 0..=(q - n).min(a.max_length()) {
            for &p0 in table.from(v, len0) {
                chain.push(p0);
                extend(a, table, &mut chain, n, q - len0, &mut out);
                chain.pop();
            }
        }
    }
    out.sort();
    out
}

/// Chains of one total degree `q`, for homological degrees `0..=top`.
struct DegreeBlock {
    chains: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl DegreeBlock {
    fn new(a: &MonomialAlgebra, table: &PathTable, q: usize, top: usize) -> DegreeBlock {
        let chains: Vec<Vec<Vec<usize>>> = (0..=top)
            .map(|n| {
                if degree_range(a, n).contains(&q) {
                    enumerate_block(a, table, n, q)
                } else {
                    Vec::new()
                }
            })
            .collect();
        let index = chains
            .iter()
            .map(|cs| cs.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect())
            .collect();
        DegreeBlock { chains, index }
    }

    fn dim(&self, n: usize) -> usize {
        self.chains.get(n).map_or(0, Vec::len)
    }

    fn size(&self) -> usize {
        self.chains.iter().map(Vec::len).sum()
    }

    /// Matrix of `b_n : C_n → C_{n−1}` on this block.
    fn hochschild_b(&self, a: &MonomialAlgebra, n: usize) -> SparseMatrix {
        assert!(n >= 1);
        let field = a.field();
        let target = &self.index[n - 1];
        let columns = self.chains[n]
            .iter()
            .map(|c| {
                let mut terms: Vec<(usize, i64)> = Vec::new();
                for i in 0..n {
                    if let Some(p) = a.multiply(c[i], c[i + 1]) {
                        let mut t = Vec::with_capacity(n);
                        t.extend_from_slice(&c[..i]);
                        t.push(p);
                        t.extend_from_slice(&c[i + 2..]);
                        terms.push((target[&t], sign(i)));
                    }
                }
                if let Some(p) = a.multiply(c[n], c[0]) {
                    let mut t = Vec::with_capacity(n);
                    t.push(p);
                    t.extend_from_slice(&c[1..n]);
                    terms.push((target[&t], sign(n)));
                }
                terms
                    .into_iter()
                    .map(|(r, s)| (r, field.from_int(s)))
                    .collect()
            })
            .collect();
        SparseMatrix::from_columns(self.dim(n - 1), columns, field)
    }

    /// Matrix of Connes' `B_n : C_n → C_{n+1}` on this block.
    ///
    /// `B(p_0, …, p_n) = Σ_i (−1)^{in} (e, p_i, …, p_n, p_0, p_1, …, p_{i−1})`
    /// with `e` the trivial path at `s(p_i)`; it vanishes when `p_0` is trivial.
    fn connes_b(&self, a: &MonomialAlgebra, n: usize) -> SparseMatrix {
        let field = a.field();
        let basis = a.basis();
        let target = &self.index[n + 1];
        let columns = self.chains[n]
            .iter()
            .map(|c| {
                if basis[c[0]].is_trivial() {
                    return Vec::new();
                }
                (0..=n)
                    .map(|i| {
                        let mut t = Vec::with_capacity(n + 2);
                        t.push(a.trivial_index(basis[c[i]].source()));
                        t.extend_from_slice(&c[i..]);
                        t.extend_from_slice(&c[..i]);
                        (target[&t], field.from_int(sign(i * n)))
                    })
                    .collect()
            })
            .collect();
        SparseMatrix::from_columns(self.dim(n + 1), columns, field)
    }
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Builds the blocks for every `q` where `C_0 … C_top` can be nonzero.
fn blocks(
    a: &MonomialAlgebra,
    top: usize,
    opts: &EngineOptions,
) -> Result<Vec<(usize, DegreeBlock)>> {
    let table = PathTable::new(a);
    let q_max = (0..=top)
        .filter_map(|n| degree_range(a, n).last())
        .max()
        .unwrap_or(0);
    let built: Vec<(usize, DegreeBlock)> = (0..=q_max)
        .into_par_iter()
        .map(|q| (q, DegreeBlock::new(a, &table, q, top)))
        .collect();
    let size: usize = built.iter().map(|(_, b)| b.size()).sum();
    if size > opts.size_cap {
        return Err(Error::SizeCap {
            size,
            cap: opts.size_cap,
        });
    }
    Ok(built)
}

/// Chain basis of degree `n`, optionally restricted to total degree `q`.
/// Ordered by total degree, then lexicographically by path indices.
pub fn chain_basis(a: &MonomialAlgebra, n: usize, degree: Option<usize>) -> Vec<ChainBasisElement> {
    let table = PathTable::new(a);
    let degrees: Vec<usize> = match degree {
        Some(q) => vec![q],
        None => degree_range(a, n).collect(),
    };
    degrees
        .into_iter()
        .filter(|q| degree_range(a, n).contains(q))
        .flat_map(|q| enumerate_block(a, &table, n, q))
        .map(|paths| ChainBasisElement { paths })
        .collect()
}

/// Block-diagonal assembly over all degrees, in [`chain_basis`] order.
fn assemble(
    a: &MonomialAlgebra,
    rows_n: usize,
    cols_n: usize,
    build: impl Fn(&DegreeBlock) -> SparseMatrix + Sync,
) -> Result<SparseMatrix> {
    let top = rows_n.max(cols_n);
    let blocks = blocks(a, top, &EngineOptions::default())?;
    let mut columns = Vec::new();
    let (mut row_off, mut rows) = (0, 0);
    for (_, block) in &blocks {
        let m = build(block);
        for col in m.columns() {
            columns.push(col.iter().map(|(i, v)| (i + row_off, v.clone())).collect());
        }
        row_off += block.dim(rows_n);
        rows += block.dim(rows_n);
    }
    Ok(SparseMatrix::from_columns(rows, columns, a.field()))
}

/// Matrix of `b_n` on [`chain_basis`]`(a, n, None)`.
pub fn boundary_b_matrix(a: &MonomialAlgebra, n: usize) -> Result<SparseMatrix> {
    assert!(n >= 1, "b_n is defined for n ≥ 1");
    assemble(a, n - 1, n, |b| b.hochschild_b(a, n))
}

/// Matrix of `B_n : C_n → C_{n+1}` on the chain bases.
pub fn connes_b_matrix(a: &MonomialAlgebra, n: usize) -> Result<SparseMatrix> {
    assemble(a, n + 1, n, |b| b.connes_b(a, n))
}

/// Dimensions per homological degree, total and split by path-length degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedDims {
    /// `total[n]` for `0 ≤ n ≤ n_max`.
    pub total: Vec<usize>,
    /// `graded[q][n]`, one entry per computed total degree `q`.
    pub graded: BTreeMap<usize, Vec<usize>>,
}

impl GradedDims {
    fn from_blocks(n_max: usize, graded: BTreeMap<usize, Vec<usize>>) -> GradedDims {
        let mut total = vec![0; n_max + 1];
        for dims in graded.values() {
            for (n, d) in dims.iter().enumerate() {
                total[n] += d;
            }
        }
        GradedDims { total, graded }
    }

    /// Dimension of the `(n, q)` component.
    pub fn get(&self, n: usize, q: usize) -> usize {
        self.graded
            .get(&q)
            .and_then(|d| d.get(n))
            .copied()
            .unwrap_or(0)
    }

    /// Totals restricted to positive path-length degree.
    pub fn positive_degree_total(&self) -> Vec<usize> {
        let mut out = vec![0; self.total.len()];
        for (_, dims) in self.graded.range(1..) {
            for (n, d) in dims.iter().enumerate() {
                out[n] += d;
            }
        }
        out
    }
}

fn block_sequence(
    a: &MonomialAlgebra,
    block: &DegreeBlock,
    top: usize,
) -> Result<BoundarySequence> {
    let dims = (0..=top).map(|n| block.dim(n)).collect();
    let mats = (1..=top).map(|n| block.hochschild_b(a, n)).collect();
    BoundarySequence::new(dims, mats)
}

/// Hochschild homology `HH_n(A)` for `n ≤ n_max`, with its path-length grading.
pub fn hh(a: &MonomialAlgebra, n_max: usize) -> Result<GradedDims> {
    hh_with(a, n_max, &EngineOptions::default())
}

pub fn hh_with(a: &MonomialAlgebra, n_max: usize, opts: &EngineOptions) -> Result<GradedDims> {
    let top = n_max + 1;
    let blocks = blocks(a, top, opts)?;
    let graded = blocks
        .par_iter()
        .map(|(q, block)| {
            let seq = block_sequence(a, block, top)?;
            let report = homology_dims(&seq, n_max, a.field())?;
            Ok((*q, report.dims))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(GradedDims::from_blocks(n_max, graded))
}

/// Cyclic homology `HC_n(A)` for `n ≤ n_max` from Connes' bicomplex
/// `D_n = C_n ⊕ C_{n−2} ⊕ ⋯` with differential `(x_n, x_{n−2}, …) ↦
/// (b x_n + B x_{n−2}, b x_{n−2} + B x_{n−4}, …)`.
pub fn hc(a: &MonomialAlgebra, n_max: usize) -> Result<GradedDims> {
    hc_with(a, n_max, &EngineOptions::default())
}

pub fn hc_with(a: &MonomialAlgebra, n_max: usize, opts: &EngineOptions) -> Result<GradedDims> {
    let top = n_max + 1;
    let blocks = blocks(a, top, opts)?;
    let graded = blocks
        .par_iter()
        .map(|(q, block)| {
            let seq = total_complex(a, block, top)?;
            let report = homology_dims(&seq, n_max, a.field())?;
            Ok((*q, report.dims))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(GradedDims::from_blocks(n_max, graded))
}

/// Components of `D_n`, as the list of `C` degrees `n, n−2, …`.
fn total_components(n: usize) -> Vec<usize> {
    (0..=n / 2).map(|i| n - 2 * i).collect()
}

fn total_complex(a: &MonomialAlgebra, block: &DegreeBlock, top: usize) -> Result<BoundarySequence> {
    let field = a.field();
    let offsets = |n: usize| -> (Vec<usize>, usize) {
        let mut off = Vec::new();
        let mut acc = 0;
        for m in total_components(n) {
            off.push(acc);
            acc += block.dim(m);
        }
        (off, acc)
    };
    let dims: Vec<usize> = (0..=top).map(|n| offsets(n).1).collect();
    let bs: Vec<SparseMatrix> = (1..=top).map(|n| block.hochschild_b(a, n)).collect();
    let big_bs: Vec<SparseMatrix> = (0..top).map(|n| block.connes_b(a, n)).collect();
    let mut mats = Vec::new();
    for n in 1..=top {
        let (src_off, _) = offsets(n);
        let (dst_off, dst_dim) = offsets(n - 1);
        let src = total_components(n);
        let mut columns: Vec<Vec<(usize, crate::linalg::Scalar)>> = Vec::new();
        for (j, &m) in src.iter().enumerate() {
            debug_assert_eq!(columns.len(), src_off[j]);
            for col in 0..block.dim(m) {
                let mut entries = Vec::new();
                // b: C_m → C_{m−1}, the j-th component of D_{n−1}.
                if m >= 1 {
                    for (i, v) in bs[m - 1].column(col) {
                        entries.push((dst_off[j] + i, v.clone()));
                    }
                }
                // B: C_m → C_{m+1}, the (j−1)-th component of D_{n−1}.
                if j >= 1 {
                    for (i, v) in big_bs[m].column(col) {
                        entries.push((dst_off[j - 1] + i, v.clone()));
                    }
                }
                columns.push(entries);
            }
        }
        mats.push(SparseMatrix::from_columns(dst_dim, columns, field));
    }
    BoundarySequence::new(dims, mats)
}

/// Verifies `b∘b = 0`, `B∘B = 0` and `bB + Bb = 0` through degree `n_max`.
pub fn check_mixed_complex(a: &MonomialAlgebra, n_max: usize) -> Result<()> {
    let field = a.field();
    let top = n_max + 2;
    for (_, block) in blocks(a, top, &EngineOptions::default())? {
        for n in 0..=n_max {
            let big_b = block.connes_b(a, n);
            let big_b_next = block.connes_b(a, n + 1);
            if !big_b_next.mul(&big_b, field).is_zero() {
                return Err(Error::NotAComplex { degree: n });
            }
            if n >= 1 {
                let b = block.hochschild_b(a, n);
                let b_prev_ok = n < 2 || block.hochschild_b(a, n - 1).mul(&b, field).is_zero();
                if !b_prev_ok {
                    return Err(Error::NotAComplex { degree: n });
                }
            }
            // On C_n: b_{n+1} B_n + B_{n−1} b_n.
            let b_up = block.hochschild_b(a, n + 1);
            let mut anti = b_up.mul(&big_b, field);
            if n >= 1 {
                let b = block.hochschild_b(a, n);
                let big_b_prev = block.connes_b(a, n - 1);
                anti = anti.add(&big_b_prev.mul(&b, field), field);
            }
            if !anti.is_zero() {
                return Err(Error::NotAComplex { degree: n });
            }
        }
    }
    Ok(())
}

/// `HH_0 = HC_0`; both equal `dim A / [A, A]`.
pub fn hh0(a: &MonomialAlgebra) -> Result<usize> {
    Ok(hh(a, 0)?.total[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;
    use crate::quiver::{Path, Quiver};

    fn dual_numbers(field: Field) -> MonomialAlgebra {
        let q = Quiver::new(&["v"], &[("x", "v", "v")]).unwrap();
        MonomialAlgebra::truncated(q, 2, field).unwrap()
    }

    fn cycle2_gldim2() -> MonomialAlgebra {
        let q = Quiver::new(&["1", "2"], &[("alpha", "1", "2"), ("beta", "2", "1")]).unwrap();
        let rel = q.path_from_names(&["beta", "alpha"]).unwrap();
        MonomialAlgebra::new(q, vec![rel], Field::Rational).unwrap()
    }

    fn two_loops_rad2() -> MonomialAlgebra {
        let q = Quiver::new(&["v"], &[("x", "v", "v"), ("y", "v", "v")]).unwrap();
        MonomialAlgebra::truncated(q, 2, Field::Rational).unwrap()
    }

    fn formatted(a: &MonomialAlgebra, n: usize, q: Option<usize>) -> Vec<String> {
        chain_basis(a, n, q).iter().map(|c| c.format(a)).collect()
    }

    #[test]
    fn dual_number_chains() {
        let a = dual_numbers(Field::Rational);
        assert_eq!(formatted(&a, 1, None), ["e_v ⊗ x", "x ⊗ x"]);
        assert_eq!(formatted(&a, 2, Some(2)), ["e_v ⊗ x ⊗ x"]);
        let path = MonomialAlgebra::new(
            Quiver::from_indices(2, &[(0, 1)]),
            Vec::<Path>::new(),
            Field::Rational,
        )
        .unwrap();
        assert!(chain_basis(&path, 1, None).is_empty());
    }

    #[test]
    fn dual_number_boundaries() {
        let q = Field::Rational;
        let a = dual_numbers(q);
        assert!(boundary_b_matrix(&a, 1).unwrap().is_zero());
        let b2 = boundary_b_matrix(&a, 2).unwrap();
        // columns (e,x,x), (x,x,x); rows (e,x), (x,x)
        assert_eq!(b2.get(1, 0), q.from_int(2));
        assert_eq!(b2.nnz(), 1);
        assert_eq!(b2.rank(q), 1);
        let f2 = Field::Prime(2);
        assert_eq!(boundary_b_matrix(&dual_numbers(f2), 2).unwrap().rank(f2), 0);
    }

    #[test]
    fn cycle2_gldim2_first_boundary() {
        // b(alpha ⊗ beta) = alpha·beta − beta·alpha = alpha beta.
        let a = cycle2_gldim2();
        let chains = chain_basis(&a, 1, None);
        let b1 = boundary_b_matrix(&a, 1).unwrap();
        let c0 = chain_basis(&a, 0, None);
        let col = chains
            .iter()
            .position(|c| c.format(&a) == "alpha ⊗ beta")
            .unwrap();
        let row = c0
            .iter()
            .position(|c| c.format(&a) == "alpha beta")
            .unwrap();
        assert_eq!(b1.column(col), &vec![(row, Field::Rational.one())]);
    }

    #[test]
    fn connes_operator_examples() {
        let q = Field::Rational;
        let a = dual_numbers(q);
        // B(e) = 0, B(x) = e ⊗ x
        let b0 = connes_b_matrix(&a, 0).unwrap();
        assert!(b0.column(0).is_empty());
        assert_eq!(b0.column(1), &vec![(0, q.one())]);
        // B on C_1 vanishes: the two terms of B(x ⊗ x) cancel.
        assert!(connes_b_matrix(&a, 1).unwrap().is_zero());
    }

    #[test]
    fn dual_numbers_homology() {
        assert_eq!(
            hh(&dual_numbers(Field::Rational), 4).unwrap().total,
            vec![2, 1, 1, 1, 1]
        );
        assert_eq!(
            hh(&dual_numbers(Field::Prime(2)), 4).unwrap().total,
            vec![2, 2, 2, 2, 2]
        );
    }

    #[test]
    fn radical_square_zero_two_loops() {
        let t = hh(&two_loops_rad2(), 2).unwrap().total;
        assert_eq!(&t[1..], &[3, 5]);
    }

    #[test]
    fn acyclic_truncated() {
        let q = Quiver::from_indices(3, &[(0, 1), (1, 2)]);
        let a = MonomialAlgebra::truncated(q, 2, Field::Rational).unwrap();
        assert_eq!(hh(&a, 4).unwrap().total, vec![3, 0, 0, 0, 0]);
    }

    #[test]
    fn cyclic_homology_of_semisimple_part() {
        let q = Quiver::from_indices(2, &[(0, 1)]);
        let a = MonomialAlgebra::new(q, Vec::<Path>::new(), Field::Rational).unwrap();
        assert_eq!(hc(&a, 4).unwrap().total, vec![2, 0, 2, 0, 2]);
    }

    #[test]
    fn hc0_equals_hh0() {
        for a in [
            dual_numbers(Field::Rational),
            cycle2_gldim2(),
            two_loops_rad2(),
        ] {
            assert_eq!(hc(&a, 0).unwrap().total[0], hh0(&a).unwrap());
        }
    }

    #[test]
    fn mixed_complex_axioms() {
        for a in [
            dual_numbers(Field::Rational),
            cycle2_gldim2(),
            two_loops_rad2(),
            dual_numbers(Field::Prime(3)),
        ] {
            check_mixed_complex(&a, 4).unwrap();
        }
    }

    #[test]
    fn size_cap_is_enforced() {
        let opts = EngineOptions { size_cap: 5 };
        assert!(matches!(
            hh_with(&two_loops_rad2(), 4, &opts),
            Err(Error::SizeCap { .. })
        ));
    }
}
