//! Column-sparse exact matrices and their rank.
//!
//! Boundary matrices of the complexes in this crate have a handful of small
//! integer entries per column, so they are stored column by column as sorted
//! `(row, value)` lists. Rank over `Q` clears denominators column-wise and
//! runs fraction-free elimination on integers (machine `i128` first, falling
//! back to big integers on overflow); rank over `F_p` runs ordinary
//! elimination on residues.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::field::{inv_mod, Field, Scalar};

/// Sorted `(index, value)` pairs with no zero values.
pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

/// Sums duplicate indices, reduces into `field` and drops zeros.
pub fn collect_vec(mut entries: Vec<(usize, Scalar)>, field: Field) -> SparseVec {
    entries.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = field.add(acc, &v),
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds a matrix from unsorted column entries; duplicates are summed.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, Scalar)>>, field: Field) -> Self {
        let columns: Vec<SparseVec> = columns
            .into_iter()
            .map(|c| {
                let c = collect_vec(c, field);
                debug_assert!(c.iter().all(|(i, _)| *i < rows));
                c
            })
            .collect();
        SparseMatrix {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    pub fn from_dense(rows: &[Vec<i64>], field: Field) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let columns = (0..ncols)
            .map(|j| {
                (0..nrows)
                    .map(|i| (i, field.from_int(rows[i][j])))
                    .collect()
            })
            .collect();
        Self::from_columns(nrows, columns, field)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.columns[j]
            .binary_search_by_key(&i, |(r, _)| *r)
            .map(|k| self.columns[j][k].1.clone())
            .unwrap_or_else(|_| Scalar::zero())
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                cols[*i].push((j, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            columns: cols,
        }
    }

    /// Applies the matrix to a sparse vector.
    pub fn apply(&self, v: &SparseVec, field: Field) -> SparseVec {
        let mut acc = Vec::new();
        for (j, x) in v {
            for (i, a) in &self.columns[*j] {
                acc.push((*i, field.mul(a, x)));
            }
        }
        collect_vec(acc, field)
    }

    /// `self · other`; panics on a shape mismatch.
    pub fn mul(&self, other: &SparseMatrix, field: Field) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            columns: other
                .columns
                .par_iter()
                .map(|c| self.apply(c, field))
                .collect(),
        }
    }

    pub fn add(&self, other: &SparseMatrix, field: Field) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| collect_vec(a.iter().chain(b).cloned().collect(), field))
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }

    /// Reorders rows and columns: entry `(i, j)` moves to `(row_perm[i], col_perm[j])`.
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> SparseMatrix {
        let mut columns = vec![Vec::new(); self.cols];
        for (j, col) in self.columns.iter().enumerate() {
            let mut c: SparseVec = col.iter().map(|(i, v)| (row_perm[*i], v.clone())).collect();
            c.sort_by_key(|(i, _)| *i);
            columns[col_perm[j]] = c;
        }
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }

    /// Exact rank over `field`.
    pub fn rank(&self, field: Field) -> usize {
        if self.is_zero() {
            return 0;
        }
        match field {
            Field::Rational => rank_rational(&self.columns),
            Field::Prime(p) => rank_mod_p(&self.columns, p),
        }
    }

    /// Stacks matrices with equal row counts side by side.
    pub fn hstack(parts: &[&SparseMatrix]) -> SparseMatrix {
        let rows = parts.first().map_or(0, |m| m.rows);
        let mut columns = Vec::new();
        for m in parts {
            assert_eq!(m.rows, rows);
            columns.extend(m.columns.iter().cloned());
        }
        SparseMatrix {
            rows,
            cols: columns.len(),
            columns,
        }
    }
}

/// Integer types usable by the fraction-free elimination.
trait ElimInt: Clone + Send + Sync + Sized {
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn gcd(&self, other: &Self) -> Self;
    fn is_one(&self) -> bool;
    /// `a·x − b·y`, or `None` on overflow.
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn mul(&self, x: &Self) -> Option<Self>;
    fn div_exact(&self, d: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl ElimInt for i128 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn mul(&self, x: &Self) -> Option<Self> {
        self.checked_mul(*x)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl ElimInt for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn mul(&self, x: &Self) -> Option<Self> {
        Some(self * x)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn negate(&self) -> Self {
        -self
    }
}

type IntVec<T> = Vec<(usize, T)>;

fn rank_rational(columns: &[SparseVec]) -> usize {
    let integral: Vec<IntVec<BigInt>> = columns
        .iter()
        .filter(|c| !c.is_empty())
        .map(|c| {
            let lcm = c
                .iter()
                .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
            c.iter()
                .map(|(i, v)| (*i, v.numer() * (&lcm / v.denom())))
                .collect()
        })
        .collect();
    let small: Option<Vec<IntVec<i128>>> = integral
        .iter()
        .map(|c| {
            c.iter()
                .map(|(i, v)| v.to_i128().map(|x| (*i, x)))
                .collect::<Option<Vec<_>>>()
        })
        .collect();
    if let Some(small) = small {
        if let Some(r) = fraction_free_rank(small) {
            return r;
        }
    }
    fraction_free_rank(integral).expect("big integer elimination cannot overflow")
}

/// Divides out the content and makes the leading coefficient positive.
fn primitive<T: ElimInt>(v: &mut IntVec<T>) {
    let mut g = v[0].1.clone();
    for (_, x) in v.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(x);
    }
    if v[0].1.is_negative() {
        g = g.negate();
    }
    if !g.is_one() {
        for (_, x) in v.iter_mut() {
            *x = x.div_exact(&g);
        }
    }
}

/// Echelonizes the vectors one at a time against the pivots found so far,
/// shortest vectors first. Every update is `a·v − b·pivot` with `a, b`
/// reduced by their gcd, followed by content removal, so no division ever
/// leaves the integers. Returns `None` if the integer type overflows.
fn fraction_free_rank<T: ElimInt>(mut vectors: Vec<IntVec<T>>) -> Option<usize> {
    vectors.sort_by_key(Vec::len);
    let mut pivots: HashMap<usize, IntVec<T>> = HashMap::new();
    for mut v in vectors {
        loop {
            if v.is_empty() {
                break;
            }
            let lead = v[0].0;
            let Some(p) = pivots.get(&lead) else {
                primitive(&mut v);
                pivots.insert(lead, v);
                break;
            };
            let (a, b) = {
                let pa = &p[0].1;
                let vb = &v[0].1;
                let g = pa.gcd(vb);
                (pa.div_exact(&g), vb.div_exact(&g))
            };
            v = combine(&a, &v, &b, p)?;
            if !v.is_empty() {
                primitive(&mut v);
            }
        }
    }
    Some(pivots.len())
}

/// `a·v − b·p` on sorted sparse vectors.
fn combine<T: ElimInt>(a: &T, v: &IntVec<T>, b: &T, p: &IntVec<T>) -> Option<IntVec<T>> {
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < p.len() {
        let vi = v.get(i).map(|e| e.0);
        let pj = p.get(j).map(|e| e.0);
        let (idx, val) = match (vi, pj) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
                (x, T::cross(a, &v[i - 1].1, b, &p[j - 1].1)?)
            }
            (Some(x), Some(y)) if x < y => {
                i += 1;
                (x, a.mul(&v[i - 1].1)?)
            }
            (Some(x), None) => {
                i += 1;
                (x, a.mul(&v[i - 1].1)?)
            }
            (_, Some(y)) => {
                j += 1;
                (y, b.mul(&p[j - 1].1)?.negate())
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((idx, val));
        }
    }
    Some(out)
}

fn rank_mod_p(columns: &[SparseVec], p: u64) -> usize {
    let mut vectors: Vec<Vec<(usize, u64)>> = columns
        .iter()
        .filter(|c| !c.is_empty())
        .map(|c| c.iter().map(|(i, v)| (*i, Field::residue(v))).collect())
        .collect();
    vectors.sort_by_key(Vec::len);
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for mut v in vectors {
        loop {
            if v.is_empty() {
                break;
            }
            let lead = v[0].0;
            let Some(piv) = pivots.get(&lead) else {
                let inv = inv_mod(v[0].1, p);
                for (_, x) in v.iter_mut() {
                    *x = *x * inv % p;
                }
                pivots.insert(lead, v);
                break;
            };
            let factor = v[0].1;
            v = axpy_mod(&v, factor, piv, p);
        }
    }
    pivots.len()
}

/// `v − f·piv` modulo `p`.
fn axpy_mod(v: &[(usize, u64)], f: u64, piv: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(v.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < piv.len() {
        let vi = v.get(i).map(|e| e.0);
        let pj = piv.get(j).map(|e| e.0);
        let (idx, val) = match (vi, pj) {
            (Some(x), Some(y)) if x == y => {
                let val = (v[i].1 + p - f * piv[j].1 % p) % p;
                i += 1;
                j += 1;
                (x, val)
            }
            (Some(x), Some(y)) if x < y => {
                i += 1;
                (x, v[i - 1].1)
            }
            (Some(x), None) => {
                i += 1;
                (x, v[i - 1].1)
            }
            (_, Some(y)) => {
                let val = (p - f * piv[j].1 % p) % p;
                j += 1;
                (y, val)
            }
            (None, None) => unreachable!(),
        };
        if val != 0 {
            out.push((idx, val));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let q = Field::Rational;
        assert_eq!(
            SparseMatrix::from_dense(&[vec![1, 1], vec![1, 1]], q).rank(q),
            1
        );
        let id = SparseMatrix::from_dense(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], q);
        assert_eq!(id.rank(q), 3);
        let f2 = Field::Prime(2);
        assert_eq!(SparseMatrix::from_dense(&[vec![2]], f2).rank(f2), 0);
        assert_eq!(SparseMatrix::from_dense(&[vec![2]], q).rank(q), 1);
    }

    #[test]
    fn rational_entries_are_cleared() {
        let q = Field::Rational;
        let half = Scalar::new(1.into(), 2.into());
        let third = Scalar::new(1.into(), 3.into());
        let m = SparseMatrix::from_columns(
            2,
            vec![
                vec![(0, half.clone()), (1, third.clone())],
                vec![
                    (0, Scalar::from_integer(3.into())),
                    (1, Scalar::from_integer(2.into())),
                ],
            ],
            q,
        );
        assert_eq!(m.rank(q), 1);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // Entries near 2^62 force the i128 path to overflow during elimination.
        let q = Field::Rational;
        let big = 1i64 << 62;
        let m = SparseMatrix::from_dense(
            &[
                vec![big, big - 1, 3],
                vec![big - 3, big, 5],
                vec![7, big - 7, big],
            ],
            q,
        );
        let mut ints: Vec<IntVec<i128>> = m
            .columns()
            .iter()
            .map(|c| {
                c.iter()
                    .map(|(i, v)| (*i, v.numer().to_i128().unwrap()))
                    .collect()
            })
            .collect();
        ints.iter_mut()
            .for_each(|c| c.iter_mut().for_each(|(_, x)| *x *= 1 << 40));
        assert!(fraction_free_rank(ints).is_none());
        assert_eq!(m.rank(q), 3);
    }

    #[test]
    fn product_and_transpose() {
        let q = Field::Rational;
        let a = SparseMatrix::from_dense(&[vec![1, 2], vec![0, 1]], q);
        let b = SparseMatrix::from_dense(&[vec![1, 0], vec![3, 1]], q);
        let ab = a.mul(&b, q);
        assert_eq!(ab, SparseMatrix::from_dense(&[vec![7, 2], vec![3, 1]], q));
        assert_eq!(a.transpose().transpose(), a);
    }
}
