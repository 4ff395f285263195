//! Algebras given by structure constants and their normalized bar
//! (co)chain complexes.
//!
//! The chains are `C_n = S ⊗ S̄^{⊗n}` with `S̄ = S / k·1`, the cochains
//! `Hom(S̄^{⊗n}, S)`. Both compute Hochschild (co)homology of `S`. The
//! unnormalized complex `S^{⊗(n+1)}` is kept as a cross-check for small `n`.

use rayon::prelude::*;

use super::mixed::EngineOptions;
use crate::error::{Error, Result};
use crate::linalg::sparse::collect_vec;
use crate::linalg::{homology_dims, BoundarySequence, Field, Scalar, SparseMatrix, SparseVec};
use crate::quiver::MonomialAlgebra;
use num_traits::Zero;

/// A finite-dimensional unital associative algebra on a fixed basis.
///
/// The unit is always one of the basis vectors: when constructed from a
/// table whose unit is a combination, the basis is changed so that it is.
#[derive(Clone, Debug, PartialEq)]
pub struct ScAlgebra {
    labels: Vec<String>,
    field: Field,
    /// `products[i * dim + j]` is `b_i · b_j`.
    products: Vec<SparseVec>,
    unit: usize,
}

impl ScAlgebra {
    /// Validates and stores a multiplication table.
    ///
    /// `table[i][j]` is the coordinate vector of `b_i · b_j` and `unit` the
    /// coordinate vector of the identity. Associativity and both unit laws
    /// are checked on all basis elements.
    pub fn new(
        labels: Vec<String>,
        table: &[Vec<Vec<Scalar>>],
        unit: &[Scalar],
        field: Field,
    ) -> Result<ScAlgebra> {
        let d = labels.len();
        let bad = |what: &str| Error::BadStructureConstants(what.to_string());
        if d == 0 || table.len() != d || unit.len() != d {
            return Err(bad("shape"));
        }
        let mut products = Vec::with_capacity(d * d);
        for row in table {
            if row.len() != d {
                return Err(bad("shape"));
            }
            for v in row {
                if v.len() != d {
                    return Err(bad("shape"));
                }
                let entries = v
                    .iter()
                    .enumerate()
                    .map(|(k, x)| Ok((k, field.element(x)?)))
                    .collect::<Result<Vec<_>>>()?;
                products.push(collect_vec(entries, field));
            }
        }
        let unit = unit
            .iter()
            .map(|x| field.element(x))
            .collect::<Result<Vec<_>>>()?;
        let j = unit
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| bad("unit law"))?;
        let mut labels = labels;
        let products = if is_basis_vector(&unit, j) {
            products
        } else {
            labels[j] = "1".to_string();
            rebase(&products, &unit, j, field)
        };
        let s = ScAlgebra {
            labels,
            field,
            products,
            unit: j,
        };
        s.check_unit().map_err(|_| bad("unit law"))?;
        s.check_associative().map_err(|_| bad("associativity"))?;
        Ok(s)
    }

    /// The ground field as a one-dimensional algebra.
    pub fn field_itself(field: Field) -> ScAlgebra {
        ScAlgebra {
            labels: vec!["1".to_string()],
            field,
            products: vec![vec![(0, field.one())]],
            unit: 0,
        }
    }

    /// The path basis of a monomial algebra with concatenation.
    pub fn from_monomial(a: &MonomialAlgebra) -> ScAlgebra {
        let d = a.dim();
        let field = a.field();
        let labels = a
            .basis()
            .iter()
            .map(|p| a.quiver().format_path(p))
            .collect();
        let table: Vec<Vec<Vec<Scalar>>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut v = vec![field.zero(); d];
                        if let Some(k) = a.multiply(i, j) {
                            v[k] = field.one();
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let mut unit = vec![field.zero(); d];
        for v in 0..a.quiver().vertex_count() {
            unit[a.trivial_index(v)] = field.one();
        }
        ScAlgebra::new(labels, &table, &unit, field)
            .expect("path algebras are unital and associative")
    }

    /// The product algebra `S × T`.
    pub fn disjoint(s: &ScAlgebra, t: &ScAlgebra) -> Result<ScAlgebra> {
        same_field(s, t)?;
        let (ds, dt) = (s.dim(), t.dim());
        let d = ds + dt;
        let field = s.field;
        let mut table = vec![vec![vec![field.zero(); d]; d]; d];
        for i in 0..ds {
            for j in 0..ds {
                for (k, c) in s.product(i, j) {
                    table[i][j][*k] = c.clone();
                }
            }
        }
        for i in 0..dt {
            for j in 0..dt {
                for (k, c) in t.product(i, j) {
                    table[ds + i][ds + j][ds + k] = c.clone();
                }
            }
        }
        let mut unit = vec![field.zero(); d];
        unit[s.unit] = field.one();
        unit[ds + t.unit] = field.one();
        let labels = s
            .labels
            .iter()
            .map(|l| format!("({l},0)"))
            .chain(t.labels.iter().map(|l| format!("(0,{l})")))
            .collect();
        ScAlgebra::new(labels, &table, &unit, field)
    }

    /// The tensor product `S ⊗ T` on the basis `b_i ⊗ c_j`, index `i·dim T + j`.
    pub fn tensor(s: &ScAlgebra, t: &ScAlgebra) -> Result<ScAlgebra> {
        same_field(s, t)?;
        let (ds, dt) = (s.dim(), t.dim());
        let d = ds * dt;
        let field = s.field;
        let mut table = vec![vec![vec![field.zero(); d]; d]; d];
        for i1 in 0..ds {
            for j1 in 0..dt {
                for i2 in 0..ds {
                    for j2 in 0..dt {
                        let cell = &mut table[i1 * dt + j1][i2 * dt + j2];
                        for (k, c) in s.product(i1, i2) {
                            for (l, e) in t.product(j1, j2) {
                                cell[k * dt + l] = field.mul(c, e);
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![field.zero(); d];
        unit[s.unit * dt + t.unit] = field.one();
        let labels = s
            .labels
            .iter()
            .flat_map(|a| t.labels.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        ScAlgebra::new(labels, &table, &unit, field)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Basis index of the unit.
    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim() + j]
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let f = self.field;
        let mut acc = Vec::new();
        for (i, a) in u {
            for (j, b) in v {
                let ab = f.mul(a, b);
                for (k, c) in self.product(*i, *j) {
                    acc.push((*k, f.mul(&ab, c)));
                }
            }
        }
        collect_vec(acc, f)
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim() {
            let e = vec![(i, self.field.one())];
            if self.product(self.unit, i) != &e || self.product(i, self.unit) != &e {
                return Err(Error::BadStructureConstants("unit law".into()));
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let d = self.dim();
        let ok = (0..d * d * d).into_par_iter().all(|t| {
            let (i, j, k) = (t / (d * d), (t / d) % d, t % d);
            let bi = vec![(i, self.field.one())];
            let bk = vec![(k, self.field.one())];
            let left = self.multiply(self.product(i, j), &bk);
            let right = self.multiply(&bi, self.product(j, k));
            left == right
        });
        if ok {
            Ok(())
        } else {
            Err(Error::BadStructureConstants("associativity".into()))
        }
    }

    /// Basis indices of `S̄`, in order.
    fn bar_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| i != self.unit).collect()
    }
}

fn is_basis_vector(v: &[Scalar], j: usize) -> bool {
    v.iter().enumerate().all(|(k, c)| {
        if k == j {
            c == &Scalar::from_integer(1.into())
        } else {
            c.is_zero()
        }
    })
}

fn same_field(s: &ScAlgebra, t: &ScAlgebra) -> Result<()> {
    if s.field != t.field {
        return Err(Error::FieldMismatch(
            s.field.to_string(),
            t.field.to_string(),
        ));
    }
    Ok(())
}

/// Replaces `b_j` by the unit `u = Σ c_k b_k` (with `c_j ≠ 0`) and rewrites
/// the table in the new basis.
fn rebase(products: &[SparseVec], unit: &[Scalar], j: usize, field: Field) -> Vec<SparseVec> {
    let d = unit.len();
    let cj_inv = field.inv(&unit[j]).expect("nonzero pivot");
    // New basis vector in old coordinates.
    let new_in_old = |i: usize| -> SparseVec {
        if i == j {
            collect_vec(unit.iter().cloned().enumerate().collect(), field)
        } else {
            vec![(i, field.one())]
        }
    };
    // Old coordinates to new: new_j = v_j / c_j, new_k = v_k − c_k v_j / c_j.
    let to_new = |v: &SparseVec| -> SparseVec {
        let vj = v.iter().find(|(k, _)| *k == j).map(|(_, x)| x.clone());
        let mut out: Vec<(usize, Scalar)> = v.iter().filter(|(k, _)| *k != j).cloned().collect();
        if let Some(vj) = vj {
            let t = field.mul(&vj, &cj_inv);
            for (k, c) in unit.iter().enumerate() {
                if k != j && !c.is_zero() {
                    out.push((k, field.neg(&field.mul(c, &t))));
                }
            }
            out.push((j, t));
        }
        collect_vec(out, field)
    };
    let old_mul = |u: &SparseVec, v: &SparseVec| -> SparseVec {
        let mut acc = Vec::new();
        for (a, x) in u {
            for (b, y) in v {
                let xy = field.mul(x, y);
                for (k, c) in &products[a * d + b] {
                    acc.push((*k, field.mul(&xy, c)));
                }
            }
        }
        collect_vec(acc, field)
    };
    let mut out = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            out.push(to_new(&old_mul(&new_in_old(a), &new_in_old(b))));
        }
    }
    out
}

/// Mixed-radix indexing of `S ⊗ S̄^{⊗n}`: slot 0 ranges over all of `S`,
/// later slots over `S̄`. Lexicographic in the slots.
struct TensorIndex {
    radix0: usize,
    radix: usize,
    n: usize,
}

impl TensorIndex {
    fn len(&self) -> usize {
        self.radix0 * self.radix.pow(self.n as u32)
    }

    fn decode(&self, mut idx: usize) -> Vec<usize> {
        let mut digits = vec![0; self.n + 1];
        for slot in (1..=self.n).rev() {
            digits[slot] = idx % self.radix;
            idx /= self.radix;
        }
        digits[0] = idx;
        digits
    }

    fn encode(&self, digits: &[usize]) -> usize {
        digits[1..]
            .iter()
            .fold(digits[0], |acc, &x| acc * self.radix + x)
    }
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_size(sizes: impl Iterator<Item = usize>, opts: &EngineOptions) -> Result<()> {
    let mut total = 0usize;
    for s in sizes {
        total = total.saturating_add(s);
    }
    if total > opts.size_cap {
        return Err(Error::SizeCap {
            size: total,
            cap: opts.size_cap,
        });
    }
    Ok(())
}

/// `radix^n` with overflow mapped to `usize::MAX`, for size checks.
fn tensor_size(radix0: usize, radix: usize, n: usize) -> usize {
    (0..n)
        .try_fold(radix0, |acc, _| acc.checked_mul(radix))
        .unwrap_or(usize::MAX)
}

/// Matrix of the Hochschild boundary `b_n` on `S ⊗ B^{⊗n}` where `B` is
/// `S̄` (normalized) or `S` (unnormalized).
fn bar_boundary(s: &ScAlgebra, n: usize, normalized: bool) -> SparseMatrix {
    let f = s.field;
    let d = s.dim();
    let slots: Vec<usize> = if normalized {
        s.bar_basis()
    } else {
        (0..d).collect()
    };
    // Position of a basis index among the bar slots, if present.
    let mut slot_of = vec![None; d];
    for (p, &i) in slots.iter().enumerate() {
        slot_of[i] = Some(p);
    }
    let src = TensorIndex {
        radix0: d,
        radix: slots.len(),
        n,
    };
    let dst = TensorIndex {
        radix0: d,
        radix: slots.len(),
        n: n - 1,
    };
    let columns: Vec<Vec<(usize, Scalar)>> = (0..src.len())
        .into_par_iter()
        .map(|col| {
            let digits = src.decode(col);
            let elem: Vec<usize> = std::iter::once(digits[0])
                .chain(digits[1..].iter().map(|&x| slots[x]))
                .collect();
            let mut out = Vec::new();
            let mut push = |target: &[usize], coeff: Scalar| {
                let mut enc = Vec::with_capacity(n);
                enc.push(target[0]);
                for &t in &target[1..] {
                    match slot_of[t] {
                        Some(p) => enc.push(p),
                        None => return,
                    }
                }
                out.push((dst.encode(&enc), coeff));
            };
            for i in 0..n {
                let sg = f.from_int(sign(i));
                for (k, c) in s.product(elem[i], elem[i + 1]) {
                    let mut t = Vec::with_capacity(n);
                    t.extend_from_slice(&elem[..i]);
                    t.push(*k);
                    t.extend_from_slice(&elem[i + 2..]);
                    push(&t, f.mul(&sg, c));
                }
            }
            let sg = f.from_int(sign(n));
            for (k, c) in s.product(elem[n], elem[0]) {
                let mut t = Vec::with_capacity(n);
                t.push(*k);
                t.extend_from_slice(&elem[1..n]);
                push(&t, f.mul(&sg, c));
            }
            out
        })
        .collect();
    SparseMatrix::from_columns(dst.len(), columns, f)
}

fn bar_homology(
    s: &ScAlgebra,
    n_max: usize,
    normalized: bool,
    opts: &EngineOptions,
) -> Result<Vec<usize>> {
    let radix = if normalized { s.dim() - 1 } else { s.dim() };
    let top = n_max + 1;
    check_size((0..=top).map(|n| tensor_size(s.dim(), radix, n)), opts)?;
    let dims = (0..=top).map(|n| tensor_size(s.dim(), radix, n)).collect();
    let mats = (1..=top).map(|n| bar_boundary(s, n, normalized)).collect();
    let seq = BoundarySequence::new(dims, mats)?;
    Ok(homology_dims(&seq, n_max, s.field)?.dims)
}

/// `HH_n(S)` for `n ≤ n_max` from the normalized bar complex.
pub fn sc_hh(s: &ScAlgebra, n_max: usize) -> Result<Vec<usize>> {
    sc_hh_with(s, n_max, &EngineOptions::default())
}

pub fn sc_hh_with(s: &ScAlgebra, n_max: usize, opts: &EngineOptions) -> Result<Vec<usize>> {
    bar_homology(s, n_max, true, opts)
}

/// `HH_n(S)` from the full complex `S^{⊗(n+1)}`; only sensible for tiny `n`.
pub fn sc_hh_unnormalized(s: &ScAlgebra, n_max: usize) -> Result<Vec<usize>> {
    bar_homology(s, n_max, false, &EngineOptions::default())
}

/// Matrix of `d^n : Hom(S̄^{⊗n}, S) → Hom(S̄^{⊗(n+1)}, S)`.
///
/// A cochain is the list of its values on the basis tuples; coordinate
/// `(tuple, k)` has index `tuple · dim + k`.
fn coboundary(s: &ScAlgebra, n: usize) -> SparseMatrix {
    let f = s.field;
    let d = s.dim();
    let bars = s.bar_basis();
    let m = bars.len();
    let mut slot_of = vec![None; d];
    for (p, &i) in bars.iter().enumerate() {
        slot_of[i] = Some(p);
    }
    let src_tuples = TensorIndex {
        radix0: 1,
        radix: m,
        n,
    };
    let dst_tuples = TensorIndex {
        radix0: 1,
        radix: m,
        n: n + 1,
    };
    let rows = dst_tuples.len() * d;
    let cols = src_tuples.len() * d;
    // Rows of d^n, one (n+1)-tuple at a time; transposed at the end.
    let row_blocks: Vec<Vec<(usize, usize, Scalar)>> = (0..dst_tuples.len())
        .into_par_iter()
        .map(|t| {
            let digits = dst_tuples.decode(t);
            let a: Vec<usize> = digits[1..].iter().map(|&x| bars[x]).collect();
            let mut out: Vec<(usize, usize, Scalar)> = Vec::new();
            // a_0 · φ(a_1, …, a_n)
            let tail: Vec<usize> = std::iter::once(0)
                .chain(digits[2..].iter().copied())
                .collect();
            let src = src_tuples.encode(&tail);
            for kp in 0..d {
                for (k, c) in s.product(a[0], kp) {
                    out.push((t * d + k, src * d + kp, c.clone()));
                }
            }
            // (−1)^{i+1} φ(…, a_i a_{i+1}, …)
            for i in 0..n {
                let sg = f.from_int(sign(i + 1));
                for (prod, c) in s.product(a[i], a[i + 1]) {
                    let Some(p) = slot_of[*prod] else { continue };
                    let mut tup = vec![0];
                    tup.extend_from_slice(&digits[1..=i]);
                    tup.push(p);
                    tup.extend_from_slice(&digits[i + 3..]);
                    let src = src_tuples.encode(&tup);
                    let coeff = f.mul(&sg, c);
                    for k in 0..d {
                        out.push((t * d + k, src * d + k, coeff.clone()));
                    }
                }
            }
            // (−1)^{n+1} φ(a_0, …, a_{n−1}) · a_n
            let sg = f.from_int(sign(n + 1));
            let head: Vec<usize> = std::iter::once(0)
                .chain(digits[1..=n].iter().copied())
                .collect();
            let src = src_tuples.encode(&head);
            for kp in 0..d {
                for (k, c) in s.product(kp, a[n]) {
                    out.push((t * d + k, src * d + kp, f.mul(&sg, c)));
                }
            }
            out
        })
        .collect();
    let mut columns: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
    for (r, c, v) in row_blocks.into_iter().flatten() {
        columns[c].push((r, v));
    }
    SparseMatrix::from_columns(rows, columns, f)
}

/// `HH^n(S)` for `n ≤ n_max` from the normalized cochain complex.
pub fn sc_hch(s: &ScAlgebra, n_max: usize) -> Result<Vec<usize>> {
    sc_hch_with(s, n_max, &EngineOptions::default())
}

pub fn sc_hch_with(s: &ScAlgebra, n_max: usize, opts: &EngineOptions) -> Result<Vec<usize>> {
    let m = s.dim() - 1;
    let top = n_max + 1;
    check_size((0..=top).map(|n| tensor_size(s.dim(), m, n)), opts)?;
    // Transposed coboundaries form a chain complex with the same ranks.
    let dims = (0..=top).map(|n| tensor_size(s.dim(), m, n)).collect();
    let mats = (0..top).map(|n| coboundary(s, n).transpose()).collect();
    let seq = BoundarySequence::new(dims, mats)?;
    Ok(homology_dims(&seq, n_max, s.field)?.dims)
}
