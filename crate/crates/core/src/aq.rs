//! The four-dimensional algebras `A_q = k⟨x, y⟩ / (x², xy + q·yx, y²)`.
//!
//! Besides the generic bar complex, `A_q` has a small minimal resolution
//! with generators `f^n_0, …, f^n_n` in degree `n`, where
//! `f^n_i = f^{n−1}_{i−1} ⊗ y + q^i f^{n−1}_i ⊗ x`. Tensoring it down gives
//! the complex `A ⊗ k^{n+1}` with differential `τ^n`, and applying
//! `Hom_{A^e}(−, A)` gives cochains `A^{n+1}` with differential `d^n`.
//!
//! Basis order is `1, y, x, yx`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hochschild::sc::{sc_hch, sc_hh, ScAlgebra};
use crate::linalg::{homology_dims, BoundarySequence, Field, Scalar, SparseMatrix};

pub const ONE: usize = 0;
pub const Y: usize = 1;
pub const X: usize = 2;
pub const YX: usize = 3;

const LABELS: [&str; 4] = ["1", "y", "x", "yx"];

/// Largest order tried by [`AqAlgebra::root_of_unity_order`].
pub const ROOT_OF_UNITY_SEARCH: u32 = 24;

#[derive(Clone, Debug)]
pub struct AqAlgebra {
    q: Scalar,
    field: Field,
    sc: ScAlgebra,
}

/// Coefficient vector `c·b_k`, or zero.
type Term = Option<(usize, Scalar)>;

impl AqAlgebra {
    /// Builds the multiplication table; `q = 0` is allowed.
    pub fn new(q: &Scalar, field: Field) -> Result<AqAlgebra> {
        let q = field.element(q)?;
        let mut table = vec![vec![vec![field.zero(); 4]; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                if let Some((k, c)) = basis_product(&q, field, i, j) {
                    table[i][j][k] = c;
                }
            }
        }
        let mut unit = vec![field.zero(); 4];
        unit[ONE] = field.one();
        let labels = LABELS.iter().map(|s| s.to_string()).collect();
        let sc = ScAlgebra::new(labels, &table, &unit, field)?;
        Ok(AqAlgebra { q, field, sc })
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn as_sc(&self) -> &ScAlgebra {
        &self.sc
    }

    fn mul(&self, i: usize, j: usize) -> Term {
        basis_product(&self.q, self.field, i, j)
    }

    fn q_pow(&self, e: usize) -> Scalar {
        self.field.pow(&self.q, e as u32)
    }

    /// Smallest `m ≤ 24` with `q^m = 1`, if any.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        (1..=ROOT_OF_UNITY_SEARCH).find(|&m| self.field.pow(&self.q, m) == self.field.one())
    }

    /// Matrix of `τ^n : A ⊗ k^{n+1} → A ⊗ k^n`, for `n ≥ 1`.
    ///
    /// `τ^n(λ ⊗ f_i) = λx ⊗ f_i + (−1)^n q^i xλ ⊗ f_i
    ///               + q^{n−i} λy ⊗ f_{i−1} + (−1)^n yλ ⊗ f_{i−1}`,
    /// where `f_j` in the target exists for `0 ≤ j ≤ n−1`. The element
    /// `λ ⊗ f_i` has index `4i + λ`.
    pub fn tau_matrix(&self, n: usize) -> SparseMatrix {
        assert!(n >= 1, "τ^n is defined for n ≥ 1");
        let f = self.field;
        let sn = f.from_int(if n.is_multiple_of(2) { 1 } else { -1 });
        let mut columns = Vec::with_capacity(4 * (n + 1));
        for i in 0..=n {
            for lambda in 0..4 {
                let mut col = Vec::new();
                let mut add = |term: Term, coeff: Scalar, j: usize| {
                    if let Some((k, c)) = term {
                        col.push((4 * j + k, f.mul(&coeff, &c)));
                    }
                };
                if i < n {
                    add(self.mul(lambda, X), f.one(), i);
                    add(self.mul(X, lambda), f.mul(&sn, &self.q_pow(i)), i);
                }
                if i >= 1 {
                    add(self.mul(lambda, Y), self.q_pow(n - i), i - 1);
                    add(self.mul(Y, lambda), sn.clone(), i - 1);
                }
                columns.push(col);
            }
        }
        SparseMatrix::from_columns(4 * n, columns, f)
    }

    /// Matrix of `d^n : A^{n+1} → A^{n+2}` on cochains, given by their
    /// values `v_0, …, v_n` on the generators:
    /// `(dv)_j = x v_j + q^{n+1−j} y v_{j−1} + (−1)^{n+1} v_{j−1} y + (−1)^{n+1} q^j v_j x`.
    pub fn coboundary_matrix(&self, n: usize) -> SparseMatrix {
        let f = self.field;
        let sn1 = f.from_int(if (n + 1).is_multiple_of(2) { 1 } else { -1 });
        let mut columns = Vec::with_capacity(4 * (n + 1));
        for i in 0..=n {
            for lambda in 0..4 {
                // v_i = λ contributes to (dv)_i and (dv)_{i+1}.
                let mut col = Vec::new();
                let mut add = |term: Term, coeff: Scalar, j: usize| {
                    if let Some((k, c)) = term {
                        col.push((4 * j + k, f.mul(&coeff, &c)));
                    }
                };
                add(self.mul(X, lambda), f.one(), i);
                add(self.mul(lambda, X), f.mul(&sn1, &self.q_pow(i)), i);
                let j = i + 1;
                add(self.mul(Y, lambda), self.q_pow(n + 1 - j), j);
                add(self.mul(lambda, Y), sn1.clone(), j);
                columns.push(col);
            }
        }
        SparseMatrix::from_columns(4 * (n + 2), columns, f)
    }

    /// `hh_n(A_q) = 4(n+1) − rank τ^n − rank τ^{n+1}` for `n ≤ n_max`.
    pub fn hh(&self, n_max: usize) -> Result<Vec<usize>> {
        let top = n_max + 1;
        let dims = (0..=top).map(|n| 4 * (n + 1)).collect();
        let mats = (1..=top).map(|n| self.tau_matrix(n)).collect();
        let seq = BoundarySequence::new(dims, mats)?;
        Ok(homology_dims(&seq, n_max, self.field)?.dims)
    }

    /// `hch^n(A_q) = 4(n+1) − rank d^n − rank d^{n−1}` for `n ≤ n_max`.
    pub fn hch(&self, n_max: usize) -> Result<Vec<usize>> {
        let top = n_max + 1;
        let dims = (0..=top).map(|n| 4 * (n + 1)).collect();
        let mats = (0..top)
            .map(|n| self.coboundary_matrix(n).transpose())
            .collect();
        let seq = BoundarySequence::new(dims, mats)?;
        Ok(homology_dims(&seq, n_max, self.field)?.dims)
    }

    /// Ranks of `τ^1, …, τ^{n_max}`.
    pub fn tau_ranks(&self, n_max: usize) -> Vec<usize> {
        (1..=n_max)
            .map(|n| self.tau_matrix(n).rank(self.field))
            .collect()
    }
}

/// The upper bound on `rank τ^n`: `2n − 1` for odd `n`, `2n + 1` for even `n`.
pub fn tau_rank_bound(n: usize) -> usize {
    if n % 2 == 1 {
        2 * n - 1
    } else {
        2 * n + 1
    }
}

/// `b_i · b_j` in the basis `1, y, x, yx`.
fn basis_product(q: &Scalar, field: Field, i: usize, j: usize) -> Term {
    match (i, j) {
        (ONE, k) | (k, ONE) => Some((k, field.one())),
        (Y, X) => Some((YX, field.one())),
        (X, Y) => {
            let c = field.neg(q);
            (!c.is_zero()).then_some((YX, c))
        }
        _ => None,
    }
}

pub fn build_aq(q: &Scalar, field: Field) -> Result<AqAlgebra> {
    AqAlgebra::new(q, field)
}

/// Both routes for `A_q` in degrees `≤ n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AqCrosscheck {
    pub resolution_hh: Vec<usize>,
    pub bar_hh: Vec<usize>,
    pub resolution_hch: Vec<usize>,
    pub bar_hch: Vec<usize>,
}

/// Compares the resolution route with the bar complex; a disagreement is an error.
pub fn crosscheck_aq(a: &AqAlgebra, n_max: usize) -> Result<AqCrosscheck> {
    let report = AqCrosscheck {
        resolution_hh: a.hh(n_max)?,
        bar_hh: sc_hh(a.as_sc(), n_max)?,
        resolution_hch: a.hch(n_max)?,
        bar_hch: sc_hch(a.as_sc(), n_max)?,
    };
    if report.resolution_hh != report.bar_hh {
        return Err(Error::Mismatch(format!(
            "hh: resolution {:?}, bar complex {:?}",
            report.resolution_hh, report.bar_hh
        )));
    }
    if report.resolution_hch != report.bar_hch {
        return Err(Error::Mismatch(format!(
            "hch: resolution {:?}, bar complex {:?}",
            report.resolution_hch, report.bar_hch
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aq(q: i64, field: Field) -> AqAlgebra {
        AqAlgebra::new(&Scalar::from_integer(q.into()), field).unwrap()
    }

    #[test]
    fn tables() {
        let f = Field::Rational;
        let a = aq(2, f);
        assert_eq!(a.as_sc().product(X, Y), &vec![(YX, f.from_int(-2))]);
        let c = aq(-1, f);
        assert_eq!(c.as_sc().product(X, Y), c.as_sc().product(Y, X));
        let f2 = Field::Prime(2);
        assert_eq!(aq(1, f2).as_sc(), aq(-1, f2).as_sc());
    }

    /// The closed forms obtained by substituting each basis element for λ.
    #[test]
    fn tau_specializations() {
        let f = Field::Rational;
        for q in [2, -1, 3] {
            let a = aq(q, f);
            let qp = |e: usize| f.pow(&f.from_int(q), e as u32);
            for n in 1..=5usize {
                let t = a.tau_matrix(n);
                let sn = if n % 2 == 0 { 1 } else { -1 };
                let s = f.from_int(sn);
                for i in 0..=n {
                    let col = |l: usize| 4 * i + l;
                    let row = |j: usize, k: usize| 4 * j + k;
                    if i < n {
                        assert_eq!(
                            t.get(row(i, X), col(ONE)),
                            f.add(&f.one(), &f.mul(&s, &qp(i)))
                        );
                        let c = f.add(&f.one(), &f.neg(&f.mul(&s, &qp(i + 1))));
                        assert_eq!(t.get(row(i, YX), col(Y)), c);
                    }
                    if i >= 1 {
                        assert_eq!(t.get(row(i - 1, Y), col(ONE)), f.add(&qp(n - i), &s));
                        let c = f.add(&f.neg(&qp(n - i + 1)), &s);
                        assert_eq!(t.get(row(i - 1, YX), col(X)), c);
                    }
                    assert!(t.column(col(YX)).is_empty());
                }
            }
        }
    }

    #[test]
    fn first_tau() {
        let f = Field::Rational;
        let t = aq(2, f).tau_matrix(1);
        assert_eq!(t.nnz(), 2);
        assert_eq!(t.get(YX, Y), f.from_int(3));
        assert_eq!(t.get(YX, 4 + X), f.from_int(-3));
        assert_eq!(t.rank(f), 1);
        assert!(aq(-1, f).tau_matrix(1).is_zero());
    }

    #[test]
    fn homology_and_cohomology() {
        let f = Field::Rational;
        let a = aq(2, f);
        let hh = a.hh(8).unwrap();
        assert_eq!(hh[0], 3);
        assert!(hh.iter().all(|&d| d >= 2));
        let hch = a.hch(6).unwrap();
        assert_eq!(hch[0], 2);
        assert!(hch[2] > 0);
        assert!(hch[3..].iter().all(|&d| d == 0));
        assert_eq!(aq(-1, f).hh(0).unwrap(), [4]);
    }

    #[test]
    fn rank_bounds() {
        for (q, field) in [
            (2, Field::Rational),
            (-1, Field::Rational),
            (1, Field::Prime(2)),
        ] {
            for (k, r) in aq(q, field).tau_ranks(8).into_iter().enumerate() {
                assert!(r <= tau_rank_bound(k + 1));
            }
        }
    }

    #[test]
    fn crosscheck() {
        crosscheck_aq(&aq(2, Field::Rational), 3).unwrap();
        crosscheck_aq(&aq(-1, Field::Rational), 2).unwrap();
        crosscheck_aq(&aq(1, Field::Prime(2)), 2).unwrap();
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(aq(2, Field::Rational).root_of_unity_order(), None);
        assert_eq!(aq(-1, Field::Rational).root_of_unity_order(), Some(2));
        assert_eq!(aq(2, Field::Prime(5)).root_of_unity_order(), Some(4));
    }
}
