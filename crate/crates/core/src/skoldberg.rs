//! Closed formulas for truncated quiver algebras `kQ/kⁿQ`.
//!
//! Writing `q = cn + e` with `0 ≤ e ≤ n − 1`, the graded piece
//! `HH_{p,q}` is `a_q` when `1 ≤ e` and `2c ≤ p ≤ 2c + 1`, a sum over
//! proper cycle orbits of lengths `r | q` when `e = 0` and `p ∈ {2c − 1, 2c}`
//! is positive, `|Q_0|` at `p = q = 0`, and zero otherwise. The kernel and
//! cokernel of multiplication by `m` on `k` both have dimension 1 exactly
//! when `char k | m`, which is how they are evaluated here.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::linalg::field::extended_gcd;
use crate::linalg::Field;
use crate::quiver::{
    cycle_orbits, proper_cycle_orbits, shortest_cycle, CycleWord, MonomialAlgebra, Quiver,
};

/// `kQ/kⁿQ` over `field`.
#[derive(Clone, Debug)]
pub struct TruncatedPresentation {
    quiver: Quiver,
    n: usize,
    field: Field,
}

impl TruncatedPresentation {
    pub fn new(quiver: Quiver, n: usize, field: Field) -> Result<TruncatedPresentation> {
        if n < 2 {
            return Err(Error::BadTruncation(n));
        }
        Ok(TruncatedPresentation { quiver, n, field })
    }

    /// The presentation of a monomial algebra whose ideal is a truncation, if it is one.
    pub fn from_algebra(a: &MonomialAlgebra) -> Option<TruncatedPresentation> {
        let n = a.truncation_index()?;
        Some(TruncatedPresentation {
            quiver: a.quiver().clone(),
            n,
            field: a.field(),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn algebra(&self) -> Result<MonomialAlgebra> {
        MonomialAlgebra::truncated(self.quiver.clone(), self.n, self.field)
    }
}

fn indicator(b: bool) -> usize {
    usize::from(b)
}

fn divisors(q: usize) -> impl Iterator<Item = usize> {
    (1..=q).filter(move |r| q.is_multiple_of(*r))
}

/// Orbit counts `a_q` and `b_r`, memoized per presentation.
struct OrbitCounts<'a> {
    quiver: &'a Quiver,
    a: BTreeMap<usize, usize>,
    b: BTreeMap<usize, usize>,
}

impl<'a> OrbitCounts<'a> {
    fn new(quiver: &'a Quiver) -> Self {
        OrbitCounts {
            quiver,
            a: BTreeMap::new(),
            b: BTreeMap::new(),
        }
    }

    fn a(&mut self, q: usize) -> usize {
        let quiver = self.quiver;
        *self
            .a
            .entry(q)
            .or_insert_with(|| cycle_orbits(quiver, q).count())
    }

    fn b(&mut self, r: usize) -> usize {
        let quiver = self.quiver;
        *self
            .b
            .entry(r)
            .or_insert_with(|| proper_cycle_orbits(quiver, r).count())
    }
}

fn hh_pq_with(t: &TruncatedPresentation, counts: &mut OrbitCounts, p: usize, q: usize) -> usize {
    let n = t.n;
    if p == 0 && q == 0 {
        return t.quiver.vertex_count();
    }
    let (c, e) = q.div_rem(&n);
    if e >= 1 {
        return if 2 * c <= p && p <= 2 * c + 1 {
            counts.a(q)
        } else {
            0
        };
    }
    // e = 0 from here on, so q = cn.
    let odd_case = c >= 1 && p == 2 * c - 1;
    let even_case = c >= 1 && p == 2 * c;
    if !(odd_case || even_case) {
        return 0;
    }
    divisors(q)
        .map(|r| {
            let g = n.gcd(&r);
            let ker_or_coker = indicator(t.field.divides((n / g) as u64));
            counts.b(r) * (g - 1 + ker_or_coker)
        })
        .sum()
}

/// `dim HH_{p,q}` of a truncated algebra.
pub fn hh_pq_truncated(t: &TruncatedPresentation, p: usize, q: usize) -> usize {
    hh_pq_with(t, &mut OrbitCounts::new(&t.quiver), p, q)
}

/// Every nonzero case of the formula has `q ≤ (⌊p/2⌋ + 1)·n`.
pub fn q_bound(p: usize, n: usize) -> usize {
    (p / 2 + 1) * n
}

/// `graded[q][p]` for `p ≤ p_max` and all `q` up to the bound for `p_max`.
pub fn hh_graded_truncated(t: &TruncatedPresentation, p_max: usize) -> BTreeMap<usize, Vec<usize>> {
    let mut counts = OrbitCounts::new(&t.quiver);
    (0..=q_bound(p_max, t.n))
        .map(|q| {
            (
                q,
                (0..=p_max)
                    .map(|p| hh_pq_with(t, &mut counts, p, q))
                    .collect(),
            )
        })
        .collect()
}

/// `hh_p = Σ_q dim HH_{p,q}` for `p ≤ p_max`.
pub fn hh_total_truncated(t: &TruncatedPresentation, p_max: usize) -> Vec<usize> {
    let mut counts = OrbitCounts::new(&t.quiver);
    (0..=p_max)
        .map(|p| {
            (0..=q_bound(p, t.n))
                .map(|q| hh_pq_with(t, &mut counts, p, q))
                .sum()
        })
        .collect()
}

/// `hh_p` of `kQ/kⁿQ` for a basic cycle `Q` of length `l`, by the floor/gcd formula.
pub fn hh_p_basic_cycle(l: usize, n: usize, p: usize, field: Field) -> usize {
    assert!(l >= 1 && n >= 2, "need l ≥ 1 and n ≥ 2");
    if p == 0 {
        return l + (n - 1) / l;
    }
    let half = (p / 2) * n;
    let base = (half + n - 1) / l - half / l;
    if !(p.div_ceil(2) * n).is_multiple_of(l) {
        return base;
    }
    let g = n.gcd(&l);
    if field.divides((n / g) as u64) {
        base + g
    } else {
        base + g - 1
    }
}

/// Degrees `p = start + k·step` (`k ≥ 0`) with `hh_p ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessProgression {
    pub start: usize,
    pub step: usize,
}

impl WitnessProgression {
    pub fn members(&self, count: usize) -> Vec<usize> {
        (0..count).map(|k| self.start + k * self.step).collect()
    }
}

/// An infinite set of degrees with nonzero Hochschild homology for the
/// truncated basic cycle algebra of length `l` and index `n`.
pub fn infinite_witness(l: usize, n: usize) -> WitnessProgression {
    assert!(l >= 1 && n >= 2, "need l ≥ 1 and n ≥ 2");
    let g = n.gcd(&l);
    if g >= 2 {
        // p = 2ml − 1, m ≥ 1
        return WitnessProgression {
            start: 2 * l - 1,
            step: 2 * l,
        };
    }
    if l < n {
        return WitnessProgression { start: 1, step: 1 };
    }
    // un + vl = 1; p = 2(ml + u − 1) for m ≥ |u| + |v| + 1.
    let (li, ni) = (l as i128, n as i128);
    let (_, u0, _) = extended_gcd(ni, li);
    let u = (u0 - 1).rem_euclid(li) + 1;
    let v = (1 - u * ni) / li;
    let m0 = u.abs() + v.abs() + 1;
    WitnessProgression {
        start: (2 * (m0 * li + u - 1)) as usize,
        step: 2 * l,
    }
}

/// The three equivalent conditions, with a witness when they fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedClassification {
    pub acyclic: bool,
    pub gldim_finite: bool,
    pub hhdim_zero: bool,
    pub witness: Option<CycleWitness>,
}

/// A shortest cycle, necessarily basic, and the degrees where its
/// truncated cycle algebra (a direct summand) has nonzero homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    pub cycle: CycleWord,
    pub l: usize,
    pub n: usize,
    pub progression: WitnessProgression,
}

impl CycleWitness {
    /// `kQ'/kⁿQ'` on the basic cycle quiver of length `l`.
    pub fn algebra(&self, field: Field) -> MonomialAlgebra {
        MonomialAlgebra::truncated(Quiver::basic_cycle(self.l), self.n, field).expect("n ≥ 2")
    }
}

pub fn classify_truncated(t: &TruncatedPresentation) -> TruncatedClassification {
    match shortest_cycle(&t.quiver) {
        None => TruncatedClassification {
            acyclic: true,
            gldim_finite: true,
            hhdim_zero: true,
            witness: None,
        },
        Some(cycle) => {
            let l = cycle.len();
            TruncatedClassification {
                acyclic: false,
                gldim_finite: false,
                hhdim_zero: false,
                witness: Some(CycleWitness {
                    cycle,
                    l,
                    n: t.n,
                    progression: infinite_witness(l, t.n),
                }),
            }
        }
    }
}
