//! Monomial algebras `kQ/I` with `I` generated by paths of length ≥ 2.

use std::collections::HashMap;

use super::automaton::{FactorAutomaton, Finiteness};
use super::graph::{Path, Quiver};
use crate::error::{Error, Result};
use crate::linalg::Field;

/// How the ideal is presented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relations {
    /// All paths of length `n`.
    Truncated(usize),
    /// Explicit relations, reduced: no relation contains another as a factor.
    Paths(Vec<Path>),
}

/// A finite-dimensional monomial algebra with its path basis.
///
/// The basis is every path containing no relation as a factor, sorted by
/// length and then lexicographically by arrow index.
#[derive(Clone, Debug)]
pub struct MonomialAlgebra {
    quiver: Quiver,
    relations: Relations,
    field: Field,
    automaton: FactorAutomaton,
    basis: Vec<Path>,
    lookup: HashMap<Vec<usize>, usize>,
    trivial: Vec<usize>,
    max_length: usize,
}

impl MonomialAlgebra {
    /// Validates relations (length ≥ 2, composable), reduces them and checks
    /// finite-dimensionality.
    pub fn new(quiver: Quiver, relations: Vec<Path>, field: Field) -> Result<MonomialAlgebra> {
        for r in &relations {
            if r.len() < 2 {
                return Err(Error::ShortRelation(quiver.format_path(r)));
            }
        }
        let relations = reduce_relations(relations);
        let words: Vec<Vec<usize>> = relations.iter().map(|r| r.arrows().to_vec()).collect();
        Self::build(quiver, Relations::Paths(relations), words, field)
    }

    /// `kQ/kⁿQ`.
    pub fn truncated(quiver: Quiver, n: usize, field: Field) -> Result<MonomialAlgebra> {
        if n < 2 {
            return Err(Error::BadTruncation(n));
        }
        // The automaton is only used for factor tests; truncation bypasses it.
        Self::build(quiver, Relations::Truncated(n), Vec::new(), field)
    }

    fn build(
        quiver: Quiver,
        relations: Relations,
        words: Vec<Vec<usize>>,
        field: Field,
    ) -> Result<MonomialAlgebra> {
        let automaton = FactorAutomaton::new(&words);
        if let Relations::Paths(_) = relations {
            if let Finiteness::Infinite { witness } = automaton.finiteness(&quiver) {
                return Err(Error::InfiniteDimensional {
                    witness: witness.format(&quiver),
                });
            }
        }
        let mut alg = MonomialAlgebra {
            quiver,
            relations,
            field,
            automaton,
            basis: Vec::new(),
            lookup: HashMap::new(),
            trivial: Vec::new(),
            max_length: 0,
        };
        alg.basis = alg.enumerate_paths(None);
        alg.max_length = alg.basis.last().map_or(0, Path::len);
        for (i, p) in alg.basis.iter().enumerate() {
            if p.is_trivial() {
                alg.trivial.push(i);
            } else {
                alg.lookup.insert(p.arrows().to_vec(), i);
            }
        }
        Ok(alg)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &Relations {
        &self.relations
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Same presentation over another field.
    pub fn with_field(&self, field: Field) -> MonomialAlgebra {
        MonomialAlgebra {
            field,
            ..self.clone()
        }
    }

    /// Relations as explicit paths; truncation expands to all paths of length `n`.
    pub fn relation_paths(&self) -> Vec<Path> {
        match &self.relations {
            Relations::Paths(r) => r.clone(),
            Relations::Truncated(n) => all_paths_of_length(&self.quiver, *n),
        }
    }

    /// Whether the arrow word contains a relation, i.e. vanishes in the algebra.
    pub fn is_zero_word(&self, arrows: &[usize]) -> bool {
        match &self.relations {
            Relations::Truncated(n) => arrows.len() >= *n,
            Relations::Paths(_) => self.automaton.contains_relation(arrows),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// `L`: the longest nonzero path length.
    pub fn max_length(&self) -> usize {
        self.max_length
    }

    /// Basis index of the trivial path at `v`.
    pub fn trivial_index(&self, v: usize) -> usize {
        self.trivial[v]
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        if p.is_trivial() {
            self.trivial.get(p.source()).copied()
        } else {
            self.lookup.get(p.arrows()).copied()
        }
    }

    /// Product of two basis paths: `None` when not composable or zero.
    pub fn multiply(&self, i: usize, j: usize) -> Option<usize> {
        let (a, b) = (&self.basis[i], &self.basis[j]);
        if a.target() != b.source() {
            return None;
        }
        if a.is_trivial() {
            return Some(j);
        }
        if b.is_trivial() {
            return Some(i);
        }
        let mut word = Vec::with_capacity(a.len() + b.len());
        word.extend_from_slice(a.arrows());
        word.extend_from_slice(b.arrows());
        self.lookup.get(&word).copied()
    }

    /// Nonzero paths up to an optional length bound, in basis order.
    pub fn nonzero_paths(&self, max_len: Option<usize>) -> Vec<Path> {
        match max_len {
            None => self.basis.clone(),
            Some(m) => self
                .basis
                .iter()
                .filter(|p| p.len() <= m)
                .cloned()
                .collect(),
        }
    }

    fn enumerate_paths(&self, max_len: Option<usize>) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.quiver.vertex_count())
            .map(|v| self.quiver.trivial_path(v))
            .collect();
        let mut frontier: Vec<Path> = out.clone();
        let mut len = 0;
        while !frontier.is_empty() && max_len.is_none_or(|m| len < m) {
            let mut next = Vec::new();
            for p in &frontier {
                for &a in self.quiver.arrows_from(p.target()) {
                    let mut word = p.arrows().to_vec();
                    word.push(a);
                    // The prefix is nonzero, so only factors ending at the new arrow matter.
                    if !self.is_zero_word(&word) {
                        next.push(Path::from_raw(
                            p.source(),
                            self.quiver.arrow(a).target,
                            word,
                        ));
                    }
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            frontier = next;
            len += 1;
        }
        out
    }

    /// The truncation index if every relation is a path of one length `n`
    /// and all paths of that length are relations.
    pub fn truncation_index(&self) -> Option<usize> {
        match &self.relations {
            Relations::Truncated(n) => Some(*n),
            Relations::Paths(rels) => {
                let n = rels.first()?.len();
                if rels.iter().any(|r| r.len() != n) {
                    return None;
                }
                let all = all_paths_of_length(&self.quiver, n);
                (all.len() == rels.len()).then_some(n)
            }
        }
    }
}

/// Drops duplicates and relations containing another relation as a factor.
pub fn reduce_relations(mut relations: Vec<Path>) -> Vec<Path> {
    relations.sort();
    relations.dedup();
    let kept: Vec<Path> = relations
        .iter()
        .filter(|r| {
            !relations
                .iter()
                .any(|s| s != *r && s.len() <= r.len() && r.contains_factor(s.arrows()))
        })
        .cloned()
        .collect();
    kept
}

pub fn all_paths_of_length(quiver: &Quiver, n: usize) -> Vec<Path> {
    let mut frontier: Vec<Path> = (0..quiver.vertex_count())
        .map(|v| quiver.trivial_path(v))
        .collect();
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &frontier {
            for &a in quiver.arrows_from(p.target()) {
                let mut word = p.arrows().to_vec();
                word.push(a);
                next.push(Path::from_raw(p.source(), quiver.arrow(a).target, word));
            }
        }
        frontier = next;
    }
    frontier.sort();
    frontier
}
