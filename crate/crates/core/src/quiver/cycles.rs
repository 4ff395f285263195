//! Cyclic arrow words, their rotation orbits, and the orbit counts
//! `a_q` (all cycles) and `b_r` (proper cycles).

use std::collections::{BTreeSet, VecDeque};

use super::graph::{Path, Quiver};
use crate::error::{Error, Result};

/// A closed arrow word, stored in canonical form: the lexicographically
/// least rotation under arrow declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleWord {
    arrows: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleClass {
    pub basic: bool,
    pub proper: bool,
}

impl CycleWord {
    /// Validates closedness and canonicalizes the rotation.
    pub fn new(quiver: &Quiver, arrows: &[usize]) -> Result<CycleWord> {
        let path = quiver.path(arrows)?;
        if !path.is_closed() {
            return Err(Error::NotACycle(quiver.format_arrows(arrows)));
        }
        Ok(CycleWord {
            arrows: canonical_rotation(arrows),
        })
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// The word rotated left by `k` (not canonicalized).
    pub fn rotation(&self, k: usize) -> Vec<usize> {
        rotate(&self.arrows, k)
    }

    /// Not a power `w^m` with `m ≥ 2`.
    pub fn is_proper(&self) -> bool {
        primitive_period(&self.arrows) == self.arrows.len()
    }

    /// Start vertices of the arrows are pairwise distinct.
    pub fn is_basic(&self, quiver: &Quiver) -> bool {
        let mut seen = BTreeSet::new();
        self.arrows
            .iter()
            .all(|&a| seen.insert(quiver.arrow(a).source))
    }

    pub fn classify(&self, quiver: &Quiver) -> CycleClass {
        CycleClass {
            basic: self.is_basic(quiver),
            proper: self.is_proper(),
        }
    }

    pub fn as_path(&self, quiver: &Quiver) -> Path {
        quiver
            .path(&self.arrows)
            .expect("cycle words are composable")
    }

    pub fn format(&self, quiver: &Quiver) -> String {
        quiver.format_arrows(&self.arrows)
    }
}

pub(crate) fn rotate(word: &[usize], k: usize) -> Vec<usize> {
    if word.is_empty() {
        return Vec::new();
    }
    let k = k % word.len();
    word[k..].iter().chain(&word[..k]).copied().collect()
}

/// Least rotation of `word`.
pub fn canonical_rotation(word: &[usize]) -> Vec<usize> {
    (0..word.len().max(1))
        .map(|k| rotate(word, k))
        .min()
        .unwrap_or_default()
}

/// Smallest `d` dividing `len` with `word = (word[..d])^(len/d)`.
pub(crate) fn primitive_period(word: &[usize]) -> usize {
    let n = word.len();
    (1..=n)
        .find(|&d| n.is_multiple_of(d) && (d..n).all(|i| word[i] == word[i - d]))
        .unwrap_or(n)
}

/// Classifies a cycle given as any rotation.
pub fn classify_cycle(quiver: &Quiver, arrows: &[usize]) -> Result<CycleClass> {
    Ok(CycleWord::new(quiver, arrows)?.classify(quiver))
}

/// Rotation-orbit representatives of a family of cycles, with their count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleOrbits {
    pub representatives: Vec<CycleWord>,
}

impl CycleOrbits {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Calls `visit` on every closed arrow word of length `q`, starting at each
/// vertex in turn. Relations are ignored.
fn for_each_closed_word(quiver: &Quiver, q: usize, mut visit: impl FnMut(&[usize])) {
    fn extend(
        quiver: &Quiver,
        start: usize,
        at: usize,
        q: usize,
        word: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if word.len() == q {
            if at == start {
                visit(word);
            }
            return;
        }
        for &a in quiver.arrows_from(at) {
            word.push(a);
            extend(quiver, start, quiver.arrow(a).target, q, word, visit);
            word.pop();
        }
    }
    let mut word = Vec::with_capacity(q);
    for v in 0..quiver.vertex_count() {
        extend(quiver, v, v, q, &mut word, &mut visit);
    }
}

/// One canonical word per rotation orbit of length-`q` cycles; the count is `a_q`.
pub fn cycle_orbits(quiver: &Quiver, q: usize) -> CycleOrbits {
    orbits_where(quiver, q, |_| true)
}

/// As [`cycle_orbits`] restricted to proper cycles; the count is `b_r`.
pub fn proper_cycle_orbits(quiver: &Quiver, r: usize) -> CycleOrbits {
    orbits_where(quiver, r, |w| primitive_period(w) == w.len())
}

fn orbits_where(quiver: &Quiver, q: usize, keep: impl Fn(&[usize]) -> bool) -> CycleOrbits {
    assert!(q >= 1, "cycles have length at least 1");
    let mut reps = BTreeSet::new();
    for_each_closed_word(quiver, q, |w| {
        // Each orbit is visited once per rotation; keep only the canonical one.
        if keep(w) && canonical_rotation(w) == w {
            reps.insert(CycleWord { arrows: w.to_vec() });
        }
    });
    CycleOrbits {
        representatives: reps.into_iter().collect(),
    }
}

/// A cycle of minimal length, or `None` when the quiver is acyclic.
///
/// A shortest cycle never repeats a vertex, so it is basic.
pub fn shortest_cycle(quiver: &Quiver) -> Option<CycleWord> {
    let mut best: Option<Vec<usize>> = None;
    for start in 0..quiver.vertex_count() {
        // BFS over vertices recording the arrow used to reach each one.
        let mut via: Vec<Option<usize>> = vec![None; quiver.vertex_count()];
        let mut seen = vec![false; quiver.vertex_count()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut closing = None;
        'bfs: while let Some(v) = queue.pop_front() {
            for &a in quiver.arrows_from(v) {
                let t = quiver.arrow(a).target;
                if t == start {
                    closing = Some(a);
                    break 'bfs;
                }
                if !seen[t] {
                    seen[t] = true;
                    via[t] = Some(a);
                    queue.push_back(t);
                }
            }
        }
        let Some(last) = closing else { continue };
        let mut word = vec![last];
        let mut v = quiver.arrow(last).source;
        while v != start {
            let a = via[v].expect("BFS tree edge");
            word.push(a);
            v = quiver.arrow(a).source;
        }
        word.reverse();
        if best.as_ref().is_none_or(|b| word.len() < b.len()) {
            best = Some(word);
        }
    }
    best.map(|w| CycleWord::new(quiver, &w).expect("BFS produces a closed walk"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_loops() -> Quiver {
        Quiver::new(&["v"], &[("x", "v", "v"), ("y", "v", "v")]).unwrap()
    }

    fn cycle2_gldim2() -> Quiver {
        Quiver::new(&["1", "2"], &[("alpha", "1", "2"), ("beta", "2", "1")]).unwrap()
    }

    #[test]
    fn orbit_counts() {
        let one = Quiver::from_indices(1, &[(0, 0)]);
        assert_eq!(cycle_orbits(&one, 3).count(), 1);
        let q = two_loops();
        let orbits = cycle_orbits(&q, 2);
        assert_eq!(orbits.count(), 3);
        let words: Vec<String> = orbits
            .representatives
            .iter()
            .map(|w| w.format(&q))
            .collect();
        assert_eq!(words, ["x x", "x y", "y y"]);
        assert_eq!(cycle_orbits(&Quiver::basic_cycle(3), 4).count(), 0);
    }

    #[test]
    fn proper_orbit_counts() {
        let q = two_loops();
        assert_eq!(proper_cycle_orbits(&q, 2).count(), 1);
        let three = proper_cycle_orbits(&q, 3);
        assert_eq!(three.count(), 2);
        let words: Vec<String> = three.representatives.iter().map(|w| w.format(&q)).collect();
        assert_eq!(words, ["x x y", "x y y"]);
        let c = Quiver::basic_cycle(4);
        for r in 1..=8 {
            assert_eq!(proper_cycle_orbits(&c, r).count(), usize::from(r == 4));
        }
    }

    #[test]
    fn classification() {
        let q = two_loops();
        assert_eq!(
            classify_cycle(&q, &[0, 1]).unwrap(),
            CycleClass {
                basic: false,
                proper: true
            }
        );
        assert!(!classify_cycle(&q, &[0, 0]).unwrap().proper);
        let r = cycle2_gldim2();
        assert_eq!(
            classify_cycle(&r, &[1, 0]).unwrap(),
            CycleClass {
                basic: true,
                proper: true
            }
        );
        assert!(classify_cycle(&r, &[0]).is_err());
    }

    #[test]
    fn shortest_cycles() {
        assert!(shortest_cycle(&Quiver::from_indices(3, &[(0, 1), (1, 2)])).is_none());
        let r = cycle2_gldim2();
        let c = shortest_cycle(&r).unwrap();
        assert_eq!(c.format(&r), "alpha beta");
        assert_eq!(shortest_cycle(&two_loops()).unwrap().len(), 1);
        // 1→2→3→1 with an extra arrow 3→2 closing a 2-cycle.
        let q = Quiver::from_indices(3, &[(0, 1), (1, 2), (2, 0), (2, 1)]);
        let c = shortest_cycle(&q).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.is_basic(&q));
    }

    #[test]
    fn canonical_form_is_a_rotation() {
        let w = vec![3, 1, 2, 1];
        let c = canonical_rotation(&w);
        assert_eq!(c, vec![1, 2, 1, 3]);
        assert_eq!(primitive_period(&[1, 2, 1, 2]), 2);
        assert_eq!(primitive_period(&[1, 2, 1]), 3);
    }
}
