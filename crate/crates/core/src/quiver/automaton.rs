//! Forbidden-factor automaton over the arrow alphabet.
//!
//! An Aho–Corasick trie of the relations, paired with the current vertex,
//! recognizes the paths that contain no relation as a factor. The algebra
//! `kQ/I` is finite-dimensional exactly when the live part of this
//! automaton has no cycle; a cycle yields a closed word all of whose powers
//! avoid the relations.

use std::collections::{HashMap, VecDeque};

use super::cycles::CycleWord;
use super::graph::Quiver;

#[derive(Clone, Debug)]
pub struct FactorAutomaton {
    children: Vec<HashMap<usize, usize>>,
    fail: Vec<usize>,
    /// Some relation is a suffix of the node's word.
    matched: Vec<bool>,
}

const ROOT: usize = 0;

impl FactorAutomaton {
    pub fn new(relations: &[Vec<usize>]) -> FactorAutomaton {
        let mut children = vec![HashMap::new()];
        let mut matched = vec![false];
        for rel in relations {
            let mut node = ROOT;
            for &a in rel {
                node = match children[node].get(&a) {
                    Some(&n) => n,
                    None => {
                        children.push(HashMap::new());
                        matched.push(false);
                        let n = children.len() - 1;
                        children[node].insert(a, n);
                        n
                    }
                };
            }
            matched[node] = true;
        }
        let mut fail = vec![ROOT; children.len()];
        let mut queue: VecDeque<usize> = children[ROOT].values().copied().collect();
        while let Some(node) = queue.pop_front() {
            let edges: Vec<(usize, usize)> = children[node].iter().map(|(&a, &c)| (a, c)).collect();
            for (a, child) in edges {
                let mut f = fail[node];
                let target = loop {
                    if let Some(&n) = children[f].get(&a) {
                        break n;
                    }
                    if f == ROOT {
                        break ROOT;
                    }
                    f = fail[f];
                };
                fail[child] = if target == child { ROOT } else { target };
                matched[child] |= matched[fail[child]];
                queue.push_back(child);
            }
        }
        FactorAutomaton {
            children,
            fail,
            matched,
        }
    }

    fn step(&self, mut node: usize, a: usize) -> usize {
        loop {
            if let Some(&n) = self.children[node].get(&a) {
                return n;
            }
            if node == ROOT {
                return ROOT;
            }
            node = self.fail[node];
        }
    }

    /// Whether some relation occurs as a factor of `word`.
    pub fn contains_relation(&self, word: &[usize]) -> bool {
        let mut node = ROOT;
        for &a in word {
            node = self.step(node, a);
            if self.matched[node] {
                return true;
            }
        }
        false
    }

    /// Decides finiteness of the relation-avoiding path language of `quiver`.
    pub fn finiteness(&self, quiver: &Quiver) -> Finiteness {
        // States are (vertex, trie node); DFS with an explicit stack and
        // three colors, reporting the first back edge as a witness cycle.
        #[derive(Clone, Copy, PartialEq)]
        enum Color {
            White,
            Grey,
            Black,
        }
        let mut color: HashMap<(usize, usize), Color> = HashMap::new();
        for start in 0..quiver.vertex_count() {
            let s = (start, ROOT);
            if color.get(&s).copied().unwrap_or(Color::White) != Color::White {
                continue;
            }
            // Stack frames: state, next arrow position, arrow taken to enter.
            let mut stack: Vec<((usize, usize), usize, Option<usize>)> = vec![(s, 0, None)];
            color.insert(s, Color::Grey);
            while let Some(&mut (state, ref mut next, _)) = stack.last_mut() {
                let (v, node) = state;
                let out = quiver.arrows_from(v);
                if *next == out.len() {
                    color.insert(state, Color::Black);
                    stack.pop();
                    continue;
                }
                let a = out[*next];
                *next += 1;
                let n = self.step(node, a);
                if self.matched[n] {
                    continue;
                }
                let succ = (quiver.arrow(a).target, n);
                match color.get(&succ).copied().unwrap_or(Color::White) {
                    Color::White => {
                        color.insert(succ, Color::Grey);
                        stack.push((succ, 0, Some(a)));
                    }
                    Color::Grey => {
                        let pos = stack
                            .iter()
                            .position(|f| f.0 == succ)
                            .expect("grey state on stack");
                        let mut word: Vec<usize> = stack[pos + 1..]
                            .iter()
                            .map(|f| f.2.expect("non-root frame"))
                            .collect();
                        word.push(a);
                        let witness =
                            CycleWord::new(quiver, &word).expect("automaton cycle is closed");
                        return Finiteness::Infinite { witness };
                    }
                    Color::Black => {}
                }
            }
        }
        Finiteness::Finite
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Finiteness {
    Finite,
    /// Every power of `witness` is a nonzero path.
    Infinite {
        witness: CycleWord,
    },
}

impl Finiteness {
    pub fn is_finite(&self) -> bool {
        matches!(self, Finiteness::Finite)
    }
}

/// Finite-dimensionality of `kQ/(relations)`, with a witness when infinite.
pub fn finite_dimensional(quiver: &Quiver, relations: &[Vec<usize>]) -> Finiteness {
    FactorAutomaton::new(relations).finiteness(quiver)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loops(n: usize) -> Quiver {
        Quiver::from_indices(1, &vec![(0, 0); n])
    }

    #[test]
    fn single_loop() {
        let q = loops(1);
        assert!(finite_dimensional(&q, &[vec![0, 0]]).is_finite());
        match finite_dimensional(&q, &[]) {
            Finiteness::Infinite { witness } => assert_eq!(witness.arrows(), &[0]),
            Finiteness::Finite => panic!("kQ is infinite-dimensional"),
        }
    }

    #[test]
    fn two_loops_with_three_relations() {
        // xx, yy, yx: every path of length ≥ 3 vanishes.
        let q = loops(2);
        let rels = vec![vec![0, 0], vec![1, 1], vec![1, 0]];
        assert!(finite_dimensional(&q, &rels).is_finite());
        let aut = FactorAutomaton::new(&rels);
        for len in 3..=5usize {
            for bits in 0..(1usize << len) {
                let word: Vec<usize> = (0..len).map(|i| (bits >> i) & 1).collect();
                assert!(aut.contains_relation(&word));
            }
        }
        // Dropping yx leaves (xy)^m alive.
        match finite_dimensional(&q, &rels[..2]) {
            Finiteness::Infinite { witness } => {
                assert_eq!(witness.arrows(), &[0, 1]);
            }
            Finiteness::Finite => panic!(),
        }
    }

    #[test]
    fn factor_detection_uses_failure_links() {
        let aut = FactorAutomaton::new(&[vec![0, 1, 2], vec![1, 3]]);
        assert!(aut.contains_relation(&[0, 1, 3]));
        assert!(aut.contains_relation(&[5, 0, 1, 2]));
        assert!(!aut.contains_relation(&[0, 1, 0, 2]));
    }

    #[test]
    fn acyclic_quiver_is_finite() {
        let q = Quiver::from_indices(3, &[(0, 1), (1, 2)]);
        assert!(finite_dimensional(&q, &[]).is_finite());
    }
}
