//! Quivers and paths.
//!
//! Paths compose left to right: `a_1 ⋯ a_m` requires `e(a_i) = s(a_{i+1})`.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite directed multigraph. Vertices and arrows are addressed by their
/// declaration index.
#[derive(Clone, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    outgoing: Vec<Vec<usize>>,
    vertex_lookup: HashMap<String, usize>,
    arrow_lookup: HashMap<String, usize>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl Quiver {
    /// Builds a quiver from named vertices and `(name, source, target)` arrows.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Quiver> {
        let mut vertex_lookup = HashMap::new();
        let mut names = Vec::new();
        for v in vertices {
            let v = v.as_ref().to_string();
            if vertex_lookup.insert(v.clone(), names.len()).is_some() {
                return Err(Error::DuplicateId(v));
            }
            names.push(v);
        }
        let mut resolved = Vec::new();
        for (name, s, t) in arrows {
            let lookup = |v: &S| {
                vertex_lookup
                    .get(v.as_ref())
                    .copied()
                    .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))
            };
            resolved.push(Arrow {
                name: name.as_ref().to_string(),
                source: lookup(s)?,
                target: lookup(t)?,
            });
        }
        Self::from_parts(names, resolved)
    }

    /// Builds a quiver from index pairs; vertices are named `1..=n` and
    /// arrows `a1, a2, …`.
    pub fn from_indices(vertex_count: usize, arrows: &[(usize, usize)]) -> Quiver {
        let names = (1..=vertex_count).map(|i| i.to_string()).collect();
        let arrows = arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| Arrow {
                name: format!("a{}", k + 1),
                source: s,
                target: t,
            })
            .collect();
        Self::from_parts(names, arrows).expect("generated names are unique")
    }

    /// The basic cycle `1 → 2 → ⋯ → l → 1` with arrows `c1 … cl`.
    pub fn basic_cycle(l: usize) -> Quiver {
        assert!(l >= 1);
        let names = (1..=l).map(|i| i.to_string()).collect();
        let arrows = (0..l)
            .map(|i| Arrow {
                name: format!("c{}", i + 1),
                source: i,
                target: (i + 1) % l,
            })
            .collect();
        Self::from_parts(names, arrows).expect("generated names are unique")
    }

    fn from_parts(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Quiver> {
        let vertex_lookup: HashMap<String, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        if vertex_lookup.len() != vertices.len() {
            return Err(Error::DuplicateId("vertex".into()));
        }
        let mut arrow_lookup = HashMap::new();
        let mut outgoing = vec![Vec::new(); vertices.len()];
        for (i, a) in arrows.iter().enumerate() {
            if arrow_lookup.insert(a.name.clone(), i).is_some() {
                return Err(Error::DuplicateId(a.name.clone()));
            }
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::UnknownVertex(a.name.clone()));
            }
            outgoing[a.source].push(i);
        }
        Ok(Quiver {
            vertices,
            arrows,
            outgoing,
            vertex_lookup,
            arrow_lookup,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Arrows starting at `v`, in declaration order.
    pub fn arrows_from(&self, v: usize) -> &[usize] {
        &self.outgoing[v]
    }

    pub fn vertex_id(&self, name: &str) -> Result<usize> {
        self.vertex_lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_id(&self, name: &str) -> Result<usize> {
        self.arrow_lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn trivial_path(&self, v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    /// Validates composability of a nonempty arrow sequence.
    pub fn path(&self, arrows: &[usize]) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::NotComposable("empty arrow sequence".into()));
        };
        for w in arrows.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(Error::NotComposable(self.format_arrows(arrows)));
            }
        }
        Ok(Path {
            source: self.arrows[first].source,
            target: self.arrows[*arrows.last().unwrap()].target,
            arrows: arrows.to_vec(),
        })
    }

    /// Resolves whitespace-separated arrow names into a path.
    pub fn path_from_names(&self, names: &[&str]) -> Result<Path> {
        let ids = names
            .iter()
            .map(|n| self.arrow_id(n))
            .collect::<Result<Vec<_>>>()?;
        self.path(&ids)
    }

    pub fn format_arrows(&self, arrows: &[usize]) -> String {
        arrows
            .iter()
            .map(|&a| self.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn format_path(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e_{}", self.vertices[p.source])
        } else {
            self.format_arrows(&p.arrows)
        }
    }

    /// True when some oriented cycle exists.
    pub fn has_oriented_cycle(&self) -> bool {
        // Kahn's algorithm: a cycle exists iff not every vertex gets removed.
        let mut indegree = vec![0usize; self.vertex_count()];
        for a in &self.arrows {
            indegree[a.target] += 1;
        }
        let mut queue: VecDeque<usize> = (0..self.vertex_count())
            .filter(|&v| indegree[v] == 0)
            .collect();
        let mut removed = 0;
        while let Some(v) = queue.pop_front() {
            removed += 1;
            for &a in &self.outgoing[v] {
                let t = self.arrows[a].target;
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    queue.push_back(t);
                }
            }
        }
        removed < self.vertex_count()
    }

    /// Disjoint union; names of the second quiver get a `'` suffix on clashes.
    pub fn disjoint_union(&self, other: &Quiver) -> Quiver {
        let offset = self.vertex_count();
        let mut vertices = self.vertices.clone();
        for v in &other.vertices {
            let mut name = v.clone();
            while vertices.contains(&name) {
                name.push('\'');
            }
            vertices.push(name);
        }
        let mut arrows = self.arrows.clone();
        for a in &other.arrows {
            let mut name = a.name.clone();
            while arrows.iter().any(|b| b.name == name) {
                name.push('\'');
            }
            arrows.push(Arrow {
                name,
                source: a.source + offset,
                target: a.target + offset,
            });
        }
        Self::from_parts(vertices, arrows).expect("names made unique")
    }
}

/// A path of the quiver: a trivial path at a vertex, or a composable arrow
/// sequence.
///
/// Ordered by length, then lexicographically by arrow index, then by
/// source vertex (which only matters for trivial paths).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    // `is_trivial` plays the role of `is_empty`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.source == self.target
    }

    /// Concatenation `self · other`, if composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }

    /// Whether `other` occurs as a contiguous nonempty factor.
    pub fn contains_factor(&self, other: &[usize]) -> bool {
        !other.is_empty() && self.arrows.windows(other.len()).any(|w| w == other)
    }

    pub(crate) fn from_raw(source: usize, target: usize, arrows: Vec<usize>) -> Path {
        Path {
            source,
            target,
            arrows,
        }
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
