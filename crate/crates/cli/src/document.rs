//! The machine-readable result document, schema `v1`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use hochschild_core::quiver::{canonical_form, MonomialAlgebra};

pub const SCHEMA: &str = "v1";

/// `p → q → dimension`.
pub type GradedTable = BTreeMap<usize, BTreeMap<usize, usize>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub schema: String,
    pub command: String,
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraEcho>,
    /// Table name → degree → value.
    pub tables: BTreeMap<String, BTreeMap<usize, Entry>>,
    /// Table name → `p` → `q` → dimension.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graded: Option<BTreeMap<String, GradedTable>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub orbits: Vec<OrbitEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<DimensionReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aq: Option<AqReport>,
    #[serde(default)]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraEcho {
    /// SHA-256 of the canonical form, hex.
    pub hash: String,
    pub canonical: String,
    pub vertices: usize,
    pub arrows: usize,
    pub dim: usize,
    pub max_path_length: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
}

impl AlgebraEcho {
    pub fn of(a: &MonomialAlgebra) -> AlgebraEcho {
        let canonical = canonical_form(a);
        AlgebraEcho {
            hash: hex::encode(Sha256::digest(canonical.as_bytes())),
            canonical,
            vertices: a.quiver().vertex_count(),
            arrows: a.quiver().arrow_count(),
            dim: a.dim(),
            max_path_length: a.max_length(),
            truncation: a.truncation_index(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub dim: usize,
    /// `direct`, `decomposition`, `formula` or `bgms`.
    pub method: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub word: String,
    pub length: usize,
    pub relations: Vec<String>,
    pub cycle_algebra_dim: usize,
    pub method: String,
    pub hh: BTreeMap<usize, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hc: Option<BTreeMap<usize, usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    pub acyclic: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gldim_finite: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hhdim_zero: Option<bool>,
    pub statement: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gldim_probe: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub cycle: String,
    pub l: usize,
    pub n: usize,
    pub progression_start: usize,
    pub progression_step: usize,
    /// First members with their `hh_p` from the basic-cycle formula.
    pub members: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub gldim: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<usize>,
    pub max_steps: usize,
    pub simples: Vec<SimpleEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleEntry {
    pub vertex: String,
    pub projdim: String,
    pub cover_dims: Vec<usize>,
    pub syzygy_dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AqReport {
    pub q: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_of_unity_order: Option<u32>,
    /// `n → rank τ^n`.
    pub tau_ranks: BTreeMap<usize, usize>,
    pub rank_bounds_hold: bool,
    pub crosscheck_max_n: usize,
}

impl ResultDocument {
    pub fn new(command: &str, field: String) -> ResultDocument {
        ResultDocument {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            field,
            algebra: None,
            tables: BTreeMap::new(),
            graded: None,
            orbits: Vec::new(),
            classification: None,
            dimension: None,
            aq: None,
            notes: Vec::new(),
        }
    }

    /// Adds a table from `(degree, value)` pairs with one method tag.
    pub fn table(
        &mut self,
        name: &str,
        values: impl IntoIterator<Item = (usize, usize)>,
        method: &str,
    ) {
        self.tables.insert(
            name.to_string(),
            values
                .into_iter()
                .map(|(n, dim)| {
                    (
                        n,
                        Entry {
                            dim,
                            method: method.to_string(),
                        },
                    )
                })
                .collect(),
        );
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<ResultDocument> {
        serde_json::from_str(text)
    }

    /// Plain-text rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} over {}", self.command, self.field);
        if let Some(a) = &self.algebra {
            let _ = writeln!(
                out,
                "algebra: {} vertices, {} arrows, dim {}, L = {}{}",
                a.vertices,
                a.arrows,
                a.dim,
                a.max_path_length,
                a.truncation
                    .map_or(String::new(), |n| format!(", truncated at {n}"))
            );
            let _ = writeln!(out, "hash: {}", a.hash);
        }
        if !self.tables.is_empty() {
            let names: Vec<&String> = self.tables.keys().collect();
            let degrees: std::collections::BTreeSet<usize> = self
                .tables
                .values()
                .flat_map(|t| t.keys().copied())
                .collect();
            let _ = write!(out, "\n{:>4}", "n");
            for name in &names {
                let _ = write!(out, "  {:>20}", name);
            }
            out.push('\n');
            for n in degrees {
                let _ = write!(out, "{n:>4}");
                for name in &names {
                    let cell = self.tables[*name]
                        .get(&n)
                        .map_or("-".to_string(), |e| format!("{} ({})", e.dim, e.method));
                    let _ = write!(out, "  {cell:>20}");
                }
                out.push('\n');
            }
        }
        if let Some(graded) = &self.graded {
            for (name, by_p) in graded {
                let _ = writeln!(out, "\ngraded {name} (p: q=dim, nonzero only)");
                for (p, by_q) in by_p {
                    let cells: Vec<String> = by_q
                        .iter()
                        .filter(|(_, d)| **d > 0)
                        .map(|(q, d)| format!("{q}={d}"))
                        .collect();
                    let _ = writeln!(
                        out,
                        "  p={p}: {}",
                        if cells.is_empty() {
                            "0".into()
                        } else {
                            cells.join(" ")
                        }
                    );
                }
            }
        }
        if !self.orbits.is_empty() {
            let _ = writeln!(out, "\nproper cycle orbits:");
            for o in &self.orbits {
                let hh: Vec<String> = o.hh.iter().map(|(n, d)| format!("{n}:{d}")).collect();
                let _ = writeln!(
                    out,
                    "  [{}] length {}, Z dim {}, relations {{{}}}, hh {} ({})",
                    o.word,
                    o.length,
                    o.cycle_algebra_dim,
                    o.relations.join(", "),
                    hh.join(" "),
                    o.method
                );
            }
        }
        if let Some(c) = &self.classification {
            let _ = writeln!(out, "\n{}", c.statement);
            if let Some(w) = &c.witness {
                let m: Vec<String> = w
                    .members
                    .iter()
                    .map(|(p, h)| format!("hh_{p}={h}"))
                    .collect();
                let _ = writeln!(
                    out,
                    "witness cycle [{}], l={}, n={}; p = {} + {}k: {}",
                    w.cycle,
                    w.l,
                    w.n,
                    w.progression_start,
                    w.progression_step,
                    m.join(", ")
                );
            }
            if let Some(g) = &c.gldim_probe {
                let _ = writeln!(out, "gl.dim probe: {g}");
            }
        }
        if let Some(d) = &self.dimension {
            let _ = writeln!(out, "\ngl.dim {} (probe, {} steps)", d.gldim, d.max_steps);
            for s in &d.simples {
                let _ = writeln!(
                    out,
                    "  pd S_{} {}; cover dims {:?}, syzygy dims {:?}",
                    s.vertex, s.projdim, s.cover_dims, s.syzygy_dims
                );
            }
        }
        if let Some(aq) = &self.aq {
            let ranks: Vec<String> = aq
                .tau_ranks
                .iter()
                .map(|(n, r)| format!("{n}:{r}"))
                .collect();
            let _ = writeln!(out, "\nq = {}", aq.q);
            let _ = writeln!(
                out,
                "root of unity: {}",
                aq.root_of_unity_order
                    .map_or("no (orders ≤ 24 checked)".to_string(), |m| format!(
                        "order {m}"
                    ))
            );
            let _ = writeln!(out, "rank τ^n: {}", ranks.join(" "));
            let _ = writeln!(out, "rank bounds hold: {}", aq.rank_bounds_hold);
            let _ = writeln!(
                out,
                "bar complex cross-check through n = {}",
                aq.crosscheck_max_n
            );
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}
