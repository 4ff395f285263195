//! Quivers, paths, cycle combinatorics and monomial algebras.

pub mod algebra;
pub mod automaton;
pub mod cycles;
pub mod format;
pub mod graph;

pub use algebra::{MonomialAlgebra, Relations};
pub use automaton::{finite_dimensional, FactorAutomaton, Finiteness};
pub use cycles::{
    classify_cycle, cycle_orbits, proper_cycle_orbits, shortest_cycle, CycleClass, CycleOrbits,
    CycleWord,
};
pub use format::{canonical_form, parse_algebra, write_algebra};
pub use graph::{Arrow, Path, Quiver};
