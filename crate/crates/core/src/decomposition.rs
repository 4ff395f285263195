//! Hochschild and cyclic homology of a monomial algebra as a sum over its
//! minimal cycle algebras, one per rotation orbit of proper cycles.
//!
//! For a proper cycle `a_1 ⋯ a_r` the cycle algebra `Z` lives on the basic
//! cycle quiver `c_1, …, c_r` with `c_i ↦ a_i`; a path of the basic cycle is
//! a relation when its image contains a relation of `A`. In homological
//! degree `n ≥ 1` the chains of `A` whose cyclic word is a power of the
//! orbit are exactly the chains of `Z`, so `HH_n(A) = ⊕_Z HH_n(Z)`. The
//! same holds for cyclic homology in positive path-length degree; the
//! degree-zero part `HC_{2i} ⊇ k^{|Q_0|}` comes from the trivial paths.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hochschild::{hc_with, hh_with, EngineOptions};
use crate::quiver::{proper_cycle_orbits, CycleWord, MonomialAlgebra, Path, Quiver};
use crate::skoldberg::hh_p_basic_cycle;

/// A minimal cycle algebra overlying `A`.
#[derive(Clone, Debug)]
pub struct CycleAlgebra {
    /// Canonical word of the orbit in `A`'s quiver.
    pub orbit: CycleWord,
    /// `arrow_map[i]` is the arrow of `A` that `c_{i+1}` maps to.
    pub arrow_map: Vec<usize>,
    pub algebra: MonomialAlgebra,
}

impl CycleAlgebra {
    pub fn length(&self) -> usize {
        self.orbit.len()
    }
}

pub fn minimal_cycle_algebra(a: &MonomialAlgebra, orbit: &CycleWord) -> Result<CycleAlgebra> {
    if !orbit.is_proper() {
        return Err(Error::ImproperCycle(orbit.format(a.quiver())));
    }
    let word = orbit.arrows();
    let r = word.len();
    let quiver = Quiver::basic_cycle(r);
    // Paths of length L + 1 always vanish, so minimal relations are no longer.
    let longest = a.max_length() + 1;
    let mut relations = Vec::new();
    for start in 0..r {
        for m in 2..=longest {
            let arrows: Vec<usize> = (0..m).map(|k| (start + k) % r).collect();
            let image: Vec<usize> = arrows.iter().map(|&i| word[i]).collect();
            if a.is_zero_word(&image) {
                relations.push(quiver.path(&arrows)?);
                break;
            }
        }
    }
    let algebra = MonomialAlgebra::new(quiver, relations, a.field())?;
    Ok(CycleAlgebra {
        orbit: orbit.clone(),
        arrow_map: word.to_vec(),
        algebra,
    })
}

/// Orbit-length cutoff for degree `n`: chains of `C_n` have total degree at most `(n+1)L`.
pub fn orbit_cutoff(a: &MonomialAlgebra, n: usize) -> usize {
    (n + 1) * a.max_length()
}

/// Proper cycle orbits of length at most `(n+1)L`, shortest first.
pub fn contributing_orbits(a: &MonomialAlgebra, n: usize) -> Vec<CycleWord> {
    orbits_up_to(a, orbit_cutoff(a, n))
}

fn orbits_up_to(a: &MonomialAlgebra, cutoff: usize) -> Vec<CycleWord> {
    (1..=cutoff)
        .flat_map(|r| proper_cycle_orbits(a.quiver(), r).representatives)
        .collect()
}

/// How a number was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    /// The normalized mixed complex of the algebra at hand.
    Direct,
    /// Summed over minimal cycle algebras.
    Decomposition,
    /// Closed formula for truncated algebras.
    Formula,
    /// The small resolution of `A_q`.
    Bgms,
}

impl Route {
    pub fn tag(self) -> &'static str {
        match self {
            Route::Direct => "direct",
            Route::Decomposition => "decomposition",
            Route::Formula => "formula",
            Route::Bgms => "bgms",
        }
    }
}

/// One summand of the decomposition.
#[derive(Clone, Debug)]
pub struct OrbitContribution {
    pub cycle: CycleAlgebra,
    /// Human-readable orbit word in `A`'s arrow names.
    pub word: String,
    /// `hh[n]` for `0 ≤ n ≤ n_max`; index 0 is `HH_0(Z)` itself and is not summed.
    pub hh: Vec<usize>,
    pub hh_route: Route,
    /// Positive path-length part of `HC_n(Z)`, when requested.
    pub hc_positive: Option<Vec<usize>>,
}

/// Totals for `1 ≤ n ≤ n_max`; entry 0 is unused and set to 0.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub n_max: usize,
    pub orbits: Vec<OrbitContribution>,
    pub hh: Vec<usize>,
    /// `Σ_Z HC_n^{>0}(Z)`, before adding the trivial-path classes.
    pub hc_orbit_sum: Option<Vec<usize>>,
    /// `|Q_0|` in even degrees, 0 in odd ones.
    pub hc_degree_zero: Vec<usize>,
}

impl Decomposition {
    /// `HC_n(A)` for `1 ≤ n ≤ n_max` (entry 0 unused).
    pub fn hc(&self) -> Option<Vec<usize>> {
        self.hc_orbit_sum.as_ref().map(|s| {
            s.iter()
                .zip(&self.hc_degree_zero)
                .map(|(a, b)| a + b)
                .collect()
        })
    }
}

fn summand(
    a: &MonomialAlgebra,
    orbit: &CycleWord,
    n_max: usize,
    with_hc: bool,
    use_formula: bool,
    opts: &EngineOptions,
) -> Result<OrbitContribution> {
    let cycle = minimal_cycle_algebra(a, orbit)?;
    let z = &cycle.algebra;
    let (hh, hh_route) = match z.truncation_index() {
        Some(n) if use_formula => (
            (0..=n_max)
                .map(|p| hh_p_basic_cycle(cycle.length(), n, p, z.field()))
                .collect(),
            Route::Formula,
        ),
        _ => (hh_with(z, n_max, opts)?.total, Route::Direct),
    };
    let hc_positive = if with_hc {
        Some(hc_with(z, n_max, opts)?.positive_degree_total())
    } else {
        None
    };
    Ok(OrbitContribution {
        word: orbit.format(a.quiver()),
        cycle,
        hh,
        hh_route,
        hc_positive,
    })
}

/// Options for [`decompose`].
#[derive(Clone, Copy, Debug)]
pub struct DecomposeOptions {
    pub with_hc: bool,
    /// Use the basic-cycle formula for truncated summands.
    pub use_formula: bool,
    pub engine: EngineOptions,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            with_hc: true,
            use_formula: true,
            engine: EngineOptions::default(),
        }
    }
}

pub fn decompose(
    a: &MonomialAlgebra,
    n_max: usize,
    opts: &DecomposeOptions,
) -> Result<Decomposition> {
    let orbits = contributing_orbits(a, n_max.max(1));
    let contributions = orbits
        .par_iter()
        .map(|o| summand(a, o, n_max, opts.with_hc, opts.use_formula, &opts.engine))
        .collect::<Result<Vec<_>>>()?;
    let mut hh = vec![0; n_max + 1];
    let mut hc_sum = opts.with_hc.then(|| vec![0; n_max + 1]);
    for c in &contributions {
        for n in 1..=n_max {
            hh[n] += c.hh[n];
            if let (Some(sum), Some(z)) = (hc_sum.as_mut(), c.hc_positive.as_ref()) {
                sum[n] += z[n];
            }
        }
    }
    let v = a.quiver().vertex_count();
    let hc_degree_zero = (0..=n_max)
        .map(|n| if n % 2 == 0 && n > 0 { v } else { 0 })
        .collect();
    Ok(Decomposition {
        n_max,
        orbits: contributions,
        hh,
        hc_orbit_sum: hc_sum,
        hc_degree_zero,
    })
}

/// `HH_n(A)` for `1 ≤ n ≤ n_max` as a sum over minimal cycle algebras (entry 0 unused).
pub fn hh_decomposed(a: &MonomialAlgebra, n_max: usize) -> Result<Vec<usize>> {
    let opts = DecomposeOptions {
        with_hc: false,
        ..DecomposeOptions::default()
    };
    Ok(decompose(a, n_max, &opts)?.hh)
}

/// `HC_n(A)` for `1 ≤ n ≤ n_max` (entry 0 unused).
pub fn hc_decomposed(a: &MonomialAlgebra, n_max: usize) -> Result<Vec<usize>> {
    Ok(decompose(a, n_max, &DecomposeOptions::default())?
        .hc()
        .expect("requested"))
}

/// The full computation: orbits, cycle algebras, per-orbit homology,
/// totals with direct `hh_0`, and cyclic homology, optionally checked
/// against the direct complex.
#[derive(Clone, Debug)]
pub struct AlgorithmReport {
    pub decomposition: Decomposition,
    /// `hh[n]` for `0 ≤ n ≤ n_max`: direct at 0, decomposition above.
    pub hh: Vec<(usize, Route)>,
    pub hc: Vec<(usize, Route)>,
    /// Direct values when the cross-check ran.
    pub direct_hh: Option<Vec<usize>>,
    pub direct_hc: Option<Vec<usize>>,
}

pub fn run_algorithm(
    a: &MonomialAlgebra,
    n_max: usize,
    crosscheck: bool,
    opts: &EngineOptions,
) -> Result<AlgorithmReport> {
    let dopts = DecomposeOptions {
        with_hc: true,
        use_formula: true,
        engine: *opts,
    };
    let decomposition = decompose(a, n_max, &dopts)?;
    let direct_zero = hc_with(a, 0, opts)?.total[0];
    let mut hh = vec![(direct_zero, Route::Direct)];
    hh.extend((1..=n_max).map(|n| (decomposition.hh[n], Route::Decomposition)));
    let dec_hc = decomposition.hc().expect("requested");
    let mut hc = vec![(direct_zero, Route::Direct)];
    hc.extend((1..=n_max).map(|n| (dec_hc[n], Route::Decomposition)));
    let (mut direct_hh, mut direct_hc) = (None, None);
    if crosscheck {
        let dh = hh_with(a, n_max, opts)?.total;
        let dc = hc_with(a, n_max, opts)?.total;
        for n in 1..=n_max {
            if dh[n] != hh[n].0 || dc[n] != hc[n].0 {
                return Err(Error::Mismatch(format!(
                    "degree {n}: direct hh {} hc {}, decomposition hh {} hc {}",
                    dh[n], dc[n], hh[n].0, hc[n].0
                )));
            }
        }
        direct_hh = Some(dh);
        direct_hc = Some(dc);
    }
    Ok(AlgorithmReport {
        decomposition,
        hh,
        hc,
        direct_hh,
        direct_hc,
    })
}

/// Relations of a cycle algebra in `c_i` names, for reports.
pub fn format_relations(z: &MonomialAlgebra) -> Vec<String> {
    z.relation_paths()
        .iter()
        .map(|p: &Path| z.quiver().format_path(p))
        .collect()
}
