//! Minimal projective resolutions of right modules over a monomial algebra,
//! and probes for projective and global dimension.
//!
//! A right module is a representation: a space `M_v` per vertex and, per
//! arrow `a`, the map `M_{s(a)} → M_{e(a)}` given by `m ↦ m·a`. The
//! indecomposable projective `P_v = e_v A` has the nonzero paths starting at
//! `v` as basis, arrows acting by concatenation on the right.

use crate::error::{Error, Result};
use crate::linalg::{DenseMatrix, Scalar};
use crate::quiver::MonomialAlgebra;

#[derive(Clone, Debug, PartialEq)]
pub struct RightModule {
    dims: Vec<usize>,
    /// `actions[a]` has shape `dim M_{e(a)} × dim M_{s(a)}`.
    actions: Vec<DenseMatrix>,
}

impl RightModule {
    /// Validates shapes and that every relation acts as zero.
    pub fn new(
        a: &MonomialAlgebra,
        dims: Vec<usize>,
        actions: Vec<DenseMatrix>,
    ) -> Result<RightModule> {
        let q = a.quiver();
        if dims.len() != q.vertex_count() || actions.len() != q.arrow_count() {
            return Err(Error::InvalidModule(
                "wrong number of spaces or maps".into(),
            ));
        }
        for (k, m) in actions.iter().enumerate() {
            let arrow = q.arrow(k);
            if m.rows() != dims[arrow.target] || m.cols() != dims[arrow.source] {
                return Err(Error::InvalidModule(format!(
                    "action of `{}` has the wrong shape",
                    arrow.name
                )));
            }
        }
        let module = RightModule { dims, actions };
        for r in a.relation_paths() {
            if !module.path_action(a, r.arrows(), r.source()).is_zero() {
                return Err(Error::InvalidModule(format!(
                    "relation `{}` acts nonzero",
                    q.format_path(&r)
                )));
            }
        }
        Ok(module)
    }

    pub fn zero(a: &MonomialAlgebra) -> RightModule {
        let q = a.quiver();
        RightModule {
            dims: vec![0; q.vertex_count()],
            actions: vec![DenseMatrix::zeros(0, 0); q.arrow_count()],
        }
    }

    /// The simple module at `v`.
    pub fn simple(a: &MonomialAlgebra, v: usize) -> RightModule {
        let q = a.quiver();
        let dims: Vec<usize> = (0..q.vertex_count()).map(|w| usize::from(w == v)).collect();
        let actions = q
            .arrows()
            .iter()
            .map(|x| DenseMatrix::zeros(dims[x.target], dims[x.source]))
            .collect();
        RightModule { dims, actions }
    }

    /// `P_v = e_v A`.
    pub fn projective(a: &MonomialAlgebra, v: usize) -> RightModule {
        projective_sum(a, &[v]).0
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn action(&self, arrow: usize) -> &DenseMatrix {
        &self.actions[arrow]
    }

    /// The map `M_{source} → M_{end}` of a path given by its arrows.
    fn path_action(&self, a: &MonomialAlgebra, arrows: &[usize], source: usize) -> DenseMatrix {
        let f = a.field();
        let mut m = DenseMatrix::identity(self.dims[source], f);
        for &x in arrows {
            m = self.actions[x].mul(&m, f);
        }
        m
    }
}

/// `⊕_g P_{v_g}` with, per vertex `w`, the list `(g, path index)` of its basis.
fn projective_sum(a: &MonomialAlgebra, tops: &[usize]) -> (RightModule, Vec<Vec<(usize, usize)>>) {
    let q = a.quiver();
    let f = a.field();
    let mut basis: Vec<Vec<(usize, usize)>> = vec![Vec::new(); q.vertex_count()];
    for (g, &v) in tops.iter().enumerate() {
        for (i, p) in a.basis().iter().enumerate() {
            if p.source() == v {
                basis[p.target()].push((g, i));
            }
        }
    }
    let position = |w: usize, key: (usize, usize)| basis[w].iter().position(|&k| k == key);
    let actions = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(x, arrow)| {
            let mut m = DenseMatrix::zeros(basis[arrow.target].len(), basis[arrow.source].len());
            let arrow_idx = a
                .index_of(&q.path(&[x]).expect("single arrow"))
                .expect("arrows are nonzero");
            for (col, &(g, p)) in basis[arrow.source].iter().enumerate() {
                if let Some(prod) = a.multiply(p, arrow_idx) {
                    let row = position(arrow.target, (g, prod))
                        .expect("product starts at the same vertex");
                    m[(row, col)] = f.one();
                }
            }
            m
        })
        .collect();
    let dims = basis.iter().map(Vec::len).collect();
    (RightModule { dims, actions }, basis)
}

/// A projective cover `π : ⊕ P_{v_g} → M`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    /// Vertex of each generator.
    pub tops: Vec<usize>,
    pub cover: RightModule,
    /// `map[w]` has shape `dim M_w × dim P_w`.
    pub map: Vec<DenseMatrix>,
}

impl ProjectiveCover {
    /// Multiplicity of `P_v` for each vertex `v`.
    pub fn multiplicities(&self, vertex_count: usize) -> Vec<usize> {
        let mut m = vec![0; vertex_count];
        for &v in &self.tops {
            m[v] += 1;
        }
        m
    }
}

/// Lifts a basis of `M / M·rad` vertex by vertex.
pub fn projective_cover(a: &MonomialAlgebra, m: &RightModule) -> ProjectiveCover {
    let q = a.quiver();
    let f = a.field();
    let mut tops = Vec::new();
    let mut generators: Vec<Vec<Scalar>> = Vec::new();
    for v in 0..q.vertex_count() {
        let d = m.dims[v];
        if d == 0 {
            continue;
        }
        // Columns spanning the radical part Σ_{e(a)=v} M·a.
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        for (x, arrow) in q.arrows().iter().enumerate() {
            if arrow.target == v {
                cols.extend((0..m.actions[x].cols()).map(|j| m.actions[x].column(j)));
            }
        }
        let rad = DenseMatrix::from_columns(d, &cols);
        for i in rad.complement_indices(f) {
            let mut e = vec![f.zero(); d];
            e[i] = f.one();
            tops.push(v);
            generators.push(e);
        }
    }
    let (cover, basis) = projective_sum(a, &tops);
    let map = (0..q.vertex_count())
        .map(|w| {
            let cols: Vec<Vec<Scalar>> = basis[w]
                .iter()
                .map(|&(g, p)| {
                    let path = &a.basis()[p];
                    m.path_action(a, path.arrows(), path.source())
                        .apply(&generators[g], f)
                })
                .collect();
            DenseMatrix::from_columns(m.dims[w], &cols)
        })
        .collect();
    ProjectiveCover { tops, cover, map }
}

/// The kernel of the projective cover, with the induced action.
pub fn syzygy(a: &MonomialAlgebra, m: &RightModule) -> RightModule {
    syzygy_of_cover(a, &projective_cover(a, m))
}

fn syzygy_of_cover(a: &MonomialAlgebra, pc: &ProjectiveCover) -> RightModule {
    let q = a.quiver();
    let f = a.field();
    let kernels: Vec<Vec<Vec<Scalar>>> = pc.map.iter().map(|m| m.kernel(f)).collect();
    let bases: Vec<DenseMatrix> = (0..q.vertex_count())
        .map(|w| DenseMatrix::from_columns(pc.cover.dims[w], &kernels[w]))
        .collect();
    let actions = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(x, arrow)| {
            let cols: Vec<Vec<Scalar>> = kernels[arrow.source]
                .iter()
                .map(|k| {
                    let image = pc.cover.actions[x].apply(k, f);
                    bases[arrow.target]
                        .solve(&image, f)
                        .expect("the kernel is a submodule")
                })
                .collect();
            DenseMatrix::from_columns(kernels[arrow.target].len(), &cols)
        })
        .collect();
    RightModule {
        dims: kernels.iter().map(Vec::len).collect(),
        actions,
    }
}

/// Outcome of a bounded dimension probe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimProbe {
    Exactly(usize),
    /// Not settled within the step budget.
    Exceeds(usize),
}

impl std::fmt::Display for DimProbe {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DimProbe::Exactly(d) => write!(f, "= {d}"),
            DimProbe::Exceeds(n) => write!(f, "> {n}"),
        }
    }
}

/// One step of a minimal resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionStep {
    pub module_dim: usize,
    /// Multiplicity of each `P_v` in the cover.
    pub cover: Vec<usize>,
    pub cover_dim: usize,
    pub syzygy_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionTrace {
    pub steps: Vec<ResolutionStep>,
}

/// Projective dimension of `m` if at most `max_steps`.
pub fn projdim_probe(
    a: &MonomialAlgebra,
    m: &RightModule,
    max_steps: usize,
) -> (DimProbe, ResolutionTrace) {
    let mut steps = Vec::new();
    let mut current = m.clone();
    if current.is_zero() {
        return (DimProbe::Exactly(0), ResolutionTrace { steps });
    }
    for k in 0..=max_steps {
        let pc = projective_cover(a, &current);
        let next = syzygy_of_cover(a, &pc);
        steps.push(ResolutionStep {
            module_dim: current.dim(),
            cover: pc.multiplicities(a.quiver().vertex_count()),
            cover_dim: pc.cover.dim(),
            syzygy_dim: next.dim(),
        });
        if next.is_zero() {
            return (DimProbe::Exactly(k), ResolutionTrace { steps });
        }
        current = next;
    }
    (DimProbe::Exceeds(max_steps), ResolutionTrace { steps })
}

/// Global dimension as the largest projective dimension of a simple module.
#[derive(Clone, Debug)]
pub struct GldimReport {
    pub gldim: DimProbe,
    /// Per vertex: the probe for its simple module.
    pub simples: Vec<(DimProbe, ResolutionTrace)>,
}

pub fn gldim_probe(a: &MonomialAlgebra, max_steps: usize) -> GldimReport {
    use rayon::prelude::*;
    let simples: Vec<(DimProbe, ResolutionTrace)> = (0..a.quiver().vertex_count())
        .into_par_iter()
        .map(|v| projdim_probe(a, &RightModule::simple(a, v), max_steps))
        .collect();
    let gldim = simples
        .iter()
        .try_fold(0, |acc, (p, _)| match p {
            DimProbe::Exactly(d) => Ok(acc.max(*d)),
            DimProbe::Exceeds(_) => Err(()),
        })
        .map_or(DimProbe::Exceeds(max_steps), DimProbe::Exactly);
    GldimReport { gldim, simples }
}

/// Dimension of the top `M / M·rad`.
pub fn top_dim(a: &MonomialAlgebra, m: &RightModule) -> usize {
    projective_cover(a, m).tops.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;
    use crate::quiver::{Path, Quiver};

    fn dual() -> MonomialAlgebra {
        MonomialAlgebra::truncated(Quiver::from_indices(1, &[(0, 0)]), 2, Field::Rational).unwrap()
    }

    fn cycle2_gldim2() -> MonomialAlgebra {
        let q = Quiver::new(&["1", "2"], &[("alpha", "1", "2"), ("beta", "2", "1")]).unwrap();
        let rel = q.path_from_names(&["beta", "alpha"]).unwrap();
        MonomialAlgebra::new(q, vec![rel], Field::Rational).unwrap()
    }

    #[test]
    fn covers() {
        let d = dual();
        let pc = projective_cover(&d, &RightModule::simple(&d, 0));
        assert_eq!(pc.cover.dim(), 2);
        let r = cycle2_gldim2();
        let p = RightModule::projective(&r, 0);
        assert_eq!(p.dim(), 3);
        let pc = projective_cover(&r, &p);
        assert_eq!(pc.tops, [0]);
        assert!(syzygy(&r, &p).is_zero());
        assert_eq!(
            projective_cover(&r, &RightModule::simple(&r, 0))
                .cover
                .dim(),
            3
        );
    }

    #[test]
    fn syzygies() {
        let d = dual();
        assert_eq!(
            syzygy(&d, &RightModule::simple(&d, 0)),
            RightModule::simple(&d, 0)
        );
        let r = cycle2_gldim2();
        let omega = syzygy(&r, &RightModule::simple(&r, 0));
        assert_eq!(omega.dims(), RightModule::projective(&r, 1).dims());
        assert!(syzygy(&r, &omega).is_zero());
        let omega2 = syzygy(&r, &RightModule::simple(&r, 1));
        assert_eq!(omega2.dim(), 1);
    }

    #[test]
    fn probes() {
        let d = dual();
        assert_eq!(
            projdim_probe(&d, &RightModule::simple(&d, 0), 10).0,
            DimProbe::Exceeds(10)
        );
        let r = cycle2_gldim2();
        let (pd1, trace) = projdim_probe(&r, &RightModule::simple(&r, 0), 5);
        assert_eq!(pd1, DimProbe::Exactly(1));
        for s in &trace.steps {
            assert_eq!(s.cover_dim, s.module_dim + s.syzygy_dim);
        }
        assert_eq!(
            projdim_probe(&r, &RightModule::simple(&r, 1), 5).0,
            DimProbe::Exactly(2)
        );
        assert_eq!(
            projdim_probe(&r, &RightModule::projective(&r, 1), 0).0,
            DimProbe::Exactly(0)
        );
        assert_eq!(gldim_probe(&r, 5).gldim, DimProbe::Exactly(2));
        let path = MonomialAlgebra::new(
            Quiver::from_indices(2, &[(0, 1)]),
            Vec::<Path>::new(),
            Field::Rational,
        )
        .unwrap();
        assert_eq!(gldim_probe(&path, 3).gldim, DimProbe::Exactly(1));
        assert_eq!(gldim_probe(&d, 8).gldim, DimProbe::Exceeds(8));
    }

    #[test]
    fn rejects_invalid_modules() {
        let d = dual();
        let mut x = DenseMatrix::zeros(2, 2);
        x[(1, 0)] = Field::Rational.one();
        x[(0, 1)] = Field::Rational.one();
        assert!(RightModule::new(&d, vec![2], vec![x]).is_err());
        let mut x = DenseMatrix::zeros(2, 2);
        x[(1, 0)] = Field::Rational.one();
        assert!(RightModule::new(&d, vec![2], vec![x]).is_ok());
    }
}
