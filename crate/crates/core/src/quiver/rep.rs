//! Finite-dimensional representations of a bound quiver.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};

use super::algebra::{Algebra, Path};

struct RepInner {
    algebra: Algebra,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A module: a vector space per vertex and a `dims[w] × dims[v]` matrix per
/// arrow `v → w`. Cloning shares the underlying data.
#[derive(Clone)]
pub struct Representation(Arc<RepInner>);

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.algebra == other.0.algebra && self.0.dims == other.0.dims && self.0.maps == other.0.maps)
    }
}

impl Eq for Representation {}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{:?}", self.0.dims)
    }
}

impl Representation {
    /// Checks shapes and relations.
    pub fn new(algebra: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != algebra.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                algebra.vertex_count()
            )));
        }
        if maps.len() != algebra.arrows().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} maps for {} arrows",
                maps.len(),
                algebra.arrows().len()
            )));
        }
        for (a, m) in algebra.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.id,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != algebra.field {
                return Err(Error::DimensionMismatch(format!("arrow {} matrix over the wrong field", a.id)));
            }
        }
        let rep = Representation(Arc::new(RepInner { algebra: algebra.clone(), dims, maps }));
        if let Some(r) = rep.violated_relation() {
            return Err(Error::RelationViolated(r + 1));
        }
        Ok(rep)
    }

    /// Skips the relation check; used where the relations hold by construction.
    pub(crate) fn from_parts(algebra: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        let rep = Representation(Arc::new(RepInner { algebra: algebra.clone(), dims, maps }));
        debug_assert!(rep.violated_relation().is_none(), "constructed representation violates a relation");
        rep
    }

    pub fn zero(algebra: &Algebra) -> Self {
        Self::with_dims_zero_maps(algebra, vec![0; algebra.vertex_count()])
    }

    fn with_dims_zero_maps(algebra: &Algebra, dims: Vec<usize>) -> Self {
        let f = algebra.field;
        let maps = algebra.arrows().iter().map(|a| Matrix::zeros(f, dims[a.target], dims[a.source])).collect();
        Self::from_parts(algebra, dims, maps)
    }

    /// The simple module at `v`.
    pub fn simple(algebra: &Algebra, v: usize) -> Self {
        let mut dims = vec![0; algebra.vertex_count()];
        dims[v] = 1;
        Self::with_dims_zero_maps(algebra, dims)
    }

    /// `P(v)`: at `w` the standard paths from `v` to `w`; an arrow appends itself.
    pub fn projective(algebra: &Algebra, v: usize) -> Self {
        let f = algebra.field;
        let n = algebra.vertex_count();
        let dims: Vec<usize> = (0..n).map(|w| algebra.path_dim(v, w)).collect();
        let maps = algebra
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
                for j in 0..dims[a.source] {
                    let mut p = algebra.standard_path(v, a.source, j);
                    p.arrows.push(ai);
                    for (i, c) in algebra.reduce_path(&p) {
                        m.set(i, j, c);
                    }
                }
                m
            })
            .collect();
        Self::from_parts(algebra, dims, maps)
    }

    /// `I(v) = D(P'(v))` with `P'(v)` the projective of the opposite algebra.
    pub fn injective(algebra: &Algebra, v: usize) -> Self {
        super::dual::dual(&Representation::projective(&algebra.opposite(), v))
    }

    /// `_AA = ⊕_v P(v)`.
    pub fn regular(algebra: &Algebra) -> Self {
        let ps: Vec<_> = (0..algebra.vertex_count()).map(|v| Self::projective(algebra, v)).collect();
        super::construct::direct_sum(algebra, &ps).module
    }

    /// `D(A_A) = ⊕_v I(v)`.
    pub fn coregular(algebra: &Algebra) -> Self {
        let is: Vec<_> = (0..algebra.vertex_count()).map(|v| Self::injective(algebra, v)).collect();
        super::construct::direct_sum(algebra, &is).module
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0.algebra
    }

    pub fn field(&self) -> PrimeField {
        self.0.algebra.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.0.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.0.maps[arrow]
    }

    /// The action of a path, `M_{a_k} ⋯ M_{a_1}`.
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dim(p.start));
        for &a in &p.arrows {
            m = self.map(a).mul(&m);
        }
        m
    }

    fn violated_relation(&self) -> Option<usize> {
        let alg = &self.0.algebra;
        for (ri, r) in alg.relations.iter().enumerate() {
            let s = alg.relation_source(r);
            let first = Path { start: s, arrows: r.terms[0].1.clone() };
            let t = first.end(&alg.quiver);
            let mut acc = Matrix::zeros(self.field(), self.dim(t), self.dim(s));
            for (c, word) in &r.terms {
                let pm = self.path_matrix(&Path { start: s, arrows: word.clone() });
                acc = acc.add(&pm.scale(*c));
            }
            if !acc.is_zero() {
                return Some(ri);
            }
        }
        None
    }
}
