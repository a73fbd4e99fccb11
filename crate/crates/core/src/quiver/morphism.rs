use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

use super::rep::Representation;

/// A module homomorphism: one `target.dim(v) × source.dim(v)` block per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    blocks: Vec<Matrix>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism {:?} -> {:?}", self.source.dims(), self.target.dims())
    }
}

impl Morphism {
    /// Checks block shapes and the commuting squares.
    pub fn new(source: &Representation, target: &Representation, blocks: Vec<Matrix>) -> Result<Self> {
        if source.algebra() != target.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        let n = source.algebra().vertex_count();
        if blocks.len() != n {
            return Err(Error::DimensionMismatch(format!("{} blocks for {} vertices", blocks.len(), n)));
        }
        for (v, b) in blocks.iter().enumerate() {
            if b.rows() != target.dim(v) || b.cols() != source.dim(v) {
                return Err(Error::DimensionMismatch(format!(
                    "block at vertex {} should be {}x{}, got {}x{}",
                    v + 1,
                    target.dim(v),
                    source.dim(v),
                    b.rows(),
                    b.cols()
                )));
            }
        }
        let m = Morphism { source: source.clone(), target: target.clone(), blocks };
        if let Some(a) = m.failing_square() {
            return Err(Error::NotAMorphism(source.algebra().arrows()[a].id.clone()));
        }
        Ok(m)
    }

    /// For blocks that commute by construction.
    pub(crate) fn from_blocks(source: &Representation, target: &Representation, blocks: Vec<Matrix>) -> Self {
        let m = Morphism { source: source.clone(), target: target.clone(), blocks };
        debug_assert!(m.failing_square().is_none(), "constructed blocks do not commute");
        m
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let f = source.field();
        let blocks = (0..source.dims().len()).map(|v| Matrix::zeros(f, target.dim(v), source.dim(v))).collect();
        Morphism { source: source.clone(), target: target.clone(), blocks }
    }

    pub fn identity(m: &Representation) -> Self {
        let f = m.field();
        let blocks = m.dims().iter().map(|&d| Matrix::identity(f, d)).collect();
        Morphism { source: m.clone(), target: m.clone(), blocks }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }
    pub fn target(&self) -> &Representation {
        &self.target
    }
    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }
    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    /// The first arrow whose square fails to commute.
    pub fn failing_square(&self) -> Option<usize> {
        let alg = self.source.algebra();
        alg.arrows().iter().enumerate().find_map(|(ai, a)| {
            let lhs = self.target.map(ai).mul(&self.blocks[a.source]);
            let rhs = self.blocks[a.target].mul(self.source.map(ai));
            (lhs != rhs).then_some(ai)
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Morphism) -> Morphism {
        assert!(other.target.dims() == self.source.dims(), "composition of non-composable morphisms");
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(b)).collect();
        Morphism { source: other.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn scale(&self, c: u32) -> Morphism {
        let blocks = self.blocks.iter().map(|a| a.scale(c)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn neg(&self) -> Morphism {
        let blocks = self.blocks.iter().map(|a| a.neg()).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    /// Same blocks, relabelled endpoints (which must have the same dims).
    pub fn retarget(&self, source: &Representation, target: &Representation) -> Morphism {
        assert_eq!(source.dims(), self.source.dims());
        assert_eq!(target.dims(), self.target.dims());
        Morphism { source: source.clone(), target: target.clone(), blocks: self.blocks.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn rank(&self, v: usize) -> usize {
        self.blocks[v].rank()
    }

    pub fn total_rank(&self) -> usize {
        (0..self.blocks.len()).map(|v| self.rank(v)).sum()
    }

    pub fn is_injective(&self) -> bool {
        (0..self.blocks.len()).all(|v| self.rank(v) == self.source.dim(v))
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.blocks.len()).all(|v| self.rank(v) == self.target.dim(v))
    }

    pub fn is_iso(&self) -> bool {
        self.source.dims() == self.target.dims() && self.is_injective()
    }

    /// Flattened blocks, vertex by vertex, row-major.
    pub fn to_vector(&self) -> Vec<u32> {
        self.blocks.iter().flat_map(|b| b.data().iter().copied()).collect()
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<Morphism> {
        if !self.is_iso() {
            return None;
        }
        let blocks = self.blocks.iter().map(|b| b.inverse().expect("invertible block")).collect();
        Some(Morphism { source: self.target.clone(), target: self.source.clone(), blocks })
    }
}

/// Whether `A --f--> B --g--> C` is exact at `B`.
pub fn is_exact_at(f: &Morphism, g: &Morphism) -> bool {
    if !g.compose(f).is_zero() {
        return false;
    }
    (0..f.blocks().len()).all(|v| f.rank(v) + g.rank(v) == f.target().dim(v))
}

/// `0 → A --f--> B --g--> C → 0`, checked on construction.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub f: Morphism,
    pub g: Morphism,
}

impl ShortExactSequence {
    pub fn new(f: Morphism, g: Morphism) -> Result<Self> {
        if f.target().dims() != g.source().dims() {
            return Err(Error::NotExact("maps are not composable".into()));
        }
        if !f.is_injective() {
            return Err(Error::NotExact("first map is not injective".into()));
        }
        if !g.is_surjective() {
            return Err(Error::NotExact("second map is not surjective".into()));
        }
        if !is_exact_at(&f, &g) {
            return Err(Error::NotExact("image differs from kernel".into()));
        }
        Ok(ShortExactSequence { f, g })
    }

    pub fn left(&self) -> &Representation {
        self.f.source()
    }
    pub fn middle(&self) -> &Representation {
        self.f.target()
    }
    pub fn right(&self) -> &Representation {
        self.g.target()
    }

    pub fn is_valid(&self) -> bool {
        self.f.is_injective() && self.g.is_surjective() && is_exact_at(&self.f, &self.g)
    }
}
