//! Hom spaces as solution spaces of the commuting-square linear system.

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

use super::morphism::Morphism;
use super::rep::Representation;

/// Unknown layout for morphisms `source → target`: block `h_v` is stored
/// row-major starting at `offsets[v]`.
struct Layout {
    offsets: Vec<usize>,
    total: usize,
}

impl Layout {
    fn new(source: &Representation, target: &Representation) -> Layout {
        let mut offsets = Vec::new();
        let mut total = 0;
        for v in 0..source.dims().len() {
            offsets.push(total);
            total += source.dim(v) * target.dim(v);
        }
        Layout { offsets, total }
    }
}

/// A linear constraint `L · h_v · R = rhs` on one block.
pub struct BlockConstraint {
    pub vertex: usize,
    pub left: Matrix,
    pub right: Matrix,
    pub rhs: Matrix,
}

fn commuting_system(source: &Representation, target: &Representation, lay: &Layout) -> Matrix {
    let alg = source.algebra();
    let f = source.field();
    let rows: usize = alg.arrows().iter().map(|a| target.dim(a.target) * source.dim(a.source)).sum();
    let mut m = Matrix::zeros(f, rows, lay.total);
    let mut r0 = 0;
    for (ai, a) in alg.arrows().iter().enumerate() {
        let (v, w) = (a.source, a.target);
        let (sv, tv, sw, tw) = (source.dim(v), target.dim(v), source.dim(w), target.dim(w));
        let ta = target.map(ai);
        let sa = source.map(ai);
        // (T_a h_v − h_w S_a)[i, j]
        for i in 0..tw {
            for j in 0..sv {
                let row = r0 + i * sv + j;
                for k in 0..tv {
                    let c = ta.get(i, k);
                    if c != 0 {
                        let col = lay.offsets[v] + k * sv + j;
                        m.set(row, col, f.add(m.get(row, col), c));
                    }
                }
                for l in 0..sw {
                    let c = sa.get(l, j);
                    if c != 0 {
                        let col = lay.offsets[w] + i * sw + l;
                        m.set(row, col, f.sub(m.get(row, col), c));
                    }
                }
            }
        }
        r0 += tw * sv;
    }
    m
}

fn morphism_from_vector(source: &Representation, target: &Representation, lay: &Layout, x: &[u32]) -> Morphism {
    let f = source.field();
    let blocks = (0..source.dims().len())
        .map(|v| {
            let n = source.dim(v) * target.dim(v);
            Matrix::from_vec(f, target.dim(v), source.dim(v), x[lay.offsets[v]..lay.offsets[v] + n].to_vec())
        })
        .collect();
    Morphism::from_blocks(source, target, blocks)
}

/// A basis of `Hom(source, target)`.
pub fn hom_basis(source: &Representation, target: &Representation) -> Result<Vec<Morphism>> {
    if source.algebra() != target.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let lay = Layout::new(source, target);
    let sys = commuting_system(source, target, &lay);
    let k = sys.kernel_basis();
    let t = k.transpose();
    Ok((0..k.cols()).map(|j| morphism_from_vector(source, target, &lay, t.row(j))).collect())
}

pub fn hom_dim(source: &Representation, target: &Representation) -> Result<usize> {
    if source.algebra() != target.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let lay = Layout::new(source, target);
    let sys = commuting_system(source, target, &lay);
    Ok(lay.total - sys.rank())
}

/// Some morphism `source → target` meeting every block constraint; the
/// solver sets free variables to zero, so the choice is deterministic.
pub fn solve_morphism(
    source: &Representation,
    target: &Representation,
    constraints: &[BlockConstraint],
) -> Result<Option<Morphism>> {
    let f = source.field();
    let lay = Layout::new(source, target);
    let sys = commuting_system(source, target, &lay);
    let extra: usize = constraints.iter().map(|c| c.rhs.rows() * c.rhs.cols()).sum();
    let mut a = Matrix::zeros(f, extra, lay.total);
    let mut b = Matrix::zeros(f, extra, 1);
    let mut r0 = 0;
    for c in constraints {
        let v = c.vertex;
        let (tv, sv) = (target.dim(v), source.dim(v));
        assert_eq!(c.left.cols(), tv, "constraint left factor shape");
        assert_eq!(c.right.rows(), sv, "constraint right factor shape");
        for i in 0..c.rhs.rows() {
            for j in 0..c.rhs.cols() {
                let row = r0 + i * c.rhs.cols() + j;
                b.set(row, 0, c.rhs.get(i, j));
                for k in 0..tv {
                    let lk = c.left.get(i, k);
                    if lk == 0 {
                        continue;
                    }
                    for l in 0..sv {
                        let rl = c.right.get(l, j);
                        if rl != 0 {
                            let col = lay.offsets[v] + k * sv + l;
                            a.set(row, col, f.add(a.get(row, col), f.mul(lk, rl)));
                        }
                    }
                }
            }
        }
        r0 += c.rhs.rows() * c.rhs.cols();
    }
    let full = sys.vstack(&a);
    let rhs = Matrix::zeros(f, sys.rows(), 1).vstack(&b);
    Ok(full.solve(&rhs)?.map(|x| morphism_from_vector(source, target, &lay, x.transpose().row(0))))
}

/// `h: p.source → g.source` with `g ∘ h = p`, if one exists.
pub fn lift(p: &Morphism, g: &Morphism) -> Result<Option<Morphism>> {
    let f = p.source().field();
    let cons: Vec<BlockConstraint> = (0..p.blocks().len())
        .map(|v| BlockConstraint {
            vertex: v,
            left: g.block(v).clone(),
            right: Matrix::identity(f, p.source().dim(v)),
            rhs: p.block(v).clone(),
        })
        .collect();
    solve_morphism(p.source(), g.source(), &cons)
}

/// `k: f.target → e.target` with `k ∘ f = e`, if one exists.
pub fn extend(e: &Morphism, f: &Morphism) -> Result<Option<Morphism>> {
    let fld = e.source().field();
    let cons: Vec<BlockConstraint> = (0..e.blocks().len())
        .map(|v| BlockConstraint {
            vertex: v,
            left: Matrix::identity(fld, e.target().dim(v)),
            right: f.block(v).clone(),
            rhs: e.block(v).clone(),
        })
        .collect();
    solve_morphism(f.target(), e.target(), &cons)
}

/// A Hom space with its basis laid out as columns, for coordinate lookups.
pub struct HomSpace {
    pub source: Representation,
    pub target: Representation,
    pub basis: Vec<Morphism>,
    columns: Matrix,
}

impl HomSpace {
    pub fn new(source: &Representation, target: &Representation) -> Result<HomSpace> {
        let basis = hom_basis(source, target)?;
        let columns = vectors_as_columns(source, target, &basis);
        Ok(HomSpace { source: source.clone(), target: target.clone(), basis, columns })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coordinates(&self, m: &Morphism) -> Option<Vec<u32>> {
        let f = self.source.field();
        let v = m.to_vector();
        let b = Matrix::from_vec(f, v.len(), 1, v);
        self.columns.solve(&b).ok().flatten().map(|x| x.transpose().row(0).to_vec())
    }

    pub fn combination(&self, coeffs: &[u32]) -> Morphism {
        combine(&self.source, &self.target, &self.basis, coeffs)
    }

    pub fn random<R: Rng>(&self, rng: &mut R) -> Morphism {
        let p = self.source.field().p();
        let coeffs: Vec<u32> = (0..self.dim()).map(|_| rng.gen_range(0..p)).collect();
        self.combination(&coeffs)
    }
}

/// Morphisms flattened into the columns of one matrix.
pub fn vectors_as_columns(source: &Representation, target: &Representation, maps: &[Morphism]) -> Matrix {
    let f = source.field();
    let len = Layout::new(source, target).total;
    let mut data = Vec::with_capacity(len * maps.len());
    for m in maps {
        data.extend(m.to_vector());
    }
    Matrix::from_vec(f, maps.len(), len, data).transpose()
}

/// Rank of a family of parallel morphisms.
pub fn span_rank(source: &Representation, target: &Representation, maps: &[Morphism]) -> usize {
    if maps.is_empty() {
        return 0;
    }
    vectors_as_columns(source, target, maps).rank()
}

pub fn combine(source: &Representation, target: &Representation, basis: &[Morphism], coeffs: &[u32]) -> Morphism {
    let mut acc = Morphism::zero(source, target);
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = acc.add(&b.scale(c));
        }
    }
    acc
}

/// Randomized isomorphism search: tries `trials` random elements of
/// `Hom(m, n)` and returns the first invertible one.
pub fn find_isomorphism<R: Rng>(m: &Representation, n: &Representation, trials: usize, rng: &mut R) -> Option<Morphism> {
    if m.dims() != n.dims() {
        return None;
    }
    let hs = HomSpace::new(m, n).ok()?;
    if m.is_zero() {
        return Some(Morphism::zero(m, n));
    }
    if hs.dim() == 0 {
        return None;
    }
    for t in 0..trials {
        let cand = if t < hs.dim() { hs.basis[t].clone() } else { hs.random(rng) };
        if cand.is_iso() {
            return Some(cand);
        }
    }
    None
}

pub fn random_morphism<R: Rng>(source: &Representation, target: &Representation, rng: &mut R) -> Result<Morphism> {
    Ok(HomSpace::new(source, target)?.random(rng))
}
