//! Sub- and quotient modules, kernels, cokernels, direct sums, pullbacks and
//! pushouts, plus the factorizations the diagram chases need.

use crate::error::{Error, Result};
use crate::linalg::Matrix;

use super::algebra::Algebra;
use super::morphism::Morphism;
use super::rep::Representation;

/// The submodule spanned vertexwise by the independent columns of `bases`,
/// and its inclusion. The bases must be closed under the arrow actions.
pub fn subrepresentation(m: &Representation, bases: Vec<Matrix>) -> (Representation, Morphism) {
    let alg = m.algebra();
    let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let image = m.map(ai).mul(&bases[a.source]);
            bases[a.target]
                .solve(&image)
                .expect("shapes agree")
                .expect("subspace is not closed under an arrow action")
        })
        .collect();
    let sub = Representation::from_parts(alg, dims, maps);
    let incl = Morphism::from_blocks(&sub, m, bases);
    (sub, incl)
}

/// `M / S` for `S` given by independent vertexwise bases, with the projection
/// and a vertexwise linear section of it.
pub fn quotient(m: &Representation, bases: &[Matrix]) -> (Representation, Morphism, Vec<Matrix>) {
    let alg = m.algebra();
    let mut proj = Vec::new();
    let mut sections = Vec::new();
    for (v, b) in bases.iter().enumerate() {
        let c = b.complement_basis();
        let full = b.hstack(&c);
        let inv = full.inverse().expect("basis plus complement is invertible");
        let q = inv.submatrix(b.cols(), c.cols(), 0, m.dim(v));
        proj.push(q);
        sections.push(c);
        debug_assert_eq!(proj[v].rows(), m.dim(v) - b.cols());
    }
    let dims: Vec<usize> = proj.iter().map(|q| q.rows()).collect();
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| proj[a.target].mul(m.map(ai)).mul(&sections[a.source]))
        .collect();
    let quo = Representation::from_parts(alg, dims, maps);
    let pi = Morphism::from_blocks(m, &quo, proj);
    (quo, pi, sections)
}

pub fn kernel(f: &Morphism) -> (Representation, Morphism) {
    let bases = f.blocks().iter().map(|b| b.kernel_basis()).collect();
    subrepresentation(f.source(), bases)
}

/// Image of `f` as a submodule of the target, with its inclusion and the
/// corestriction `source → image`.
pub fn image(f: &Morphism) -> (Representation, Morphism, Morphism) {
    let bases = f.blocks().iter().map(|b| b.column_space_basis()).collect();
    let (im, incl) = subrepresentation(f.target(), bases);
    let co = factor_through_mono(f, &incl).expect("a map factors through its image");
    (im, incl, co)
}

pub fn cokernel(f: &Morphism) -> (Representation, Morphism) {
    let bases: Vec<Matrix> = f.blocks().iter().map(|b| b.column_space_basis()).collect();
    let (q, pi, _) = quotient(f.target(), &bases);
    (q, pi)
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Representation,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

pub fn direct_sum(alg: &Algebra, parts: &[Representation]) -> DirectSum {
    let f = alg.field;
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dim(v)).sum()).collect();
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
            let (mut r, mut c) = (0, 0);
            for p in parts {
                m.paste(r, c, p.map(ai));
                r += p.dim(a.target);
                c += p.dim(a.source);
            }
            m
        })
        .collect();
    let module = Representation::from_parts(alg, dims.clone(), maps);
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offset = vec![0; n];
    for p in parts {
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for v in 0..n {
            let mut i = Matrix::zeros(f, dims[v], p.dim(v));
            i.paste(offset[v], 0, &Matrix::identity(f, p.dim(v)));
            proj.push(i.transpose());
            inj.push(i);
            offset[v] += p.dim(v);
        }
        injections.push(Morphism::from_blocks(p, &module, inj));
        projections.push(Morphism::from_blocks(&module, p, proj));
    }
    DirectSum { module, injections, projections }
}

/// `(f_1, …, f_k): ⊕ X_i → Y` out of a given direct sum.
pub fn row_map(sum: &DirectSum, target: &Representation, maps: &[&Morphism]) -> Morphism {
    assert_eq!(sum.projections.len(), maps.len());
    let mut acc = Morphism::zero(&sum.module, target);
    for (p, m) in sum.projections.iter().zip(maps) {
        acc = acc.add(&m.compose(p));
    }
    acc
}

/// `(f_1; …; f_k): X → ⊕ Y_i` into a given direct sum.
pub fn column_map(source: &Representation, sum: &DirectSum, maps: &[&Morphism]) -> Morphism {
    assert_eq!(sum.injections.len(), maps.len());
    let mut acc = Morphism::zero(source, &sum.module);
    for (i, m) in sum.injections.iter().zip(maps) {
        acc = acc.add(&i.compose(m));
    }
    acc
}

/// `⊕ f_i: ⊕ X_i → ⊕ Y_i`.
pub fn diagonal_map(src: &DirectSum, tgt: &DirectSum, maps: &[&Morphism]) -> Morphism {
    let mut acc = Morphism::zero(&src.module, &tgt.module);
    for (k, m) in maps.iter().enumerate() {
        acc = acc.add(&tgt.injections[k].compose(m).compose(&src.projections[k]));
    }
    acc
}

/// `u` with `incl ∘ u = f`, when `f` lands in the image of the mono `incl`.
pub fn factor_through_mono(f: &Morphism, incl: &Morphism) -> Result<Morphism> {
    let mut blocks = Vec::new();
    for v in 0..f.blocks().len() {
        match incl.block(v).solve(f.block(v))? {
            Some(u) => blocks.push(u),
            None => return Err(Error::NoSolution(format!("map does not land in the submodule at vertex {}", v + 1))),
        }
    }
    let u = Morphism::from_blocks(f.source(), incl.source(), blocks);
    if incl.compose(&u) != *f {
        return Err(Error::NoSolution("factorization through mono failed".into()));
    }
    Ok(u)
}

/// `u` with `u ∘ epi = f`, when `f` kills the kernel of the epi `epi`.
pub fn factor_through_epi(f: &Morphism, epi: &Morphism) -> Result<Morphism> {
    let fld = f.source().field();
    let mut blocks = Vec::new();
    for v in 0..f.blocks().len() {
        let id = Matrix::identity(fld, epi.target().dim(v));
        let s = epi
            .block(v)
            .solve(&id)?
            .ok_or_else(|| Error::NoSolution(format!("map is not surjective at vertex {}", v + 1)))?;
        blocks.push(f.block(v).mul(&s));
    }
    let u = Morphism::new(epi.target(), f.target(), blocks)
        .map_err(|_| Error::NoSolution("induced map out of the quotient does not commute".into()))?;
    if u.compose(epi) != *f {
        return Err(Error::NoSolution("map does not vanish on the kernel".into()));
    }
    Ok(u)
}

/// A pullback square with the embedding `P ↪ X ⊕ Y`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub object: Representation,
    pub p1: Morphism,
    pub p2: Morphism,
    pub f: Morphism,
    pub g: Morphism,
    incl: Morphism,
    sum: DirectSum,
}

impl Pullback {
    /// The unique `u: T → P` with `p1 u = q1` and `p2 u = q2`.
    pub fn factor(&self, q1: &Morphism, q2: &Morphism) -> Result<Morphism> {
        if self.f.compose(q1) != self.g.compose(q2) {
            return Err(Error::Precondition("pullback factor: f∘q1 ≠ g∘q2".into()));
        }
        let into_sum = column_map(q1.source(), &self.sum, &[q1, q2]);
        factor_through_mono(&into_sum, &self.incl)
    }
}

pub fn pullback(f: &Morphism, g: &Morphism) -> Result<Pullback> {
    if f.target().dims() != g.target().dims() {
        return Err(Error::DimensionMismatch("pullback of maps with different targets".into()));
    }
    let alg = f.source().algebra();
    let sum = direct_sum(alg, &[f.source().clone(), g.source().clone()]);
    let gneg = g.neg();
    let phi = row_map(&sum, f.target(), &[f, &gneg]);
    let (object, incl) = kernel(&phi);
    let p1 = sum.projections[0].compose(&incl);
    let p2 = sum.projections[1].compose(&incl);
    Ok(Pullback { object, p1, p2, f: f.clone(), g: g.clone(), incl, sum })
}

/// A pushout square with the projection `X ⊕ Y ↠ Q`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub object: Representation,
    pub q1: Morphism,
    pub q2: Morphism,
    pub f: Morphism,
    pub g: Morphism,
    proj: Morphism,
    sum: DirectSum,
}

impl Pushout {
    /// The unique `u: Q → T` with `u q1 = r1` and `u q2 = r2`.
    pub fn factor(&self, r1: &Morphism, r2: &Morphism) -> Result<Morphism> {
        if r1.compose(&self.f) != r2.compose(&self.g) {
            return Err(Error::Precondition("pushout factor: r1∘f ≠ r2∘g".into()));
        }
        let out_of_sum = row_map(&self.sum, r1.target(), &[r1, r2]);
        factor_through_epi(&out_of_sum, &self.proj)
    }
}

pub fn pushout(f: &Morphism, g: &Morphism) -> Result<Pushout> {
    if f.source().dims() != g.source().dims() {
        return Err(Error::DimensionMismatch("pushout of maps with different sources".into()));
    }
    let alg = f.source().algebra();
    let sum = direct_sum(alg, &[f.target().clone(), g.target().clone()]);
    let gneg = g.neg();
    let psi = column_map(f.source(), &sum, &[f, &gneg]);
    let (object, proj) = cokernel(&psi);
    let q1 = proj.compose(&sum.injections[0]);
    let q2 = proj.compose(&sum.injections[1]);
    Ok(Pushout { object, q1, q2, f: f.clone(), g: g.clone(), proj, sum })
}
