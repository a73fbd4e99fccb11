//! Bound quiver algebras `kQ/I` with homogeneous relations.
//!
//! Words are read left to right: the path `[a, b]` means "first a, then b".
//! For every triple `(v, w, n)` the span of the length-`n` paths from `v` to
//! `w` is row reduced against the degree-`n` part of the ideal; the non-pivot
//! paths form the standard basis of `e_v A e_w` in that degree.

use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};

const MAX_PATH_LENGTH: usize = 64;
const MAX_PATHS: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    pub vertex_count: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self> {
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(Error::InvalidQuiver(format!("arrow {} has an endpoint out of range", a.id)));
            }
            if a.id.is_empty() || a.id.contains(|c: char| c.is_whitespace() || "+-*.#".contains(c)) {
                return Err(Error::InvalidQuiver(format!("illegal arrow id {:?}", a.id)));
            }
            if arrows[..i].iter().any(|b| b.id == a.id) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow id {}", a.id)));
            }
        }
        Ok(Quiver { vertex_count, arrows })
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { id: a.id.clone(), source: a.target, target: a.source })
            .collect();
        Quiver { vertex_count: self.vertex_count, arrows }
    }
}

/// A path given by its start vertex and arrow indices (empty for `e_v`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { start: v, arrows: Vec::new() }
    }
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
    pub fn end(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&a| q.arrows[a].target)
    }
}

/// `Σ c_i p_i` with parallel paths of one common length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(u32, Vec<usize>)>,
}

#[derive(Clone, Debug)]
struct PathBlock {
    paths: Vec<Vec<usize>>,
    column: HashMap<Vec<usize>, usize>,
    reduced: Matrix,
    pivot_row: Vec<Option<usize>>,
    standard_pos: Vec<Option<usize>>,
    standard: Vec<usize>,
}

impl PathBlock {
    /// Coordinates of one path in the standard basis of its block.
    fn reduce(&self, col: usize) -> Vec<(usize, u32)> {
        if let Some(s) = self.standard_pos[col] {
            return vec![(s, 1)];
        }
        let r = self.pivot_row[col].expect("a column is either standard or a pivot");
        let f = self.reduced.field();
        let mut out = Vec::new();
        for (s, &c) in self.standard.iter().enumerate() {
            let x = self.reduced.get(r, c);
            if x != 0 {
                out.push((s, f.neg(x)));
            }
        }
        out
    }
}

/// Everything derived from one side of a bound quiver algebra.
#[derive(Debug)]
pub struct AlgebraData {
    pub field: PrimeField,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Every path longer than this lies in the ideal.
    pub path_length_bound: usize,
    blocks: HashMap<(usize, usize, usize), PathBlock>,
    /// Standard basis of `e_v A e_w` as `(length, index in block)`, by length.
    basis: Vec<Vec<Vec<(usize, usize)>>>,
    offsets: Vec<Vec<Vec<usize>>>,
}

impl AlgebraData {
    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.quiver.arrows
    }

    /// `dim e_v A e_w`: standard paths from `v` to `w`.
    pub fn path_dim(&self, v: usize, w: usize) -> usize {
        self.basis[v][w].len()
    }

    pub fn dimension(&self) -> usize {
        let n = self.vertex_count();
        (0..n).flat_map(|v| (0..n).map(move |w| (v, w))).map(|(v, w)| self.path_dim(v, w)).sum()
    }

    /// The `i`-th standard path from `v` to `w`.
    pub fn standard_path(&self, v: usize, w: usize, i: usize) -> Path {
        let (len, s) = self.basis[v][w][i];
        let block = &self.blocks[&(v, w, len)];
        Path { start: v, arrows: block.paths[block.standard[s]].clone() }
    }

    pub fn standard_paths(&self, v: usize, w: usize) -> Vec<Path> {
        (0..self.path_dim(v, w)).map(|i| self.standard_path(v, w, i)).collect()
    }

    /// Coordinates of an arbitrary path in the standard basis of `e_v A e_w`.
    pub fn reduce_path(&self, path: &Path) -> Vec<(usize, u32)> {
        let len = path.len();
        if len > self.path_length_bound {
            return Vec::new();
        }
        let v = path.start;
        let w = path.end(&self.quiver);
        let block = &self.blocks[&(v, w, len)];
        let col = block.column[&path.arrows];
        let off = self.offsets[v][w][len];
        block.reduce(col).into_iter().map(|(s, c)| (off + s, c)).collect()
    }

    /// Element of `e_v A e_w` times element of `e_w A e_u` (concatenation).
    pub fn multiply(&self, v: usize, w: usize, u: usize, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.path_dim(v, u)];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let p = self.standard_path(v, w, i);
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let q = self.standard_path(w, u, j);
                let mut arrows = p.arrows.clone();
                arrows.extend_from_slice(&q.arrows);
                let c = f.mul(a, b);
                for (k, e) in self.reduce_path(&Path { start: v, arrows }) {
                    out[k] = f.add(out[k], f.mul(c, e));
                }
            }
        }
        out
    }

    pub fn relation_source(&self, r: &Relation) -> usize {
        self.quiver.arrows[r.terms[0].1[0]].source
    }

    pub fn describe_path(&self, p: &Path) -> String {
        if p.is_empty() {
            format!("e{}", p.start + 1)
        } else {
            p.arrows.iter().map(|&a| self.quiver.arrows[a].id.as_str()).collect::<Vec<_>>().join(".")
        }
    }
}

#[derive(Debug)]
struct AlgebraPair {
    name: String,
    given: AlgebraData,
    opposite: AlgebraData,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Given,
    Opposite,
}

/// Shared handle to one side of a bound quiver algebra. Cloning is cheap and
/// `opposite()` returns the other side of the same pair, so `A^op^op` is `A`.
#[derive(Clone)]
pub struct Algebra {
    pair: Arc<AlgebraPair>,
    side: Side,
}

impl Deref for Algebra {
    type Target = AlgebraData;
    fn deref(&self) -> &AlgebraData {
        match self.side {
            Side::Given => &self.pair.given,
            Side::Opposite => &self.pair.opposite,
        }
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.pair, &other.pair) {
            return self.side == other.side;
        }
        self.field == other.field && self.quiver == other.quiver && self.relations == other.relations
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}{})", self.pair.name, if self.side == Side::Opposite { "^op" } else { "" })
    }
}

impl Algebra {
    /// Validates the relations and computes the standard path basis.
    /// Relations are given as `(coefficient, arrow ids)` lists.
    pub fn new(name: &str, field: PrimeField, quiver: Quiver, relations: Vec<Vec<(i64, Vec<String>)>>) -> Result<Algebra> {
        let mut rels = Vec::new();
        for (ri, r) in relations.iter().enumerate() {
            let mut terms: Vec<(u32, Vec<usize>)> = Vec::new();
            for (c, ids) in r {
                let mut arrows = Vec::new();
                for id in ids {
                    let a = quiver
                        .arrow_index(id)
                        .ok_or_else(|| Error::InvalidRelation(format!("relation {}: unknown arrow {}", ri + 1, id)))?;
                    arrows.push(a);
                }
                let c = field.reduce(*c);
                if let Some(t) = terms.iter_mut().find(|t| t.1 == arrows) {
                    t.0 = field.add(t.0, c);
                } else {
                    terms.push((c, arrows));
                }
            }
            terms.retain(|t| t.0 != 0);
            if terms.is_empty() {
                continue;
            }
            validate_relation(&quiver, &terms, ri)?;
            rels.push(Relation { terms });
        }
        let given = build_data(field, quiver, rels)?;
        let opposite = opposite_data(&given);
        Ok(Algebra { pair: Arc::new(AlgebraPair { name: name.to_string(), given, opposite }), side: Side::Given })
    }

    pub fn name(&self) -> String {
        match self.side {
            Side::Given => self.pair.name.clone(),
            Side::Opposite => format!("{}^op", self.pair.name),
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn opposite(&self) -> Algebra {
        let side = match self.side {
            Side::Given => Side::Opposite,
            Side::Opposite => Side::Given,
        };
        Algebra { pair: self.pair.clone(), side }
    }

    pub fn data(&self) -> &AlgebraData {
        self
    }
}

fn validate_relation(q: &Quiver, terms: &[(u32, Vec<usize>)], ri: usize) -> Result<()> {
    let bad = |m: &str| Err(Error::InvalidRelation(format!("relation {}: {}", ri + 1, m)));
    let first = &terms[0].1;
    for (_, p) in terms {
        if p.len() < 2 {
            return bad("every path must have length at least 2");
        }
        if p.len() != first.len() {
            return bad("paths of different lengths (only homogeneous relations are supported)");
        }
        for w in p.windows(2) {
            if q.arrows[w[0]].target != q.arrows[w[1]].source {
                return bad("path is not composable");
            }
        }
        if q.arrows[p[0]].source != q.arrows[first[0]].source
            || q.arrows[*p.last().unwrap()].target != q.arrows[*first.last().unwrap()].target
        {
            return bad("paths are not parallel");
        }
    }
    Ok(())
}

fn build_data(field: PrimeField, quiver: Quiver, relations: Vec<Relation>) -> Result<AlgebraData> {
    let n = quiver.vertex_count;
    // paths_by_len[len] lists every path of that length.
    let mut paths_by_len: Vec<Vec<Path>> = vec![(0..n).map(Path::trivial).collect()];
    let mut blocks: HashMap<(usize, usize, usize), PathBlock> = HashMap::new();
    let mut total = n;
    let mut bound = None;
    for len in 0..=MAX_PATH_LENGTH + 1 {
        if len > 0 {
            let mut next = Vec::new();
            for p in &paths_by_len[len - 1] {
                let e = p.end(&quiver);
                for (ai, a) in quiver.arrows.iter().enumerate() {
                    if a.source == e {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        next.push(Path { start: p.start, arrows });
                    }
                }
            }
            total += next.len();
            if total > MAX_PATHS {
                return Err(Error::NotNilpotent(len));
            }
            paths_by_len.push(next);
        }
        let mut by_pair: HashMap<(usize, usize), Vec<Vec<usize>>> = HashMap::new();
        for p in &paths_by_len[len] {
            by_pair.entry((p.start, p.end(&quiver))).or_default().push(p.arrows.clone());
        }
        // Ideal generators of this degree: p · r · q.
        let mut gens: HashMap<(usize, usize), Vec<Vec<(u32, Vec<usize>)>>> = HashMap::new();
        for r in &relations {
            let d = r.terms[0].1.len();
            if d > len {
                continue;
            }
            let rs = quiver.arrows[r.terms[0].1[0]].source;
            let rt = quiver.arrows[*r.terms[0].1.last().unwrap()].target;
            for l1 in 0..=len - d {
                let l2 = len - d - l1;
                for p in paths_by_len[l1].iter().filter(|p| p.end(&quiver) == rs) {
                    for q in paths_by_len[l2].iter().filter(|q| q.start == rt) {
                        let elem: Vec<(u32, Vec<usize>)> = r
                            .terms
                            .iter()
                            .map(|(c, mid)| {
                                let mut w = p.arrows.clone();
                                w.extend_from_slice(mid);
                                w.extend_from_slice(&q.arrows);
                                (*c, w)
                            })
                            .collect();
                        gens.entry((p.start, q.end(&quiver))).or_default().push(elem);
                    }
                }
            }
        }
        let mut all_in_ideal = true;
        let mut keys: Vec<(usize, usize)> = by_pair.keys().copied().collect();
        keys.sort();
        for (v, w) in keys {
            let paths = by_pair.remove(&(v, w)).unwrap();
            let column: HashMap<Vec<usize>, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
            let g = gens.remove(&(v, w)).unwrap_or_default();
            let mut m = Matrix::zeros(field, g.len(), paths.len());
            for (i, elem) in g.iter().enumerate() {
                for (c, word) in elem {
                    let j = column[word];
                    m.set(i, j, field.add(m.get(i, j), *c));
                }
            }
            let rr = m.rref();
            let mut pivot_row = vec![None; paths.len()];
            for (r, &c) in rr.pivots.iter().enumerate() {
                pivot_row[c] = Some(r);
            }
            let standard: Vec<usize> = (0..paths.len()).filter(|&c| pivot_row[c].is_none()).collect();
            let mut standard_pos = vec![None; paths.len()];
            for (s, &c) in standard.iter().enumerate() {
                standard_pos[c] = Some(s);
            }
            if !standard.is_empty() {
                all_in_ideal = false;
            }
            let reduced = rr.reduced.submatrix(0, rr.rank, 0, paths.len());
            blocks.insert((v, w, len), PathBlock { paths, column, reduced, pivot_row, standard_pos, standard });
        }
        if all_in_ideal && len > 0 {
            bound = Some(len - 1);
            break;
        }
    }
    let Some(bound) = bound else {
        return Err(Error::NotNilpotent(MAX_PATH_LENGTH));
    };
    // Drop the top degree, which is entirely inside the ideal.
    blocks.retain(|k, _| k.2 <= bound);
    let mut basis = vec![vec![Vec::new(); n]; n];
    let mut offsets = vec![vec![vec![0; bound + 1]; n]; n];
    for v in 0..n {
        for w in 0..n {
            for len in 0..=bound {
                offsets[v][w][len] = basis[v][w].len();
                if let Some(b) = blocks.get(&(v, w, len)) {
                    for s in 0..b.standard.len() {
                        basis[v][w].push((len, s));
                    }
                }
            }
        }
    }
    // Blocks with no paths at all still need an entry so lookups succeed.
    for v in 0..n {
        for w in 0..n {
            for len in 0..=bound {
                blocks.entry((v, w, len)).or_insert_with(|| PathBlock {
                    paths: Vec::new(),
                    column: HashMap::new(),
                    reduced: Matrix::zeros(field, 0, 0),
                    pivot_row: Vec::new(),
                    standard_pos: Vec::new(),
                    standard: Vec::new(),
                });
            }
        }
    }
    Ok(AlgebraData { field, quiver, relations, path_length_bound: bound, blocks, basis, offsets })
}

/// The opposite side: arrows and words reversed, with the same row
/// reductions, so standard paths correspond under reversal.
fn opposite_data(a: &AlgebraData) -> AlgebraData {
    let quiver = a.quiver.opposite();
    let relations = a
        .relations
        .iter()
        .map(|r| Relation {
            terms: r.terms.iter().map(|(c, p)| (*c, p.iter().rev().copied().collect())).collect(),
        })
        .collect();
    let mut blocks = HashMap::new();
    for (&(v, w, len), b) in &a.blocks {
        let paths: Vec<Vec<usize>> = b.paths.iter().map(|p| p.iter().rev().copied().collect()).collect();
        let column = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        blocks.insert(
            (w, v, len),
            PathBlock {
                paths,
                column,
                reduced: b.reduced.clone(),
                pivot_row: b.pivot_row.clone(),
                standard_pos: b.standard_pos.clone(),
                standard: b.standard.clone(),
            },
        );
    }
    let n = a.vertex_count();
    let mut basis = vec![vec![Vec::new(); n]; n];
    let mut offsets = vec![vec![Vec::new(); n]; n];
    for v in 0..n {
        for w in 0..n {
            basis[w][v] = a.basis[v][w].clone();
            offsets[w][v] = a.offsets[v][w].clone();
        }
    }
    AlgebraData {
        field: a.field,
        quiver,
        relations,
        path_length_bound: a.path_length_bound,
        blocks,
        basis,
        offsets,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn arrow(id: &str, s: usize, t: usize) -> Arrow {
        Arrow { id: id.into(), source: s, target: t }
    }

    fn rel(terms: &[(i64, &[&str])]) -> Vec<(i64, Vec<String>)> {
        terms.iter().map(|(c, p)| (*c, p.iter().map(|s| s.to_string()).collect())).collect()
    }

    #[test]
    fn a2_dimensions() {
        let q = Quiver::new(2, vec![arrow("a", 0, 1)]).unwrap();
        let a = Algebra::new("kA2", gf5(), q, vec![]).unwrap();
        assert_eq!(a.dimension(), 3);
        assert_eq!(a.path_length_bound, 1);
        assert_eq!(a.path_dim(0, 1), 1);
        assert_eq!(a.path_dim(1, 0), 0);
        let op = a.opposite();
        assert_eq!(op.path_dim(1, 0), 1);
        assert_eq!(op.opposite(), a);
    }

    #[test]
    fn truncated_a3() {
        let q = Quiver::new(3, vec![arrow("a", 0, 1), arrow("b", 1, 2)]).unwrap();
        let a = Algebra::new("A3rad2", gf5(), q, vec![rel(&[(1, &["a", "b"])])]).unwrap();
        assert_eq!(a.dimension(), 5);
        assert_eq!(a.path_dim(0, 2), 0);
        assert_eq!(a.path_length_bound, 1);
    }

    #[test]
    fn dual_numbers() {
        let q = Quiver::new(1, vec![arrow("x", 0, 0)]).unwrap();
        let a = Algebra::new("kxx2", gf5(), q, vec![rel(&[(1, &["x", "x"])])]).unwrap();
        assert_eq!(a.dimension(), 2);
        let x = a.standard_path(0, 0, 1);
        assert_eq!(x.arrows, vec![0]);
        // x · x = 0
        assert_eq!(a.multiply(0, 0, 0, &[0, 1], &[0, 1]), vec![0, 0]);
        assert_eq!(a.multiply(0, 0, 0, &[1, 2], &[3, 1]), vec![3, 1 + 6 % 5]);
    }

    #[test]
    fn commutative_square() {
        // 1 -a-> 2 -b-> 4, 1 -c-> 3 -d-> 4 with ab = cd.
        let q = Quiver::new(4, vec![arrow("a", 0, 1), arrow("b", 1, 3), arrow("c", 0, 2), arrow("d", 2, 3)]).unwrap();
        let a = Algebra::new("sq", gf5(), q, vec![rel(&[(1, &["a", "b"]), (-1, &["c", "d"])])]).unwrap();
        assert_eq!(a.path_dim(0, 3), 1);
        let ab = Path { start: 0, arrows: vec![0, 1] };
        let cd = Path { start: 0, arrows: vec![2, 3] };
        assert_eq!(a.reduce_path(&ab), a.reduce_path(&cd));
        let op = a.opposite();
        assert_eq!(op.path_dim(3, 0), 1);
    }

    #[test]
    fn rejects_bad_input() {
        let q = Quiver::new(1, vec![arrow("x", 0, 0)]).unwrap();
        assert!(matches!(Algebra::new("free", gf5(), q.clone(), vec![]), Err(Error::NotNilpotent(_))));
        let r = rel(&[(1, &["x"])]);
        assert!(matches!(Algebra::new("short", gf5(), q.clone(), vec![r]), Err(Error::InvalidRelation(_))));
        let r = rel(&[(1, &["x", "x"]), (1, &["x", "x", "x"])]);
        assert!(matches!(Algebra::new("inhomog", gf5(), q, vec![r]), Err(Error::InvalidRelation(_))));
        assert!(Quiver::new(1, vec![arrow("x", 0, 1)]).is_err());
        assert!(Quiver::new(2, vec![arrow("x", 0, 1), arrow("x", 1, 0)]).is_err());
    }

    #[test]
    fn kronecker_is_four_dimensional() {
        let q = Quiver::new(2, vec![arrow("a", 0, 1), arrow("b", 0, 1)]).unwrap();
        let a = Algebra::new("kron2", gf5(), q, vec![]).unwrap();
        assert_eq!(a.dimension(), 4);
        assert_eq!(a.path_dim(0, 1), 2);
    }
}
