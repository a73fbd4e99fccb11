//! Dense exact linear algebra over prime fields.
//!
//! Matrices are row-major with entries reduced into `[0, p)`. Elimination is
//! deterministic: the pivot in each column is the first nonzero entry at or
//! below the current row.

use std::fmt;

use crate::error::{Error, Result};

/// The prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Builds GF(p), rejecting composite or out-of-range moduli.
    pub fn new(p: u32) -> Result<Self> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        self.pow(a, self.p as u64 - 2)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A dense matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p;
        }
        m
    }

    /// Builds from signed rows, reducing every entry.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = field.reduce(x);
            }
        }
        m
    }

    /// Builds from already-reduced row-major entries.
    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| x < field.p));
        Matrix { field, rows, cols, data }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(v < self.field.p);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = self.field;
        let p = f.p as u64;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (x, &b) in acc.iter_mut().zip(orow) {
                    *x = (*x + a * b as u64) % p;
                }
            }
            for (j, &x) in acc.iter().enumerate() {
                out.data[i * other.cols + j] = x as u32;
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape mismatch");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix difference shape mismatch");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(self.field.neg(1 % self.field.p))
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut out = Matrix::zeros(self.field, self.rows, cols);
        for i in 0..self.rows {
            out.data[i * cols..i * cols + self.cols].copy_from_slice(self.row(i));
            out.data[i * cols + self.cols..(i + 1) * cols].copy_from_slice(other.row(i));
        }
        out
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block diagonal `diag(self, other)`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, other);
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r, c)`.
    pub fn paste(&mut self, r: usize, c: usize, block: &Matrix) {
        assert!(r + block.rows <= self.rows && c + block.cols <= self.cols, "paste out of bounds");
        for i in 0..block.rows {
            let dst = (r + i) * self.cols + c;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(i));
        }
    }

    pub fn submatrix(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> Matrix {
        assert!(r0 + nr <= self.rows && c0 + nc <= self.cols, "submatrix out of bounds");
        let mut out = Matrix::zeros(self.field, nr, nc);
        for i in 0..nr {
            let src = (r0 + i) * self.cols + c0;
            out.data[i * nc..(i + 1) * nc].copy_from_slice(&self.data[src..src + nc]);
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                out.data[i * cols.len() + k] = self.data[i * self.cols + j];
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows.len(), self.cols);
        for (k, &i) in rows.iter().enumerate() {
            out.data[k * self.cols..(k + 1) * self.cols].copy_from_slice(self.row(i));
        }
        out
    }

    /// Reduced row-echelon form.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| m.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m.data[r * cols + c]);
            for j in c..cols {
                m.data[r * cols + j] = f.mul(m.data[r * cols + j], inv);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = m.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let t = f.mul(factor, m.data[r * cols + j]);
                    m.data[i * cols + j] = f.sub(m.data[i * cols + j], t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        Rref { reduced: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        // Eliminating on the shorter side is cheaper.
        if self.rows > self.cols {
            self.transpose().rref().rank
        } else {
            self.rref().rank
        }
    }

    /// Columns spanning the right null space.
    pub fn kernel_basis(&self) -> Matrix {
        let f = self.field;
        let Rref { reduced, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (t, &fc) in free.iter().enumerate() {
            k.data[fc * free.len() + t] = 1 % f.p;
            for (r, &pc) in pivots.iter().enumerate() {
                let v = reduced.data[r * self.cols + fc];
                k.data[pc * free.len() + t] = f.neg(v);
            }
        }
        k
    }

    /// Basis of the column space, as the pivot columns of `self`.
    pub fn column_space_basis(&self) -> Matrix {
        let pivots = self.rref().pivots;
        self.select_columns(&pivots)
    }

    /// Some `x` with `self · x = b`, or `None` when `b` leaves the column space.
    /// Free variables are set to zero, so the answer is deterministic.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: a has {} rows, b has {}",
                self.rows, b.rows
            )));
        }
        let f = self.field;
        let aug = self.hstack(b);
        let Rref { reduced, pivots, .. } = aug.rref();
        let n = self.cols;
        if pivots.iter().any(|&c| c >= n) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(f, n, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.data[pc * b.cols + j] = reduced.data[r * aug.cols + n + j];
            }
        }
        Ok(Some(x))
    }

    /// Two-sided inverse of a square matrix, if any.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        match self.solve(&id) {
            Ok(Some(x)) => Some(x),
            _ => None,
        }
    }

    /// Columns of the identity completing the columns of `self` to a basis of
    /// the ambient space. Assumes the columns of `self` are independent.
    pub fn complement_basis(&self) -> Matrix {
        let id = Matrix::identity(self.field, self.rows);
        let aug = self.hstack(&id);
        let pivots = aug.rref().pivots;
        let extra: Vec<usize> = pivots.iter().filter(|&&c| c >= self.cols).map(|&c| c - self.cols).collect();
        id.select_columns(&extra)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<GF({})> {}x{} [", self.field.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn field_rejects_composites() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(2147483647).is_ok());
        assert!(PrimeField::new(1 << 31).is_err());
    }

    #[test]
    fn inverses() {
        let f = gf(7);
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn rref_empty() {
        let m = Matrix::zeros(gf(5), 0, 0);
        let r = m.rref();
        assert_eq!((r.reduced.rows(), r.reduced.cols(), r.rank), (0, 0, 0));
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_identity() {
        let id = Matrix::identity(gf(5), 3);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_rows(gf(5), &[vec![1, 2], vec![2, 4]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(5);
        assert_eq!(Matrix::identity(f, 4).kernel_basis().cols(), 0);
        assert_eq!(Matrix::zeros(f, 2, 3).kernel_basis().cols(), 3);
        let m = Matrix::from_rows(f, &[vec![1, 2], vec![2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(f.add(k.get(0, 0), f.mul(2, k.get(1, 0))), 0);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_examples() {
        let f = gf(5);
        let b = Matrix::from_rows(f, &[vec![1, 4], vec![3, 0]]);
        assert_eq!(Matrix::identity(f, 2).solve(&b).unwrap().unwrap(), b);
        let z = Matrix::zeros(f, 2, 2);
        assert!(z.solve(&b).unwrap().is_none());
        let a = Matrix::from_rows(f, &[vec![1], vec![2]]);
        let rhs = Matrix::from_rows(f, &[vec![2], vec![4]]);
        assert_eq!(a.solve(&rhs).unwrap().unwrap(), Matrix::from_rows(f, &[vec![2]]));
        assert!(a.solve(&Matrix::zeros(f, 3, 1)).is_err());
    }

    #[test]
    fn empty_shapes() {
        let f = gf(3);
        let a = Matrix::zeros(f, 0, 4);
        assert_eq!(a.kernel_basis().cols(), 4);
        let b = Matrix::zeros(f, 3, 0);
        assert_eq!(b.kernel_basis().cols(), 0);
        assert_eq!(a.transpose().rows(), 4);
        assert_eq!(b.mul(&Matrix::zeros(f, 0, 2)), Matrix::zeros(f, 3, 2));
        assert!(b.solve(&Matrix::zeros(f, 3, 1)).unwrap().is_some());
        assert_eq!(b.complement_basis().cols(), 3);
    }

    #[test]
    fn complement_completes_basis() {
        let f = gf(5);
        let a = Matrix::from_rows(f, &[vec![1], vec![1], vec![0]]);
        let c = a.complement_basis();
        assert_eq!(c.cols(), 2);
        assert_eq!(a.hstack(&c).rank(), 3);
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (prop::sample::select(vec![2u32, 3, 5, 7]), 0usize..6, 0usize..6).prop_flat_map(|(p, r, c)| {
            prop::collection::vec(0u32..p, r * c).prop_map(move |d| Matrix::from_vec(gf(p), r, c, d))
        })
    }

    /// Rank by brute force: the largest count of columns whose span has full
    /// size, measured by counting the vectors in the span.
    fn brute_rank(m: &Matrix) -> usize {
        let f = m.field();
        let p = f.p() as usize;
        let mut span: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
        span.insert(vec![0; m.rows()]);
        for j in 0..m.cols() {
            let col: Vec<u32> = (0..m.rows()).map(|i| m.get(i, j)).collect();
            let mut next = span.clone();
            for v in &span {
                for c in 1..p as u32 {
                    let w: Vec<u32> = v.iter().zip(&col).map(|(&a, &b)| f.add(a, f.mul(c, b))).collect();
                    next.insert(w);
                }
            }
            span = next;
        }
        let mut r = 0;
        let mut size = 1usize;
        while size < span.len() {
            size *= p;
            r += 1;
        }
        r
    }

    proptest! {
        #[test]
        fn rref_idempotent(m in arb_matrix()) {
            let once = m.rref().reduced;
            prop_assert_eq!(once.rref().reduced, once);
        }

        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let r = m.rref().rank;
            let k = m.kernel_basis();
            prop_assert_eq!(r + k.cols(), m.cols());
            prop_assert!(m.mul(&k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn rank_matches_span_count(m in arb_matrix()) {
            prop_assume!(m.rows() <= 4 && m.cols() <= 4);
            prop_assert_eq!(m.rank(), brute_rank(&m));
        }

        #[test]
        fn solve_is_exact(m in arb_matrix(), seed in 0u64..1000) {
            let f = m.field();
            let mut s = seed;
            let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((s >> 33) % f.p() as u64) as u32 };
            let x0 = Matrix::from_vec(f, m.cols(), 2, (0..m.cols() * 2).map(|_| next()).collect());
            let b = m.mul(&x0);
            let x = m.solve(&b).unwrap().expect("consistent system");
            prop_assert!(m.mul(&x).sub(&b).is_zero());
            let junk = Matrix::from_vec(f, m.rows(), 1, (0..m.rows()).map(|_| next()).collect());
            match m.solve(&junk).unwrap() {
                Some(y) => prop_assert_eq!(m.mul(&y), junk),
                None => prop_assert!(m.hstack(&junk).rank() > m.rank()),
            }
        }
    }
}
