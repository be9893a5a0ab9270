//! Dense matrices over a [`Field`].
//!
//! Storage is row-major. Matrices with a zero dimension are legal and act as
//! zero maps, which keeps representation code free of special cases for
//! vertices of dimension 0.

use std::fmt;
use std::ops::{Index, IndexMut};

use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {op} on {lhs:?} and {rhs:?}")]
    DimensionMismatch {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)].signed())?;
            }
        }
        write!(f, "]")
    }
}

impl<F> Index<(usize, usize)> for Mat<F> {
    type Output = F;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Mat<F> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Row echelon data: the reduced matrix and its pivot columns.
#[derive(Clone)]
pub struct Rref<F> {
    pub mat: Mat<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn scalar(n: usize, c: F) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows*cols");
        Mat { rows, cols, data }
    }

    /// Builds from row vectors. All rows must have length `cols`.
    pub fn from_rows(rows: &[Vec<F>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Mat {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let v: Vec<Vec<F>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| F::from_i64(x)).collect())
            .collect();
        Self::from_rows(&v, cols)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_cols(cols: &[Vec<F>], rows: usize) -> Self {
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i])
    }

    pub fn random<R: rand::Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Self {
        Self::from_fn(rows, cols, |_, _| F::sample(rng))
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mul",
                lhs: self.shape(),
                rhs: rhs.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let rrow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (o, &b) in orow.iter_mut().zip(rrow) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Product; panics on shape mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(&a, &b)| a * b).sum())
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: F) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| a * c).collect(),
        }
    }

    pub fn add_scaled(&mut self, rhs: &Self, c: F) {
        assert_eq!(self.shape(), rhs.shape());
        if c.is_zero() {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&rhs.data) {
            *a += b * c;
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(-F::one())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> F {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m[(r, c)].try_inv().expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] *= inv;
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m[(i, c)];
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m[(r, j)];
                    m[(i, j)] -= f * v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { mat: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Columns form a basis of the right null space.
    pub fn kernel_basis(&self) -> Self {
        let Rref { mat, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Self::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k[(f, j)] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                k[(p, j)] = -mat[(r, f)];
            }
        }
        k
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Self) -> Result<Option<Self>, LinalgError> {
        if self.rows != b.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "solve",
                lhs: self.shape(),
                rhs: b.shape(),
            });
        }
        let aug = Self::hstack(&[self, b]);
        let Rref { mat, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Self::zeros(self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(p, j)] = mat[(r, self.cols + j)];
            }
        }
        Ok(Some(x))
    }

    /// Some `x` with `x * self = b`.
    pub fn solve_left(&self, b: &Self) -> Result<Option<Self>, LinalgError> {
        Ok(self.transpose().solve(&b.transpose())?.map(|x| x.transpose()))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let Rref { mat, pivots } = Self::hstack(&[self, &Self::identity(n)]).rref();
        if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
            return None;
        }
        Some(mat.submatrix(0..n, n..2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let c0 = cols.start;
        let r0 = rows.start;
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(r0 + i, c0 + j)])
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])])
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, |i, j| self[(idx[i], j)])
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols);
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)];
            }
        }
    }

    /// Horizontal concatenation. All parts must share the row count.
    pub fn hstack(parts: &[&Self]) -> Self {
        let rows = parts.first().map_or(0, |p| p.rows);
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut c = 0;
        for p in parts {
            assert_eq!(p.rows, rows, "hstack row mismatch");
            out.set_block(0, c, p);
            c += p.cols;
        }
        out
    }

    /// Vertical concatenation. All parts must share the column count.
    pub fn vstack(parts: &[&Self]) -> Self {
        let cols = parts.first().map_or(0, |p| p.cols);
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut out = Self::zeros(rows, cols);
        let mut r = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
            out.set_block(r, 0, p);
            r += p.rows;
        }
        out
    }

    pub fn hstack_n(rows: usize, parts: &[Self]) -> Self {
        if parts.is_empty() {
            return Self::zeros(rows, 0);
        }
        Self::hstack(&parts.iter().collect::<Vec<_>>())
    }

    pub fn vstack_n(cols: usize, parts: &[Self]) -> Self {
        if parts.is_empty() {
            return Self::zeros(0, cols);
        }
        Self::vstack(&parts.iter().collect::<Vec<_>>())
    }

    pub fn block_diag(parts: &[&Self]) -> Self {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for p in parts {
            out.set_block(r, c, p);
            r += p.rows;
            c += p.cols;
        }
        out
    }

    /// A maximal linearly independent subset of the columns, as a matrix.
    pub fn col_basis(&self) -> Self {
        let piv = self.rref().pivots;
        self.select_cols(&piv)
    }

    /// Standard basis vectors completing the column space to the whole space.
    pub fn col_complement(&self) -> Self {
        let aug = Self::hstack(&[self, &Self::identity(self.rows)]);
        let extra: Vec<usize> = aug.rref().pivots.into_iter().filter(|&p| p >= self.cols).collect();
        aug.select_cols(&extra)
    }

    /// Whether every column of `other` lies in the column space of `self`.
    pub fn spans(&self, other: &Self) -> bool {
        assert_eq!(self.rows, other.rows);
        self.rank() == Self::hstack(&[self, other]).rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Zero};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F = Fp<32003>;
    type F5 = Fp<5>;
    type F7 = Fp<7>;

    #[test]
    fn identity_solve() {
        let b = Mat::<F>::from_i64_rows(&[&[1, 2], &[3, 4], &[-5, 6]]);
        let x = Mat::identity(3).solve(&b).unwrap().unwrap();
        assert_eq!(x, b);
    }

    #[test]
    fn inconsistent_system() {
        let b = Mat::<F>::from_i64_rows(&[&[1], &[0]]);
        assert!(Mat::zeros(2, 2).solve(&b).unwrap().is_none());
    }

    #[test]
    fn solve_shape_mismatch() {
        let b = Mat::<F>::zeros(3, 1);
        assert!(Mat::<F>::zeros(2, 2).solve(&b).is_err());
    }

    #[test]
    fn random_invertible_multiply_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut tried = 0;
        loop {
            let a = Mat::<F7>::random(5, 5, &mut rng);
            tried += 1;
            if !a.is_invertible() {
                continue;
            }
            let b = Mat::<F7>::random(5, 2, &mut rng);
            let x = a.solve(&b).unwrap().unwrap();
            assert_eq!(a.mul(&x), b);
            let inv = a.inverse().unwrap();
            assert_eq!(a.mul(&inv), Mat::identity(5));
            break;
        }
        assert!(tried < 50);
    }

    #[test]
    fn kernel_trivial_cases() {
        assert_eq!(Mat::<F>::zeros(3, 3).kernel_basis(), Mat::identity(3));
        assert_eq!(Mat::<F>::identity(4).kernel_basis().shape(), (4, 0));
    }

    #[test]
    fn kernel_mod5_exhaustive() {
        let a = Mat::<F5>::from_i64_rows(&[&[1, 1], &[2, 2]]);
        let k = a.kernel_basis();
        assert_eq!(k.shape(), (2, 1));
        // every null vector found by scanning F_5^2 is a multiple of k
        let mut null = Vec::new();
        for x in 0..5 {
            for y in 0..5 {
                let v = vec![F5::new(x), F5::new(y)];
                if a.mul_vec(&v).iter().all(|z| z.is_zero()) {
                    null.push(v);
                }
            }
        }
        assert_eq!(null.len(), 5);
        for v in &null {
            assert!(k.spans(&Mat::from_cols(std::slice::from_ref(v), 2)));
        }
        assert_eq!(k[(0, 0)], -k[(1, 0)]);
    }

    #[test]
    fn rank_of_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let u = Mat::<F>::random(6, 2, &mut rng);
        let v = Mat::<F>::random(2, 4, &mut rng);
        assert_eq!(u.mul(&v).rank(), 2);
        assert_eq!(Mat::<F>::identity(5).rank(), 5);
        assert_eq!(Mat::<F>::zeros(3, 7).rank(), 0);
    }

    #[test]
    fn empty_shapes_behave() {
        let a = Mat::<F>::zeros(0, 3);
        assert_eq!(a.kernel_basis(), Mat::identity(3));
        let b = Mat::<F>::zeros(3, 0);
        assert_eq!(b.rank(), 0);
        assert_eq!(b.mul(&Mat::zeros(0, 2)), Mat::zeros(3, 2));
        assert_eq!(Mat::<F>::zeros(0, 0).inverse(), Some(Mat::zeros(0, 0)));
    }

    #[test]
    fn complement_completes_basis() {
        let a = Mat::<F>::from_i64_rows(&[&[1, 2], &[1, 2], &[0, 0]]);
        let c = a.col_complement();
        assert_eq!(c.cols(), 2);
        assert_eq!(Mat::hstack(&[&a.col_basis(), &c]).rank(), 3);
    }
}
