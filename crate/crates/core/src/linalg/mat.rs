//! Dense row-major matrices over an exact [`Field`].
//!
//! The tensor-product convention is fixed here: the basis of `V ⊗ W` is
//! `v_i ⊗ w_j` at index `i * dim(W) + j` (left factor major), which is
//! exactly the index layout produced by [`Mat::kron`].

use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.field.format(self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Mat { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { field: field.clone(), rows, cols, data }
    }

    /// Builds a matrix from integer rows, reducing into the field.
    pub fn from_i64(field: &F, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Self::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j])))
    }

    pub fn from_elems(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Mat { field: field.clone(), rows, cols, data })
    }

    /// Column vector.
    pub fn column(field: &F, entries: &[F::Elem]) -> Self {
        Mat { field: field.clone(), rows: entries.len(), cols: 1, data: entries.to_vec() }
    }

    /// Permutation matrix sending basis vector `j` to basis vector `perm[j]`.
    pub fn permutation(field: &F, perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(field, n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.data[i * n + j] = field.one();
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col_vec(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &Mat<F>) -> Result<Mat<F>> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(orow) {
                    if f.is_zero(b) {
                        continue;
                    }
                    *d = f.add(d, &f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Mat<F>) -> Result<Mat<F>> {
        self.same_shape(other)?;
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Ok(Mat { field: f.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Mat<F>) -> Result<Mat<F>> {
        self.same_shape(other)?;
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Ok(Mat { field: f.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &F::Elem) -> Mat<F> {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, s)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self += s * other`, skipping the work when `s` is zero.
    pub fn add_scaled(&mut self, s: &F::Elem, other: &Mat<F>) -> Result<()> {
        self.same_shape(other)?;
        let f = self.field.clone();
        if f.is_zero(s) {
            return Ok(());
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !f.is_zero(b) {
                *a = f.add(a, &f.mul(s, b));
            }
        }
        Ok(())
    }

    fn same_shape(&self, other: &Mat<F>) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::Dimension(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Mat<F> {
        Mat::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product; entry `(i*b.rows + k, j*b.cols + l)` is `a[i,j] * b[k,l]`.
    pub fn kron(&self, b: &Mat<F>) -> Mat<F> {
        let f = &self.field;
        let (br, bc) = b.dims();
        let mut out = Mat::zeros(f, self.rows * br, self.cols * bc);
        let oc = out.cols;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..br {
                    for l in 0..bc {
                        let bv = b.get(k, l);
                        if !f.is_zero(bv) {
                            out.data[(i * br + k) * oc + j * bc + l] = f.mul(a, bv);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let a = self.get(i, j);
                    if i == j {
                        self.field.is_one(a)
                    } else {
                        self.field.is_zero(a)
                    }
                })
            })
    }

    /// First entry (row-major) where two equally shaped matrices differ.
    pub fn first_difference(&self, other: &Mat<F>) -> Option<(usize, usize)> {
        if self.dims() != other.dims() {
            return Some((usize::MAX, usize::MAX));
        }
        self.data.iter().zip(&other.data).position(|(a, b)| a != b).map(|p| (p / self.cols, p % self.cols))
    }

    pub fn vstack(blocks: &[&Mat<F>]) -> Result<Mat<F>> {
        let first = blocks.first().ok_or_else(|| Error::Dimension("empty vstack".into()))?;
        let cols = first.cols;
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::Dimension("vstack column mismatch".into()));
            }
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Ok(Mat { field: first.field.clone(), rows, cols, data })
    }

    pub fn hstack(blocks: &[&Mat<F>]) -> Result<Mat<F>> {
        let first = blocks.first().ok_or_else(|| Error::Dimension("empty hstack".into()))?;
        let rows = first.rows;
        if blocks.iter().any(|b| b.rows != rows) {
            return Err(Error::Dimension("hstack row mismatch".into()));
        }
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(&first.field, rows, cols);
        let mut c0 = 0;
        for b in blocks {
            out.set_block(0, c0, b);
            c0 += b.cols;
        }
        Ok(out)
    }

    pub fn block_diag(field: &F, blocks: &[&Mat<F>]) -> Mat<F> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Overwrites the block whose top-left corner is `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat<F>) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of range");
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = b.get(i, j).clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat<F> {
        Mat::from_fn(&self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Reduced row echelon form together with the pivot column of each
    /// nonzero row.
    pub fn rref(&self) -> (Mat<F>, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(src) = (prow..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            m.swap_rows(src, prow);
            let inv = f.inv(m.get(prow, col)).expect("nonzero pivot");
            for j in col..m.cols {
                let v = f.mul(m.get(prow, j), &inv);
                m.set(prow, j, v);
            }
            let pivot_row: Vec<F::Elem> = m.row(prow).to_vec();
            for r in 0..m.rows {
                if r == prow {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for (j, pv) in pivot_row.iter().enumerate().skip(col) {
                    if f.is_zero(pv) {
                        continue;
                    }
                    let v = f.sub(m.get(r, j), &f.mul(&factor, pv));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (m, pivots)
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
        // Eliminate along the shorter side.
        if self.rows > self.cols {
            return self.transpose().rank();
        }
        self.rref().1.len()
    }

    /// Square and full rank.
    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Basis of the right kernel `{v : self * v = 0}` as vectors.
    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| is_pivot[c].is_none()) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Exact inverse of a square matrix.
    pub fn inverse(&self) -> Result<Mat<F>> {
        if !self.is_square() {
            return Err(Error::SingularMatrix(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        let aug = Mat::hstack(&[self, &Mat::identity(&self.field, n)])?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix(format!("rank {} < {n}", pivots.iter().filter(|&&c| c < n).count())));
        }
        Ok(r.block(0, n, n, n))
    }

    /// Solves `self * x = b` for one solution, if any.
    pub fn solve(&self, b: &Mat<F>) -> Option<Mat<F>> {
        if b.rows != self.rows {
            return None;
        }
        let n = self.cols;
        let aug = Mat::hstack(&[self, b]).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let f = &self.field;
        let mut x = Mat::zeros(f, n, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(row, n + j).clone());
            }
        }
        Some(x)
    }
}

/// Alias used by callers that talk about the decision procedure rather than
/// the matrix method.
pub fn solve_and_invert<F: Field>(a: &Mat<F>) -> Result<Mat<F>> {
    a.inverse()
}

/// Basis of `{ M : dst_dim x src_dim | P M = M Q for every (P, Q) }`.
///
/// Each constraint pair is `(P, Q)` with `P` of size `dst_dim` and `Q` of
/// size `src_dim`; for modules this is `(ρ_W(b), ρ_V(b))` and the result is
/// a basis of `Hom_B(V, W)`.
pub fn intertwiner_basis<F: Field>(
    field: &F,
    constraints: &[(Mat<F>, Mat<F>)],
    src_dim: usize,
    dst_dim: usize,
) -> Result<Vec<Mat<F>>> {
    let (n, m) = (src_dim, dst_dim);
    let unknowns = m * n;
    let mut ech = RowEchelon::new(field, unknowns);
    for (p, q) in constraints {
        if p.dims() != (m, m) || q.dims() != (n, n) {
            return Err(Error::Dimension(format!(
                "constraint pair {:?}/{:?} does not match {m}x{n}",
                p.dims(),
                q.dims()
            )));
        }
        for i in 0..m {
            for j in 0..n {
                let mut row = vec![field.zero(); unknowns];
                for l in 0..m {
                    let a = p.get(i, l);
                    if !field.is_zero(a) {
                        let idx = l * n + j;
                        row[idx] = field.add(&row[idx], a);
                    }
                }
                for l in 0..n {
                    let a = q.get(l, j);
                    if !field.is_zero(a) {
                        let idx = i * n + l;
                        row[idx] = field.sub(&row[idx], a);
                    }
                }
                ech.insert(row);
                if ech.rank() == unknowns {
                    return Ok(Vec::new());
                }
            }
        }
    }
    Ok(ech.kernel().into_iter().map(|v| Mat::from_elems(field, m, n, v).expect("kernel vector length")).collect())
}

/// Incrementally maintained reduced row echelon form.
pub struct RowEchelon<F: Field> {
    field: F,
    width: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> RowEchelon<F> {
    pub fn new(field: &F, width: usize) -> Self {
        RowEchelon { field: field.clone(), width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored rows; returns the remainder.
    pub fn reduce(&self, mut row: Vec<F::Elem>) -> Vec<F::Elem> {
        let f = &self.field;
        for (r, &pc) in self.rows.iter().zip(&self.pivots) {
            let factor = row[pc].clone();
            if f.is_zero(&factor) {
                continue;
            }
            for (x, y) in row.iter_mut().zip(r) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
        }
        row
    }

    /// Inserts a row; returns whether it increased the rank.
    pub fn insert(&mut self, row: Vec<F::Elem>) -> bool {
        debug_assert_eq!(row.len(), self.width);
        let f = self.field.clone();
        let mut row = self.reduce(row);
        let Some(pc) = row.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&row[pc]).expect("nonzero pivot");
        for x in row.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for r in self.rows.iter_mut() {
            let factor = r[pc].clone();
            if f.is_zero(&factor) {
                continue;
            }
            for (x, y) in r.iter_mut().zip(&row) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
        }
        self.rows.push(row);
        self.pivots.push(pc);
        true
    }

    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.width).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.width];
            v[free] = f.one();
            for (r, &pc) in self.rows.iter().zip(&self.pivots) {
                v[pc] = f.neg(&r[free]);
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{PrimeField, Rationals};

    fn q(rows: &[Vec<i64>]) -> Mat<Rationals> {
        Mat::from_i64(&Rationals, rows).unwrap()
    }

    #[test]
    fn multiply_small() {
        let a = q(&[vec![1, 2], vec![3, 4]]);
        let b = q(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), q(&[vec![2, 1], vec![4, 3]]));
        let m = q(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]);
        assert_eq!(Mat::identity(&Rationals, 3).mul(&m).unwrap(), m);
        assert!(a.mul(&m).is_err());
    }

    #[test]
    fn characteristic_two_cancels() {
        let f = PrimeField::new(2).unwrap();
        let a = Mat::from_i64(&f, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(a.mul(&a).unwrap().is_zero());
    }

    #[test]
    fn ranks() {
        assert_eq!(Mat::zeros(&Rationals, 4, 4).rank(), 0);
        assert_eq!(Mat::identity(&Rationals, 5).rank(), 5);
        assert_eq!(q(&[vec![1, 2], vec![2, 4]]).rank(), 1);
        assert_eq!(q(&[vec![1, 2, 3], vec![2, 4, 7]]).rank(), 2);
    }

    #[test]
    fn kron_conventions() {
        let f = Rationals;
        assert_eq!(Mat::identity(&f, 2).kron(&Mat::identity(&f, 3)), Mat::identity(&f, 6));
        let m = q(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(q(&[vec![2]]).kron(&m), m.scale(&f.from_i64(2)));
        let a = q(&[vec![1, 2], vec![3, 4]]);
        let b = q(&[vec![0, 5, 1], vec![6, 7, 2]]);
        let k = a.kron(&b);
        for i in 0..2 {
            for j in 0..2 {
                for kk in 0..2 {
                    for l in 0..3 {
                        assert_eq!(*k.get(i * 2 + kk, j * 3 + l), f.mul(a.get(i, j), b.get(kk, l)));
                    }
                }
            }
        }
    }

    #[test]
    fn inverses() {
        let f = Rationals;
        assert_eq!(Mat::identity(&f, 4).inverse().unwrap(), Mat::identity(&f, 4));
        let s = q(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(s.inverse().unwrap(), s);
        assert_eq!(q(&[vec![1, 1], vec![0, 1]]).inverse().unwrap(), q(&[vec![1, -1], vec![0, 1]]));
        assert!(matches!(q(&[vec![1, 2], vec![2, 4]]).inverse(), Err(Error::SingularMatrix(_))));
        let m = q(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]);
        assert!(m.inverse().unwrap().mul(&m).unwrap().is_identity());
    }

    #[test]
    fn kernel_and_solve() {
        let m = q(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert!(m.mul(&Mat::column(&Rationals, &v)).unwrap().is_zero());
        }
        let a = q(&[vec![1, 1], vec![1, -1]]);
        let b = q(&[vec![3], vec![1]]);
        assert_eq!(a.solve(&b).unwrap(), q(&[vec![2], vec![1]]));
        assert!(q(&[vec![1, 1], vec![1, 1]]).solve(&q(&[vec![1], vec![0]])).is_none());
    }

    #[test]
    fn unconstrained_intertwiners_span_everything() {
        let basis = intertwiner_basis(&Rationals, &[], 2, 2).unwrap();
        assert_eq!(basis.len(), 4);
        let one = Mat::identity(&Rationals, 1);
        let basis = intertwiner_basis(&Rationals, &[(one.clone(), one)], 1, 1).unwrap();
        assert_eq!(basis.len(), 1);
    }
}
