//! Dense matrices over an exact field, with reduced row echelon form and
//! kernel computation. Pivoting is deterministic (first nonzero entry), so
//! every reduced form is reproducible across runs and backends.

use super::field::{ensure_same_field, Field};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    data: Vec<K::Elem>,
}

/// Result of a row reduction: the reduced matrix, its rank and pivot columns.
#[derive(Debug, Clone)]
pub struct Rref<K: Field> {
    pub matrix: Matrix<K>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<K: Field> Matrix<K> {
    pub fn zeros(field: K, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: K, n: usize) -> Self {
        let mut m = Self::zeros(field.clone(), n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: K, rows: Vec<Vec<K::Elem>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has length {}, expected {ncols}",
                    r.len()
                )));
            }
        }
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            data.extend(r);
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn from_fn(field: K, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &K::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<K::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field.clone(), self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        ensure_same_field(&self.field, &rhs.field)?;
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let t = f.mul(a, b);
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, &t));
                }
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[K::Elem]) -> Result<Vec<K::Elem>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "vector length {} vs {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            let row = self.row(i);
            let mut acc = f.zero();
            for (a, b) in row.iter().zip(v) {
                if f.is_zero(a) || f.is_zero(b) {
                    continue;
                }
                acc = f.add(&acc, &f.mul(a, b));
            }
            out[i] = acc;
        }
        Ok(out)
    }

    pub fn stack(&self, bottom: &Self) -> Result<Self> {
        ensure_same_field(&self.field, &bottom.field)?;
        if self.cols != bottom.cols {
            return Err(Error::ShapeMismatch(format!(
                "stack of widths {} and {}",
                self.cols, bottom.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(bottom.data.iter().cloned());
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + bottom.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form with deterministic first-nonzero pivoting.
    pub fn rref(&self) -> Rref<K> {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let mut pivot_row = None;
            for i in r..m.rows {
                if !f.is_zero(m.get(i, col)) {
                    pivot_row = Some(i);
                    break;
                }
            }
            let Some(p) = pivot_row else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, col));
            for j in col..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || f.is_zero(m.get(i, col)) {
                    continue;
                }
                let factor = m.get(i, col).clone();
                for j in col..m.cols {
                    let s = m.get(r, j);
                    if f.is_zero(s) {
                        continue;
                    }
                    let t = f.mul(&factor, s);
                    let v = f.sub(m.get(i, j), &t);
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel `{v : M v = 0}`, one basis vector per row.
    pub fn kernel_basis(&self) -> Matrix<K> {
        let f = self.field.clone();
        let red = self.rref();
        let pivots = &red.pivots;
        let mut is_pivot = vec![false; self.cols];
        for &p in pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|j| !is_pivot[*j]).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(red.matrix.get(k, fc));
            }
            rows.push(v);
        }
        Matrix::from_rows(f, rows).unwrap_or_else(|_| Matrix::zeros(self.field.clone(), 0, self.cols))
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::{PrimeField, Rationals};
    use super::*;

    fn fp() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn mat_i64<K: Field>(field: K, rows: &[&[i64]]) -> Matrix<K> {
        let rows: Vec<Vec<K::Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, rows).unwrap()
    }

    #[test]
    fn rref_identity_is_full_rank() {
        let m = Matrix::identity(fp(), 3);
        let r = m.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.matrix, m);
    }

    #[test]
    fn rref_proportional_rows() {
        let m = mat_i64(fp(), &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rref().rank, 1);
    }

    #[test]
    fn rref_permutation_gives_identity() {
        let m = mat_i64(fp(), &[&[0, 1], &[1, 0]]);
        let r = m.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.matrix, Matrix::identity(fp(), 2));
    }

    #[test]
    fn kernel_dimensions() {
        let z = Matrix::zeros(fp(), 2, 2);
        assert_eq!(z.kernel_basis().rows(), 2);
        let id = Matrix::identity(fp(), 3);
        assert_eq!(id.kernel_basis().rows(), 0);
        let m = mat_i64(fp(), &[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 1);
        // spanned by (1, -1) up to scaling
        let f = fp();
        let a = k.get(0, 0).clone();
        let b = k.get(0, 1).clone();
        assert_eq!(f.add(&a, &b), 0);
        assert!(a != 0);
    }

    #[test]
    fn kernel_over_rationals() {
        let m = mat_i64(Rationals, &[&[2, 4], &[1, 2]]);
        assert_eq!(m.rref().rank, 1);
        assert_eq!(m.kernel_basis().rows(), 1);
    }

    #[test]
    fn mul_shapes_checked() {
        let a = mat_i64(fp(), &[&[1, 2]]);
        let b = mat_i64(fp(), &[&[1, 2]]);
        assert!(a.mul(&b).is_err());
        assert!(a.mul(&b.transpose()).is_ok());
    }

    #[test]
    fn mismatched_moduli_rejected() {
        let a = Matrix::identity(PrimeField::new(32003).unwrap(), 2);
        let b = Matrix::identity(PrimeField::new(7).unwrap(), 2);
        assert!(matches!(a.mul(&b), Err(Error::BackendMismatch(_))));
    }
}
