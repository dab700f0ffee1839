//! Linear subspaces in reduced row-echelon form.
//!
//! A subspace carries a canonical rref basis, so equality of subspaces is
//! equality of basis matrices. These carry ideal images, submodules and colon
//! spaces inside truncated models.

use super::field::{ensure_same_field, Field};
use super::matrix::Matrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<K: Field> {
    ambient: usize,
    basis: Matrix<K>,
    pivots: Vec<usize>,
}

impl<K: Field> Subspace<K> {
    pub fn zero(field: K, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: K, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_rows(field: K, ambient: usize, rows: Vec<Vec<K::Elem>>) -> Result<Self> {
        for r in &rows {
            if r.len() != ambient {
                return Err(Error::AmbientMismatch {
                    left: r.len(),
                    right: ambient,
                });
            }
        }
        let m = Matrix::from_rows(field.clone(), rows)?;
        Ok(Self::from_matrix_unreduced(field, ambient, &m))
    }

    pub fn from_matrix(m: &Matrix<K>) -> Self {
        Self::from_matrix_unreduced(m.field().clone(), m.cols(), m)
    }

    fn from_matrix_unreduced(field: K, ambient: usize, m: &Matrix<K>) -> Self {
        let red = m.rref();
        let rows: Vec<Vec<K::Elem>> = (0..red.rank).map(|i| red.matrix.row(i).to_vec()).collect();
        let basis = Matrix::from_rows(field.clone(), rows)
            .unwrap_or_else(|_| Matrix::zeros(field, 0, ambient));
        Subspace {
            ambient,
            basis,
            pivots: red.pivots,
        }
    }

    pub fn field(&self) -> &K {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<K> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Replaces `v` by its residual after eliminating all pivot coordinates.
    /// The residual is zero exactly when `v` lies in the subspace.
    pub fn reduce_in_place(&self, v: &mut [K::Elem]) {
        let f = self.field().clone();
        for (k, &p) in self.pivots.iter().enumerate() {
            if f.is_zero(&v[p]) {
                continue;
            }
            let factor = v[p].clone();
            let row = self.basis.row(k);
            for (vj, bj) in v.iter_mut().zip(row) {
                if f.is_zero(bj) {
                    continue;
                }
                *vj = f.sub(vj, &f.mul(&factor, bj));
            }
        }
    }

    pub fn contains_vec(&self, v: &[K::Elem]) -> bool {
        let f = self.field().clone();
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w.iter().all(|x| f.is_zero(x))
    }

    pub fn contains(&self, other: &Subspace<K>) -> Result<bool> {
        self.check_ambient(other)?;
        for i in 0..other.dim() {
            if !self.contains_vec(other.basis.row(i)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_ambient(&self, other: &Subspace<K>) -> Result<()> {
        ensure_same_field(self.field(), other.field())?;
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace<K>) -> Result<Subspace<K>> {
        self.check_ambient(other)?;
        let stacked = self.basis.stack(&other.basis)?;
        Ok(Self::from_matrix_unreduced(
            self.field().clone(),
            self.ambient,
            &stacked,
        ))
    }

    /// Intersection by the Zassenhaus block construction.
    pub fn intersect(&self, other: &Subspace<K>) -> Result<Subspace<K>> {
        self.check_ambient(other)?;
        let f = self.field().clone();
        let d = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for i in 0..self.dim() {
            let r = self.basis.row(i);
            let mut v = Vec::with_capacity(2 * d);
            v.extend(r.iter().cloned());
            v.extend(r.iter().cloned());
            rows.push(v);
        }
        for i in 0..other.dim() {
            let r = other.basis.row(i);
            let mut v = Vec::with_capacity(2 * d);
            v.extend(r.iter().cloned());
            v.extend(std::iter::repeat(f.zero()).take(d));
            rows.push(v);
        }
        let m = Matrix::from_rows(f.clone(), rows)?;
        let red = m.rref();
        let mut out = Vec::new();
        for i in 0..red.rank {
            let row = red.matrix.row(i);
            if row[..d].iter().all(|x| f.is_zero(x)) {
                out.push(row[d..].to_vec());
            }
        }
        Subspace::from_rows(f, d, out)
    }

    /// Image of the subspace under a linear map given by a matrix acting on
    /// column vectors.
    pub fn image_under(&self, map: &Matrix<K>) -> Result<Subspace<K>> {
        ensure_same_field(self.field(), map.field())?;
        if map.cols() != self.ambient {
            return Err(Error::AmbientMismatch {
                left: map.cols(),
                right: self.ambient,
            });
        }
        let mut rows = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            rows.push(map.apply(self.basis.row(i))?);
        }
        Subspace::from_rows(self.field().clone(), map.rows(), rows)
    }

    /// Preimage `{v : map(v) in target}` of a subspace under a linear map.
    pub fn preimage_under(map: &Matrix<K>, target: &Subspace<K>) -> Result<Subspace<K>> {
        ensure_same_field(map.field(), target.field())?;
        if map.rows() != target.ambient {
            return Err(Error::AmbientMismatch {
                left: map.rows(),
                right: target.ambient,
            });
        }
        let f = map.field().clone();
        let d_src = map.cols();
        let d_tgt = map.rows();
        let mut is_pivot = vec![false; d_tgt];
        for &p in &target.pivots {
            is_pivot[p] = true;
        }
        // Constraint rows: the non-pivot coordinates of the residual of map(v).
        let mut rows = Vec::new();
        for i in 0..d_tgt {
            if is_pivot[i] {
                continue;
            }
            let mut row: Vec<K::Elem> = map.row(i).to_vec();
            for (k, &p) in target.pivots.iter().enumerate() {
                let b = target.basis.get(k, i);
                if f.is_zero(b) {
                    continue;
                }
                let pivot_row = map.row(p);
                for (rj, mj) in row.iter_mut().zip(pivot_row) {
                    if f.is_zero(mj) {
                        continue;
                    }
                    *rj = f.sub(rj, &f.mul(b, mj));
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Ok(Subspace::full(f, d_src));
        }
        let constraints = Matrix::from_rows(f.clone(), rows)?;
        let kernel = constraints.kernel_basis();
        Ok(Self::from_matrix_unreduced(f, d_src, &kernel))
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::PrimeField;
    use super::*;

    fn fp() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn unit(field: &PrimeField, dim: usize, i: usize) -> Vec<u64> {
        let mut v = vec![field.zero(); dim];
        v[i] = field.one();
        v
    }

    #[test]
    fn sum_and_intersection_of_axes() {
        let f = fp();
        let e1 = Subspace::from_rows(f, 3, vec![unit(&f, 3, 0)]).unwrap();
        let e2 = Subspace::from_rows(f, 3, vec![unit(&f, 3, 1)]).unwrap();
        assert_eq!(e1.sum(&e2).unwrap().dim(), 2);
        assert_eq!(e1.intersect(&e2).unwrap().dim(), 0);
    }

    #[test]
    fn preimage_of_axis_under_swap() {
        let f = fp();
        // map swapping e1 and e2
        let swap = Matrix::from_rows(
            f,
            vec![
                vec![0, 1, 0].iter().map(|&x| f.from_i64(x)).collect(),
                vec![1, 0, 0].iter().map(|&x| f.from_i64(x)).collect(),
                vec![0, 0, 1].iter().map(|&x| f.from_i64(x)).collect(),
            ],
        )
        .unwrap();
        let e1 = Subspace::from_rows(f, 3, vec![unit(&f, 3, 0)]).unwrap();
        let pre = Subspace::preimage_under(&swap, &e1).unwrap();
        let e2 = Subspace::from_rows(f, 3, vec![unit(&f, 3, 1)]).unwrap();
        assert_eq!(pre, e2);
    }

    #[test]
    fn ambient_mismatch_is_rejected() {
        let f = fp();
        let a = Subspace::from_rows(f, 2, vec![unit(&f, 2, 0)]).unwrap();
        let b = Subspace::from_rows(f, 3, vec![unit(&f, 3, 0)]).unwrap();
        assert!(matches!(a.sum(&b), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn canonical_equality() {
        let f = fp();
        let two = |x: i64| f.from_i64(x);
        let a = Subspace::from_rows(f, 2, vec![vec![two(2), two(4)]]).unwrap();
        let b = Subspace::from_rows(f, 2, vec![vec![two(1), two(2)]]).unwrap();
        assert_eq!(a, b);
    }
}
