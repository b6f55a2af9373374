use crate::error::{Error, Result};
use crate::ring::Ring;

/// Dense square matrix over a ring, row-major, 1-based accessors.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R> {
    size: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 1..=size {
            for j in 1..=size {
                entries.push(f(i, j));
            }
        }
        Matrix { size, entries }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let size = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::SizeMismatch(size, bad.len()));
        }
        Ok(Matrix { size, entries: rows.into_iter().flatten().collect() })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[(i - 1) * self.size + j - 1]
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.size {
            return Err(Error::IndexOutOfRange { index: i, bound: self.size });
        }
        Ok(())
    }

    /// `sign * self + shift * I`.
    pub fn affine(&self, sign: i64, shift: &crate::Scalar) -> Self {
        let s = crate::scalar::int(sign);
        Matrix::from_fn(self.size, |i, j| {
            let base = self.get(i, j).scaled(&s);
            if i == j {
                base.plus(&base.scalar_like(shift))
            } else {
                base
            }
        })
    }

    /// Leading principal `k x k` submatrix.
    pub fn leading(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.size {
            return Err(Error::IndexOutOfRange { index: k, bound: self.size });
        }
        Ok(Matrix::from_fn(k, |i, j| self.get(i, j).clone()))
    }

    pub fn entries(&self) -> impl Iterator<Item = &R> {
        self.entries.iter()
    }
}
