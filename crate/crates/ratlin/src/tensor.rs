use std::ops::{Index, IndexMut};

use num::{Signed, Zero};

use crate::Rational;

/// Dense rational multi-index array with every axis of the same length.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    dim: usize,
    rank: usize,
    data: Vec<Rational>,
}

impl Tensor {
    pub fn zeros(dim: usize, rank: usize) -> Self {
        Tensor { dim, rank, data: vec![Rational::zero(); dim.pow(rank as u32)] }
    }

    pub fn from_fn(dim: usize, rank: usize, mut f: impl FnMut(&[usize]) -> Rational) -> Self {
        let mut t = Tensor::zeros(dim, rank);
        let mut idx = vec![0usize; rank];
        for slot in 0..t.data.len() {
            let mut s = slot;
            for k in (0..rank).rev() {
                idx[k] = s % dim;
                s /= dim;
            }
            t.data[slot] = f(&idx);
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.rank, "index arity");
        idx.iter().fold(0, |acc, &i| {
            assert!(i < self.dim, "index {i} out of range {}", self.dim);
            acc * self.dim + i
        })
    }

    pub fn values(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Largest absolute entry; the residual measure used in reports.
    pub fn max_abs(&self) -> Rational {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero)
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!((self.dim, self.rank), (other.dim, other.rank));
        Tensor { dim: self.dim, rank: self.rank, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!((self.dim, self.rank), (other.dim, other.rank));
        Tensor { dim: self.dim, rank: self.rank, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Tensor {
        Tensor { dim: self.dim, rank: self.rank, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// Rows of a rank-2 tensor.
    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        assert_eq!(self.rank, 2);
        self.data.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn diag(values: &[Rational]) -> Tensor {
        let n = values.len();
        Tensor::from_fn(n, 2, |ix| if ix[0] == ix[1] { values[ix[0]].clone() } else { Rational::zero() })
    }

    /// Diagonal of a rank-2 tensor when it is diagonal.
    pub fn as_diagonal(&self) -> Option<Vec<Rational>> {
        assert_eq!(self.rank, 2);
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                if i != j && !self[[i, j]].is_zero() {
                    return None;
                }
            }
        }
        Some((0..n).map(|i| self[[i, i]].clone()).collect())
    }

    pub fn transpose2(&self) -> Tensor {
        assert_eq!(self.rank, 2);
        Tensor::from_fn(self.dim, 2, |ix| self[[ix[1], ix[0]]].clone())
    }
}

impl<const R: usize> Index<[usize; R]> for Tensor {
    type Output = Rational;
    fn index(&self, idx: [usize; R]) -> &Rational {
        &self.data[self.offset(&idx)]
    }
}

impl<const R: usize> IndexMut<[usize; R]> for Tensor {
    fn index_mut(&mut self, idx: [usize; R]) -> &mut Rational {
        let o = self.offset(&idx);
        &mut self.data[o]
    }
}

impl Index<&[usize]> for Tensor {
    type Output = Rational;
    fn index(&self, idx: &[usize]) -> &Rational {
        &self.data[self.offset(idx)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qi};

    #[test]
    fn from_fn_uses_row_major_order() {
        let t = Tensor::from_fn(3, 2, |ix| qi((ix[0] * 10 + ix[1]) as i64));
        assert_eq!(t[[2, 1]], qi(21));
        assert_eq!(t.transpose2()[[2, 1]], qi(12));
    }

    #[test]
    fn diagonal_roundtrip_and_residual() {
        let d = Tensor::diag(&[qi(1), q(-3, 2), qi(0)]);
        assert_eq!(d.as_diagonal().unwrap()[1], q(-3, 2));
        assert_eq!(d.max_abs(), q(3, 2));
        let mut e = d.clone();
        e[[0, 2]] = qi(1);
        assert!(e.as_diagonal().is_none());
        assert!(d.sub(&d).is_zero());
    }
}
