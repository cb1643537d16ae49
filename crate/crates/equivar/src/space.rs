use std::collections::BTreeSet;

use ratlin::{Matrix, Rational, Zero};

use crate::{EquivarError, SparseTensor};

/// A linear subspace of `⊗ᵖ ℝ⁷` with a reduced basis: at each pivot index
/// exactly one basis tensor is nonzero, with value 1, so coordinates are read
/// off at the pivots.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorSpace {
    label: String,
    rank: usize,
    basis: Vec<SparseTensor>,
    pivots: Vec<Vec<u8>>,
}

impl TensorSpace {
    /// Span of the given tensors (which may be linearly dependent).
    pub fn span(label: impl Into<String>, rank: usize, spanning: &[SparseTensor]) -> Self {
        let support: Vec<Vec<u8>> = spanning
            .iter()
            .flat_map(|t| t.entries().map(|(k, _)| k.clone()))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let rows: Vec<Vec<Rational>> = spanning.iter().map(|t| support.iter().map(|k| t.get(k)).collect()).collect();
        let mut basis = Vec::new();
        let mut pivots = Vec::new();
        if !rows.is_empty() && !support.is_empty() {
            let (r, piv) = Matrix::from_rows(rows).rref();
            for (i, &p) in piv.iter().enumerate() {
                let mut t = SparseTensor::zero(rank);
                for (c, k) in support.iter().enumerate() {
                    t.add_entry(k.clone(), r[(i, c)].clone());
                }
                basis.push(t);
                pivots.push(support[p].clone());
            }
        }
        TensorSpace { label: label.into(), rank, basis, pivots }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseTensor] {
        &self.basis
    }

    /// Coordinates of `t`, or `None` when `t` is not in the space.
    pub fn coords(&self, t: &SparseTensor) -> Option<Vec<Rational>> {
        let c: Vec<Rational> = self.pivots.iter().map(|p| t.get(p)).collect();
        let back = self.combine(&c);
        back.sub(t).is_zero().then_some(c)
    }

    pub fn combine(&self, c: &[Rational]) -> SparseTensor {
        let mut out = SparseTensor::zero(self.rank);
        for (b, x) in self.basis.iter().zip(c) {
            if !x.is_zero() {
                out = out.add(&b.scale(x));
            }
        }
        out
    }

    pub fn contains(&self, t: &SparseTensor) -> bool {
        self.coords(t).is_some()
    }

    /// Matrix of a linear map from this space into `target`, given on tensors.
    pub fn map_matrix(
        &self,
        target: &TensorSpace,
        f: impl Fn(&SparseTensor) -> SparseTensor,
    ) -> Result<Matrix<Rational>, EquivarError> {
        let cols = self
            .basis
            .iter()
            .map(|b| {
                target.coords(&f(b)).ok_or_else(|| EquivarError::NotInSpace {
                    space: target.label.clone(),
                    source_space: self.label.clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_columns(&cols))
    }

    /// Matrix of the induced action of `a` on this space.
    pub fn rep_matrix(&self, a: &Matrix<Rational>) -> Result<Matrix<Rational>, EquivarError> {
        self.map_matrix(self, |t| t.act(a))
    }
}
