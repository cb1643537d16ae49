use ratlin::{exact_roots, fmt_gauss, Gauss, Matrix, One, Poly, Rational, RootReport, Zero};

use crate::{CliffordError, SpinEndo};

/// Exact spectrum of an endomorphism: Gaussian-rational eigenvalues with
/// algebraic multiplicity, plus whatever factor of the characteristic
/// polynomial does not split.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenReport {
    /// Ascending by real part, then imaginary part.
    pub values: Vec<(Gauss, usize)>,
    /// Monic; degree 0 when the characteristic polynomial splits.
    pub residual: Poly<Gauss>,
    pub charpoly: Poly<Gauss>,
}

impl EigenReport {
    pub fn splits(&self) -> bool {
        self.residual.degree() == 0
    }

    /// Eigenvalues repeated by multiplicity.
    pub fn multiset(&self) -> Vec<Gauss> {
        self.values.iter().flat_map(|(z, m)| std::iter::repeat_n(z.clone(), *m)).collect()
    }

    /// Real eigenvalues repeated by multiplicity, ascending; `None` if the
    /// spectrum does not split or is not real.
    pub fn real_multiset(&self) -> Option<Vec<Rational>> {
        if !self.splits() {
            return None;
        }
        self.multiset().into_iter().map(|z| z.im.is_zero().then_some(z.re)).collect()
    }

    /// `true` iff the spectrum is exactly the given real multiset (any order).
    pub fn has_real_spectrum(&self, want: &[Rational]) -> bool {
        let Some(got) = self.real_multiset() else {
            return false;
        };
        let mut want = want.to_vec();
        want.sort();
        got == want
    }

    pub fn size(&self) -> usize {
        self.charpoly.degree()
    }

    /// `{-4 ×1, 0 ×2, 4 ×1}`-style rendering.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.values.iter().map(|(z, m)| format!("{} x{}", fmt_gauss(z), m)).collect();
        if !self.splits() {
            parts.push(format!("residual of degree {}", self.residual.degree()));
        }
        format!("{{{}}}", parts.join(", "))
    }
}

pub fn eigenvalues(e: &SpinEndo) -> EigenReport {
    let charpoly = Poly::charpoly(e);
    let RootReport { roots, residual } = exact_roots(&charpoly);
    EigenReport { values: roots, residual, charpoly }
}

/// Exact basis of the common kernel of a list of endomorphisms of a module of
/// dimension `size`. The empty list yields the whole module.
pub fn common_kernel(size: usize, list: &[SpinEndo]) -> Result<Vec<Vec<Gauss>>, CliffordError> {
    let mut stacked = Matrix::<Gauss>::zeros(0, size);
    for e in list {
        if e.cols() != size || e.rows() != size {
            return Err(CliffordError::SizeMismatch(size, e.rows()));
        }
        stacked = stacked.vstack(e);
    }
    if stacked.rows() == 0 {
        return Ok((0..size).map(|i| unit(size, i)).collect());
    }
    Ok(stacked.kernel())
}

fn unit(size: usize, i: usize) -> Vec<Gauss> {
    (0..size).map(|k| if k == i { Gauss::one() } else { Gauss::zero() }).collect()
}

/// `true` iff `e` maps the span of `basis` into itself.
pub fn span_is_invariant(e: &SpinEndo, basis: &[Vec<Gauss>]) -> bool {
    restrict(e, basis).is_some()
}

/// Matrix of `e` restricted to the span of the linearly independent vectors
/// `basis`, i.e. the `M` with `e B = B M`; `None` if the span is not
/// invariant.
pub fn restrict(e: &SpinEndo, basis: &[Vec<Gauss>]) -> Option<SpinEndo> {
    let b = Matrix::from_columns(basis);
    let k = basis.len();
    let mut cols = Vec::with_capacity(k);
    for v in basis {
        cols.push(b.solve(&e.mul_vec(v))?);
    }
    Some(Matrix::from_fn(k, k, |r, c| cols[c][r].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratlin::{g, qi};

    #[test]
    fn identity_has_single_eigenvalue() {
        let r = eigenvalues(&Matrix::identity(8));
        assert_eq!(r.values, vec![(g(1, 0), 8)]);
        assert!(r.has_real_spectrum(&vec![qi(1); 8]));
    }

    #[test]
    fn empty_kernel_list_is_whole_module() {
        assert_eq!(common_kernel(8, &[]).unwrap().len(), 8);
    }

    #[test]
    fn restriction_to_invariant_line() {
        let e = Matrix::from_rows(vec![vec![g(2, 0), g(1, 0)], vec![g(0, 0), g(3, 0)]]);
        assert_eq!(restrict(&e, &[vec![g(1, 0), g(0, 0)]]).unwrap(), Matrix::from_rows(vec![vec![g(2, 0)]]));
        assert!(restrict(&e, &[vec![g(0, 0), g(1, 0)]]).is_none());
    }
}
