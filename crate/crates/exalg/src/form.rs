use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use itertools::Itertools;
use ratlin::{q, Matrix, One, Rational, Signed, Zero};

use crate::ExalgError;

/// Largest supported frame dimension.
pub const MAX_DIM: usize = 8;

/// Bit `i - 1` stands for `e_i`.
pub type Mask = u16;

/// Element of the exterior algebra over an oriented orthonormal coframe
/// `e_1, ..., e_n`, stored as ascending blades with exact coefficients.
///
/// Mixed degrees are allowed; most operations also accept them. Zero
/// coefficients are never stored, so structural equality is mathematical
/// equality.
///
/// Blade indices in the public API are 1-based, matching `e_1 .. e_n`;
/// vector arguments are plain coefficient slices indexed from 0.
///
/// # Panics
///
/// The operator impls and the plain methods panic when the two operands
/// live over frames of different dimension. Use the `try_` variants where the
/// inputs are not under the caller's control.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    dim: usize,
    terms: BTreeMap<Mask, Rational>,
}

/// Sign of moving the blade `b` past the blade `a`, i.e. the sign in
/// `e_a ∧ e_b = sign · e_{a ∪ b}` for disjoint ascending blades.
pub(crate) fn merge_sign(a: Mask, b: Mask) -> bool {
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    inversions % 2 == 1
}

pub fn mask_indices(m: Mask) -> Vec<usize> {
    (0..16).filter(|i| m & (1 << i) != 0).map(|i| i + 1).collect()
}

/// Ascending mask and permutation sign of an index list, or `None` when an
/// index repeats.
pub fn normalize(indices: &[usize]) -> Option<(Mask, bool)> {
    let mut mask: Mask = 0;
    let mut negative = false;
    for &i in indices {
        assert!(i >= 1 && i <= MAX_DIM, "blade index e{i} out of range");
        let bit = 1 << (i - 1);
        if mask & bit != 0 {
            return None;
        }
        if (mask >> i).count_ones() % 2 == 1 {
            negative = !negative;
        }
        mask |= bit;
    }
    Some((mask, negative))
}

/// All ascending 1-based index tuples of length `p` in `1..=dim`.
pub fn ascending(dim: usize, p: usize) -> Vec<Vec<usize>> {
    (1..=dim).combinations(p).collect()
}

fn signed(c: Rational, negative: bool) -> Rational {
    if negative {
        -c
    } else {
        c
    }
}

impl Form {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "frame dimension {dim} exceeds {MAX_DIM}");
        Form { dim, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, c: Rational) -> Self {
        let mut f = Form::zero(dim);
        f.add_term(0, c);
        f
    }

    pub fn one(dim: usize) -> Self {
        Form::scalar(dim, Rational::one())
    }

    /// `e_{i1} ∧ ... ∧ e_{ip}` for 1-based indices in any order.
    pub fn blade(dim: usize, indices: &[usize]) -> Self {
        Form::term(dim, indices, Rational::one())
    }

    pub fn term(dim: usize, indices: &[usize], c: Rational) -> Self {
        let mut f = Form::zero(dim);
        for &i in indices {
            assert!(i >= 1 && i <= dim, "blade index e{i} out of range for dimension {dim}");
        }
        if let Some((m, neg)) = normalize(indices) {
            f.add_term(m, signed(c, neg));
        }
        f
    }

    pub fn from_terms<I>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<usize>, Rational)>,
    {
        let mut f = Form::zero(dim);
        for (idx, c) in terms {
            f += &Form::term(dim, &idx, c);
        }
        f
    }

    /// `Σ c_i e_i` from a coefficient slice.
    pub fn vector(coeffs: &[Rational]) -> Self {
        let dim = coeffs.len();
        let mut f = Form::zero(dim);
        for (i, c) in coeffs.iter().enumerate() {
            f.add_term(1 << i, c.clone());
        }
        f
    }

    /// Builds the `p`-form whose value on `(e_{i1}, ..., e_{ip})`, for every
    /// ascending tuple, is `f` of that tuple.
    pub fn from_fn(dim: usize, p: usize, mut f: impl FnMut(&[usize]) -> Rational) -> Self {
        let mut out = Form::zero(dim);
        for idx in ascending(dim, p) {
            let c = f(&idx);
            if !c.is_zero() {
                let (m, _) = normalize(&idx).expect("ascending tuple");
                out.add_term(m, c);
            }
        }
        out
    }

    pub fn volume(dim: usize) -> Self {
        Form::blade(dim, &(1..=dim).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single degree of a nonzero homogeneous form.
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|m| m.count_ones() as usize);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// `true` for zero or for a form of degree `p`.
    pub fn has_degree(&self, p: usize) -> bool {
        self.is_zero() || self.degree() == Some(p)
    }

    /// The degree-`p` part.
    pub fn part(&self, p: usize) -> Form {
        Form {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() as usize == p)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Terms as (1-based ascending indices, coefficient), by degree then
    /// lexicographically.
    pub fn terms(&self) -> Vec<(Vec<usize>, Rational)> {
        let mut v: Vec<(Vec<usize>, Rational)> =
            self.terms.iter().map(|(m, c)| (mask_indices(*m), c.clone())).collect();
        v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        v
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Stored terms as (mask, coefficient); bit `i - 1` of the mask is `e_i`.
    pub fn raw_terms(&self) -> impl Iterator<Item = (&Mask, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Mask, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn check_dim(&self, other: &Form) -> Result<(), ExalgError> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(ExalgError::DimensionMismatch { left: self.dim, right: other.dim })
        }
    }

    pub fn scale(&self, c: &Rational) -> Form {
        if c.is_zero() {
            return Form::zero(self.dim);
        }
        Form { dim: self.dim, terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn try_wedge(&self, other: &Form) -> Result<Form, ExalgError> {
        self.check_dim(other)?;
        let mut out = Form::zero(self.dim);
        for (&a, x) in &self.terms {
            for (&b, y) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                out.add_term(a | b, signed(x * y, merge_sign(a, b)));
            }
        }
        Ok(out)
    }

    pub fn wedge(&self, other: &Form) -> Form {
        self.try_wedge(other).expect("wedge of forms over different frames")
    }

    /// `e_i ⌟ self` for a 1-based index.
    pub fn interior_e(&self, i: usize) -> Form {
        assert!(i >= 1 && i <= self.dim, "e{i} out of range");
        let bit: Mask = 1 << (i - 1);
        let mut out = Form::zero(self.dim);
        for (&m, c) in &self.terms {
            if m & bit == 0 {
                continue;
            }
            let before = (m & (bit - 1)).count_ones();
            out.add_term(m & !bit, signed(c.clone(), before % 2 == 1));
        }
        out
    }

    /// `X ⌟ self` for `X = Σ x_i e_i`.
    pub fn interior(&self, x: &[Rational]) -> Form {
        assert_eq!(x.len(), self.dim, "vector length");
        let mut out = Form::zero(self.dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out += &self.interior_e(i + 1).scale(c);
            }
        }
        out
    }

    /// Hodge star for the orientation `e_1 ∧ ... ∧ e_n`:
    /// `*(e_I) = sign(I, I^c) e_{I^c}`, so that `a ∧ *b = (a, b) vol`.
    pub fn hodge(&self) -> Form {
        let full: Mask = ((1u32 << self.dim) - 1) as Mask;
        let mut out = Form::zero(self.dim);
        for (&m, c) in &self.terms {
            let comp = full & !m;
            out.add_term(comp, signed(c.clone(), merge_sign(m, comp)));
        }
        out
    }

    /// Pairing in which ascending blades are orthonormal. Parts of different
    /// degree pair to zero.
    pub fn inner(&self, other: &Form) -> Rational {
        assert_eq!(self.dim, other.dim, "inner product of forms over different frames");
        self.terms.iter().filter_map(|(m, c)| other.terms.get(m).map(|d| c * d)).fold(Rational::zero(), |a, b| a + b)
    }

    /// Like [`Form::inner`] but rejects operands that are not homogeneous of
    /// one common degree.
    pub fn inner_strict(&self, other: &Form) -> Result<Rational, ExalgError> {
        self.check_dim(other)?;
        match (self.degree(), other.degree()) {
            (Some(a), Some(b)) if a != b => Err(ExalgError::DegreeMismatch { left: a, right: b }),
            _ => Ok(self.inner(other)),
        }
    }

    pub fn norm_sq(&self) -> Rational {
        self.inner(self)
    }

    /// Value on `(e_{i1}, ..., e_{ip})`, 1-based, any order; the form is
    /// evaluated with the determinant convention, so
    /// `(e_1 ∧ e_2)(e_1, e_2) = 1`.
    pub fn eval(&self, indices: &[usize]) -> Rational {
        match normalize(indices) {
            None => Rational::zero(),
            Some((m, neg)) => self.terms.get(&m).map_or_else(Rational::zero, |c| signed(c.clone(), neg)),
        }
    }

    /// Value on arbitrary vectors given by coefficient slices.
    pub fn eval_vectors(&self, vs: &[&[Rational]]) -> Rational {
        let p = vs.len();
        let mut total = Rational::zero();
        for (&m, c) in &self.terms {
            if m.count_ones() as usize != p {
                continue;
            }
            let idx = mask_indices(m);
            let minor = Matrix::from_fn(p, p, |r, k| vs[r][idx[k] - 1].clone());
            total += c * det(&minor);
        }
        total
    }

    /// Coefficients of a 1-form (`None` if some other degree is present).
    pub fn to_vector(&self) -> Option<Vec<Rational>> {
        if !self.has_degree(1) {
            return None;
        }
        Some((1..=self.dim).map(|i| self.eval(&[i])).collect())
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> Rational {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(Rational::zero)
    }
}

fn det(m: &Matrix<Rational>) -> Rational {
    let n = m.rows();
    match n {
        0 => Rational::one(),
        1 => m[(0, 0)].clone(),
        2 => &m[(0, 0)] * &m[(1, 1)] - &m[(0, 1)] * &m[(1, 0)],
        _ => (0..n).fold(Rational::zero(), |acc, c| {
            if m[(0, c)].is_zero() {
                return acc;
            }
            let minor = Matrix::from_fn(n - 1, n - 1, |r, k| m[(r + 1, if k < c { k } else { k + 1 })].clone());
            let term = &m[(0, c)] * det(&minor);
            if c % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        }),
    }
}

impl fmt::Display for Form {
    /// `2*e1^e2 - 1/3*e3^e4 + 5`; round-trips through [`Form::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (idx, c)) in self.terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let blade = idx.iter().map(|i| format!("e{i}")).join("^");
            if idx.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{blade}")?;
            } else {
                write!(f, "{a}*{blade}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[{}]({})", self.dim, self)
    }
}

impl AddAssign<&Form> for Form {
    fn add_assign(&mut self, rhs: &Form) {
        self.check_dim(rhs).expect("sum of forms over different frames");
        for (&m, c) in &rhs.terms {
            self.add_term(m, c.clone());
        }
    }
}

impl SubAssign<&Form> for Form {
    fn sub_assign(&mut self, rhs: &Form) {
        self.check_dim(rhs).expect("difference of forms over different frames");
        for (&m, c) in &rhs.terms {
            self.add_term(m, -c.clone());
        }
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Form {
    type Output = Form;
    fn add(mut self, rhs: Form) -> Form {
        self += &rhs;
        self
    }
}

impl Sub for Form {
    type Output = Form;
    fn sub(mut self, rhs: Form) -> Form {
        self -= &rhs;
        self
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.scale(&q(-1, 1))
    }
}

impl Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratlin::qi;

    #[test]
    fn blade_constructor_normalizes_order() {
        assert_eq!(Form::blade(4, &[2, 1]), -Form::blade(4, &[1, 2]));
        assert!(Form::blade(4, &[3, 3]).is_zero());
        assert_eq!(Form::blade(5, &[3, 1, 2]).eval(&[1, 2, 3]), qi(1));
    }

    #[test]
    fn wedge_of_basis_vectors() {
        let e1 = Form::blade(3, &[1]);
        let e2 = Form::blade(3, &[2]);
        assert_eq!(e1.wedge(&e2), Form::blade(3, &[1, 2]));
        assert_eq!(e2.wedge(&e1), -Form::blade(3, &[1, 2]));
        assert!(e1.wedge(&e1).is_zero());
    }

    #[test]
    fn interior_sign_counts_preceding_indices() {
        let f = Form::blade(4, &[1, 2, 3]);
        assert_eq!(f.interior_e(1), Form::blade(4, &[2, 3]));
        assert_eq!(f.interior_e(2), -Form::blade(4, &[1, 3]));
        assert_eq!(f.interior_e(3), Form::blade(4, &[1, 2]));
        assert!(f.interior_e(4).is_zero());
    }

    #[test]
    fn hodge_of_one_is_volume() {
        assert_eq!(Form::one(5).hodge(), Form::volume(5));
        assert_eq!(Form::blade(4, &[1, 3]).hodge(), -Form::blade(4, &[2, 4]));
    }

    #[test]
    fn eval_vectors_matches_determinant() {
        let f = Form::blade(3, &[1, 2]);
        let x = [qi(1), qi(2), qi(0)];
        let y = [qi(3), qi(4), qi(5)];
        assert_eq!(f.eval_vectors(&[&x, &y]), qi(-2));
        assert_eq!(Form::blade(3, &[1, 2, 3]).eval_vectors(&[&x, &y, &[qi(0), qi(0), qi(1)]]), qi(-2));
    }

    #[test]
    fn display_is_ascending_and_signed() {
        let f = Form::from_terms(4, [(vec![3, 4], q(-1, 2)), (vec![1, 2], qi(2)), (vec![], qi(1))]);
        assert_eq!(f.to_string(), "1 + 2*e1^e2 - 1/2*e3^e4");
        assert_eq!(Form::zero(3).to_string(), "0");
    }
}
