use num::Zero;

use crate::matrix::Matrix;
use crate::scalar::{Field, Rational};

/// Dense univariate polynomial, coefficients from the constant term upward.
/// The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Field> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![T::one()] }
    }

    /// `x - r`.
    pub fn linear(r: &T) -> Self {
        Poly { coeffs: vec![-r.clone(), T::one()] }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading();
        Poly { coeffs: self.coeffs.iter().map(|c| c.clone() / l.clone()).collect() }
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_rational(Rational::from_integer((k as i64).into())))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder.
    ///
    /// # Panics
    ///
    /// Panics when dividing by the zero polynomial.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        if self.is_zero() || self.degree() < dd {
            return (Poly::zero(), self.clone());
        }
        let lead = d.leading();
        let mut qv = vec![T::zero(); self.degree() - dd + 1];
        for k in (0..qv.len()).rev() {
            let c = r[k + dd].clone() / lead.clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - c.clone() * dc.clone();
                }
            }
            qv[k] = c;
        }
        r.truncate(dd);
        (Poly::new(qv), Poly::new(r))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Characteristic polynomial `det(x I - A)` by the Faddeev–LeVerrier
    /// recursion.
    pub fn charpoly(a: &Matrix<T>) -> Self {
        assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
        let n = a.rows();
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut m = Matrix::<T>::zeros(n, n);
        for k in 1..=n {
            m = &(a * &m) + &Matrix::scalar(n, coeffs[n + 1 - k].clone());
            let am = a * &m;
            let kk = T::from_rational(Rational::from_integer((k as i64).into()));
            coeffs[n - k] = -(am.trace() / kk);
        }
        Poly::new(coeffs)
    }

    /// Minimal polynomial of `a` restricted to the cyclic subspace of `v`.
    pub fn krylov_minimal(a: &Matrix<T>, v: &[T]) -> Self {
        let mut basis: Vec<Vec<T>> = vec![v.to_vec()];
        loop {
            let next = a.mul_vec(basis.last().expect("nonempty"));
            let m = Matrix::from_columns(&basis);
            if let Some(x) = m.solve(&next) {
                let mut c: Vec<T> = x.into_iter().map(|t| -t).collect();
                c.push(T::one());
                return Poly::new(c);
            }
            basis.push(next);
        }
    }
}
