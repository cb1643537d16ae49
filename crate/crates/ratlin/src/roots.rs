//! Exact extraction of the Gaussian-rational roots of a polynomial.
//!
//! Candidates come from a floating-point Aberth iteration on the square-free
//! part, are rounded to nearby Gaussian rationals, and are only accepted after
//! an exact evaluation returns zero. Accepted roots are divided out exactly, so
//! whatever is left is reported as the residual factor; nothing is dropped.

use num::{Complex, Zero};

use crate::poly::Poly;
use crate::scalar::{approximate, to_f64, Field, Gauss, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct RootReport {
    /// Distinct roots with multiplicity, ascending by real then imaginary part.
    pub roots: Vec<(Gauss, usize)>,
    /// What is left after dividing out every verified root; degree 0 when the
    /// polynomial splits over the Gaussian rationals.
    pub residual: Poly<Gauss>,
}

impl RootReport {
    pub fn splits(&self) -> bool {
        self.residual.degree() == 0
    }

    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }

    /// Roots repeated by multiplicity.
    pub fn flattened(&self) -> Vec<Gauss> {
        self.roots.iter().flat_map(|(z, m)| std::iter::repeat_n(z.clone(), *m)).collect()
    }

    /// Real roots repeated by multiplicity; `None` if any root is not real.
    pub fn real_flattened(&self) -> Option<Vec<Rational>> {
        self.flattened().into_iter().map(|z| z.im.is_zero().then_some(z.re)).collect()
    }
}

pub fn exact_roots(p: &Poly<Gauss>) -> RootReport {
    assert!(!p.is_zero(), "roots of the zero polynomial");
    let mut residual = p.clone();
    let mut roots: Vec<(Gauss, usize)> = Vec::new();
    loop {
        if residual.degree() == 0 {
            break;
        }
        let sqfree = residual.div_rem(&residual.gcd(&residual.derivative())).0;
        let mut found = false;
        for z in aberth(&sqfree) {
            for max_den in [64, 4096, 1 << 20] {
                let (Some(re), Some(im)) = (approximate(z.re, max_den), approximate(z.im, max_den)) else {
                    continue;
                };
                let cand = Complex::new(re, im);
                if roots.iter().any(|(r, _)| *r == cand) || !sqfree.eval(&cand).is_zero() {
                    continue;
                }
                let lin = Poly::linear(&cand);
                let mut mult = 0;
                loop {
                    let (qq, r) = residual.div_rem(&lin);
                    if !r.is_zero() {
                        break;
                    }
                    residual = qq;
                    mult += 1;
                }
                roots.push((cand, mult));
                found = true;
                break;
            }
        }
        if !found {
            break;
        }
    }
    roots.sort_by(|a, b| a.0.re.cmp(&b.0.re).then(a.0.im.cmp(&b.0.im)));
    RootReport { roots, residual: residual.monic() }
}

fn aberth<T: Field>(p: &Poly<T>) -> Vec<Complex<f64>>
where
    T: ToComplexF64,
{
    let c: Vec<Complex<f64>> = p.coeffs().iter().map(ToComplexF64::to_c64).collect();
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lead = c[n];
    let c: Vec<Complex<f64>> = c.iter().map(|x| x / lead).collect();
    let bound = 1.0 + c[..n].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex<f64>> = (0..n)
        .map(|k| Complex::from_polar(bound * 0.5 + 0.1, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    let eval = |x: Complex<f64>| {
        let mut v = Complex::new(0.0, 0.0);
        let mut d = Complex::new(0.0, 0.0);
        for coef in c.iter().rev() {
            d = d * x + v;
            v = v * x + coef;
        }
        (v, d)
    };
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let s: Complex<f64> = (0..n).filter(|&j| j != i).map(|j| Complex::new(1.0, 0.0) / (z[i] - z[j])).sum();
            let w = ratio / (Complex::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm());
            }
        }
        if moved < 1e-14 * bound {
            break;
        }
    }
    z
}

pub(crate) trait ToComplexF64 {
    fn to_c64(&self) -> Complex<f64>;
}

impl ToComplexF64 for Gauss {
    fn to_c64(&self) -> Complex<f64> {
        Complex::new(to_f64(&self.re), to_f64(&self.im))
    }
}

impl ToComplexF64 for Rational {
    fn to_c64(&self) -> Complex<f64> {
        Complex::new(to_f64(self), 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{g, gq, q};

    fn from_roots(rs: &[Gauss]) -> Poly<Gauss> {
        rs.iter().fold(Poly::one(), |acc, r| acc.mul(&Poly::linear(r)))
    }

    #[test]
    fn recovers_multiple_integer_roots() {
        let p = from_roots(&[g(4, 0), g(4, 0), g(2, 0), g(2, 0), g(2, 0), g(2, 0), g(-8, 0), g(-8, 0)]);
        let r = exact_roots(&p);
        assert!(r.splits());
        assert_eq!(r.roots, vec![(g(-8, 0), 2), (g(2, 0), 4), (g(4, 0), 2)]);
    }

    #[test]
    fn recovers_gaussian_and_fractional_roots() {
        let p = from_roots(&[g(0, 3), g(0, -3), g(0, 1), g(0, 1), gq(q(1, 3), q(-1, 2))]);
        let r = exact_roots(&p);
        assert!(r.splits());
        assert_eq!(r.total_multiplicity(), 5);
        assert!(r.roots.contains(&(g(0, 1), 2)));
    }

    #[test]
    fn irreducible_factor_is_reported_as_residual() {
        // (x - 1)(x^2 - 2)
        let p = Poly::new(vec![g(2, 0), g(-2, 0), g(-1, 0), g(1, 0)]);
        let r = exact_roots(&p);
        assert_eq!(r.roots, vec![(g(1, 0), 1)]);
        assert_eq!(r.residual.degree(), 2);
        assert!(!r.splits());
    }
}
