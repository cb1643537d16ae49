//! Kernel conditions for the distinguished spinors of `Δ_5`.
//!
//! In the pinned representation `η ∧ dη = 2(e_125 + e_345)` is diagonal with
//! entries `(-4, 0, 0, 4)`, so the standard basis spinors are eigenvectors.
//! `(1,0,0,0)` and `(0,0,0,1)` span the two lines, `(0,1,0,0)` lies in the
//! plane annihilated by `dη`.

use exalg::Form;
use ratlin::{Gauss, One, Rational, Zero};

use crate::GammaRep;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinorType {
    /// The spinors spanning the `±4`-eigenlines of `η ∧ dη`.
    Line,
    /// The spinor `(0,1,0,0)` in the kernel of `dη`.
    Plane,
}

pub fn distinguished_spinors_5d(which: SpinorType) -> Vec<Vec<Gauss>> {
    let unit = |i: usize| (0..4).map(|k| if k == i { Gauss::one() } else { Gauss::zero() }).collect::<Vec<_>>();
    match which {
        SpinorType::Line => vec![unit(0), unit(3)],
        SpinorType::Plane => vec![unit(1)],
    }
}

/// Closed-form linear conditions on `(t, x)` under which the distinguished
/// spinors lie in the kernel of `t + x` acting by Clifford multiplication.
///
/// # Panics
///
/// Panics unless `t` is a 3-form in dimension 5 and `x` has five entries.
pub fn kernel_conditions_5d(t: &Form, x: &[Rational], which: SpinorType) -> bool {
    assert!(t.dim() == 5 && t.has_degree(3) && x.len() == 5, "expects a 3-form and a vector in dimension 5");
    let c = |i, j, k| t.eval(&[i, j, k]);
    let s = match which {
        SpinorType::Line => Rational::one(),
        SpinorType::Plane => -Rational::one(),
    };
    x[0] == -&s * c(2, 3, 4)
        && x[1] == &s * c(1, 3, 4)
        && x[2] == -&s * c(1, 2, 4)
        && x[3] == &s * c(1, 2, 3)
        && x[4].is_zero()
        && c(1, 2, 5) == -&s * c(3, 4, 5)
        && c(2, 3, 5) == -&s * c(1, 4, 5)
        && c(2, 4, 5) == &s * c(1, 3, 5)
}

/// Direct check: applies `t + x` to every distinguished spinor.
pub fn kernel_membership_5d(rep: &GammaRep, t: &Form, x: &[Rational], which: SpinorType) -> bool {
    let e = rep.act_form(&(t + &Form::vector(x)));
    distinguished_spinors_5d(which).iter().all(|psi| e.mul_vec(psi).iter().all(Zero::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratlin::qi;

    #[test]
    fn zero_data_satisfies_both() {
        let t = Form::zero(5);
        let x = vec![qi(0); 5];
        assert!(kernel_conditions_5d(&t, &x, SpinorType::Line));
        assert!(kernel_conditions_5d(&t, &x, SpinorType::Plane));
    }

    #[test]
    fn sign_of_first_coordinate_selects_the_type() {
        let rep = GammaRep::new(5).unwrap();
        let t = Form::blade(5, &[2, 3, 4]);
        let minus = vec![qi(-1), qi(0), qi(0), qi(0), qi(0)];
        let plus = vec![qi(1), qi(0), qi(0), qi(0), qi(0)];
        assert!(kernel_conditions_5d(&t, &minus, SpinorType::Line));
        assert!(!kernel_conditions_5d(&t, &plus, SpinorType::Line));
        assert!(kernel_conditions_5d(&t, &plus, SpinorType::Plane));
        assert!(kernel_membership_5d(&rep, &t, &minus, SpinorType::Line));
        assert!(kernel_membership_5d(&rep, &t, &plus, SpinorType::Plane));
    }
}
