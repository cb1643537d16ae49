//! Pointwise identities of a 6-dimensional strictly nearly Kähler structure
//! of constant type `a`.
//!
//! The torsion is `T = c·ReΨ` with `Ψ = (e1 + ie2)∧(e3 + ie4)∧(e5 + ie6)` and
//! `c² = a/2`. Every checked quantity is quadratic in `T`, so it is computed
//! from `ReΨ` and scaled by `c²`; `dT` is taken as `2σ^T`, which holds for a
//! parallel torsion form.

use clifford::{common_kernel, eigenvalues, restrict, GammaRep, SpinEndo};
use exalg::{sigma_t, Form};
use ratlin::{gq, q, qi, Gauss, Matrix, Rational, Signed, Tensor, Zero};

use crate::tables::{diff, form_table, slot, trace_against};

pub const RE_PSI: &str = "e135 - e146 - e236 - e245";

#[derive(Debug, Clone, PartialEq)]
pub struct NearlyKaehlerReport {
    pub a: Rational,
    /// `T_imn T_jmn - 2a g_ij`.
    pub tt_residual: Rational,
    /// `2σ^T - a Ω∧Ω`.
    pub sigma_residual: Rational,
    /// `Ric^∇ = Ric^g - ¼ T_imn T_jmn` with `Ric^g = (5/2) a g`.
    pub ric_nabla: Tensor,
    /// `Ric^∇ - 2a g`.
    pub ric_nabla_residual: Rational,
    /// `|T(X,Y)|² - ½a(|X|²|Y|² - g(X,Y)² - g(X,JY)²)` over basis vectors and
    /// their pairwise sums.
    pub constant_type_residual: Rational,
    /// `(¾dT - ½σ^T) - (¼dT + ½σ^T)`.
    pub endomorphism_forms_residual: Rational,
    /// `¾dT - ½σ^T + ¼Scal^∇ - a(e1234 + e1256 + e3456 + 3)`.
    pub endomorphism_residual: Rational,
    /// Spectra of that endomorphism on the two half-spin modules.
    pub half_module_spectra: Vec<Option<Vec<Rational>>>,
    /// Dimension of the common kernel of `½(X⌟dT) - Ric^∇(X)`.
    pub ricci_kernel_dim: usize,
    /// The common kernel equals `E⁺ ⊕ E⁻`, `J(X)·Ψ^± = ∓i X·Ψ^±`.
    pub ricci_kernel_is_e_plus_minus: bool,
    /// `Ric^∇(X,Y) - ¼λ^ω(X,JY)`.
    pub su_reduction_residual: Rational,
}

impl NearlyKaehlerReport {
    /// All residuals vanish; for `a ≠ 0` the Ricci kernel is also `E⁺ ⊕ E⁻`
    /// (for `a = 0` every endomorphism vanishes and the kernel is everything).
    pub fn holds(&self) -> bool {
        self.tt_residual.is_zero()
            && self.sigma_residual.is_zero()
            && self.ric_nabla_residual.is_zero()
            && self.constant_type_residual.is_zero()
            && self.endomorphism_forms_residual.is_zero()
            && self.endomorphism_residual.is_zero()
            && self.su_reduction_residual.is_zero()
            && (self.a.is_zero() || self.ricci_kernel_is_e_plus_minus)
    }
}

fn complex_structure() -> Matrix<Rational> {
    let mut j = Matrix::zeros(6, 6);
    for p in 0..3 {
        j[(2 * p + 1, 2 * p)] = qi(1);
        j[(2 * p, 2 * p + 1)] = qi(-1);
    }
    j
}

fn gauss(r: &Rational) -> Gauss {
    gq(r.clone(), Rational::zero())
}

fn span_rank(vs: &[Vec<Gauss>]) -> usize {
    if vs.is_empty() {
        0
    } else {
        Matrix::from_columns(vs).rank_fraction_free()
    }
}

pub fn nearly_kaehler_algebra(a: &Rational) -> NearlyKaehlerReport {
    let n = 6;
    let c2 = a * q(1, 2);
    let t0 = Form::parse(n, RE_PSI).expect("ReΨ literal");
    let j = complex_structure();
    let omega = Form::parse(n, "e12 + e34 + e56").expect("Kähler form literal");
    let g = Tensor::diag(&vec![qi(1); n]);

    let t0t = form_table(&t0, 3);
    let tt = Tensor::from_fn(n, 2, |ix| {
        let mut s = Rational::zero();
        for m in 0..n {
            for l in 0..n {
                s += &t0t[[ix[0], m, l]] * &t0t[[ix[1], m, l]];
            }
        }
        s * &c2
    });
    let sigma = sigma_t(&t0).expect("3-form").scale(&c2);
    let dt = sigma.scale(&qi(2));
    let scal_nabla = a * qi(12);
    let ric_g = g.scale(&(a * q(5, 2)));
    let ric_nabla = ric_g.sub(&tt.scale(&q(1, 4)));

    let quad = |x: &[Rational], y: &[Rational]| -> Rational {
        let v: Vec<Rational> = (1..=n).map(|k| t0.eval_vectors(&[x, y, &exalg::basis_vector(n, k)])).collect();
        v.iter().map(|c| c * c).fold(Rational::zero(), |s, c| s + c) * &c2
    };
    let dot = |x: &[Rational], y: &[Rational]| x.iter().zip(y).fold(Rational::zero(), |s, (a, b)| s + a * b);
    let mut probes: Vec<Vec<Rational>> = (1..=n).map(|i| exalg::basis_vector(n, i)).collect();
    for i in 0..n {
        for k in i + 1..n {
            probes.push(probes[i].iter().zip(&probes[k]).map(|(x, y)| x + y).collect());
        }
    }
    let mut constant_type_residual = Rational::zero();
    for x in &probes {
        for y in &probes {
            let jy = j.mul_vec(y);
            let rhs = (dot(x, x) * dot(y, y) - dot(x, y) * dot(x, y) - dot(x, &jy) * dot(x, &jy)) * a * q(1, 2);
            constant_type_residual = constant_type_residual.max((quad(x, y) - rhs).abs());
        }
    }

    let left = &dt.scale(&q(3, 4)) - &sigma.scale(&q(1, 2));
    let right = &dt.scale(&q(1, 4)) + &sigma.scale(&q(1, 2));
    let endo_form = &left + &Form::scalar(n, &scal_nabla * q(1, 4));
    let expected = &Form::parse(n, "e1234 + e1256 + e3456").expect("literal").scale(a) + &Form::scalar(n, a * qi(3));

    let rep = GammaRep::new(n).expect("dimension 6");
    let endo = rep.act_form(&endo_form);
    let size = rep.size();
    let vol = rep.product(&[1, 2, 3, 4, 5, 6]).to_matrix();
    let i_id = Matrix::scalar(size, gq(Rational::zero(), qi(1)));
    let half_module_spectra = [&vol - &i_id, &vol + &i_id]
        .iter()
        .map(|m| {
            let basis = common_kernel(size, std::slice::from_ref(m)).expect("module size");
            restrict(&endo, &basis).and_then(|r| eigenvalues(&r).real_multiset())
        })
        .collect();

    let ric_endos: Vec<SpinEndo> = (1..=n)
        .map(|x| {
            let ric_x: Vec<Rational> = (0..n).map(|k| ric_nabla[[x - 1, k]].clone()).collect();
            &rep.act_form(&dt.interior_e(x)).scale(&gauss(&q(1, 2))) - &rep.act_vector(&ric_x)
        })
        .collect();
    let kernel = common_kernel(size, &ric_endos).expect("module size");
    let i = gq(Rational::zero(), qi(1));
    let e_spaces: Vec<Vec<Gauss>> = [i.clone(), -i]
        .iter()
        .flat_map(|s| {
            let eqs: Vec<SpinEndo> = (1..=n)
                .map(|x| &rep.act_vector(&j.column(x - 1)) + &rep.act_vector(&exalg::basis_vector(n, x)).scale(s))
                .collect();
            common_kernel(size, &eqs).expect("module size")
        })
        .collect();
    let joint: Vec<Vec<Gauss>> = kernel.iter().chain(&e_spaces).cloned().collect();
    let ricci_kernel_is_e_plus_minus = span_rank(&kernel) == span_rank(&e_spaces) && span_rank(&joint) == kernel.len();

    let lambda = trace_against(&form_table(&dt, 4), 2, 3, &j);
    let su = diff(&ric_nabla, &slot(&lambda, 1, &j).scale(&q(1, 4)));

    NearlyKaehlerReport {
        a: a.clone(),
        tt_residual: diff(&tt, &g.scale(&(a * qi(2)))),
        sigma_residual: (&sigma.scale(&qi(2)) - &omega.wedge(&omega).scale(a)).max_abs(),
        ric_nabla_residual: diff(&ric_nabla, &g.scale(&(a * qi(2)))),
        ric_nabla,
        constant_type_residual,
        endomorphism_forms_residual: (&left - &right).max_abs(),
        endomorphism_residual: (&endo_form - &expected).max_abs(),
        half_module_spectra,
        ricci_kernel_dim: kernel.len(),
        ricci_kernel_is_e_plus_minus,
        su_reduction_residual: su,
    }
}
