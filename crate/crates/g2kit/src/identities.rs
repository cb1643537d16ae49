use exalg::{basis_vector, sigma_t, Form};
use liegeom::IdentityResidual;
use ratlin::{q, qi, Rational, Signed, Zero};

use crate::{G2Error, G2Form, G2Structure};

fn row(id: &'static str, statement: &'static str, residual: Rational) -> IdentityResidual {
    IdentityResidual { id, statement, residual }
}

fn worst(values: impl IntoIterator<Item = Rational>) -> Rational {
    values.into_iter().fold(Rational::zero(), |m, v| m.max(v.abs()))
}

/// `Σ_ij (β ∧ e_j, e_i ⌟ ω³) · op(e_j, e_i ⌟ *ω³)`.
fn beta_sum(g: &G2Form, beta: &Form, op: impl Fn(usize, &Form) -> Form) -> Form {
    let mut out = Form::zero(7);
    for i in 1..=7 {
        for j in 1..=7 {
            let c = beta.wedge(&Form::blade(7, &[j])).inner(g.contraction(i));
            if !c.is_zero() {
                out += &op(j, g.star_contraction(i)).scale(&c);
            }
        }
    }
    out
}

/// `T_β(X,Y,Z) = ⅜(pr_m(β∧Y)(X,Z) - pr_m(β∧X)(Y,Z)) + ⅛(g(β,Y)g(X,Z) - g(β,X)g(Y,Z))`
/// on basis triples, compared with `-¼ β ⌟ *ω³`.
fn t_beta_residual(g: &G2Form, b: &[Rational]) -> Rational {
    let beta = Form::vector(b);
    let pm: Vec<Form> = (1..=7).map(|y| g.pr_m(&beta.wedge(&Form::blade(7, &[y])))).collect();
    let target = g.vector_to_three_form(b).scale(&q(-1, 4));
    let delta = |a: usize, c: usize| if a == c { qi(1) } else { qi(0) };
    let mut res = Rational::zero();
    for x in 1..=7 {
        for y in 1..=7 {
            for z in 1..=7 {
                let v = (pm[y - 1].eval(&[x, z]) - pm[x - 1].eval(&[y, z])) * q(3, 8)
                    + (&b[y - 1] * delta(x, z) - &b[x - 1] * delta(y, z)) * q(1, 8);
                res = res.max((v - target.eval(&[x, y, z])).abs());
            }
        }
    }
    res
}

/// The universal constant identities of the G₂ type decomposition, checked
/// for every basis vector `β` and every vector of a basis of Λ³₂₇.
pub fn constant_identities(g: &G2Form) -> Vec<IdentityResidual> {
    let basis27 = g.lambda27_basis();
    let betas: Vec<Vec<Rational>> = (1..=7).map(|i| basis_vector(7, i)).collect();
    let mut rows = Vec::new();

    rows.push(row(
        "gram-omega",
        "(e_i ⌟ ω³, e_j ⌟ ω³) = 3δ_ij",
        worst((1..=7).flat_map(|i| {
            (1..=7).map(move |j| g.contraction(i).inner(g.contraction(j)) - if i == j { qi(3) } else { qi(0) })
        })),
    ));
    rows.push(row(
        "gram-star-omega",
        "(e_i ⌟ *ω³, e_j ⌟ *ω³) = 4δ_ij",
        worst((1..=7).flat_map(|i| {
            (1..=7)
                .map(move |j| g.star_contraction(i).inner(g.star_contraction(j)) - if i == j { qi(4) } else { qi(0) })
        })),
    ));
    rows.push(row(
        "lambda2-eigen",
        "*(ω³ ∧ α) = 2α on Λ²₇ and -α on Λ²₁₄",
        worst(exalg::ascending(7, 2).into_iter().map(|ix| {
            let (seven, fourteen) = g.project2(&Form::blade(7, &ix)).expect("2-form");
            let a = (&g.omega().wedge(&seven).hodge() - &seven.scale(&qi(2))).max_abs();
            let b = (&g.omega().wedge(&fourteen).hodge() + &fourteen).max_abs();
            a.max(b)
        })),
    ));
    rows.push(row(
        "rho3-constant",
        "ϱ₃(Z ⌟ ω³)(ω³) = -3 Z ⌟ *ω³",
        worst(betas.iter().map(|z| {
            (&g.act(&g.vector_to_two_form(z), g.omega()) + &g.vector_to_three_form(z).scale(&qi(3))).max_abs()
        })),
    ));
    rows.push(row(
        "contract-beta",
        "Σ (β∧e_j, e_i⌟ω³)(e_j ⌟ (e_i⌟*ω³)) = -4 β⌟ω³",
        worst(betas.iter().map(|b| {
            let lhs = beta_sum(g, &Form::vector(b), |j, f| f.interior_e(j));
            (&lhs + &g.vector_to_two_form(b).scale(&qi(4))).max_abs()
        })),
    ));
    rows.push(row(
        "wedge-beta",
        "Σ (β∧e_j, e_i⌟ω³)(e_j ∧ (e_i⌟*ω³)) = -3 β∧ω³",
        worst(betas.iter().map(|b| {
            let beta = Form::vector(b);
            let lhs = beta_sum(g, &beta, |j, f| Form::blade(7, &[j]).wedge(f));
            (&lhs + &beta.wedge(g.omega()).scale(&qi(3))).max_abs()
        })),
    ));
    rows.push(row(
        "wedge-gamma27",
        "Σ (e_j⌟Γ₂₇, e_i⌟ω³)(e_j ∧ (e_i⌟*ω³)) = -2 *Γ₂₇",
        worst(basis27.iter().map(|gm| {
            let mut lhs = Form::zero(7);
            for i in 1..=7 {
                for j in 1..=7 {
                    let c = gm.interior_e(j).inner(g.contraction(i));
                    if !c.is_zero() {
                        lhs += &Form::blade(7, &[j]).wedge(g.star_contraction(i)).scale(&c);
                    }
                }
            }
            (&lhs + &gm.hodge().scale(&qi(2))).max_abs()
        })),
    ));
    rows.push(row(
        "contract-gamma27",
        "Σ (e_j⌟Γ₂₇, e_i⌟ω³)(e_j ⌟ (e_i⌟*ω³)) = 0",
        worst(basis27.iter().map(|gm| {
            let mut lhs = Form::zero(7);
            for i in 1..=7 {
                for j in 1..=7 {
                    let c = gm.interior_e(j).inner(g.contraction(i));
                    if !c.is_zero() {
                        lhs += &g.star_contraction(i).interior_e(j).scale(&c);
                    }
                }
            }
            lhs.max_abs()
        })),
    ));
    rows.push(row("t-beta", "T_β = -¼ β ⌟ *ω³", worst(betas.iter().map(|b| t_beta_residual(g, b)))));
    rows.push(row(
        "hodge-beta",
        "*(β ∧ ω³) = -β ⌟ *ω³",
        worst(betas.iter().map(|b| (&Form::vector(b).wedge(g.omega()).hodge() + &g.vector_to_three_form(b)).max_abs())),
    ));
    rows
}

/// Model-level identities between `dω³`, `δ^g ω³`, the torsion class and
/// the characteristic torsion. Rows that need a vanishing Λ²₁₄ component
/// are only produced when it vanishes.
pub fn d_omega_decomposition(s: &G2Structure) -> Result<Vec<IdentityResidual>, G2Error> {
    let g = s.form();
    let class = s.classify()?;
    let d = s.d_omega();
    let delta = s.codiff_omega();
    let beta = Form::vector(&class.beta);
    let mut rows = Vec::new();

    let rhs = &(&g.star_omega().scale(&-class.lambda.clone()) + &class.gamma27.hodge())
        + &beta.wedge(g.omega()).scale(&q(3, 4));
    rows.push(row("d-omega", "dω³ = -λ *ω³ + *Γ₂₇ + ¾ β ∧ ω³", (&d - &rhs).max_abs()));
    rows.push(row("lambda-trace", "tr Γ = (7/12) λ", (class.gamma.trace() - &class.lambda * q(7, 12)).abs()));
    let skew = Form::from_fn(7, 2, |ix| {
        let (x, k) = (ix[0] - 1, ix[1] - 1);
        (&class.gamma[(x, k)] - &class.gamma[(k, x)]) * q(1, 2)
    });
    rows.push(row(
        "beta-skew",
        "Λ²₇ part of the skew part of Γ = (1/12) β ⌟ ω³",
        (&g.pr_m(&skew) - &g.vector_to_two_form(&class.beta).scale(&q(1, 12))).max_abs(),
    ));
    if class.admits_skew_connection() {
        let ders = s.lc_derivatives();
        let lc_formula = (1..=7).map(|x| {
            let ex = basis_vector(7, x);
            let ex_form = Form::blade(7, &[x]);
            let mut rhs = g.vector_to_three_form(&ex).scale(&(-&class.lambda * q(1, 4)));
            let a = &beta.wedge(&ex_form).scale(&q(1, 4)) + &class.gamma27.interior_e(x).scale(&q(1, 2));
            for i in 1..=7 {
                rhs -= &g.star_contraction(i).scale(&a.inner(g.contraction(i)));
            }
            (&ders[x - 1] - &rhs).max_abs()
        });
        rows.push(row(
            "lc-derivative",
            "∇^g_X ω³ = -(λ/4) X⌟*ω³ - Σ(¼ β∧X + ½ X⌟Γ₂₇, e_i⌟ω³)(e_i⌟*ω³)",
            worst(lc_formula),
        ));
        rows.push(row("codiff-omega", "δ^g ω³ = -β ⌟ ω³", (&delta + &g.vector_to_two_form(&class.beta)).max_abs()));
        let t = s.torsion_form()?;
        let split = &(&g.omega().scale(&(-&class.lambda * q(1, 6))) - &class.gamma27)
            - &g.vector_to_three_form(&class.beta).scale(&q(1, 4));
        rows.push(row("torsion-split", "T = -(λ/6) ω³ - Γ₂₇ - ¼ β ⌟ *ω³", (&t - &split).max_abs()));
        let conn = s.model().with_torsion(&t)?;
        let par = worst((1..=7).map(|i| conn.derivative(i, g.omega()).max_abs()));
        rows.push(row("parallel-omega", "∇ω³ = 0 for the characteristic torsion", par));
    }
    Ok(rows)
}

/// Outcome of the equivalent conditions for `Ric^∇ = 0` on a cocalibrated
/// structure, together with the wedge identity that follows from them.
#[derive(Debug, Clone, PartialEq)]
pub struct RicciFlatConditions {
    pub ricci_vanishes: bool,
    pub closed_and_coclosed: bool,
    pub cubic_equation: bool,
    pub wedge_identity: bool,
}

impl RicciFlatConditions {
    /// The three conditions agree.
    pub fn consistent(&self) -> bool {
        self.ricci_vanishes == self.closed_and_coclosed && self.closed_and_coclosed == self.cubic_equation
    }
}

/// Evaluates `Ric^∇ = 0`, `dT = 0 = δ^g T`, the cubic equation
/// `d*dω³ + (7/6) λ dω³ = 0` and `(*dω³ + (7/6) λ ω³) ∧ dω³ = 0`.
pub fn ricci_flat_conditions(s: &G2Structure, t: &Form) -> Result<RicciFlatConditions, G2Error> {
    let class = s.classify()?;
    if !class.is_cocalibrated() {
        return Err(G2Error::NotCocalibrated);
    }
    let m = s.model();
    let ric = m.curvature(&m.with_torsion(t)?).ric;
    let d = s.d_omega();
    let l76 = &class.lambda * q(7, 6);
    let cubic = &m.d(&d.hodge()) + &d.scale(&l76);
    let wedge = (&d.hodge() + &s.omega().scale(&l76)).wedge(&d);
    Ok(RicciFlatConditions {
        ricci_vanishes: ric.is_zero(),
        closed_and_coclosed: m.d(t).is_zero() && m.codiff(t).is_zero(),
        cubic_equation: cubic.is_zero(),
        wedge_identity: wedge.is_zero(),
    })
}

/// Pointwise identities of a nearly parallel structure with `Γ = λ Id`:
/// `T = -(λ/6) ω³`, `dT = (λ²/6) *ω³`, and the assumed `Ric^g = (27/72) λ² δ`.
#[derive(Debug, Clone, PartialEq)]
pub struct NearlyParallelReport {
    pub lambda: Rational,
    /// Diagonal value of `¼ T_imn T_jmn` (off-diagonal entries checked zero).
    pub quarter_tt: Rational,
    /// Diagonal value of `½(e_i ⌟ dT, e_j ⌟ *ω³)`.
    pub dt_pairing: Rational,
    pub ric_g: Rational,
    pub rows: Vec<IdentityResidual>,
}

pub fn nearly_parallel_algebra(lambda: &Rational) -> NearlyParallelReport {
    let g = G2Form::canonical();
    let t = g.omega().scale(&(-lambda * q(1, 6)));
    let l2 = lambda * lambda;
    let dt = g.star_omega().scale(&(&l2 * q(1, 6)));
    let ric_g = &l2 * q(27, 72);
    let tt = |tt: &Form, i: usize, j: usize| -> Rational {
        let mut s = Rational::zero();
        for m in 1..=7 {
            for n in 1..=7 {
                s += tt.eval(&[i, m, n]) * tt.eval(&[j, m, n]);
            }
        }
        s
    };
    let pairing = |i: usize, j: usize| dt.interior_e(i).inner(g.star_contraction(j)) * q(1, 2);
    let delta = |i: usize, j: usize| if i == j { qi(1) } else { qi(0) };
    let quarter_tt = tt(&t, 1, 1) * q(1, 4);
    let dt_pairing = pairing(1, 1);
    let star3 = t.scale(&qi(3));
    let pairs: Vec<(usize, usize)> = (1..=7).flat_map(|i| (1..=7).map(move |j| (i, j))).collect();
    let rows = vec![
        row(
            "tt-quarter",
            "¼ T_imn T_jmn = (3/72) λ² δ_ij",
            worst(pairs.iter().map(|&(i, j)| tt(&t, i, j) * q(1, 4) - &l2 * q(3, 72) * delta(i, j))),
        ),
        row(
            "dt-pairing",
            "½(e_i ⌟ dT, e_j ⌟ *ω³) = (24/72) λ² δ_ij",
            worst(pairs.iter().map(|&(i, j)| pairing(i, j) - &l2 * q(24, 72) * delta(i, j))),
        ),
        row("sigma", "dT = 2σ^T", (&dt - &sigma_t(&t).expect("3-form").scale(&qi(2))).max_abs()),
        row("torsion-from-omega", "T = (1/6)(dω³, *ω³) ω³ - *dω³ with dω³ = -λ *ω³", {
            let d = g.star_omega().scale(&-lambda.clone());
            (&t - &(&g.omega().scale(&(d.inner(g.star_omega()) * q(1, 6))) - &d.hodge())).max_abs()
        }),
        row(
            "riemannian-balance",
            "Ric^g_ij - ¼ T_imn T_jmn - ½(e_i ⌟ dT, e_j ⌟ *ω³) = 0",
            worst(pairs.iter().map(|&(i, j)| &ric_g * delta(i, j) - tt(&t, i, j) * q(1, 4) - pairing(i, j))),
        ),
        row(
            "string-equation",
            "Ric^g_ij - ¼ T*_imn T*_jmn = 0 with T* = 3T",
            worst(pairs.iter().map(|&(i, j)| &ric_g * delta(i, j) - tt(&star3, i, j) * q(1, 4))),
        ),
    ];
    NearlyParallelReport { lambda: lambda.clone(), quarter_tt, dt_pairing, ric_g, rows }
}
