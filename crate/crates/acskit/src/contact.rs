use exalg::{basis_vector, Form};
use liegeom::{Connection, IdentityResidual, LieModel};
use ratlin::{q, qi, Matrix, Rational, Signed, Tensor, Zero};

use crate::nijenhuis::nijenhuis_table;
use crate::ricci::{RicciForms, TraceKind};
use crate::tables::{diff, form_table, insert, outer, permute, slot, table_form, vector_table};
use crate::{AcsError, NijTensor};

/// Which formula the characteristic torsion reduces to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContactClass {
    /// Normal contact metric structure: `T = η ∧ dη`.
    Sasakian,
    /// `N = 0` but not contact metric: `T = η ∧ dη + d^φF`.
    Normal,
    /// Skew `N ≠ 0`: the full formula.
    General,
}

/// An almost contact metric structure on a Lie algebra with orthonormal
/// frame; `φ` acts on columns, `η` is the metric dual of `ξ`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlmostContact {
    model: LieModel,
    xi: Vec<Rational>,
    eta: Form,
    phi: Matrix<Rational>,
}

impl AlmostContact {
    /// Checks `η(ξ) = 1`, `φ² = -Id + η ⊗ ξ`, `φ(ξ) = 0` and
    /// `g(φX, φY) = g(X, Y) - η(X) η(Y)`.
    pub fn new(model: LieModel, xi: Vec<Rational>, phi: Matrix<Rational>) -> Result<Self, AcsError> {
        let n = model.dim();
        if n % 2 == 0 {
            return Err(AcsError::WrongDimension { dim: n, parity: "odd" });
        }
        if xi.len() != n || phi.rows() != n || phi.cols() != n {
            return Err(AcsError::NotAlmostContact("ξ and φ must match the model dimension".into()));
        }
        let eta = Form::vector(&xi);
        if eta.eval_vectors(&[&xi]) != qi(1) {
            return Err(AcsError::NotAlmostContact("η(ξ) ≠ 1".into()));
        }
        let xi_eta = Matrix::from_fn(n, n, |i, j| &xi[i] * &xi[j]);
        let id = Matrix::identity(n);
        if &phi * &phi != &xi_eta - &id {
            return Err(AcsError::NotAlmostContact("φ² ≠ -Id + η ⊗ ξ".into()));
        }
        if phi.mul_vec(&xi).iter().any(|c| !c.is_zero()) {
            return Err(AcsError::NotAlmostContact("φ(ξ) ≠ 0".into()));
        }
        if &phi.transpose() * &phi != &id - &xi_eta {
            return Err(AcsError::NotAlmostContact("φ is not compatible with the metric".into()));
        }
        Ok(AlmostContact { model, xi, eta, phi })
    }

    /// `ξ = e_k` and `φ` given by its action on the remaining basis vectors as
    /// `(i, j, s)`: `φ(e_i) = s e_j`.
    pub fn from_frame(model: LieModel, k: usize, images: &[(usize, usize, i64)]) -> Result<Self, AcsError> {
        let n = model.dim();
        let mut phi = Matrix::zeros(n, n);
        for &(i, j, s) in images {
            phi[(j - 1, i - 1)] = qi(s);
        }
        AlmostContact::new(model, basis_vector(n, k), phi)
    }

    pub fn model(&self) -> &LieModel {
        &self.model
    }

    pub fn dim(&self) -> usize {
        self.model.dim()
    }

    /// `k` with `dim = 2k + 1`.
    pub fn k(&self) -> usize {
        self.dim() / 2
    }

    pub fn xi(&self) -> &[Rational] {
        &self.xi
    }

    pub fn eta(&self) -> &Form {
        &self.eta
    }

    pub fn phi(&self) -> &Matrix<Rational> {
        &self.phi
    }

    /// `F(X, Y) = g(X, φY)`.
    pub fn fundamental_form(&self) -> Form {
        Form::from_fn(self.dim(), 2, |ix| self.phi[(ix[0] - 1, ix[1] - 1)].clone())
    }

    pub fn d_eta(&self) -> Form {
        self.model.d(&self.eta)
    }

    pub fn d_fundamental(&self) -> Form {
        self.model.d(&self.fundamental_form())
    }

    pub fn nijenhuis(&self) -> NijTensor {
        let d_eta = self.d_eta();
        NijTensor::new(nijenhuis_table(&self.model, &self.phi, Some((&d_eta, &self.xi))))
    }

    /// `N²(X, Y) = dη(φX, Y) + dη(X, φY)`.
    pub fn n2(&self) -> Form {
        let de = form_table(&self.d_eta(), 2);
        table_form(&slot(&de, 0, &self.phi).add(&slot(&de, 1, &self.phi)))
    }

    /// `d^φF(X, Y, Z) = -dF(φX, φY, φZ)`.
    pub fn d_phi_f(&self) -> Form {
        let d = form_table(&self.d_fundamental(), 3);
        let t = slot(&slot(&slot(&d, 0, &self.phi), 1, &self.phi), 2, &self.phi);
        table_form(&t).scale(&qi(-1))
    }

    /// `dF⁻(X,Y,Z) = dF(X,φY,φZ) + dF(φX,Y,φZ) + dF(φX,φY,Z) - dF(X,Y,Z)`.
    pub fn df_minus(&self) -> Tensor {
        let d = form_table(&self.d_fundamental(), 3);
        let p = &self.phi;
        slot(&slot(&d, 1, p), 2, p).add(&slot(&slot(&d, 0, p), 2, p)).add(&slot(&slot(&d, 0, p), 1, p)).sub(&d)
    }

    /// `g(∇^g_{e_i} ξ, e_j)`, 0-based.
    fn lc_xi(&self) -> Tensor {
        let lc = self.model.levi_civita();
        let n = self.dim();
        let rows: Vec<Vec<Rational>> = (1..=n).map(|i| lc.apply(&basis_vector(n, i), &self.xi)).collect();
        Tensor::from_fn(n, 2, |ix| rows[ix[0]][ix[1]].clone())
    }

    /// Largest `|g(∇^g_X ξ, Y) + g(∇^g_Y ξ, X)|`; zero iff `ξ` is Killing.
    pub fn killing_defect(&self) -> Rational {
        let m = self.lc_xi();
        m.add(&m.transpose2()).max_abs()
    }

    pub fn is_killing(&self) -> bool {
        self.killing_defect().is_zero()
    }

    /// `dη = 2F`.
    pub fn is_contact_metric(&self) -> bool {
        self.d_eta() == self.fundamental_form().scale(&qi(2))
    }

    /// `N = 0`.
    pub fn is_normal(&self) -> bool {
        self.nijenhuis().is_zero()
    }

    pub fn is_sasakian(&self) -> bool {
        self.is_contact_metric() && self.is_normal() && self.is_killing()
    }

    /// `T = η ∧ dη + d^φF + N - η ∧ (ξ ⌟ N)`, defined when `N` is totally
    /// skew and `ξ` is Killing.
    pub fn torsion(&self) -> Result<Form, AcsError> {
        let nij = self.nijenhuis();
        let Some(n_form) = nij.to_form() else {
            return Err(AcsError::NijenhuisNotSkew { defect: nij.skew_defect().to_string() });
        };
        let killing = self.killing_defect();
        if !killing.is_zero() {
            return Err(AcsError::NotKilling { defect: killing.to_string() });
        }
        let eta = &self.eta;
        Ok(&(&eta.wedge(&self.d_eta()) + &self.d_phi_f()) + &(&n_form - &eta.wedge(&n_form.interior(&self.xi))))
    }

    pub fn classify(&self) -> Result<ContactClass, AcsError> {
        self.torsion()?;
        Ok(if self.is_sasakian() {
            ContactClass::Sasakian
        } else if self.is_normal() {
            ContactClass::Normal
        } else {
            ContactClass::General
        })
    }

    /// The metric connection with torsion [`AlmostContact::torsion`].
    pub fn characteristic_connection(&self) -> Result<Connection, AcsError> {
        Ok(self.model.with_torsion(&self.torsion()?)?)
    }

    /// Largest coefficient of `∇φ`, `∇η` and `∇ξ`.
    pub fn parallelism_defect(&self, conn: &Connection) -> Rational {
        let n = self.dim();
        let mut worst = Rational::zero();
        for i in 1..=n {
            worst = worst.max(conn.derivative_endo(i, &self.phi).max_abs());
            worst = worst.max(conn.derivative(i, &self.eta).max_abs());
            for c in conn.apply(&basis_vector(n, i), &self.xi) {
                worst = worst.max(c.abs());
            }
        }
        worst
    }

    /// Rank of the linear system `[T_X, φ] = 0`, `T_X ξ = 0` on 3-forms `T`,
    /// where `T_X` is the skew endomorphism of `X ⌟ T`. Full rank means at
    /// most one structure-preserving connection with skew torsion.
    pub fn uniqueness_rank(&self) -> (usize, usize) {
        uniqueness_rank(self.dim(), |a| {
            let mut out: Vec<Rational> = (&(a * &self.phi) - &(&self.phi * a)).entries().to_vec();
            out.extend(a.mul_vec(&self.xi));
            out
        })
    }

    /// `g((∇^g_{e_x} φ) e_y, e_z)`, 0-based.
    fn lc_phi(&self) -> Tensor {
        let lc = self.model.levi_civita();
        let n = self.dim();
        let mats: Vec<Matrix<Rational>> = (1..=n).map(|i| lc.derivative_endo(i, &self.phi)).collect();
        Tensor::from_fn(n, 3, |ix| mats[ix[0]][(ix[2], ix[1])].clone())
    }

    /// `(∇^g_{e_x} η)(e_y)`, 0-based.
    fn lc_eta(&self) -> Tensor {
        let lc = self.model.levi_civita();
        let n = self.dim();
        let ders: Vec<Form> = (1..=n).map(|i| lc.derivative(i, &self.eta)).collect();
        Tensor::from_fn(n, 2, |ix| ders[ix[0]].eval(&[ix[1] + 1]))
    }

    /// The five general identities relating `∇^g φ`, `dF`, `N`, `N²` and `dη`.
    pub fn general_identities(&self) -> Vec<IdentityResidual> {
        let p = &self.phi;
        let xi = &self.xi;
        let eta = vector_table(&self.xi);
        let nphi = self.lc_phi();
        let dphi_eta = self.lc_eta();
        let d = form_table(&self.d_fundamental(), 3);
        let de = form_table(&self.d_eta(), 2);
        let n = self.nijenhuis().table().clone();
        let n2 = form_table(&self.n2(), 2);
        let swap = [1, 0, 2];

        let rhs1 = slot(&slot(&d, 1, p), 2, p)
            .sub(&d)
            .add(&permute(&slot(&n, 2, p), &[1, 2, 0]))
            .add(&outer(&eta, &n2))
            .add(&permute(&outer(&slot(&de, 0, p), &eta), &swap))
            .add(&permute(&outer(&eta, &slot(&de, 1, p)), &swap));
        let lhs1 = nphi.scale(&qi(2));

        let lhs2 = nphi.add(&slot(&slot(&nphi, 1, p), 2, p));
        let e = slot(&dphi_eta, 1, p);
        let rhs2 = permute(&outer(&eta, &e), &swap).sub(&outer(&e, &eta));

        let lhs3 = insert(&slot(&nphi, 1, p), 2, xi);
        let r3 = diff(&lhs3, &dphi_eta).max(diff(&dphi_eta, &self.lc_xi()));

        let rhs4a = slot(&slot(&n, 0, p), 1, p)
            .scale(&qi(-1))
            .add(&outer(&eta, &insert(&n, 0, xi)))
            .add(&permute(&outer(&eta, &insert(&n, 1, xi)), &swap));
        let rhs4b = slot(&slot(&n, 0, p), 2, p)
            .scale(&qi(-1))
            .add(&outer(&insert(&n, 2, xi), &eta))
            .sub(&outer(&eta, &slot(&slot(&insert(&n, 0, xi), 0, p), 1, p)));

        vec![
            IdentityResidual {
                id: "lc-phi",
                statement:
                    "2g((∇^g_X φ)Y,Z) = dF(X,φY,φZ) - dF(X,Y,Z) + N(Y,Z,φX) + η(X)N²(Y,Z) + η(Z)dη(φY,X) + η(Y)dη(X,φZ)",
                residual: diff(&lhs1, &rhs1),
            },
            IdentityResidual {
                id: "lc-phi-phi",
                statement: "g((∇^g_X φ)Y,Z) + g((∇^g_X φ)φY,φZ) = η(Y)(∇^g_X η)(φZ) - η(Z)(∇^g_X η)(φY)",
                residual: diff(&lhs2, &rhs2),
            },
            IdentityResidual {
                id: "lc-phi-xi",
                statement: "g((∇^g_X φ)φY,ξ) = (∇^g_X η)(Y) = g(∇^g_X ξ,Y)",
                residual: r3,
            },
            IdentityResidual {
                id: "nijenhuis-phi-phi",
                statement: "N(X,Y,Z) = -N(φX,φY,Z) + η(X)N(ξ,Y,Z) + η(Y)N(X,ξ,Z)",
                residual: diff(&n, &rhs4a),
            },
            IdentityResidual {
                id: "nijenhuis-phi-z",
                statement: "N(X,Y,Z) = -N(φX,Y,φZ) + η(Z)N(X,Y,ξ) - η(X)N(ξ,φY,φZ)",
                residual: diff(&n, &rhs4b),
            },
        ]
    }

    /// `dF⁻` through `N`, and `N` through `∇^g φ` and `∇^g ξ`.
    pub fn nijenhuis_expressions(&self) -> Vec<IdentityResidual> {
        let p = &self.phi;
        let eta = vector_table(&self.xi);
        let n = self.nijenhuis().table().clone();
        let nphi = slot(&n, 2, p);
        let rhs1 = nphi.add(&permute(&nphi, &[1, 2, 0])).add(&permute(&nphi, &[2, 0, 1])).scale(&qi(-1));

        let lp = self.lc_phi();
        let a = slot(&lp, 0, p);
        let b = slot(&lp, 1, p);
        let k = self.lc_xi();
        let swap = [1, 0, 2];
        let rhs2 = a
            .sub(&permute(&a, &swap))
            .add(&b)
            .sub(&permute(&b, &swap))
            .sub(&permute(&outer(&eta, &k), &swap))
            .add(&outer(&eta, &k));
        vec![
            IdentityResidual {
                id: "df-minus",
                statement: "dF⁻(X,Y,Z) = -N(X,Y,φZ) - N(Y,Z,φX) - N(Z,X,φY)",
                residual: diff(&self.df_minus(), &rhs1),
            },
            IdentityResidual {
                id: "nijenhuis-lc",
                statement:
                    "N(X,Y) = (∇^g_{φX}φ)Y - (∇^g_{φY}φ)X + (∇^g_X φ)φY - (∇^g_Y φ)φX - η(Y)∇^g_X ξ + η(X)∇^g_Y ξ",
                residual: diff(&n, &rhs2),
            },
        ]
    }

    /// The chain `N(φX,Y,ξ) = N(X,φY,ξ) = N²(X,Y) = dF(X,Y,ξ) = -dF(φX,φY,ξ)`
    /// together with `∇^g_ξ ξ = ξ ⌟ dη = 0`.
    pub fn chain_identities(&self) -> Result<ChainReport, AcsError> {
        let nij = self.nijenhuis();
        if !nij.is_skew() {
            return Err(AcsError::NijenhuisNotSkew { defect: nij.skew_defect().to_string() });
        }
        let killing = self.killing_defect();
        if !killing.is_zero() {
            return Err(AcsError::NotKilling { defect: killing.to_string() });
        }
        let p = &self.phi;
        let xi = &self.xi;
        let n = nij.table();
        let dxi = insert(&form_table(&self.d_fundamental(), 3), 2, xi);
        let members = vec![
            ("N(φX,Y,ξ)", table_form(&insert(&slot(n, 0, p), 2, xi))),
            ("N(X,φY,ξ)", table_form(&insert(&slot(n, 1, p), 2, xi))),
            ("N²(X,Y)", self.n2()),
            ("dF(X,Y,ξ)", table_form(&dxi)),
            ("-dF(φX,φY,ξ)", table_form(&slot(&slot(&dxi, 0, p), 1, p)).scale(&qi(-1))),
        ];
        let chain_residual =
            members.windows(2).map(|w| (&w[0].1 - &w[1].1).max_abs()).max().unwrap_or_else(Rational::zero);
        let lc = self.model.levi_civita();
        let geodesic = lc.apply(xi, xi).iter().map(Signed::abs).max().unwrap_or_else(Rational::zero);
        let xi_d_eta = self.d_eta().interior(xi).max_abs();
        Ok(ChainReport { members, chain_residual, geodesic_residual: geodesic.max(xi_d_eta) })
    }

    /// `ϱ^∇`, `ω^∇` and `λ^∇` of the connection with torsion `t`.
    pub fn ricci_forms(&self, t: &Form) -> Result<RicciForms, AcsError> {
        RicciForms::compute(&self.model, &self.phi, t, TraceKind::Contact)
    }

    /// `ϱ^∇(X,Y) = Ric^∇(X,φY) - (∇_X ω^∇)(Y) + ¼λ^∇(X,Y)`.
    pub fn ricci_form_identity(&self, t: &Form) -> Result<IdentityResidual, AcsError> {
        let rf = self.ricci_forms(t)?;
        Ok(IdentityResidual {
            id: "contact-ricci-form",
            statement: "ϱ^∇(X,Y) = Ric^∇(X,φY) - (∇_X ω^∇)(Y) + ¼λ^∇(X,Y)",
            residual: rf.identity_residual(&self.phi, TraceKind::Contact),
        })
    }

    /// The Tanno deformation `φ, a²ξ, a⁻²η, a⁻²g + (a⁻⁴ - a⁻²)η ⊗ η`,
    /// written in the new orthonormal frame `a e_i` (horizontal), `a² ξ`.
    /// Requires `ξ` to be a frame vector; coefficients carrying an odd power
    /// of `a` need `a` itself to be rational.
    pub fn tanno(&self, a2: &Rational) -> Result<AlmostContact, AcsError> {
        if !self.is_sasakian() {
            return Err(AcsError::NotSasakian);
        }
        if !a2.is_positive() {
            return Err(AcsError::BadDeformation(format!("a² = {a2} is not positive")));
        }
        let n = self.dim();
        let k = (0..n)
            .find(|&i| self.xi == basis_vector(n, i + 1))
            .ok_or_else(|| AcsError::BadDeformation("ξ is not a frame vector".into()))?;
        let a = rational_sqrt(a2);
        let weight = |i: usize| if i == k { 2 } else { 1 };
        let power = |e: i64| -> Result<Rational, AcsError> {
            if e % 2 == 0 {
                Ok(pow(a2, e / 2))
            } else {
                let a = a
                    .clone()
                    .ok_or_else(|| AcsError::BadDeformation(format!("odd power of a with irrational a, a² = {a2}")))?;
                Ok(pow(&a, e))
            }
        };
        let mut de = Vec::with_capacity(n);
        for m in 0..n {
            let mut f = Form::zero(n);
            for (ix, c) in self.model.de(m + 1).terms() {
                let e = weight(ix[0] - 1) + weight(ix[1] - 1) - weight(m);
                f += &Form::term(n, &ix, &c * power(e)?);
            }
            de.push(f);
        }
        let label = format!("{}-tanno({a2})", self.model.label());
        let model = LieModel::new(label, n, de)?;
        AlmostContact::new(model, self.xi.clone(), self.phi.clone())
    }

    /// The Ricci conditions for `Σ_0`/`Σ_k` parallel spinors on a Sasakian
    /// structure, with the torsion contractions they rest on.
    pub fn sasakian_ricci(&self) -> Result<SasakianRicci, AcsError> {
        if !self.is_sasakian() {
            return Err(AcsError::NotSasakian);
        }
        let n = self.dim();
        let k = qi(self.k() as i64);
        let t = self.torsion()?;
        let conn = self.model.with_torsion(&t)?;
        let ric_nabla = self.model.curvature(&conn).ric;
        let ric_g = self.model.curvature(&self.model.levi_civita()).ric;
        let g = Tensor::diag(&vec![qi(1); n]);
        let ee = outer(&vector_table(&self.xi), &vector_table(&self.xi));
        let horizontal = g.sub(&ee);
        let tt = form_table(&t, 3);
        let contraction = Tensor::from_fn(n, 2, |ix| {
            let mut s = Rational::zero();
            for i in 0..n {
                for m in 0..n {
                    s += &tt[[ix[0], i, m]] * &tt[[ix[1], i, m]];
                }
            }
            s
        });
        let km1 = &k - qi(1);
        let expected_tt = g.scale(&qi(8)).add(&ee.scale(&(&km1 * qi(8))));
        let target_nabla = horizontal.scale(&(&km1 * qi(4)));
        let target_g = g.scale(&((&k * qi(2) - qi(1)) * qi(2))).sub(&ee.scale(&(&km1 * qi(2))));
        let rf = self.ricci_forms(&t)?;
        Ok(SasakianRicci {
            k: self.k(),
            tt_residual: diff(&contraction, &expected_tt),
            omega_parallel: (1..=n).all(|i| conn.derivative(i, &rf.omega).is_zero()),
            torsion_parallel: conn.is_parallel(&t),
            lambda: rf.lambda.clone(),
            fundamental: self.fundamental_form(),
            nabla_condition: ric_nabla == target_nabla,
            riemannian_condition: ric_g == target_g,
            ric_nabla,
            ric_g,
        })
    }
}

/// Members of the chain of equal 2-forms for a structure with skew `N` and
/// Killing `ξ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainReport {
    pub members: Vec<(&'static str, Form)>,
    /// Largest difference between consecutive members.
    pub chain_residual: Rational,
    /// Largest entry of `∇^g_ξ ξ` and `ξ ⌟ dη`.
    pub geodesic_residual: Rational,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.chain_residual.is_zero() && self.geodesic_residual.is_zero()
    }

    pub fn common_value(&self) -> &Form {
        &self.members[0].1
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SasakianRicci {
    pub k: usize,
    /// `Σ g(T(X,e_i), T(Y,e_i)) - (8g + 8(k-1)η ⊗ η)`.
    pub tt_residual: Rational,
    pub omega_parallel: bool,
    pub torsion_parallel: bool,
    pub lambda: Form,
    pub fundamental: Form,
    /// `Ric^∇ = 4(k-1)(g - η ⊗ η)`.
    pub nabla_condition: bool,
    /// `Ric^g = 2(2k-1)g - 2(k-1)η ⊗ η`.
    pub riemannian_condition: bool,
    pub ric_nabla: Tensor,
    pub ric_g: Tensor,
}

impl SasakianRicci {
    /// The coefficient `c` with `λ^∇ = c F`, when proportional.
    pub fn lambda_coefficient(&self) -> Option<Rational> {
        let (ix, f) = self.fundamental.terms().into_iter().next()?;
        let c = self.lambda.eval(&ix) / f;
        (self.lambda == self.fundamental.scale(&c)).then_some(c)
    }
}

pub(crate) fn uniqueness_rank(n: usize, conditions: impl Fn(&Matrix<Rational>) -> Vec<Rational>) -> (usize, usize) {
    let blades = exalg::ascending(n, 3);
    let columns: Vec<Vec<Rational>> = blades
        .iter()
        .map(|b| {
            let t = Form::blade(n, b);
            let mut col = Vec::new();
            for x in 1..=n {
                let tx = t.interior_e(x);
                let a = Matrix::from_fn(n, n, |k, j| tx.eval(&[j + 1, k + 1]));
                col.extend(conditions(&a));
            }
            col
        })
        .collect();
    (Matrix::from_columns(&columns).rank_fraction_free(), blades.len())
}

fn pow(base: &Rational, e: i64) -> Rational {
    let mut out = qi(1);
    for _ in 0..e.unsigned_abs() {
        out *= base;
    }
    if e < 0 {
        q(1, 1) / out
    } else {
        out
    }
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    let root = |n: &ratlin::BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(Rational::new(root(r.numer())?, root(r.denom())?))
}
