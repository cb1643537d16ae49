use exalg::{ascending, basis_vector, Form};
use ratlin::{exact_roots, q, qi, Gauss, Matrix, Poly, Rational, Signed, Zero};

use crate::{EquivarError, G2Algebra, Spaces, SparseTensor, TensorSpace};

/// `C = Σ_a ρ(ξ_a)² / |ξ_a|²` on a g₂-invariant space.
pub fn casimir(algebra: &G2Algebra, space: &TensorSpace) -> Result<Matrix<Rational>, EquivarError> {
    let n = space.dim();
    let mut c = Matrix::zeros(n, n);
    for (xi, w) in algebra.matrices().iter().zip(algebra.casimir_weights()) {
        let r = space.rep_matrix(xi)?;
        c = &c + &(&r * &r).scale(&w);
    }
    Ok(c)
}

/// Largest entry of `[C, ρ(ξ)]` over the generators.
pub fn casimir_commutator_residual(
    algebra: &G2Algebra,
    space: &TensorSpace,
    c: &Matrix<Rational>,
) -> Result<Rational, EquivarError> {
    let mut worst = Rational::zero();
    for xi in algebra.matrices() {
        worst = worst.max(c.commutator(&space.rep_matrix(xi)?).max_abs());
    }
    Ok(worst)
}

/// Casimir eigenvalues of the calibration irreducibles, each computed on an
/// explicit realization inside Λ*(ℝ⁷).
#[derive(Debug, Clone, PartialEq)]
pub struct Calibration {
    /// `(label, dimension, eigenvalue)`.
    pub entries: Vec<(&'static str, usize, Rational)>,
}

impl Calibration {
    pub fn compute(s: &Spaces) -> Result<Self, EquivarError> {
        let forms = |fs: &[Form]| fs.iter().map(SparseTensor::from_form).collect::<Vec<_>>();
        let trivial = TensorSpace::span("Λ³₁", 3, &forms(&[s.form.omega().clone()]));
        let seven =
            TensorSpace::span("Λ¹", 1, &(1..=7).map(|i| SparseTensor::vector(&basis_vector(7, i))).collect::<Vec<_>>());
        let fourteen = TensorSpace::span("g2", 2, &forms(s.algebra.basis()));
        let twenty_seven = TensorSpace::span("Λ³₂₇", 3, &forms(&s.form.lambda27_basis()));
        let mut entries = Vec::new();
        for (label, space) in [("1", trivial), ("7", seven), ("14", fourteen), ("27", twenty_seven)] {
            let c = casimir(&s.algebra, &space)?;
            let value = c[(0, 0)].clone();
            if c != Matrix::scalar(space.dim(), value.clone()) {
                return Err(EquivarError::NotIrreducible(label.into()));
            }
            entries.push((label, space.dim(), value));
        }
        Ok(Calibration { entries })
    }

    fn lookup(&self, value: &Rational) -> Option<(&'static str, usize)> {
        self.entries.iter().find(|(_, _, v)| v == value).map(|(l, d, _)| (*l, *d))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IsotypicComponent {
    pub eigenvalue: Rational,
    /// Exact dimension `n - rank(C - c I)`.
    pub dim: usize,
    /// Irreducible label, or `UNMATCHED`.
    pub label: String,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IsotypicReport {
    pub space: String,
    pub dim: usize,
    pub components: Vec<IsotypicComponent>,
    /// Largest entry of `[C, ρ(ξ)]`.
    pub commutator_residual: Rational,
}

impl IsotypicReport {
    pub fn total_dim(&self) -> usize {
        self.components.iter().map(|c| c.dim).sum()
    }

    pub fn complete(&self) -> bool {
        self.total_dim() == self.dim && self.components.iter().all(|c| c.label != "UNMATCHED")
    }

    /// Irreducible labels repeated by multiplicity, sorted by dimension.
    pub fn irreducibles(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .components
            .iter()
            .flat_map(|c| std::iter::repeat_n(c.label.parse::<usize>().unwrap_or(0), c.multiplicity))
            .collect();
        v.sort_unstable();
        v
    }
}

/// Eigenvalues of a diagonalizable rational matrix whose spectrum is
/// rational: least common multiple of Krylov minimal polynomials of basis
/// vectors, until the eigenspace dimensions add up.
fn rational_spectrum(c: &Matrix<Rational>) -> Result<Vec<(Rational, usize)>, EquivarError> {
    let n = c.rows();
    let mut minimal: Poly<Rational> = Poly::one();
    let mut found: Vec<(Rational, usize)> = Vec::new();
    let probes = std::iter::once((0..n).map(|i| qi(i as i64 + 1)).collect::<Vec<_>>())
        .chain((0..n).map(|i| (0..n).map(|j| if i == j { qi(1) } else { qi(0) }).collect()));
    for v in probes {
        let p = Poly::krylov_minimal(c, &v);
        if minimal.div_rem(&p).1.is_zero() && p.div_rem(&minimal).1.is_zero() {
            continue;
        }
        let g = minimal.gcd(&p);
        minimal = minimal.mul(&p).div_rem(&g).0.monic();
        let pg = Poly::new(minimal.coeffs().iter().map(|x| Gauss::new(x.clone(), Rational::zero())).collect());
        let roots = exact_roots(&pg);
        if !roots.splits() {
            return Err(EquivarError::IrrationalSpectrum);
        }
        found.clear();
        for (z, _) in roots.roots {
            if !z.im.is_zero() {
                return Err(EquivarError::IrrationalSpectrum);
            }
            let shifted = c - &Matrix::scalar(n, z.re.clone());
            found.push((z.re, n - shifted.rank_fraction_free()));
        }
        if found.iter().map(|(_, d)| d).sum::<usize>() == n {
            return Ok(found);
        }
    }
    Err(EquivarError::NotDiagonalizable)
}

/// Splits a g₂-invariant space into Casimir eigenspaces and names them by
/// the calibration table; eigenvalues outside it are named `64` or `77` when
/// their eigenspace has exactly that dimension.
pub fn casimir_decompose(s: &Spaces, cal: &Calibration, space: &TensorSpace) -> Result<IsotypicReport, EquivarError> {
    let c = casimir(&s.algebra, space)?;
    let commutator_residual = casimir_commutator_residual(&s.algebra, space, &c)?;
    let mut components: Vec<IsotypicComponent> = rational_spectrum(&c)?
        .into_iter()
        .map(|(eigenvalue, dim)| {
            let (label, multiplicity) = match cal.lookup(&eigenvalue) {
                Some((l, d)) if dim % d == 0 => (l.to_string(), dim / d),
                Some(_) => ("UNMATCHED".to_string(), 0),
                None if dim == 64 || dim == 77 => (dim.to_string(), 1),
                None => ("UNMATCHED".to_string(), 0),
            };
            IsotypicComponent { eigenvalue, dim, label, multiplicity }
        })
        .collect();
    components.sort_by(|a, b| a.eigenvalue.cmp(&b.eigenvalue));
    Ok(IsotypicReport { space: space.label().to_string(), dim: space.dim(), components, commutator_residual })
}

/// Λᵖ(ℝ⁷) as a tensor space.
pub fn exterior_space(p: usize) -> TensorSpace {
    let span: Vec<SparseTensor> =
        ascending(7, p).iter().map(|ix| SparseTensor::from_form(&Form::blade(7, ix))).collect();
    TensorSpace::span(format!("Λ{p}"), p, &span)
}

/// The m-projection `⅓ Σ (e_i ⌟ ω³, α)(e_i ⌟ ω³)` is idempotent and
/// complementary to `pr_g₂`; returns the largest violation over Λ².
pub fn projection_residual(s: &Spaces) -> Rational {
    let mut worst = Rational::zero();
    for ix in ascending(7, 2) {
        let a = Form::blade(7, &ix);
        let m = s.form.pr_m(&a);
        let g = s.form.pr_g2(&a);
        let r = (&s.form.pr_m(&m) - &m).max_abs().max(s.form.pr_m(&g).max_abs()).max(m.inner(&g).abs());
        worst = worst.max(r);
        if !G2Algebra::contains(&g) {
            worst = worst.max(q(1, 1));
        }
    }
    worst
}
