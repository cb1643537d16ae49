use exalg::{sigma_t, Form};
use ratlin::{q, Rational, Tensor, Zero};

use crate::{LieError, LieModel};

/// Largest absolute entry of `lhs - rhs` for one identity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityResidual {
    pub id: &'static str,
    pub statement: &'static str,
    pub residual: Rational,
}

impl IdentityResidual {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

fn max_abs_diff(n: usize, rank: usize, mut f: impl FnMut(&[usize]) -> Rational) -> Rational {
    Tensor::from_fn(n, rank, |ix| f(ix)).max_abs()
}

/// Evaluates the general identities relating a metric connection with skew
/// torsion `T` to the Levi-Civita connection, on every index tuple.
pub fn verify_section2(model: &LieModel, t: &Form) -> Result<Vec<IdentityResidual>, LieError> {
    let n = model.dim();
    let conn = model.with_torsion(t)?;
    let lc = model.levi_civita();
    let rn = model.curvature(&conn);
    let rg = model.curvature(&lc);
    let dt = model.d(t);
    let sigma = sigma_t(t).map_err(|_| LieError::BadTorsion { dim: n })?;
    let delta_g = lc.codiff(t);
    let delta_n = conn.codiff(t);
    let nt = conn.derivative_table3(t);
    let tt = Tensor::from_fn(n, 3, |ix| t.eval(&[ix[0] + 1, ix[1] + 1, ix[2] + 1]));
    let e4 = |f: &Form, ix: &[usize]| f.eval(&[ix[0] + 1, ix[1] + 1, ix[2] + 1, ix[3] + 1]);
    let e2 = |f: &Form, x: usize, y: usize| f.eval(&[x + 1, y + 1]);
    let tdot = |a: usize, b: usize, c: usize, d: usize| -> Rational {
        (0..n).fold(Rational::zero(), |s, m| s + &tt[[a, b, m]] * &tt[[c, d, m]])
    };
    let half = q(1, 2);
    let quarter = q(1, 4);

    let mut out = Vec::with_capacity(6);

    out.push(IdentityResidual {
        id: "codifferentials",
        statement: "δ^g(T) = δ^∇(T)",
        residual: (&delta_g - &delta_n).max_abs(),
    });

    out.push(IdentityResidual {
        id: "dT",
        statement: "dT(X,Y,Z,V) = σ_XYZ (∇_X T)(Y,Z,V) - (∇_V T)(X,Y,Z) + 2σ^T(X,Y,Z,V)",
        residual: max_abs_diff(n, 4, |ix| {
            let (x, y, z, v) = (ix[0], ix[1], ix[2], ix[3]);
            let rhs = &nt[[x, y, z, v]] + &nt[[y, z, x, v]] + &nt[[z, x, y, v]] - &nt[[v, x, y, z]]
                + e4(&sigma, ix) * q(2, 1);
            e4(&dt, ix) - rhs
        }),
    });

    out.push(IdentityResidual {
        id: "curvature",
        statement: "R^g = R^∇ - ½(∇_X T)(Y,Z,V) + ½(∇_Y T)(X,Z,V) - ¼g(T(X,Y),T(Z,V)) - ¼σ^T",
        residual: max_abs_diff(n, 4, |ix| {
            let (x, y, z, v) = (ix[0], ix[1], ix[2], ix[3]);
            let rhs = &rn.r[[x, y, z, v]] - &nt[[x, y, z, v]] * &half + &nt[[y, x, z, v]] * &half
                - tdot(x, y, z, v) * &quarter
                - e4(&sigma, ix) * &quarter;
            &rg.r[[x, y, z, v]] - rhs
        }),
    });

    out.push(IdentityResidual {
        id: "bianchi",
        statement: "σ_XYZ R^∇(X,Y,Z,V) = dT - σ^T + (∇_V T)(X,Y,Z)",
        residual: max_abs_diff(n, 4, |ix| {
            let (x, y, z, v) = (ix[0], ix[1], ix[2], ix[3]);
            let lhs = &rn.r[[x, y, z, v]] + &rn.r[[y, z, x, v]] + &rn.r[[z, x, y, v]];
            lhs - (e4(&dt, ix) - e4(&sigma, ix) + &nt[[v, x, y, z]])
        }),
    });

    out.push(IdentityResidual {
        id: "ricci",
        statement: "Ric^g(X,Y) = Ric^∇(X,Y) + ½δ^g(T)(X,Y) - ¼Σ g(T(e_i,X),T(Y,e_i))",
        residual: max_abs_diff(n, 2, |ix| {
            let (x, y) = (ix[0], ix[1]);
            let contraction = (0..n).fold(Rational::zero(), |s, i| s + tdot(i, x, y, i));
            let rhs = &rn.ric[[x, y]] + e2(&delta_g, x, y) * &half - contraction * &quarter;
            &rg.ric[[x, y]] - rhs
        }),
    });

    out.push(IdentityResidual {
        id: "ricci-skew",
        statement: "Ric^∇(X,Y) - Ric^∇(Y,X) = -δ^g(T)(X,Y)",
        residual: max_abs_diff(n, 2, |ix| {
            let (x, y) = (ix[0], ix[1]);
            &rn.ric[[x, y]] - &rn.ric[[y, x]] + e2(&delta_g, x, y)
        }),
    });

    Ok(out)
}
