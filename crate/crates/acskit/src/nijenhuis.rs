use exalg::Form;
use liegeom::LieModel;
use ratlin::{Matrix, Rational, Tensor, Zero};

use crate::tables::{alternation_defect, table_form};

/// The Nijenhuis tensor as a `(0,3)` table `N(X,Y,Z) = g(N(X,Y), Z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct NijTensor {
    table: Tensor,
    skew: bool,
}

impl NijTensor {
    pub(crate) fn new(table: Tensor) -> Self {
        let skew = alternation_defect(&table).is_zero();
        NijTensor { table, skew }
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    /// 0-based table.
    pub fn table(&self) -> &Tensor {
        &self.table
    }

    /// `N(e_x, e_y, e_z)` for 1-based indices.
    pub fn eval(&self, x: usize, y: usize, z: usize) -> Rational {
        self.table[[x - 1, y - 1, z - 1]].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_zero()
    }

    /// Totally skew-symmetric.
    pub fn is_skew(&self) -> bool {
        self.skew
    }

    /// Largest `|N(X,Y,Z) + N(X,Z,Y)|` or `|N(X,Y,Z) + N(Y,X,Z)|` over the frame.
    pub fn skew_defect(&self) -> Rational {
        alternation_defect(&self.table)
    }

    /// The 3-form when `N` is totally skew.
    pub fn to_form(&self) -> Option<Form> {
        self.skew.then(|| table_form(&self.table))
    }
}

/// `[aX, aY] + a²[X, Y] - a[aX, Y] - a[X, aY]` on basis vectors, plus the
/// optional `dη(X, Y) ξ` term, paired with `e_z`.
pub(crate) fn nijenhuis_table(model: &LieModel, a: &Matrix<Rational>, contact: Option<(&Form, &[Rational])>) -> Tensor {
    let n = model.dim();
    let a2 = a * a;
    let cols: Vec<Vec<Rational>> = (0..n).map(|j| a.column(j)).collect();
    let basis: Vec<Vec<Rational>> = (1..=n).map(|i| exalg::basis_vector(n, i)).collect();
    let mut rows: Vec<Vec<Vec<Rational>>> = vec![vec![Vec::new(); n]; n];
    for x in 0..n {
        for y in 0..n {
            let mut v = model.bracket(&cols[x], &cols[y]);
            let b = model.bracket(&basis[x], &basis[y]);
            let t1 = a2.mul_vec(&b);
            let t2 = a.mul_vec(&model.bracket(&cols[x], &basis[y]));
            let t3 = a.mul_vec(&model.bracket(&basis[x], &cols[y]));
            for k in 0..n {
                v[k] = &v[k] + &t1[k] - &t2[k] - &t3[k];
            }
            if let Some((d_eta, xi)) = contact {
                let c = d_eta.eval(&[x + 1, y + 1]);
                for k in 0..n {
                    v[k] += &c * &xi[k];
                }
            }
            rows[x][y] = v;
        }
    }
    Tensor::from_fn(n, 3, |ix| rows[ix[0]][ix[1]][ix[2]].clone())
}
