//! JSON model files.
//!
//! ```json
//! {
//!   "name": "heis5",
//!   "notes": "",
//!   "dim": 5,
//!   "coframe_d": [[5, [[[1, 2], "2"], [[3, 4], "2"]]]],
//!   "structure": {"contact": {"xi": 5, "eta": [[[5], "1"]], "phi": [["0", "1", ...], ...]}}
//! }
//! ```
//!
//! Forms are lists of `(blade, coefficient)` pairs with 1-based increasing or
//! unordered indices and coefficients as `"p/q"` strings. Matrices are listed
//! by rows; column `j` is the image of `e_j`.

use acskit::{AlmostContact, AlmostHermitian};
use exalg::{basis_vector, Form};
use g2kit::{G2Form, G2Structure};
use liegeom::LieModel;
use ratlin::{parse_rational, Matrix, Rational};
use serde::{Deserialize, Serialize};

use crate::registry::{Entry, Structure};

pub type Terms = Vec<(Vec<usize>, String)>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelFile {
    pub name: String,
    #[serde(default)]
    pub notes: String,
    pub dim: usize,
    /// `(k, de_k)`; unlisted differentials are zero.
    pub coframe_d: Vec<(usize, Terms)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureSpec {
    G2 { omega: Terms },
    Contact { xi: usize, eta: Terms, phi: Vec<Vec<String>> },
    Hermitian { j: Vec<Vec<String>> },
}

pub fn form_terms(f: &Form) -> Terms {
    f.terms().into_iter().map(|(ix, c)| (ix, c.to_string())).collect()
}

pub fn terms_form(dim: usize, terms: &Terms) -> Result<Form, String> {
    let mut f = Form::zero(dim);
    for (ix, c) in terms {
        if let Some(&i) = ix.iter().find(|&&i| i == 0 || i > dim) {
            return Err(format!("index {i} out of range 1..={dim}"));
        }
        let c = parse_rational(c).map_err(|e| format!("coefficient `{c}`: {e}"))?;
        f += &Form::term(dim, ix, c);
    }
    Ok(f)
}

fn matrix_rows(m: &Matrix<Rational>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

fn rows_matrix(dim: usize, rows: &[Vec<String>]) -> Result<Matrix<Rational>, String> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(format!("matrix must be {dim} x {dim}"));
    }
    let mut parsed = Vec::with_capacity(dim);
    for r in rows {
        let row: Result<Vec<Rational>, String> =
            r.iter().map(|c| parse_rational(c).map_err(|e| format!("entry `{c}`: {e}"))).collect();
        parsed.push(row?);
    }
    Ok(Matrix::from_rows(parsed))
}

impl ModelFile {
    pub fn into_entry(self) -> Result<Entry, String> {
        let n = self.dim;
        if !(1..=exalg::MAX_DIM).contains(&n) {
            return Err(format!("dimension {n} out of range 1..={}", exalg::MAX_DIM));
        }
        let mut de = vec![Form::zero(n); n];
        for (k, terms) in &self.coframe_d {
            if *k == 0 || *k > n {
                return Err(format!("coframe index {k} out of range"));
            }
            de[k - 1] = &de[k - 1] + &terms_form(n, terms)?;
        }
        let model = LieModel::new(self.name.clone(), n, de).map_err(|e| e.to_string())?;
        let structure = match &self.structure {
            None => Structure::None,
            Some(StructureSpec::G2 { omega }) => {
                let form = G2Form::new(terms_form(n, omega)?).map_err(|e| e.to_string())?;
                Structure::G2(G2Structure::new(model.clone(), form).map_err(|e| e.to_string())?)
            }
            Some(StructureSpec::Contact { xi, eta, phi }) => {
                if *xi == 0 || *xi > n {
                    return Err(format!("ξ index {xi} out of range"));
                }
                if terms_form(n, eta)? != Form::blade(n, &[*xi]) {
                    return Err(format!("η must be the metric dual of ξ = e{xi}"));
                }
                let phi = rows_matrix(n, phi)?;
                let s = AlmostContact::new(model.clone(), basis_vector(n, *xi), phi).map_err(|e| e.to_string())?;
                Structure::Contact(s)
            }
            Some(StructureSpec::Hermitian { j }) => {
                let s = AlmostHermitian::new(model.clone(), rows_matrix(n, j)?).map_err(|e| e.to_string())?;
                Structure::Hermitian(s)
            }
        };
        Ok(Entry { name: self.name, notes: self.notes, model, structure })
    }

    pub fn from_entry(e: &Entry) -> ModelFile {
        let n = e.dim();
        let coframe_d = (1..=n).filter(|&k| !e.model.de(k).is_zero()).map(|k| (k, form_terms(e.model.de(k)))).collect();
        let structure = match &e.structure {
            Structure::None => None,
            Structure::G2(s) => Some(StructureSpec::G2 { omega: form_terms(s.omega()) }),
            Structure::Contact(s) => {
                let xi = (1..=n).find(|&k| s.xi() == basis_vector(n, k).as_slice());
                Some(StructureSpec::Contact {
                    xi: xi.expect("ξ is a frame vector"),
                    eta: form_terms(s.eta()),
                    phi: matrix_rows(s.phi()),
                })
            }
            Structure::Hermitian(s) => Some(StructureSpec::Hermitian { j: matrix_rows(s.j()) }),
        };
        ModelFile { name: e.name.clone(), notes: e.notes.clone(), dim: n, coframe_d, structure }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::builtin;

    #[test]
    fn builtin_models_round_trip() {
        for e in builtin() {
            let file = ModelFile::from_entry(&e);
            let back: ModelFile = serde_json::from_str(&file.to_json()).unwrap();
            assert_eq!(back, file);
            let again = back.into_entry().unwrap();
            assert_eq!(again.model.differentials(), e.model.differentials(), "{}", e.name);
            assert_eq!(again.kind(), e.kind());
        }
    }

    #[test]
    fn rejects_jacobi_violation() {
        let file = ModelFile {
            name: "bad".into(),
            notes: String::new(),
            dim: 4,
            coframe_d: vec![(4, vec![(vec![1, 2], "1".into())]), (1, vec![(vec![1, 3], "1".into())])],
            structure: None,
        };
        assert!(file.into_entry().unwrap_err().contains("Jacobi"));
    }

    #[test]
    fn rejects_bad_coefficients_and_indices() {
        let mk = |terms: Terms| ModelFile {
            name: "x".into(),
            notes: String::new(),
            dim: 3,
            coframe_d: vec![(3, terms)],
            structure: None,
        };
        assert!(mk(vec![(vec![1, 4], "1".into())]).into_entry().is_err());
        assert!(mk(vec![(vec![1, 2], "1/0".into())]).into_entry().is_err());
        assert!(mk(vec![(vec![1, 2], "-3/4".into())]).into_entry().is_ok());
    }
}
