//! Built-in models and models loaded from `SKEWTOR_MODEL_PATH`.

use std::path::{Path, PathBuf};

use acskit::{fixtures, AlmostContact, AlmostHermitian};
use exalg::Form;
use g2kit::G2Structure;
use liegeom::LieModel;

use crate::modelfile::ModelFile;
use crate::CliError;

pub const MODEL_PATH_VAR: &str = "SKEWTOR_MODEL_PATH";

#[derive(Debug, Clone)]
pub enum Structure {
    G2(G2Structure),
    Contact(AlmostContact),
    Hermitian(AlmostHermitian),
    None,
}

#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub notes: String,
    pub model: LieModel,
    pub structure: Structure,
}

impl Entry {
    pub fn kind(&self) -> &'static str {
        match self.structure {
            Structure::G2(_) => "g2",
            Structure::Contact(_) => "contact",
            Structure::Hermitian(_) => "hermitian",
            Structure::None => "none",
        }
    }

    pub fn dim(&self) -> usize {
        self.model.dim()
    }

    /// Torsion of the characteristic connection; zero for a bare model.
    pub fn characteristic_torsion(&self) -> Result<Form, CliError> {
        Ok(match &self.structure {
            Structure::G2(s) => s.torsion_form()?,
            Structure::Contact(s) => s.torsion()?,
            Structure::Hermitian(s) => s.torsion()?,
            Structure::None => Form::zero(self.dim()),
        })
    }
}

fn entry(name: &str, notes: &str, model: LieModel, structure: Structure) -> Entry {
    Entry { name: name.into(), notes: notes.into(), model, structure }
}

fn g2(name: &str, notes: &str, model: LieModel) -> Entry {
    let s = G2Structure::canonical(model.clone()).expect("canonical G2 form");
    entry(name, notes, model, Structure::G2(s))
}

fn contact(name: &str, notes: &str, s: AlmostContact) -> Entry {
    entry(name, notes, s.model().clone(), Structure::Contact(s))
}

fn hermitian(name: &str, notes: &str, s: AlmostHermitian) -> Entry {
    entry(name, notes, s.model().clone(), Structure::Hermitian(s))
}

pub fn heis7() -> LieModel {
    LieModel::from_exprs("heis7", 7, &[(4, "e16 + e37"), (5, "e13 - e67")]).expect("heis7")
}

pub fn solv7() -> LieModel {
    LieModel::from_exprs("solv7", 7, &[(3, "e13 - e24"), (4, "e23 + e14"), (5, "-e15 + e26"), (6, "-e25 - e16")])
        .expect("solv7")
}

/// `de_k = a_{k-1} e1 ∧ e_k` for `k = 2..7`.
fn diagonal7(label: &str, a: [i64; 6]) -> LieModel {
    let ex: Vec<(usize, String)> = (2..=7).map(|k| (k, format!("{}*e1^e{}", a[k - 2], k))).collect();
    let refs: Vec<(usize, &str)> = ex.iter().map(|(k, s)| (*k, s.as_str())).collect();
    LieModel::from_exprs(label, 7, &refs).expect("diagonal model")
}

/// The embedded models, in a fixed order.
pub fn builtin() -> Vec<Entry> {
    vec![
        g2(
            "heis7",
            "7-dim Heisenberg-type algebra, de4 = e16 + e37, de5 = e13 - e67; cocalibrated of pure type Λ³₂₇",
            heis7(),
        ),
        g2(
            "solv7",
            "solvable algebra, de3 = e13 - e24, de4 = e23 + e14, de5 = -e15 + e26, de6 = -e25 - e16; cocalibrated",
            solv7(),
        ),
        g2("hyp7", "de_k = e1 ∧ e_k (k ≥ 2): the G2-structure has vector type β = 4e1", diagonal7("hyp7", [1; 6])),
        g2(
            "twist7",
            "de_k = (k-1) e1 ∧ e_k: nonzero Λ²₁₄ component, no characteristic connection",
            diagonal7("twist7", [1, 2, 3, 4, 5, 6]),
        ),
        g2("abelian7", "abelian; the G2-structure is parallel", LieModel::abelian(7)),
        contact("heis5", "5-dim Heisenberg algebra, dη = 2(e12 + e34); Sasakian", fixtures::heis5()),
        contact("su2", "su(2) with de1 = 2e23, de2 = 2e31, de3 = 2e12, ξ = e3; Sasakian", fixtures::su2()),
        contact("r-kt", "ℝ × Kodaira–Thurston with ξ = e5: normal, not contact metric", fixtures::r_kt()),
        contact("heis5-twisted", "de5 = e13 - e24: Nijenhuis tensor not skew", fixtures::heis5_twisted()),
        contact("su2-r2", "su(2) ⊕ ℝ² with ξ = e5: skew nonzero Nijenhuis tensor, Killing ξ", fixtures::su2_r2()),
        contact(
            "abelian5",
            "abelian with the standard almost contact structure",
            fixtures::abelian_contact(5).expect("abelian"),
        ),
        hermitian("kt", "Kodaira–Thurston, de4 = e12, integrable J", fixtures::kt_hermitian()),
        hermitian(
            "kt-ak",
            "Kodaira–Thurston with Ω = e13 + e24: almost Kähler, not Kähler",
            fixtures::kt_almost_kaehler(),
        ),
        hermitian(
            "solv6",
            "first six coframe elements of solv7 with Je1 = e2, Je3 = e4, Je5 = e6",
            fixtures::solv6_hermitian(),
        ),
        hermitian(
            "abelian6",
            "abelian with the standard hermitian structure",
            fixtures::abelian_hermitian(6).expect("abelian"),
        ),
    ]
}

/// Directories listed in `SKEWTOR_MODEL_PATH`.
pub fn model_dirs() -> Vec<PathBuf> {
    std::env::var_os(MODEL_PATH_VAR).map(|v| std::env::split_paths(&v).collect()).unwrap_or_default()
}

/// All `*.json` model files in the given directories, sorted by path.
pub fn load_dir_models(dirs: &[PathBuf]) -> Result<Vec<Entry>, CliError> {
    let mut files = Vec::new();
    for dir in dirs {
        let Ok(rd) = std::fs::read_dir(dir) else { continue };
        for e in rd.flatten() {
            let p = e.path();
            if p.extension().is_some_and(|x| x == "json") {
                files.push(p);
            }
        }
    }
    files.sort();
    files.iter().map(|p| load_file(p)).collect()
}

pub fn load_file(path: &Path) -> Result<Entry, CliError> {
    let err = |message: String| CliError::ModelFile { path: path.display().to_string(), message };
    let text = std::fs::read_to_string(path).map_err(|e| err(e.to_string()))?;
    let file: ModelFile = serde_json::from_str(&text).map_err(|e| err(e.to_string()))?;
    file.into_entry().map_err(err)
}

/// Built-in models followed by those found on the model path.
pub fn all_models() -> Result<Vec<Entry>, CliError> {
    let mut v = builtin();
    v.extend(load_dir_models(&model_dirs())?);
    Ok(v)
}

/// Built-in models shadow model files of the same name.
pub fn lookup(name: &str) -> Result<Entry, CliError> {
    if let Some(e) = builtin().into_iter().find(|e| e.name == name) {
        return Ok(e);
    }
    load_dir_models(&model_dirs())?
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CliError::UnknownModel(name.into()))
}
