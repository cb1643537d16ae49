//! The subcommands, each producing the text to print.

use clifford::{eigenvalues, GammaRep};
use exalg::Form;
use liegeom::Connection;
use ratlin::Matrix;

use crate::modelfile::ModelFile;
use crate::registry::{all_models, lookup, Entry, Structure};
use crate::report::Report;
use crate::suites::{self, diag_string, spectrum_string, tensor_string};
use crate::CliError;

pub fn models_list() -> Result<String, CliError> {
    let mut out = String::new();
    for e in all_models()? {
        out.push_str(&suites::describe_entry(&e));
        out.push('\n');
    }
    Ok(out)
}

pub fn models_show(name: &str) -> Result<String, CliError> {
    Ok(ModelFile::from_entry(&lookup(name)?).to_json() + "\n")
}

pub fn torsion(name: &str) -> Result<String, CliError> {
    let e = lookup(name)?;
    Ok(format!("T = {}\n", e.characteristic_torsion()?))
}

fn matrix_string(m: &Matrix<ratlin::Rational>) -> String {
    let n = m.rows();
    let is_diag = (0..n).all(|i| (0..n).all(|j| i == j || m[(i, j)] == ratlin::Rational::from_integer(0.into())));
    if is_diag {
        return diag_string(&(0..n).map(|i| m[(i, i)].clone()).collect::<Vec<_>>());
    }
    let rows: Vec<String> = (0..n).map(|i| suites::tuple_string(m.row(i))).collect();
    format!("[{}]", rows.join(", "))
}

fn connection(e: &Entry) -> Result<(Form, Connection), CliError> {
    let t = e.characteristic_torsion()?;
    let conn = e.model.with_torsion(&t)?;
    Ok((t, conn))
}

pub fn ricci(name: &str) -> Result<String, CliError> {
    let e = lookup(name)?;
    let (t, conn) = connection(&e)?;
    let cur = e.model.curvature(&conn);
    let lc = e.model.curvature(&e.model.levi_civita());
    let mut out = format!("T = {t}\n");
    out.push_str(&format!("Ric^∇ = {}\n", tensor_string(&cur.ric)));
    out.push_str(&format!("Scal^∇ = {}\n", cur.scal));
    out.push_str(&format!("Ric^g = {}\n", tensor_string(&lc.ric)));
    out.push_str(&format!("Scal^g = {}\n", lc.scal));
    if let Structure::G2(s) = &e.structure {
        let via = s.ricci_via_dt(&t)?;
        let agree = via == cur.ric_matrix();
        out.push_str(&format!(
            "Ric^∇ from dT = {}  ({})\n",
            matrix_string(&via),
            if agree { "agrees" } else { "DIFFERS" }
        ));
    }
    Ok(out)
}

pub fn decompose(name: &str, expr: &str) -> Result<String, CliError> {
    let e = lookup(name)?;
    let Structure::G2(s) = &e.structure else {
        return Err(CliError::Input(format!("model `{name}` carries no G2-structure")));
    };
    let a = Form::parse(7, expr)?;
    let form = s.form();
    match a.degree() {
        Some(2) => {
            let (p7, p14) = form.project2(&a)?;
            Ok(format!("part7 = {p7}\npart14 = {p14}\n"))
        }
        Some(3) => {
            let p = form.project3(&a)?;
            Ok(format!("part1 = {}\npart7 = {}\npart27 = {}\n", p.one, p.seven, p.twenty_seven))
        }
        _ => Err(CliError::Input("decompose expects a homogeneous 2-form or 3-form".into())),
    }
}

pub fn spin_eig(dim: usize, expr: &str) -> Result<String, CliError> {
    let rep = GammaRep::new(dim)?;
    let a = Form::parse(dim, expr)?;
    let act = rep.try_act_form(&a)?;
    Ok(spectrum_string(&eigenvalues(&act)) + "\n")
}

pub fn contact_report(name: &str) -> Result<Report, CliError> {
    let e = lookup(name)?;
    let Structure::Contact(s) = &e.structure else {
        return Err(CliError::Input(format!("model `{name}` carries no almost contact metric structure")));
    };
    let mut r = Report::new(format!("contact:{name}"));
    suites::contact_checks(&mut r, name, s);
    Ok(r)
}

pub fn hermitian_report(name: &str) -> Result<Report, CliError> {
    let e = lookup(name)?;
    let Structure::Hermitian(s) = &e.structure else {
        return Err(CliError::Input(format!("model `{name}` carries no almost hermitian structure")));
    };
    let mut r = Report::new(format!("hermitian:{name}"));
    suites::hermitian_checks(&mut r, name, s);
    Ok(r)
}
