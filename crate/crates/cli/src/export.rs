use std::fmt::Write as _;

use cohomology::{poincare_pairing, quantum_c1_matrix, schubert_class, stable_envelope_basis, Flag, QBasis};
use combinatorics::{enumerate_index_sets, IndexSet, Partition};
use exact_algebra::Matrix;
use ktheory::{generate_q_basis, kapranov_basis, satake_exterior_basis, stokes_matrices, ExceptionalBasis, QKind};
use serde::Serialize;
use solutions_numeric::NumericReport;
use thiserror::Error;
use weight_ops::{dynamical_operator, qkz_operator, OperatorMatrix};

use crate::CheckRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Error, PartialEq)]
pub enum ExportError {
    #[error("unknown object id `{0}`")]
    UnknownId(String),
    #[error("{0}")]
    Compute(String),
}

fn compute(e: impl std::fmt::Display) -> ExportError {
    ExportError::Compute(e.to_string())
}

/// Row/column labels: fixed points for operators, positions for bases.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Labels {
    Points(Vec<IndexSet>),
    Names(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixDoc {
    pub object: String,
    pub size: usize,
    pub basis: Labels,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDoc {
    pub fn from_operator(object: impl Into<String>, m: &OperatorMatrix) -> MatrixDoc {
        MatrixDoc { object: object.into(), size: m.size(), basis: Labels::Points(m.basis()), entries: m.entries() }
    }

    pub fn from_matrix(object: impl Into<String>, basis: Labels, m: &Matrix) -> MatrixDoc {
        MatrixDoc { object: object.into(), size: m.rows(), basis, entries: m.to_strings() }
    }

    fn label(&self, i: usize) -> String {
        match &self.basis {
            Labels::Points(p) => p.get(i).map(|s| s.i1.iter().map(|a| a.to_string()).collect::<String>()).unwrap_or_default(),
            Labels::Names(v) => v.get(i).cloned().unwrap_or_default(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} ({} rows)\n", self.object, self.entries.len());
        for (i, row) in self.entries.iter().enumerate() {
            let _ = writeln!(out, "  {:>6} | {}", self.label(i), row.join(" ; "));
        }
        out
    }
}

/// Anything a subcommand prints.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Doc {
    Matrix(MatrixDoc),
    Matrices(Vec<MatrixDoc>),
    Checks(Vec<CheckRecord>),
    Numeric(Vec<NumericReport>),
}

impl Doc {
    pub fn passed(&self) -> bool {
        match self {
            Doc::Checks(c) => c.iter().all(|c| c.passed),
            Doc::Numeric(r) => r.iter().all(|r| r.passed),
            _ => true,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("document serializes");
                s.push('\n');
                s
            }
            Format::Text => match self {
                Doc::Matrix(m) => m.to_text(),
                Doc::Matrices(ms) => ms.iter().map(MatrixDoc::to_text).collect::<Vec<_>>().join("\n"),
                Doc::Checks(cs) => cs
                    .iter()
                    .map(|c| {
                        let tail = if c.detail.is_empty() { String::new() } else { format!(": {}", c.detail) };
                        format!("[{}] {} ({}){tail}\n", if c.passed { "pass" } else { "FAIL" }, c.id, c.anchor)
                    })
                    .collect(),
                Doc::Numeric(rs) => rs
                    .iter()
                    .map(|r| {
                        format!(
                            "[{}] {} ({}): max rel err {:.3e}, tol {:.0e}\n",
                            if r.passed { "pass" } else { "FAIL" },
                            r.identity,
                            r.anchor,
                            r.max_rel_err,
                            r.tol
                        )
                    })
                    .collect(),
            },
        }
    }
}

pub fn checks_doc(suite: &str, checks: Vec<exact_algebra::Check>) -> Doc {
    Doc::Checks(
        checks
            .into_iter()
            .map(|c| CheckRecord { suite: suite.to_string(), id: c.id, anchor: c.anchor, passed: c.passed, detail: c.detail })
            .collect(),
    )
}

pub fn qkz_doc(n: usize, k: usize, a: usize) -> Result<Doc, ExportError> {
    let m = qkz_operator(n, k, a).map_err(compute)?;
    Ok(Doc::Matrix(MatrixDoc::from_operator(format!("qkz K{a} (k={k}, n={n})"), &m)))
}

pub fn dyn_doc(n: usize, k: usize, i: usize) -> Result<Doc, ExportError> {
    let m = dynamical_operator(n, k, i).map_err(compute)?;
    Ok(Doc::Matrix(MatrixDoc::from_operator(format!("dyn X{i} (k={k}, n={n})"), &m)))
}

/// Schubert class as its column of fixed-point restrictions.
pub fn schubert_doc(n: usize, k: usize, lambda: &[usize], opposite: bool) -> Result<Doc, ExportError> {
    let flag = if opposite { Flag::Opposite } else { Flag::Standard };
    let c = schubert_class(&Partition::new(lambda.to_vec()), k, n, flag).map_err(compute)?;
    let entries: Vec<Vec<String>> = c.loc.iter().map(|r| vec![r.to_string()]).collect();
    Ok(Doc::Matrix(MatrixDoc {
        object: format!("schubert {lambda:?} (k={k}, n={n}, {flag:?})"),
        size: entries.len(),
        basis: Labels::Points(c.basis()),
        entries,
    }))
}

pub fn quantum_doc(n: usize, k: usize, bundle: usize, basis: &str) -> Result<Doc, ExportError> {
    let b: QBasis = basis.parse().map_err(compute)?;
    let m = quantum_c1_matrix(k, n, bundle, b).map_err(compute)?;
    let labels = match b {
        QBasis::Stab => Labels::Points(enumerate_index_sets(k, n).map_err(compute)?),
        QBasis::Schubert => Labels::Names(cohomology::schubert_order(k, n).iter().map(|p| format!("{:?}", p.parts())).collect()),
    };
    Ok(Doc::Matrix(MatrixDoc::from_matrix(format!("quantum c1(E{bundle}) (k={k}, n={n}, {basis})"), labels, &m)))
}

/// `η(a, b)` over the chosen basis: `stab` pairs `Stab_I` with `Stab^op_J`,
/// `schubert` pairs standard with opposite Schubert classes.
pub fn pairing_doc(n: usize, k: usize, basis: &str) -> Result<Doc, ExportError> {
    let sets = enumerate_index_sets(k, n).map_err(compute)?;
    let (left, right) = match basis {
        "stab" => stable_envelope_basis(k, n).map_err(compute)?,
        "schubert" => {
            let mk = |f| sets.iter().map(|i| schubert_class(&i.partition(), k, n, f)).collect::<Result<Vec<_>, _>>();
            (mk(Flag::Standard).map_err(compute)?, mk(Flag::Opposite).map_err(compute)?)
        }
        other => return Err(ExportError::UnknownId(format!("pairing basis {other}"))),
    };
    let entries: Vec<Vec<String>> = left.iter().map(|a| right.iter().map(|b| poincare_pairing(a, b).to_string()).collect()).collect();
    Ok(Doc::Matrix(MatrixDoc { object: format!("pairing {basis} (k={k}, n={n})"), size: entries.len(), basis: Labels::Points(sets), entries }))
}

/// Exceptional basis on `G(k,n)`: Kapranov, or the `ϑ`-wedges of a `Q′_ℓ`/`Q″_ℓ` basis.
pub fn exceptional(n: usize, k: usize, basis: &str, ell: i32, twisted: bool) -> Result<ExceptionalBasis, ExportError> {
    if basis == "kapranov" {
        return kapranov_basis(k, n, twisted).map_err(compute);
    }
    let kind: QKind = basis.parse().map_err(|_| ExportError::UnknownId(format!("basis {basis}")))?;
    let q = generate_q_basis(n, ell, kind, twisted).map_err(compute)?;
    if k == 1 {
        Ok(q)
    } else {
        satake_exterior_basis(&q, k, 0).map_err(compute)
    }
}

fn positions(len: usize) -> Labels {
    Labels::Names((1..=len).map(|i| format!("e{i}")).collect())
}

pub fn gram_doc(n: usize, k: usize, basis: &str, ell: i32, twisted: bool) -> Result<Doc, ExportError> {
    let b = exceptional(n, k, basis, ell, twisted)?;
    let g = b.gram().map_err(compute)?;
    Ok(Doc::Matrix(MatrixDoc::from_matrix(format!("gram {}", b.provenance), positions(b.len()), &g)))
}

pub fn stokes_doc(n: usize, k: usize, ell: i32, kind: &str) -> Result<Doc, ExportError> {
    let kd: QKind = kind.parse().map_err(compute)?;
    let (s1, s2) = stokes_matrices(k, n, ell, kd).map_err(compute)?;
    let tag = format!("(k={k}, n={n}, ℓ={ell}, {kind})");
    Ok(Doc::Matrices(vec![
        MatrixDoc::from_matrix(format!("stokes S1 {tag}"), positions(s1.rows()), &s1),
        MatrixDoc::from_matrix(format!("stokes S2 {tag}"), positions(s2.rows()), &s2),
    ]))
}

/// Classes of a basis as rows of localizations, followed by the Gram matrix.
pub fn basis_doc(b: &ExceptionalBasis) -> Result<Doc, ExportError> {
    let entries: Vec<Vec<String>> = b.elements.iter().map(|e| e.loc.iter().map(|p| p.to_string()).collect()).collect();
    let classes = MatrixDoc { object: format!("classes {}", b.provenance), size: entries.len(), basis: positions(b.len()), entries };
    let g = b.gram().map_err(compute)?;
    Ok(Doc::Matrices(vec![classes, MatrixDoc::from_matrix(format!("gram {}", b.provenance), positions(b.len()), &g)]))
}

fn num(s: &str, id: &str) -> Result<usize, ExportError> {
    s.parse().map_err(|_| ExportError::UnknownId(id.to_string()))
}

fn int(s: &str, id: &str) -> Result<i32, ExportError> {
    s.parse().map_err(|_| ExportError::UnknownId(id.to_string()))
}

/// Resolve an object id such as `qkz:3:2:1` (n, k, a), `dyn:3:1:2`,
/// `gram:kapranov:2:3` (basis, k, n, optional ℓ), `stokes:1:3` (k, n,
/// optional ℓ and kind), `quantum:2:4:1:schubert`, `pairing:2:4:stab`.
pub fn resolve(id: &str) -> Result<Doc, ExportError> {
    let parts: Vec<&str> = id.split(':').collect();
    let unknown = || ExportError::UnknownId(id.to_string());
    match parts.as_slice() {
        ["qkz", n, k, a] => qkz_doc(num(n, id)?, num(k, id)?, num(a, id)?),
        ["dyn", n, k, i] => dyn_doc(num(n, id)?, num(k, id)?, num(i, id)?),
        ["gram", b, k, n, rest @ ..] if rest.len() <= 1 => {
            let ell = rest.first().map(|s| int(s, id)).transpose()?.unwrap_or(0);
            gram_doc(num(n, id)?, num(k, id)?, b, ell, false)
        }
        ["stokes", k, n, rest @ ..] if rest.len() <= 2 => {
            let ell = rest.first().map(|s| int(s, id)).transpose()?.unwrap_or(0);
            stokes_doc(num(n, id)?, num(k, id)?, ell, rest.get(1).copied().unwrap_or("prime"))
        }
        ["quantum", k, n, i, b] => quantum_doc(num(n, id)?, num(k, id)?, num(i, id)?, b),
        ["pairing", k, n, b] => pairing_doc(num(n, id)?, num(k, id)?, b),
        _ => Err(unknown()),
    }
}

pub fn export(id: &str, format: Format) -> Result<String, ExportError> {
    Ok(resolve(id)?.render(format))
}
