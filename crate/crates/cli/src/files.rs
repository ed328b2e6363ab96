//! JSON formats for algebras, actions and certificates.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use liepi::exponent::{Certificate, CertificatePair};
use liepi::lie::BracketEntry;
use liepi::linalg::{format_rational, parse_rational};
use liepi::{ActionAlgebra, ActionGenerator, Error, LieAlgebra, Matrix, Rational, Subspace};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {message}")]
    Read { path: PathBuf, message: String },
    #[error("{path}: malformed JSON: {message}")]
    Json { path: PathBuf, message: String },
    #[error("{path}: {source}")]
    Invalid { path: PathBuf, source: Error },
    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketFile>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketFile {
    pub i: usize,
    pub j: usize,
    pub value: Vec<(usize, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub algebra: String,
    #[serde(default)]
    pub generators: Vec<GeneratorFile>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorFile {
    pub name: String,
    pub kind: KindFile,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindFile {
    Derivation,
    Automorphism,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<Vec<String>>>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<Vec<String>>>,
    pub pairs: Vec<PairFile>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    #[serde(rename = "I")]
    pub i: Vec<Vec<String>>,
    #[serde(rename = "J")]
    pub j: Vec<Vec<String>>,
    #[serde(rename = "T", default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Vec<Vec<String>>>,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, InputError> {
    let text = fs::read_to_string(path).map_err(|e| InputError::Read {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| InputError::Json {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn rationals(row: &[String]) -> Result<Vec<Rational>, Error> {
    row.iter().map(|s| parse_rational(s)).collect()
}

pub fn algebra_from_file(file: &AlgebraFile) -> Result<LieAlgebra, Error> {
    let mut seen = HashSet::new();
    let mut entries = Vec::with_capacity(file.brackets.len());
    for b in &file.brackets {
        for idx in [b.i, b.j] {
            if idx >= file.dim {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    dim: file.dim,
                });
            }
        }
        if b.i >= b.j {
            return Err(Error::InvalidAlgebra(format!(
                "bracket entry ({}, {}) must have i < j",
                b.i, b.j
            )));
        }
        if !seen.insert((b.i, b.j)) {
            return Err(Error::InvalidAlgebra(format!(
                "bracket entry ({}, {}) given twice",
                b.i, b.j
            )));
        }
        let value = b
            .value
            .iter()
            .map(|(k, v)| Ok((*k, parse_rational(v)?)))
            .collect::<Result<Vec<_>, Error>>()?;
        entries.push(BracketEntry {
            i: b.i,
            j: b.j,
            value,
        });
    }
    LieAlgebra::from_entries(file.name.clone(), file.dim, file.basis.clone(), entries)?.validated()
}

/// Canonical file form: `i < j`, nonzero pairs and values only, labels always present.
pub fn algebra_to_file(l: &LieAlgebra) -> AlgebraFile {
    let brackets = l
        .entries()
        .into_iter()
        .map(|e| BracketFile {
            i: e.i,
            j: e.j,
            value: e
                .value
                .iter()
                .map(|(k, v)| (*k, format_rational(v)))
                .collect(),
        })
        .collect();
    AlgebraFile {
        name: l.name().to_string(),
        dim: l.dim(),
        basis: Some(l.labels().to_vec()),
        brackets,
    }
}

pub fn parse_algebra_file(path: &Path) -> Result<LieAlgebra, InputError> {
    let file: AlgebraFile = read_json(path)?;
    algebra_from_file(&file).map_err(|source| InputError::Invalid {
        path: path.to_path_buf(),
        source,
    })
}

fn matrix_from_rows(rows: &[Vec<String>], dim: usize) -> Result<Matrix, Error> {
    if rows.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: rows.len(),
        });
    }
    let mut data = Vec::with_capacity(dim * dim);
    for row in rows {
        if row.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: row.len(),
            });
        }
        data.extend(rationals(row)?);
    }
    Ok(Matrix::from_vec(dim, dim, data))
}

pub fn parse_action_file(path: &Path, l: &LieAlgebra) -> Result<ActionAlgebra, InputError> {
    let file: ActionFile = read_json(path)?;
    if file.algebra != l.name() {
        return Err(InputError::Format {
            path: path.to_path_buf(),
            message: format!(
                "action is declared for algebra {:?}, not {:?}",
                file.algebra,
                l.name()
            ),
        });
    }
    let invalid = |source| InputError::Invalid {
        path: path.to_path_buf(),
        source,
    };
    let mut gens = Vec::with_capacity(file.generators.len());
    for g in &file.generators {
        let m = matrix_from_rows(&g.matrix, l.dim()).map_err(|source| InputError::Format {
            path: path.to_path_buf(),
            message: format!("generator {:?}: {source}", g.name),
        })?;
        gens.push(match g.kind {
            KindFile::Derivation => ActionGenerator::derivation(g.name.clone(), m),
            KindFile::Automorphism => ActionGenerator::automorphism(g.name.clone(), m),
        });
    }
    ActionAlgebra::build(l, gens).map_err(invalid)
}

fn subspace(rows: &[Vec<String>], dim: usize) -> Result<Subspace, Error> {
    let mut vs = Vec::with_capacity(rows.len());
    for row in rows {
        if row.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: row.len(),
            });
        }
        vs.push(rationals(row)?);
    }
    Ok(Subspace::span(dim, vs))
}

pub fn certificate_from_file(file: &CertificateFile, dim: usize) -> Result<Certificate, Error> {
    let opt = |rows: &Option<Vec<Vec<String>>>| rows.as_ref().map(|r| subspace(r, dim)).transpose();
    let pairs = file
        .pairs
        .iter()
        .map(|p| {
            Ok(CertificatePair {
                i: subspace(&p.i, dim)?,
                j: subspace(&p.j, dim)?,
                t: opt(&p.t)?,
            })
        })
        .collect::<Result<_, Error>>()?;
    Ok(Certificate {
        pairs,
        s: opt(&file.s)?,
        b: opt(&file.b)?,
    })
}

pub fn parse_certificate_file(path: &Path, l: &LieAlgebra) -> Result<Certificate, InputError> {
    let file: CertificateFile = read_json(path)?;
    certificate_from_file(&file, l.dim()).map_err(|source| InputError::Invalid {
        path: path.to_path_buf(),
        source,
    })
}

pub fn subspace_rows(u: &Subspace) -> Vec<Vec<String>> {
    u.basis_vectors()
        .map(|v| v.iter().map(format_rational).collect())
        .collect()
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vectors()
        .map(|v| v.iter().map(format_rational).collect())
        .collect()
}
