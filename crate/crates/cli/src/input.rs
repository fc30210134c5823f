//! JSON file formats for algebras and alpha-forms.

use std::fs;
use std::path::Path;

use lieherm::connections::{validate_alpha, AlphaForm};
use lieherm::hermitian::{AlmostHermitianAlgebra, VectorTwoForm};
use lieherm::lie::{BracketEntry, LieAlgebra};
use lieherm::{format_rational, parse_rational, ErrorClass, Rational};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Read { path: String, message: String },

    #[error("cannot write {path}: {message}")]
    Write { path: String, message: String },

    #[error("{path}: {message}")]
    MalformedJson { path: String, message: String },

    #[error("{path}: entry {index}: {message}")]
    MalformedEntry { path: String, index: usize, message: String },

    #[error("{path}: alpha has n = {found} but the algebra has n = {expected}")]
    AlphaSize { path: String, expected: usize, found: usize },

    #[error("invalid value for --t: {0}")]
    BadParameter(String),

    #[error(transparent)]
    Library(#[from] lieherm::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Read { .. } => "ReadError",
            CliError::Write { .. } => "WriteError",
            CliError::MalformedJson { .. } => "MalformedJson",
            CliError::MalformedEntry { .. } => "MalformedEntry",
            CliError::AlphaSize { .. } => "DimensionMismatch",
            CliError::BadParameter(_) => "BadParameter",
            CliError::Library(e) => e.kind(),
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            CliError::Library(e) => e.class(),
            _ => ErrorClass::Validation,
        }
    }
}

/// One component `(a, b, c) -> value`, 1-based, with `a < b`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDoc {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    pub dim: usize,
    pub brackets: Vec<EntryDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaDoc {
    pub n: usize,
    pub components: Vec<EntryDoc>,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| CliError::Read {
        path: shown.clone(),
        message: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::MalformedJson {
        path: shown,
        message: e.to_string(),
    })
}

fn entries(path: &Path, docs: &[EntryDoc]) -> Result<Vec<BracketEntry>, CliError> {
    docs.iter()
        .enumerate()
        .map(|(i, e)| {
            let bad = |message: String| CliError::MalformedEntry {
                path: path.display().to_string(),
                index: i + 1,
                message,
            };
            if e.a >= e.b {
                return Err(bad(format!("requires a < b, got a = {}, b = {}", e.a, e.b)));
            }
            let value = parse_rational(&e.value).map_err(|err| bad(err.to_string()))?;
            Ok(BracketEntry::new(e.a, e.b, e.c, value))
        })
        .collect()
}

pub fn load_lie(path: &Path) -> Result<(String, LieAlgebra), CliError> {
    let doc: AlgebraDoc = read_json(path)?;
    let lie = LieAlgebra::build(doc.dim, &entries(path, &doc.brackets)?)?;
    Ok((doc.name, lie))
}

/// Loads an algebra and checks that it carries the standard almost
/// Hermitian structure (even dimension, Jacobi identity).
pub fn load_algebra(path: &Path) -> Result<AlmostHermitianAlgebra, CliError> {
    let (_, lie) = load_lie(path)?;
    Ok(AlmostHermitianAlgebra::new(lie)?)
}

pub fn load_alpha(path: &Path, n: usize) -> Result<AlphaForm, CliError> {
    let doc: AlphaDoc = read_json(path)?;
    if doc.n != n {
        return Err(CliError::AlphaSize {
            path: path.display().to_string(),
            expected: n,
            found: doc.n,
        });
    }
    let raw = VectorTwoForm::from_entries(n, &entries(path, &doc.components)?)?;
    Ok(validate_alpha(raw)?)
}

pub fn parse_parameter(text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| CliError::BadParameter(e.to_string()))
}

pub fn algebra_doc(name: &str, lie: &LieAlgebra) -> AlgebraDoc {
    AlgebraDoc {
        name: name.to_string(),
        dim: lie.dim(),
        brackets: lie
            .entries()
            .into_iter()
            .map(|e| EntryDoc {
                a: e.a,
                b: e.b,
                c: e.c,
                value: format_rational(&e.value),
            })
            .collect(),
    }
}

pub fn write_json<T: Serialize>(path: &Path, doc: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    fs::write(path, text).map_err(|e| CliError::Write {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
