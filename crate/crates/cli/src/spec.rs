//! Arrangement spec files: a Coxeter matrix plus a fundamental chamber
//! description, in a small TOML schema. Infinite bonds are written as 0 so
//! files stay integer-only; generator names map to indices in declaration
//! order.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use salv_core::chamber::{ChamberComplex, ChamberError, Preset};
use salv_core::coxeter::{CoxeterError, CoxeterMatrix, CoxeterSystem, TypeSubset};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot read {path}: {source}")]
    Unreadable {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    ParseError { line: usize, message: String },
    #[error("unknown generator \"{0}\" in chamber.acceptable")]
    UnknownGenerator(String),
    #[error("{path} has {found} entries, expected {expected} (one per generator)")]
    DimensionMismatch {
        path: String,
        expected: usize,
        found: usize,
    },
    #[error("generator name \"{0}\" is declared twice")]
    DuplicateGenerator(String),
    #[error("chamber must set exactly one of `preset` and `acceptable`")]
    ChamberChoice,
    #[error("unknown preset \"{0}\" (expected \"simplex\" or \"interval\")")]
    UnknownPreset(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementSpec {
    pub generators: Vec<String>,
    pub coxeter_matrix: Vec<Vec<u64>>,
    pub chamber: ChamberSpec,
    #[serde(default, skip_serializing_if = "SpecOptions::is_default")]
    pub options: SpecOptions,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct ChamberSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub acceptable: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct SpecOptions {
    #[serde(default)]
    pub strict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_length: Option<usize>,
}

impl SpecOptions {
    fn is_default(&self) -> bool {
        *self == SpecOptions::default()
    }
}

impl ArrangementSpec {
    /// Index of a generator name.
    pub fn generator_index(&self, name: &str) -> Option<u8> {
        self.generators
            .iter()
            .position(|g| g == name)
            .map(|i| i as u8)
    }

    /// Resolve a list of names to a subset.
    pub fn subset(&self, names: &[String]) -> Result<TypeSubset, SpecError> {
        let mut members = Vec::with_capacity(names.len());
        for name in names {
            members.push(
                self.generator_index(name)
                    .ok_or_else(|| SpecError::UnknownGenerator(name.clone()))?,
            );
        }
        Ok(TypeSubset::from_members(members))
    }
}

/// Parse a spec file and check its internal consistency (name uniqueness,
/// matrix dimensions, chamber choice). Whether the matrix entries and the
/// chamber family are mathematically valid is the core library's call, made
/// in [`realize`].
pub fn parse_spec(path: &Path) -> Result<ArrangementSpec, SpecError> {
    let text = fs::read_to_string(path).map_err(|source| SpecError::Unreadable {
        path: path.to_path_buf(),
        source,
    })?;
    parse_spec_str(&text)
}

pub fn parse_spec_str(text: &str) -> Result<ArrangementSpec, SpecError> {
    let spec: ArrangementSpec = toml::from_str(text).map_err(|e| {
        let line = e
            .span()
            .map(|span| text[..span.start.min(text.len())].matches('\n').count() + 1)
            .unwrap_or(0);
        SpecError::ParseError {
            line,
            message: e.message().to_string(),
        }
    })?;
    validate_shape(&spec)?;
    Ok(spec)
}

/// Serialize back to the on-disk schema. Round-trips with [`parse_spec_str`].
pub fn serialize_spec(spec: &ArrangementSpec) -> String {
    toml::to_string(spec).expect("spec serialization cannot fail")
}

fn validate_shape(spec: &ArrangementSpec) -> Result<(), SpecError> {
    let n = spec.generators.len();
    let mut seen = HashSet::new();
    for name in &spec.generators {
        if !seen.insert(name) {
            return Err(SpecError::DuplicateGenerator(name.clone()));
        }
    }
    if spec.coxeter_matrix.len() != n {
        return Err(SpecError::DimensionMismatch {
            path: "coxeter_matrix".into(),
            expected: n,
            found: spec.coxeter_matrix.len(),
        });
    }
    for (i, row) in spec.coxeter_matrix.iter().enumerate() {
        if row.len() != n {
            return Err(SpecError::DimensionMismatch {
                path: format!("coxeter_matrix[{i}]"),
                expected: n,
                found: row.len(),
            });
        }
    }
    match (&spec.chamber.preset, &spec.chamber.acceptable) {
        (Some(p), None) => {
            if p != "simplex" && p != "interval" {
                return Err(SpecError::UnknownPreset(p.clone()));
            }
        }
        (None, Some(lists)) => {
            for names in lists {
                spec.subset(names)?;
            }
        }
        _ => return Err(SpecError::ChamberChoice),
    }
    Ok(())
}

/// What went wrong while turning a well-formed spec into a validated
/// chamber complex, tagged with the module that said no.
#[derive(Debug, Error)]
pub enum RealizeError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Chamber(#[from] ChamberError),
}

/// Build the validated chamber complex a spec describes.
pub fn realize(spec: &ArrangementSpec) -> Result<ChamberComplex, RealizeError> {
    let matrix = CoxeterMatrix::from_table(&spec.coxeter_matrix)?;
    let system = CoxeterSystem::new(matrix);
    match (&spec.chamber.preset, &spec.chamber.acceptable) {
        (Some(p), None) => {
            let preset = match p.as_str() {
                "simplex" => Preset::Simplex,
                "interval" => Preset::Interval,
                other => unreachable!("parse_spec admitted preset {other:?}"),
            };
            Ok(ChamberComplex::preset(preset, system)?)
        }
        (None, Some(lists)) => {
            let family: Vec<TypeSubset> = lists
                .iter()
                .map(|names| spec.subset(names).expect("parse_spec resolved all names"))
                .collect();
            Ok(ChamberComplex::validate(
                system,
                &family,
                spec.options.strict,
            )?)
        }
        _ => unreachable!("parse_spec enforced the chamber choice"),
    }
}
