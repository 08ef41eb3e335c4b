//! The JSON input format: one algebra and named modules over it.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::Error;
use crate::field::{FiniteField, Kernel, Scalar};
use crate::mat::Mat;
use crate::modrep::ModuleRep;
use crate::subspace::Subspace;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u32,
    #[serde(default = "one")]
    pub k: u32,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub labels: Vec<String>,
    /// `mul[i][j]` = coordinates of `b_i b_j`.
    pub mul: Vec<Vec<Vec<Scalar>>>,
    pub one: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub name: String,
    pub dim: usize,
    /// One `dim x dim` matrix per algebra basis element, acting on row vectors.
    pub action: Vec<Vec<Vec<Scalar>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubmoduleSpec {
    pub name: String,
    pub module: String,
    /// Spanning vectors in the module's coordinates.
    pub basis: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkbenchFile {
    pub schema_version: u32,
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    pub field: FieldSpec,
    pub algebra: AlgebraSpec,
    #[serde(default)]
    pub modules: Vec<ModuleSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub submodules: Vec<SubmoduleSpec>,
}

/// Why a workbench file was rejected.
#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported schema_version {found} (expected {SCHEMA_VERSION})")]
    Schema { found: u32 },
    #[error("{location}: {source}")]
    Invalid { location: String, source: Error },
}

impl LoadError {
    fn invalid(location: impl Into<String>, source: Error) -> Self {
        Self::Invalid {
            location: location.into(),
            source,
        }
    }
}

/// A validated file: the algebra and its modules.
#[derive(Clone, Debug)]
pub struct Workbench {
    pub name: String,
    pub description: String,
    pub algebra: Arc<Algebra>,
    pub modules: Vec<(String, ModuleRep)>,
    pub submodules: Vec<NamedSubmodule>,
}

#[derive(Clone, Debug)]
pub struct NamedSubmodule {
    pub name: String,
    pub module: String,
    pub space: Subspace,
}

impl Workbench {
    pub fn module(&self, name: &str) -> Option<&ModuleRep> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn module_names(&self) -> Vec<&str> {
        self.modules.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn field(&self) -> &FiniteField {
        self.algebra.field()
    }

    /// The same workbench with every matrix computation routed through `kernel`.
    pub fn with_kernel(&self, kernel: Kernel) -> Workbench {
        let algebra = Arc::new(self.algebra.with_field(self.field().with_kernel(kernel)));
        let modules = self
            .modules
            .iter()
            .map(|(name, m)| {
                (
                    name.clone(),
                    m.rebind(algebra.clone()).expect("same algebra"),
                )
            })
            .collect();
        Workbench {
            algebra,
            modules,
            ..self.clone()
        }
    }

    pub fn to_file(&self) -> WorkbenchFile {
        let f = self.field();
        WorkbenchFile {
            schema_version: SCHEMA_VERSION,
            name: self.name.clone(),
            description: self.description.clone(),
            field: FieldSpec { p: f.p(), k: f.k() },
            algebra: AlgebraSpec {
                labels: self.algebra.labels().to_vec(),
                mul: self.algebra.table_rows(),
                one: self.algebra.one().clone(),
            },
            modules: self
                .modules
                .iter()
                .map(|(name, m)| ModuleSpec {
                    name: name.clone(),
                    dim: m.dim(),
                    action: m.action().iter().map(Mat::to_rows).collect(),
                })
                .collect(),
            submodules: self
                .submodules
                .iter()
                .map(|s| SubmoduleSpec {
                    name: s.name.clone(),
                    module: s.module.clone(),
                    basis: s.space.basis().to_rows(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self.to_file()).expect("serializable");
        let mut out = String::new();
        write_json(&value, 0, &mut out);
        out.push('\n');
        out
    }
}

pub fn parse(text: &str) -> Result<WorkbenchFile, LoadError> {
    serde_json::from_str(text).map_err(|e| LoadError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Parse and validate.
pub fn load_str(text: &str) -> Result<Workbench, LoadError> {
    build(parse(text)?)
}

pub fn load(path: &Path) -> Result<Workbench, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_str(&text)
}

fn to_mat(rows: &[Vec<Scalar>], dim: usize, location: &str) -> Result<Mat, LoadError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(LoadError::invalid(
            location,
            Error::DimensionMismatch(format!("expected a {dim} x {dim} matrix")),
        ));
    }
    Mat::from_rows(dim, dim, rows).map_err(|e| LoadError::invalid(location, e))
}

/// Validate a parsed file.
pub fn build(file: WorkbenchFile) -> Result<Workbench, LoadError> {
    if file.schema_version != SCHEMA_VERSION {
        return Err(LoadError::Schema {
            found: file.schema_version,
        });
    }
    let field =
        FiniteField::new(file.field.p, file.field.k).map_err(|e| LoadError::invalid("field", e))?;
    let table = file.algebra;
    let algebra = Algebra::new(field, table.labels, &table.mul, table.one)
        .map_err(|e| LoadError::invalid("algebra", e))?;
    let algebra = Arc::new(algebra);
    let mut modules: Vec<(String, ModuleRep)> = Vec::new();
    for m in file.modules {
        let location = format!("module {:?}", m.name);
        if modules.iter().any(|(n, _)| *n == m.name) {
            return Err(LoadError::invalid(
                location,
                Error::Precondition("duplicate module name".into()),
            ));
        }
        let action = m
            .action
            .iter()
            .enumerate()
            .map(|(i, rows)| to_mat(rows, m.dim, &format!("{location}, action matrix {i}")))
            .collect::<Result<Vec<_>, _>>()?;
        let rep = ModuleRep::new(algebra.clone(), action)
            .map_err(|e| LoadError::invalid(&location, e))?;
        if rep.dim() != m.dim {
            return Err(LoadError::invalid(
                location,
                Error::DimensionMismatch("dim field disagrees with action".into()),
            ));
        }
        modules.push((m.name, rep));
    }
    let mut submodules = Vec::new();
    for s in file.submodules {
        let location = format!("submodule {:?}", s.name);
        let parent = modules
            .iter()
            .find(|(n, _)| *n == s.module)
            .map(|(_, m)| m)
            .ok_or_else(|| {
                LoadError::invalid(
                    &location,
                    Error::Precondition(format!("unknown module {:?}", s.module)),
                )
            })?;
        if s.basis.iter().any(|v| v.len() != parent.dim()) {
            return Err(LoadError::invalid(
                location,
                Error::DimensionMismatch("basis vector length".into()),
            ));
        }
        for v in &s.basis {
            if let Some(&value) = v.iter().find(|&&x| x >= parent.field().q()) {
                return Err(LoadError::invalid(
                    location,
                    Error::InvalidScalar {
                        value,
                        q: parent.field().q(),
                    },
                ));
            }
        }
        let space = Subspace::from_vectors(parent.dim(), &s.basis, parent.field());
        let sub = parent
            .submodule(space)
            .map_err(|e| LoadError::invalid(&location, e))?;
        submodules.push(NamedSubmodule {
            name: s.name,
            module: s.module,
            space: sub.space().clone(),
        });
    }
    Ok(Workbench {
        name: file.name,
        description: file.description,
        algebra,
        modules,
        submodules,
    })
}

/// Pretty-print with numeric rows kept on one line, so matrices read as
/// matrices.
pub fn write_json(value: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |n: usize| "  ".repeat(n);
    match value {
        Value::Array(items) if items.iter().all(|v| !v.is_array() && !v.is_object()) => {
            out.push('[');
            for (i, v) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&v.to_string());
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, v) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_json(v, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, v)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_json(v, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}
