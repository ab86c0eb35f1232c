//! JSON documents for point sets and problems.
//!
//! Numbers are written with 17 significant digits, so a save/load cycle
//! reproduces every `f64` exactly.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};
use thiserror::Error;

use crate::affine::AffineSubspace;
use crate::circumcenter::PointSet;
use crate::solvers::Problem;
use crate::vecspace::Vector;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("parse error at line {line}, column {column} (field `{field}`): {message}")]
    Parse {
        field: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("validation failed: {0}")]
    Validation(#[from] crate::Error),
}

/// `{"dim": n, "points": [[…], …]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsFile {
    pub dim: usize,
    pub points: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceSpec {
    pub base: Vec<f64>,
    pub span: Vec<Vec<f64>>,
}

/// `{"dim": n, "subspaces": [{"base": […], "span": [[…], …]}, …], "z": […]}`
/// with optional `seed` and `description`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub dim: usize,
    pub subspaces: Vec<SubspaceSpec>,
    pub z: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
}

fn check_len(field: String, values: &[f64], dim: usize) -> Result<(), FileError> {
    if values.len() != dim {
        return Err(FileError::Field {
            field,
            message: format!("expected {dim} entries, found {}", values.len()),
        });
    }
    Ok(())
}

fn check_dim(dim: usize) -> Result<(), FileError> {
    if dim == 0 {
        return Err(FileError::Field {
            field: "dim".into(),
            message: "must be positive".into(),
        });
    }
    Ok(())
}

impl PointsFile {
    pub fn from_point_set(set: &PointSet<f64>) -> Self {
        Self {
            dim: set.dim(),
            points: set.points().iter().map(|p| p.as_slice().to_vec()).collect(),
        }
    }

    pub fn to_point_set(&self) -> Result<PointSet<f64>, FileError> {
        check_dim(self.dim)?;
        if self.points.is_empty() {
            return Err(FileError::Field {
                field: "points".into(),
                message: "at least one point is required".into(),
            });
        }
        for (i, p) in self.points.iter().enumerate() {
            check_len(format!("points[{i}]"), p, self.dim)?;
        }
        Ok(PointSet::new(self.points.iter().map(|p| Vector::new(p.clone())).collect())?)
    }
}

impl ProblemFile {
    pub fn from_problem(problem: &Problem<f64>, seed: Option<u64>, description: Option<String>) -> Self {
        Self {
            dim: problem.dim(),
            subspaces: problem
                .subspaces()
                .iter()
                .map(|s| SubspaceSpec {
                    base: s.base().as_slice().to_vec(),
                    span: s.basis().iter().map(|q| q.as_slice().to_vec()).collect(),
                })
                .collect(),
            z: problem.z().as_slice().to_vec(),
            seed,
            description,
        }
    }

    /// Builds and validates the problem: dimensions must agree and the
    /// subspaces must intersect.
    pub fn to_problem(&self) -> Result<Problem<f64>, FileError> {
        check_dim(self.dim)?;
        check_len("z".into(), &self.z, self.dim)?;
        let mut subspaces = Vec::with_capacity(self.subspaces.len());
        for (i, s) in self.subspaces.iter().enumerate() {
            check_len(format!("subspaces[{i}].base"), &s.base, self.dim)?;
            for (j, d) in s.span.iter().enumerate() {
                check_len(format!("subspaces[{i}].span[{j}]"), d, self.dim)?;
            }
            let span: Vec<Vector<f64>> = s.span.iter().map(|d| Vector::new(d.clone())).collect();
            subspaces.push(AffineSubspace::from_span(Vector::new(s.base.clone()), &span, 1e-10)?);
        }
        Ok(Problem::new(subspaces, Vector::new(self.z.clone()))?)
    }
}

fn parse<D: DeserializeOwned>(text: &str) -> Result<D, FileError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let parsed: D = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let field = e.path().to_string();
        let inner = e.into_inner();
        FileError::Parse {
            field,
            line: inner.line(),
            column: inner.column(),
            message: inner.to_string(),
        }
    })?;
    de.end().map_err(|e| FileError::Parse {
        field: ".".into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Ok(parsed)
}

/// Pretty JSON with every float printed as `{:.16e}`.
struct FullPrecision<'a>(PrettyFormatter<'a>);

impl Formatter for FullPrecision<'_> {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        if !value.is_finite() {
            return Err(io::Error::new(io::ErrorKind::InvalidData, "non-finite number"));
        }
        write!(writer, "{value:.16e}")
    }
    fn begin_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }
    fn end_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }
    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }
    fn end_array_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }
    fn begin_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }
    fn end_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }
    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }
    fn end_object_key<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_key(w)
    }
    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }
    fn end_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

/// Serializes `value` as pretty JSON with 17-significant-digit floats.
pub fn to_json_string<S: Serialize>(value: &S) -> io::Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FullPrecision(PrettyFormatter::new()));
    value.serialize(&mut ser).map_err(io::Error::other)?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}

fn read(path: &Path) -> Result<String, FileError> {
    fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write<S: Serialize>(path: &Path, value: &S) -> Result<(), FileError> {
    let io_err = |source| FileError::Io {
        path: path.to_path_buf(),
        source,
    };
    let text = to_json_string(value).map_err(io_err)?;
    fs::write(path, text).map_err(io_err)
}

pub fn parse_points(text: &str) -> Result<PointSet<f64>, FileError> {
    parse::<PointsFile>(text)?.to_point_set()
}

pub fn parse_problem_file(text: &str) -> Result<ProblemFile, FileError> {
    parse(text)
}

pub fn load_points(path: &Path) -> Result<PointSet<f64>, FileError> {
    parse_points(&read(path)?)
}

pub fn save_points(path: &Path, set: &PointSet<f64>) -> Result<(), FileError> {
    write(path, &PointsFile::from_point_set(set))
}

/// Reads the raw document without building the problem.
pub fn read_problem_file(path: &Path) -> Result<ProblemFile, FileError> {
    parse_problem_file(&read(path)?)
}

pub fn load_problem(path: &Path) -> Result<Problem<f64>, FileError> {
    read_problem_file(path)?.to_problem()
}

pub fn save_problem(path: &Path, file: &ProblemFile) -> Result<(), FileError> {
    write(path, file)
}
