use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::bounds::BoundsReport;
use crate::error::Error;
use crate::geom::{Angle, Point2, Polygon, SimplePolygon};
use crate::placement::{Algorithm, Covering, Diagnostics};

/// Failures of the command-line layer.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {msg}", path.display())]
    Format { path: PathBuf, msg: String },
    #[error(transparent)]
    Geometry(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Process exit code: 3 when the work budget ran out, 2 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Geometry(Error::BudgetExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub(crate) fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub(crate) fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Input polygon: `{"name": "square", "vertices": [[0, 0], [10, 0], [10, 10], [0, 10]]}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolygonFile {
    pub vertices: Vec<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl PolygonFile {
    pub fn from_points(points: &[Point2], name: Option<String>) -> Self {
        PolygonFile {
            vertices: points.iter().map(|p| [p.x, p.y]).collect(),
            name,
        }
    }

    /// Parses the JSON text; error messages name the offending field.
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let value: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
        let obj = value
            .as_object()
            .ok_or("expected a JSON object with a `vertices` field")?;
        let raw = obj.get("vertices").ok_or("missing field `vertices`")?;
        let list = raw
            .as_array()
            .ok_or("field `vertices` must be an array of [x, y] pairs")?;
        let mut vertices = Vec::with_capacity(list.len());
        for (i, v) in list.iter().enumerate() {
            let pair = v
                .as_array()
                .filter(|a| a.len() == 2)
                .and_then(|a| Some([a[0].as_f64()?, a[1].as_f64()?]))
                .ok_or_else(|| format!("field `vertices[{i}]` must be a pair of numbers"))?;
            vertices.push(pair);
        }
        let name = match obj.get("name") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(_) => return Err("field `name` must be a string".into()),
        };
        Ok(PolygonFile { vertices, name })
    }

    pub fn read(path: &Path) -> CliResult<Self> {
        Self::parse(&read_text(path)?).map_err(|msg| CliError::Format {
            path: path.to_path_buf(),
            msg,
        })
    }

    pub fn write(&self, path: &Path) -> CliResult<()> {
        write_text(path, &to_json(self))
    }

    pub fn points(&self) -> Vec<Point2> {
        self.vertices.iter().map(|&v| v.into()).collect()
    }

    pub fn polygon(&self) -> crate::Result<SimplePolygon> {
        SimplePolygon::new(self.points())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagnosticsFile {
    pub candidates_evaluated: u64,
    pub runtime_ms: f64,
    pub budget_hit: bool,
}

/// A covering as written by `cover`. The pose maps input points into the
/// lattice frame as `p ↦ R(theta)·p + translation`; centers are in input
/// coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoveringFile {
    pub theta: f64,
    pub translation: [f64; 2],
    pub centers: Vec<[f64; 2]>,
    pub count: usize,
    pub bounds: BoundsReport,
    pub algorithm: String,
    pub diagnostics: DiagnosticsFile,
}

impl CoveringFile {
    pub fn new(c: &Covering, bounds: BoundsReport, runtime_ms: f64, budget_hit: bool) -> Self {
        CoveringFile {
            theta: c.theta.radians(),
            translation: [c.translation.x, c.translation.y],
            centers: c.centers.iter().map(|p| [p.x, p.y]).collect(),
            count: c.count,
            bounds,
            algorithm: c.algorithm.name().to_string(),
            diagnostics: DiagnosticsFile {
                candidates_evaluated: c.diagnostics.candidates_evaluated as u64,
                runtime_ms,
                budget_hit,
            },
        }
    }

    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let file: CoveringFile =
            serde_json::from_str(text).map_err(|e| format!("invalid covering: {e}"))?;
        if file.count != file.centers.len() {
            return Err(format!(
                "field `count` is {} but `centers` has {} entries",
                file.count,
                file.centers.len()
            ));
        }
        if !file.theta.is_finite() {
            return Err("field `theta` must be finite".into());
        }
        file.algorithm
            .parse::<Algorithm>()
            .map_err(|_| format!("field `algorithm` has unknown value {:?}", file.algorithm))?;
        Ok(file)
    }

    pub fn read(path: &Path) -> CliResult<Self> {
        Self::parse(&read_text(path)?).map_err(|msg| CliError::Format {
            path: path.to_path_buf(),
            msg,
        })
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn write(&self, path: &Path) -> CliResult<()> {
        write_text(path, &self.to_json())
    }

    /// The covering without its lattice indices, which the file does not keep.
    pub fn covering(&self) -> Covering {
        Covering {
            theta: Angle::new(self.theta),
            translation: self.translation.into(),
            centers: self.centers.iter().map(|&c| c.into()).collect(),
            indices: Vec::new(),
            count: self.count,
            algorithm: self.algorithm.parse().unwrap_or(Algorithm::Fixed),
            diagnostics: Diagnostics {
                candidates_evaluated: self.diagnostics.candidates_evaluated as usize,
                ..Diagnostics::default()
            },
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// The polygon and disc centers moved into the lattice frame of `c`.
pub fn lattice_frame(poly: &SimplePolygon, c: &Covering) -> (SimplePolygon, Vec<Point2>) {
    let pose = poly.rotate(c.theta.radians()).translate(c.translation);
    let centers = c.centers.iter().map(|&q| c.to_lattice(q)).collect();
    (pose, centers)
}

/// Input-frame vertices of the lattice cells listed in `c`.
pub fn cell_outlines(c: &Covering) -> Vec<Vec<Point2>> {
    let hex = crate::lattice::cell_hexagon();
    c.indices
        .iter()
        .map(|&i| {
            let x = crate::lattice::lattice_point(i);
            hex.vertices()
                .iter()
                .map(|&v| (v + x - c.translation).rotate(-c.theta.radians()))
                .collect()
        })
        .collect()
}
