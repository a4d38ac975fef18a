//! Curve corpus: one TOML file per curve.
//!
//! ```toml
//! name = "hyperbola"
//! poly = "x^2 - y^2 - 1"
//! tags = ["quasi", "runge"]
//!
//! [expected]
//! runge_condition = true
//! points_limit = 1000
//! points = [[-1, 0], [1, 0]]
//! ```

use std::path::{Path, PathBuf};

use heightlab::{parse_bipoly, BiPoly};
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveCorpusEntry {
    pub name: String,
    pub poly: String,
    #[serde(default)]
    pub tags: Vec<String>,
    pub expected: Option<Expected>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub runge_condition: Option<bool>,
    /// Integral points with `|x| ≤ points_limit` or `|y| ≤ points_limit`.
    pub points: Option<Vec<[i64; 2]>>,
    pub points_limit: Option<u64>,
    /// Expected verdict of every quasi-equivalence check.
    pub quasi: Option<String>,
    pub absolute_factors: Option<usize>,
}

impl CurveCorpusEntry {
    pub fn bipoly(&self) -> heightlab::Result<BiPoly> {
        parse_bipoly(&self.poly)
    }

    pub fn has_tag(&self, t: &str) -> bool {
        self.tags.iter().any(|s| s == t)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("{0}: {1}")]
    Io(PathBuf, std::io::Error),
    #[error("{0}: {1}")]
    Toml(PathBuf, toml::de::Error),
    #[error("{0}: poly does not parse: {1}")]
    Poly(PathBuf, heightlab::Error),
    #[error("{0}: expected.points needs expected.points_limit")]
    MissingLimit(PathBuf),
}

pub fn load_file(path: &Path) -> Result<CurveCorpusEntry, CorpusError> {
    let text = std::fs::read_to_string(path).map_err(|e| CorpusError::Io(path.into(), e))?;
    let e: CurveCorpusEntry = toml::from_str(&text).map_err(|e| CorpusError::Toml(path.into(), e))?;
    e.bipoly().map_err(|err| CorpusError::Poly(path.into(), err))?;
    if let Some(x) = &e.expected {
        if x.points.is_some() && x.points_limit.is_none() {
            return Err(CorpusError::MissingLimit(path.into()));
        }
    }
    Ok(e)
}

/// Every `*.toml` in `dir`, in file-name order.
pub fn load_dir(dir: &Path) -> Result<Vec<CurveCorpusEntry>, CorpusError> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CorpusError::Io(dir.into(), e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    paths.sort();
    paths.iter().map(|p| load_file(p)).collect()
}

/// The `corpus/` directory at the workspace root.
pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}
