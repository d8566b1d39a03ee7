//! On-disk form of a code: a JSON descriptor, the generator matrix as text
//! next to it, and an optional cache of oracle results keyed by a hash of the
//! descriptor.

use std::collections::BTreeMap;
use std::fs;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::code::read_matrix;
use crate::curve::{Axis, CurveKind};
use crate::gf::FieldDescriptor;
use crate::lrc::{Construction, LrcCode, LrcError};
use crate::oracle::{Distance, Ghw, Locality};

pub const FORMAT: &str = "aglrc-code/1";

#[derive(Debug, Error)]
pub enum DescriptorError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("unsupported descriptor format {0:?}")]
    Format(String),
    #[error(transparent)]
    Build(#[from] LrcError),
    #[error("descriptor does not match the rebuilt code: {0}")]
    Mismatch(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionInfo {
    pub axis: Axis,
    pub fiber_size: usize,
    pub fibers: usize,
    pub deg_fiber: usize,
    pub interpolation_available: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub format: String,
    pub curve: CurveKind,
    pub construction: Construction,
    pub field: FieldDescriptor,
    pub n: usize,
    pub k: usize,
    pub partitions: Vec<PartitionInfo>,
    /// Generator matrix file, relative to the descriptor.
    pub matrix: String,
}

impl CodeDescriptor {
    pub fn of(lrc: &LrcCode, matrix: &str) -> Self {
        Self {
            format: FORMAT.to_string(),
            curve: lrc.curve().kind(),
            construction: lrc.construction(),
            field: lrc.field().descriptor(),
            n: lrc.n(),
            k: lrc.k(),
            partitions: lrc
                .partitions()
                .iter()
                .map(|p| PartitionInfo {
                    axis: p.axis,
                    fiber_size: p.fiber_size(),
                    fibers: p.blocks.len(),
                    deg_fiber: p.deg_fiber,
                    interpolation_available: p.interpolation_available,
                })
                .collect(),
            matrix: matrix.to_string(),
        }
    }

    /// Hex SHA-256 of the descriptor without the matrix file name.
    pub fn key(&self) -> String {
        let mut d = self.clone();
        d.matrix.clear();
        let json = serde_json::to_string(&d).expect("descriptor serializes");
        Sha256::digest(json.as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> DescriptorError + '_ {
    move |source| DescriptorError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn json_err(path: &Path) -> impl FnOnce(serde_json::Error) -> DescriptorError + '_ {
    move |source| DescriptorError::Json {
        path: path.to_path_buf(),
        source,
    }
}

/// `code.json` → `code.matrix.txt`
pub fn matrix_path(json: &Path) -> PathBuf {
    json.with_extension("matrix.txt")
}

/// `code.json` → `code.oracle.json`
pub fn cache_path(json: &Path) -> PathBuf {
    json.with_extension("oracle.json")
}

/// Writes the descriptor and the matrix file beside it.
pub fn save(lrc: &LrcCode, json: &Path) -> Result<CodeDescriptor, DescriptorError> {
    let mpath = matrix_path(json);
    let name = mpath
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let desc = CodeDescriptor::of(lrc, &name);
    let text = serde_json::to_string_pretty(&desc).expect("descriptor serializes") + "\n";
    fs::write(json, text).map_err(io_err(json))?;
    fs::write(&mpath, lrc.code().matrix_text()).map_err(io_err(&mpath))?;
    Ok(desc)
}

pub fn read_descriptor(json: &Path) -> Result<CodeDescriptor, DescriptorError> {
    let text = fs::read_to_string(json).map_err(io_err(json))?;
    let desc: CodeDescriptor = serde_json::from_str(&text).map_err(json_err(json))?;
    if desc.format != FORMAT {
        return Err(DescriptorError::Format(desc.format));
    }
    Ok(desc)
}

/// Rebuilds the code from the descriptor and checks it against the stored
/// parameters and, when present, the matrix file.
pub fn load(json: &Path) -> Result<(LrcCode, CodeDescriptor), DescriptorError> {
    let desc = read_descriptor(json)?;
    let lrc = LrcCode::build(desc.curve, desc.construction)?;
    let fresh = CodeDescriptor::of(&lrc, &desc.matrix);
    if fresh != desc {
        return Err(DescriptorError::Mismatch(format!(
            "stored n={} k={}, rebuilt n={} k={}",
            desc.n, desc.k, fresh.n, fresh.k
        )));
    }
    if !desc.matrix.is_empty() {
        let mpath = json.with_file_name(&desc.matrix);
        if mpath.exists() {
            let file = fs::File::open(&mpath).map_err(io_err(&mpath))?;
            let m = read_matrix(lrc.field(), BufReader::new(file))
                .map_err(|e| DescriptorError::Mismatch(format!("{}: {e}", mpath.display())))?;
            if &m != lrc.code().generator() {
                return Err(DescriptorError::Mismatch(format!(
                    "{} differs from the rebuilt generator",
                    mpath.display()
                )));
            }
        }
    }
    Ok((lrc, desc))
}

/// Oracle results stored beside a descriptor.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCache {
    pub key: String,
    pub distance: Option<Distance>,
    pub ghw: BTreeMap<usize, Ghw>,
    pub locality: Option<Vec<Locality>>,
}

impl OracleCache {
    /// The cache for `desc`, or an empty one if missing, unreadable or
    /// keyed to another code.
    pub fn load(json: &Path, desc: &CodeDescriptor) -> Self {
        let key = desc.key();
        fs::read_to_string(cache_path(json))
            .ok()
            .and_then(|t| serde_json::from_str::<OracleCache>(&t).ok())
            .filter(|c| c.key == key)
            .unwrap_or(OracleCache {
                key,
                ..Default::default()
            })
    }

    pub fn save(&self, json: &Path) -> Result<(), DescriptorError> {
        let path = cache_path(json);
        let text = serde_json::to_string_pretty(self).expect("cache serializes") + "\n";
        fs::write(&path, text).map_err(io_err(&path))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn save_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let json = dir.path().join("code.json");
        let lrc = LrcCode::lrc2(2).unwrap();
        let desc = save(&lrc, &json).unwrap();
        assert_eq!(desc.matrix, "code.matrix.txt");
        assert_eq!(desc.partitions.len(), 2);
        let (back, d2) = load(&json).unwrap();
        assert_eq!(d2, desc);
        assert_eq!(back.code().basis(), lrc.code().basis());
    }

    #[test]
    fn tampered_matrix_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let json = dir.path().join("c.json");
        save(&LrcCode::hermitian_x(2, 1).unwrap(), &json).unwrap();
        fs::write(matrix_path(&json), "4 8 2\n1 1 1 1 1 1 1 1\n0 0 1 1 2 2 3 2\n").unwrap();
        assert!(matches!(load(&json), Err(DescriptorError::Mismatch(_))));
    }

    #[test]
    fn key_is_stable_and_distinguishes_codes() {
        let a = CodeDescriptor::of(&LrcCode::hermitian_x(2, 1).unwrap(), "a");
        let b = CodeDescriptor::of(&LrcCode::hermitian_x(2, 1).unwrap(), "b");
        let c = CodeDescriptor::of(&LrcCode::hermitian_x(2, 2).unwrap(), "a");
        assert_eq!(a.key(), b.key());
        assert_ne!(a.key(), c.key());
        assert_eq!(a.key().len(), 64);
    }

    #[test]
    fn cache_ignores_other_keys() {
        let dir = tempfile::tempdir().unwrap();
        let json = dir.path().join("c.json");
        let d1 = save(&LrcCode::hermitian_x(2, 1).unwrap(), &json).unwrap();
        let mut cache = OracleCache::load(&json, &d1);
        assert!(cache.distance.is_none());
        cache.ghw.insert(
            2,
            Ghw {
                v: 2,
                value: 8,
                method: crate::oracle::Method::Subspaces,
            },
        );
        cache.save(&json).unwrap();
        assert_eq!(OracleCache::load(&json, &d1).ghw.len(), 1);
        let d2 = CodeDescriptor::of(&LrcCode::hermitian_x(2, 2).unwrap(), "x");
        assert!(OracleCache::load(&json, &d2).ghw.is_empty());
    }
}
