//! Fixture graphs stored as files, one `<name>.sdg` per built-in fixture.
//!
//! The directory defaults to the one shipped with this crate and can be
//! overridden with the `SIDIGRAPH_FIXTURES` environment variable. Every file
//! is checked against the expected polynomial and structural flags of its
//! name when loaded.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use sidigraph_core::fixtures::FIXTURES;
use sidigraph_core::Sidigraph;

use crate::format::{parse_sidigraph, ParseError};

pub const FIXTURE_DIR_ENV: &str = "SIDIGRAPH_FIXTURES";
pub const FIXTURE_EXTENSION: &str = "sdg";

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: {source}")]
    Invalid {
        path: PathBuf,
        source: sidigraph_core::Error,
    },
    #[error("unknown fixture `{0}`")]
    Unknown(String),
}

pub fn default_fixture_dir() -> PathBuf {
    match std::env::var_os(FIXTURE_DIR_ENV) {
        Some(dir) => PathBuf::from(dir),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"),
    }
}

pub fn fixture_path(dir: &Path, name: &str) -> PathBuf {
    dir.join(format!("{name}.{FIXTURE_EXTENSION}"))
}

/// Loads and validates one named fixture from `dir`.
pub fn load_fixture(dir: &Path, name: &str) -> Result<Sidigraph, FixtureError> {
    let spec = sidigraph_core::fixtures::fixture_spec(name)
        .ok_or_else(|| FixtureError::Unknown(name.to_string()))?;
    let path = fixture_path(dir, name);
    let text = std::fs::read_to_string(&path).map_err(|source| FixtureError::Io {
        path: path.clone(),
        source,
    })?;
    let s = parse_sidigraph(&text).map_err(|source| FixtureError::Parse {
        path: path.clone(),
        source,
    })?;
    spec.validate(&s)
        .map_err(|source| FixtureError::Invalid { path, source })?;
    Ok(s)
}

/// Every built-in fixture, read from `dir`.
pub fn load_fixtures(dir: &Path) -> Result<BTreeMap<String, Sidigraph>, FixtureError> {
    FIXTURES
        .iter()
        .map(|f| Ok((f.name.to_string(), load_fixture(dir, f.name)?)))
        .collect()
}
