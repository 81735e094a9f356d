//! The most recent verify run, kept on disk for `specfun report`.

use std::fs;
use std::path::Path;

use crate::error::{CliError, Result};
use crate::render::RunDoc;

pub const DEFAULT_PATH: &str = ".specfun-last-run.json";

pub fn save(path: &Path, run: &RunDoc) -> Result<()> {
    let text = serde_json::to_string(run).map_err(|e| CliError::State {
        path: path.to_path_buf(),
        detail: e.to_string(),
    })?;
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

pub fn load(path: &Path) -> Result<RunDoc> {
    let text = fs::read_to_string(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            CliError::State {
                path: path.to_path_buf(),
                detail: "no verify run recorded; run `specfun verify` first".into(),
            }
        } else {
            CliError::io(path, e)
        }
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::State {
        path: path.to_path_buf(),
        detail: format!("unreadable run record: {e}"),
    })
}
