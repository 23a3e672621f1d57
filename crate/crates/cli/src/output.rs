// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::io::Write;

use girthpath::io::parse_any;
use girthpath::Digraph;
use serde::Serialize;

use crate::error::CliError;
use crate::manifest::RunManifest;

/// Writes `text` to `path`, or to stdout when `path` is `None`.
pub fn emit(path: Option<&str>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("stdout", e)),
    }
}

pub fn read_digraph(path: &str) -> Result<Digraph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    Ok(parse_any(&text)?)
}

/// `value` serialized as a JSON object with a `manifest` key added.
pub fn with_manifest<T: Serialize>(value: &T, manifest: &RunManifest) -> String {
    let mut json = serde_json::to_value(value).expect("reports serialize");
    if let serde_json::Value::Object(map) = &mut json {
        map.insert(
            "manifest".into(),
            serde_json::to_value(manifest).expect("manifests serialize"),
        );
    }
    let mut text = serde_json::to_string_pretty(&json).expect("JSON values serialize");
    text.push('\n');
    text
}
