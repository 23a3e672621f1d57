// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use chrono::{DateTime, SecondsFormat, Utc};
use serde::Serialize;

use crate::error::CliError;

/// Provenance record embedded in every JSON artifact.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub tool_version: String,
    /// SHA-256 of the canonical edge list of the instance, when there is one.
    pub instance_digest: Option<String>,
    /// UTC, ISO-8601. `SOURCE_DATE_EPOCH` pins it for reproducible output.
    pub timestamp: String,
}

impl RunManifest {
    pub fn new(command: &str, seed: Option<u64>) -> Result<Self, CliError> {
        Ok(RunManifest {
            command: command.to_owned(),
            parameters: BTreeMap::new(),
            seed,
            tool_version: env!("CARGO_PKG_VERSION").to_owned(),
            instance_digest: None,
            timestamp: timestamp()?,
        })
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_owned(), value.to_string());
        self
    }

    pub fn digest(mut self, digest: String) -> Self {
        self.instance_digest = Some(digest);
        self
    }
}

fn timestamp() -> Result<String, CliError> {
    let now = match std::env::var("SOURCE_DATE_EPOCH") {
        Ok(value) => {
            let secs: i64 = value.trim().parse().map_err(|_| {
                CliError::Usage(format!("SOURCE_DATE_EPOCH `{value}` is not an integer"))
            })?;
            DateTime::<Utc>::from_timestamp(secs, 0).ok_or_else(|| {
                CliError::Usage(format!("SOURCE_DATE_EPOCH `{value}` is out of range"))
            })?
        }
        Err(_) => Utc::now(),
    };
    Ok(now.to_rfc3339_opts(SecondsFormat::Secs, true))
}
