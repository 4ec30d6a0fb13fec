use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;

use crate::Config;

pub const SCHEMA_VERSION: u32 = 1;

/// A command's outcome: a text summary for the terminal and a JSON document.
pub struct Report {
    pub passed: bool,
    pub summary: String,
    document: Document,
}

#[derive(Serialize)]
struct Document {
    schema_version: u32,
    command: &'static str,
    config: Config,
    /// Seconds since the Unix epoch; the only field that differs between reruns.
    timestamp: u64,
    passed: bool,
    result: Value,
}

impl Report {
    pub fn new(command: &'static str, config: &Config, passed: bool, summary: String, result: Value) -> Report {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Report {
            passed,
            summary,
            document: Document {
                schema_version: SCHEMA_VERSION,
                command,
                config: config.clone(),
                timestamp,
                passed,
                result,
            },
        }
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(&self.document)? + "\n";
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }
}
