//! Machine-readable run reports.
//!
//! Reports are JSON with a versioned schema and are byte-identical for a fixed
//! command line, configuration, and seed. Wall-clock timing is therefore
//! opt-in: adding it breaks reproducibility by design.

use crate::pipeline::PipelineConfig;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct RunReport<T: Serialize> {
    pub schema: u32,
    /// Echo of the command that produced the report.
    pub command: String,
    pub config: PipelineConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub result: T,
}

impl<T: Serialize> RunReport<T> {
    pub fn new(command: impl Into<String>, config: &PipelineConfig, result: T) -> Self {
        RunReport {
            schema: SCHEMA_VERSION,
            command: command.into(),
            config: config.clone(),
            elapsed_ms: None,
            result,
        }
    }

    pub fn with_timing(mut self, elapsed_ms: u64) -> Self {
        self.elapsed_ms = Some(elapsed_ms);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
