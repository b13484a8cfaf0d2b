//! Run configuration embedded in every output file.

use maxplus_sparse::solver::Objective;
use serde::Serialize;
use serde_json::Value;

/// Where candidate slopes come from.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum SlopeSpec {
    Grid {
        lo: Vec<f64>,
        hi: Vec<f64>,
        step: f64,
        cap: usize,
    },
    Explicit {
        path: String,
    },
    Gradients {
        neighbors: Option<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub seed: u64,
    pub threads: Option<usize>,
    pub inputs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub objective: Option<Objective>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slopes: Option<SlopeSpec>,
    /// Command-specific settings.
    #[serde(skip_serializing_if = "Value::is_null")]
    pub extra: Value,
    pub version: &'static str,
}

impl RunConfig {
    pub fn new(command: &str, seed: u64, threads: Option<usize>) -> Self {
        RunConfig {
            command: command.to_string(),
            seed,
            threads,
            inputs: Vec::new(),
            objective: None,
            slopes: None,
            extra: Value::Null,
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("configs hold only finite numbers")
    }

    /// A `# config {…}` comment line for CSV outputs.
    pub fn csv_comment(&self) -> String {
        format!(
            "# config {}\n",
            serde_json::to_string(self).expect("configs hold only finite numbers")
        )
    }
}
