//! JSON documents for fitted models and solver reports.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ext::ExtReal;
use crate::regression::{FitMetadata, ModelErrors, PwlModel};
use crate::solver::{Estimator, Norm, SolutionKind, SolverTrace, SparseSolution};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelDoc {
    dim: usize,
    slopes: Vec<Vec<f64>>,
    intercepts: Vec<ExtReal>,
    p: Norm,
    theta: f64,
    estimator: Estimator,
    #[serde(default)]
    seed: Option<u64>,
    #[serde(default)]
    errors: Option<ModelErrors>,
    support: usize,
}

/// Serialises a model as pretty-printed JSON.
pub fn write_model(model: &PwlModel) -> String {
    let m = &model.metadata;
    let doc = ModelDoc {
        dim: model.dim(),
        slopes: model.slopes().to_vec(),
        intercepts: model.intercepts().to_vec(),
        p: m.norm,
        theta: m.theta,
        estimator: m.estimator,
        seed: m.seed,
        errors: m.errors,
        support: model.support(),
    };
    serde_json::to_string_pretty(&doc).expect("model documents contain only finite numbers")
}

/// Parses a model document and checks it for internal consistency.
pub fn parse_model(text: &str) -> Result<PwlModel> {
    let doc: ModelDoc = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    if doc.slopes.iter().any(|s| s.len() != doc.dim) {
        return Err(Error::Schema(format!(
            "every slope must have dim = {} entries",
            doc.dim
        )));
    }
    if doc.norm_invalid() {
        return Err(Error::Schema(format!("invalid norm order {}", doc.p)));
    }
    if !(doc.theta.is_finite() && doc.theta >= 0.0) {
        return Err(Error::Schema(format!(
            "theta must be finite and non-negative, got {}",
            doc.theta
        )));
    }
    let metadata = FitMetadata {
        norm: doc.p,
        theta: doc.theta,
        estimator: doc.estimator,
        errors: doc.errors,
        seed: doc.seed,
    };
    let model = PwlModel::new(doc.slopes, doc.intercepts, metadata)
        .map_err(|e| Error::Schema(e.to_string()))?;
    if model.support() != doc.support {
        return Err(Error::Schema(format!(
            "support is {} but {} intercepts are finite",
            doc.support,
            model.support()
        )));
    }
    Ok(model)
}

impl ModelDoc {
    fn norm_invalid(&self) -> bool {
        matches!(self.p, Norm::Lp(p) if !(p.is_finite() && p > 0.0))
    }
}

/// Summary of one solver run, written next to the solution vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// Selected columns in insertion order.
    pub support: Vec<usize>,
    pub error_p: Option<ExtReal>,
    pub error_inf: Option<ExtReal>,
    pub ratio_bound: Option<ExtReal>,
    pub iterations: usize,
    pub infeasible: bool,
    pub kind: Option<SolutionKind>,
    pub trace: Option<SolverTrace>,
    /// Run configuration, including the seed, for replay.
    #[serde(default)]
    pub config: Value,
}

impl Report {
    pub fn from_solution(solution: &SparseSolution, config: Value) -> Report {
        Report {
            support: solution.support.clone(),
            error_p: solution.error_p.map(ExtReal::from_f64),
            error_inf: Some(ExtReal::from_f64(solution.error_inf)),
            ratio_bound: solution.ratio_bound.map(ExtReal::from_f64),
            iterations: solution.iterations(),
            infeasible: false,
            kind: Some(solution.kind),
            trace: Some(solution.trace.clone()),
            config,
        }
    }

    /// Report of a run whose budget cannot be met; `full_support_error` is
    /// the error of the full support.
    pub fn infeasible(full_support_error: f64, config: Value) -> Report {
        Report {
            support: Vec::new(),
            error_p: ExtReal::new(full_support_error),
            error_inf: None,
            ratio_bound: None,
            iterations: 0,
            infeasible: true,
            kind: None,
            trace: None,
            config,
        }
    }
}

pub fn write_report(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("reports encode infinities as strings")
}

pub fn parse_report(text: &str) -> Result<Report> {
    serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
}
