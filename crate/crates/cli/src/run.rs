use std::time::{Duration, Instant};

use anyhow::{bail, Result};
use bgctp::instances::InstanceSpec;
use bgctp::oracle::{exact_frontier, EnumerationBudget};
use bgctp::solver::{solve_frontier, supported_frontier, FrontierConfig, SupportedConfig};
use bgctp::{Frontier, Graph};
use serde::Serialize;

use crate::args::BenchMethod;

pub fn time_limit(seconds: f64) -> Result<Duration> {
    if !seconds.is_finite() || seconds < 0.0 {
        bail!("time limit must be a non-negative number of seconds, got {seconds}");
    }
    Ok(Duration::from_secs_f64(seconds))
}

pub struct MethodRun {
    pub frontier: Frontier,
    pub timed_out: bool,
    pub bnb_nodes: u64,
    pub seconds: f64,
}

pub fn run_method(g: &Graph, method: BenchMethod, limit: Duration) -> Result<MethodRun> {
    let start = Instant::now();
    let (frontier, timed_out, bnb_nodes) = match method {
        BenchMethod::Eps | BenchMethod::EpsNocut => {
            let config = FrontierConfig {
                cut_enabled: method == BenchMethod::Eps,
                time_limit: Some(limit),
            };
            let run = solve_frontier(g, &config)?;
            (run.frontier, run.report.timed_out, run.report.bnb_nodes)
        }
        BenchMethod::Oracle => (exact_frontier(g, EnumerationBudget::default())?, false, 0),
        BenchMethod::Supported => {
            let run = supported_frontier(
                g,
                &SupportedConfig {
                    time_limit: Some(limit),
                },
            );
            (run.frontier, run.timed_out, run.bnb_nodes)
        }
    };
    Ok(MethodRun {
        frontier,
        timed_out,
        bnb_nodes,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// One line of a run report.
#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub instance: String,
    #[serde(flatten)]
    pub params: Option<InstanceSpec>,
    pub method: &'static str,
    pub points: usize,
    pub timed_out: bool,
    pub total_seconds: f64,
    pub seconds_per_point: f64,
    pub bnb_nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_match: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_error: Option<String>,
    /// Set when the run itself failed; the other result fields are then zero.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RunRecord {
    pub fn from_run(
        instance: String,
        params: Option<InstanceSpec>,
        method: BenchMethod,
        run: &MethodRun,
    ) -> Self {
        RunRecord {
            instance,
            params,
            method: method.name(),
            points: run.frontier.len(),
            timed_out: run.timed_out,
            total_seconds: run.seconds,
            seconds_per_point: run.seconds / run.frontier.len().max(1) as f64,
            bnb_nodes: run.bnb_nodes,
            oracle_match: None,
            oracle_error: None,
            error: None,
        }
    }

    pub fn failed(
        instance: String,
        params: Option<InstanceSpec>,
        method: BenchMethod,
        error: String,
    ) -> Self {
        RunRecord {
            instance,
            params,
            method: method.name(),
            points: 0,
            timed_out: false,
            total_seconds: 0.0,
            seconds_per_point: 0.0,
            bnb_nodes: 0,
            oracle_match: None,
            oracle_error: None,
            error: Some(error),
        }
    }

    pub fn to_json_line(&self) -> String {
        let mut line = serde_json::to_string(self).expect("record serializes");
        line.push('\n');
        line
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bgctp::instances::CostMode;

    #[test]
    fn record_is_flat_json() {
        let g = Graph::ctp(4, &[(1, 2, 5), (1, 4, 10), (2, 3, 6), (3, 4, 4)]).unwrap();
        let run = run_method(&g, BenchMethod::Eps, Duration::from_secs(5)).unwrap();
        let spec = InstanceSpec::Complete {
            n: 4,
            cost_mode: CostMode::Gctp,
            seed: 3,
        };
        let record = RunRecord::from_run("x".into(), Some(spec), BenchMethod::Eps, &run);
        let value: serde_json::Value = serde_json::from_str(&record.to_json_line()).unwrap();
        assert_eq!(value["family"], "complete");
        assert_eq!(value["cost_mode"], "gctp");
        assert_eq!(value["points"], 3);
        assert_eq!(value["method"], "eps");
        assert!(value.get("error").is_none());
        let expected = record.total_seconds / 3.0;
        assert!((record.seconds_per_point - expected).abs() < 1e-12);
    }

    #[test]
    fn negative_time_limits_are_rejected() {
        assert!(time_limit(-1.0).is_err());
        assert!(time_limit(f64::NAN).is_err());
        assert_eq!(time_limit(0.5).unwrap(), Duration::from_millis(500));
    }
}
