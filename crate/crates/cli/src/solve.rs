use anyhow::{bail, Result};
use bgctp::output::{frontier_csv, frontier_trees};

use crate::args::{BenchMethod, Method, SolveArgs};
use crate::io::{emit, read_graph, with_suffix, write_atomic};
use crate::run::{run_method, time_limit, RunRecord};
use crate::EXIT_TIMEOUT;

pub fn run(args: &SolveArgs) -> Result<u8> {
    let limit = time_limit(args.time_limit)?;
    if args.method != Method::Eps && !args.cut.enabled() {
        bail!("--cut off only applies to --method eps");
    }
    let g = read_graph(&args.input)?;
    let method = match (args.method, args.cut.enabled()) {
        (Method::Eps, true) => BenchMethod::Eps,
        (Method::Eps, false) => BenchMethod::EpsNocut,
        (Method::Oracle, _) => BenchMethod::Oracle,
        (Method::Supported, _) => BenchMethod::Supported,
    };
    let result = run_method(&g, method, limit)?;

    emit(args.output.as_deref(), &frontier_csv(&result.frontier))?;
    if let Some(out) = &args.output {
        write_atomic(
            &with_suffix(out, ".trees"),
            &frontier_trees(&result.frontier),
        )?;
    }
    let report = args.report.clone().or_else(|| {
        args.output
            .as_ref()
            .map(|o| with_suffix(o, ".report.jsonl"))
    });
    if let Some(path) = report {
        let instance = args
            .input
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let record = RunRecord::from_run(instance, None, method, &result);
        write_atomic(&path, &record.to_json_line())?;
    }

    if result.timed_out {
        eprintln!(
            "time limit reached after {:.3}s; wrote {} points found so far",
            result.seconds,
            result.frontier.len()
        );
        return Ok(EXIT_TIMEOUT);
    }
    Ok(0)
}
