use std::fmt::Write as _;
use std::time::Duration;

use anyhow::{bail, Result};
use bgctp::instances::{EdgeRule, InstanceSpec, Metric};
use bgctp::oracle::{exact_frontier, EnumerationBudget};
use rayon::prelude::*;

use crate::args::{BenchArgs, BenchMethod, Family};
use crate::io::emit;
use crate::run::{run_method, time_limit, RunRecord};

pub const CSV_HEADER: &str = "class,family,n,method,instances,failures,timeouts,mean_points,\
mean_seconds,mean_seconds_per_point,oracle_checked,oracle_mismatches";

pub fn run(args: &BenchArgs) -> Result<u8> {
    let limit = time_limit(args.time_limit)?;
    if args.parallel == 0 {
        bail!("--parallel needs at least one worker");
    }
    let specs = sweep(args);
    let jobs: Vec<(&InstanceSpec, BenchMethod)> = specs
        .iter()
        .flat_map(|s| args.methods.iter().map(move |&m| (s, m)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.parallel)
        .build()?;
    let oracle_max_n = args.verify_oracle.then_some(args.oracle_max_n);
    let records: Vec<RunRecord> = pool.install(|| {
        jobs.par_iter()
            .map(|&(spec, method)| run_one(spec, method, limit, oracle_max_n))
            .collect()
    });

    if let Some(path) = &args.records {
        let lines: String = records.iter().map(RunRecord::to_json_line).collect();
        crate::io::write_atomic(path, &lines)?;
    }
    emit(args.output.as_deref(), &aggregate(&records))?;
    Ok(0)
}

/// Expands the sweep into instance specs: families x sizes x cost modes x
/// family options x seeds. Windmills take their sizes from `--blades`.
fn sweep(args: &BenchArgs) -> Vec<InstanceSpec> {
    let seeds: Vec<u64> = (0..args.seeds).map(|k| args.first_seed + k).collect();
    let mut specs = Vec::new();
    for &family in &args.family {
        if family == Family::Windmill {
            specs.extend(
                args.blades
                    .iter()
                    .map(|&blades| InstanceSpec::Windmill { blades }),
            );
            continue;
        }
        for &n in &args.sizes {
            for &mode in &args.cost_mode {
                let cost_mode = mode.into();
                match family {
                    Family::Incomplete => {
                        for &density in &args.density {
                            specs.extend(seeds.iter().map(|&seed| InstanceSpec::Incomplete {
                                n,
                                density,
                                cost_mode,
                                seed,
                            }));
                        }
                    }
                    Family::Complete => {
                        specs.extend(seeds.iter().map(|&seed| InstanceSpec::Complete {
                            n,
                            cost_mode,
                            seed,
                        }))
                    }
                    Family::Grid => specs.extend(seeds.iter().map(|&seed| InstanceSpec::Grid {
                        n,
                        cost_mode,
                        seed,
                    })),
                    Family::Location => {
                        for &density in &args.density {
                            for &dist in &args.dist {
                                for &rule in &args.edge_rule {
                                    let edge_rule: EdgeRule = rule.into();
                                    let metric: Metric = edge_rule.default_metric();
                                    specs.extend(seeds.iter().map(|&seed| {
                                        InstanceSpec::Location {
                                            n,
                                            density,
                                            distribution: dist.into(),
                                            edge_rule,
                                            metric,
                                            cost_mode,
                                            seed,
                                        }
                                    }));
                                }
                            }
                        }
                    }
                    Family::Windmill => unreachable!(),
                }
            }
        }
    }
    specs
}

fn run_one(
    spec: &InstanceSpec,
    method: BenchMethod,
    limit: Duration,
    oracle_max_n: Option<usize>,
) -> RunRecord {
    let label = spec.to_string();
    let g = match spec.generate() {
        Ok(g) => g,
        Err(e) => return RunRecord::failed(label, Some(spec.clone()), method, e.to_string()),
    };
    let run = match run_method(&g, method, limit) {
        Ok(run) => run,
        Err(e) => return RunRecord::failed(label, Some(spec.clone()), method, e.to_string()),
    };
    let mut record = RunRecord::from_run(label, Some(spec.clone()), method, &run);
    if oracle_max_n.is_some_and(|max| g.n() <= max) && !run.timed_out {
        record.oracle_match = match exact_frontier(&g, EnumerationBudget::default()) {
            Ok(exact) => Some(exact.objective_points() == run.frontier.objective_points()),
            Err(e) => {
                record.oracle_error = Some(e.to_string());
                None
            }
        };
    }
    record
}

#[derive(Default)]
struct Group {
    class: String,
    family: &'static str,
    n: usize,
    method: &'static str,
    instances: usize,
    failures: usize,
    timeouts: usize,
    points: f64,
    seconds: f64,
    seconds_per_point: f64,
    oracle_checked: usize,
    oracle_mismatches: usize,
}

/// One CSV row per (instance class, method), in sweep order. Means are over
/// the runs that did not fail.
fn aggregate(records: &[RunRecord]) -> String {
    let mut groups: Vec<Group> = Vec::new();
    for r in records {
        let spec = r.params.as_ref().expect("bench records carry their spec");
        let class = spec.class_label();
        let idx = match groups
            .iter()
            .position(|g| g.class == class && g.method == r.method)
        {
            Some(i) => i,
            None => {
                groups.push(Group {
                    class,
                    family: spec.family(),
                    n: spec.n(),
                    method: r.method,
                    ..Group::default()
                });
                groups.len() - 1
            }
        };
        let g = &mut groups[idx];
        g.instances += 1;
        if r.error.is_some() {
            g.failures += 1;
            continue;
        }
        g.timeouts += usize::from(r.timed_out);
        g.points += r.points as f64;
        g.seconds += r.total_seconds;
        g.seconds_per_point += r.seconds_per_point;
        if let Some(ok) = r.oracle_match {
            g.oracle_checked += 1;
            g.oracle_mismatches += usize::from(!ok);
        }
    }

    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for g in &groups {
        let solved = (g.instances - g.failures).max(1) as f64;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{:.3},{:.6},{:.6},{},{}",
            g.class,
            g.family,
            g.n,
            g.method,
            g.instances,
            g.failures,
            g.timeouts,
            g.points / solved,
            g.seconds / solved,
            g.seconds_per_point / solved,
            g.oracle_checked,
            g.oracle_mismatches
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::args::{CostModeArg, DistArg, EdgeRuleArg};

    fn base() -> BenchArgs {
        BenchArgs {
            family: vec![],
            sizes: vec![],
            density: vec![0.5],
            seeds: 3,
            first_seed: 1,
            cost_mode: vec![CostModeArg::Ctp],
            dist: vec![DistArg::Uniform],
            edge_rule: vec![EdgeRuleArg::Random],
            blades: vec![],
            methods: vec![BenchMethod::Eps],
            time_limit: 10.0,
            parallel: 1,
            verify_oracle: false,
            oracle_max_n: 8,
            output: None,
            records: None,
        }
    }

    #[test]
    fn sweep_expansion() {
        let mut a = base();
        assert!(sweep(&a).is_empty());
        a.family = vec![Family::Location, Family::Windmill, Family::Grid];
        a.sizes = vec![6, 7];
        a.dist = vec![DistArg::Uniform, DistArg::Normal];
        a.blades = vec![2, 3];
        let specs = sweep(&a);
        // location: 2 sizes x 2 dists x 3 seeds; windmill: 2; grid: 2 sizes x 3 seeds
        assert_eq!(specs.len(), 12 + 2 + 6);
        assert_eq!(
            specs[0].to_string(),
            "location-n6-d0.5-uniform-random-euclidean-ctp-s1"
        );
    }

    #[test]
    fn aggregate_groups_by_class_and_method() {
        let mut a = base();
        a.family = vec![Family::Incomplete];
        a.sizes = vec![6];
        a.methods = vec![BenchMethod::Eps, BenchMethod::Oracle];
        let limit = Duration::from_secs(10);
        let records: Vec<RunRecord> = sweep(&a)
            .iter()
            .flat_map(|s| {
                a.methods
                    .iter()
                    .map(move |&m| run_one(s, m, limit, Some(8)))
            })
            .collect();
        let csv = aggregate(&records);
        let rows: Vec<Vec<&str>> = csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').collect())
            .collect();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0][0], "incomplete-n6-d0.5-ctp");
        assert_eq!(rows[0][3], "eps");
        assert_eq!(rows[1][3], "oracle");
        assert_eq!(rows[0][4], "3");
        assert_eq!(rows[0][7], rows[1][7]);
        assert_eq!(rows[0][10], "3");
        assert_eq!(rows[0][11], "0");
    }

    #[test]
    fn generation_failures_are_counted() {
        let mut a = base();
        a.family = vec![Family::Incomplete];
        a.sizes = vec![6];
        a.density = vec![0.125];
        let records: Vec<RunRecord> = sweep(&a)
            .iter()
            .map(|s| run_one(s, BenchMethod::Eps, Duration::from_secs(1), None))
            .collect();
        assert!(records.iter().all(|r| r.error.is_some()));
        let csv = aggregate(&records);
        assert!(csv.lines().nth(1).unwrap().contains(",3,3,0,0.000,"));
    }
}
