use anyhow::{bail, Context, Result};
use bgctp::instances::{
    write_instance, CostMode, EdgeRule, InstanceSpec, Metric, PointDistribution,
};

use crate::args::{Family, GenerateArgs};
use crate::io::emit;

pub fn run(args: &GenerateArgs) -> Result<u8> {
    let spec = spec_from_args(args)?;
    let g = spec
        .generate()
        .with_context(|| format!("cannot generate {spec}"))?;
    emit(args.output.as_deref(), &write_instance(&g))?;
    Ok(0)
}

fn reject<T>(value: &Option<T>, flag: &str, family: Family) -> Result<()> {
    if value.is_some() {
        bail!("{flag} does not apply to the {family:?} family");
    }
    Ok(())
}

fn spec_from_args(a: &GenerateArgs) -> Result<InstanceSpec> {
    let family = a.family;
    if family == Family::Windmill {
        reject(&a.n, "--n", family)?;
        reject(&a.density, "--density", family)?;
        reject(&a.seed, "--seed", family)?;
        reject(&a.cost_mode, "--cost-mode", family)?;
        reject(&a.dist, "--dist", family)?;
        reject(&a.edge_rule, "--edge-rule", family)?;
        reject(&a.metric, "--metric", family)?;
        let Some(blades) = a.blades else {
            bail!("the windmill family needs --blades");
        };
        return Ok(InstanceSpec::Windmill { blades });
    }

    reject(&a.blades, "--blades", family)?;
    let Some(n) = a.n else {
        bail!("--n is required");
    };
    let seed = a.seed.unwrap_or(1);
    let cost_mode: CostMode = a.cost_mode.map(Into::into).unwrap_or(CostMode::Ctp);
    if family != Family::Location {
        reject(&a.dist, "--dist", family)?;
        reject(&a.edge_rule, "--edge-rule", family)?;
        reject(&a.metric, "--metric", family)?;
    }
    let density = || a.density.context("--density is required for this family");

    Ok(match family {
        Family::Incomplete => InstanceSpec::Incomplete {
            n,
            density: density()?,
            cost_mode,
            seed,
        },
        Family::Complete | Family::Grid => {
            reject(&a.density, "--density", family)?;
            if family == Family::Complete {
                InstanceSpec::Complete { n, cost_mode, seed }
            } else {
                InstanceSpec::Grid { n, cost_mode, seed }
            }
        }
        Family::Location => {
            let edge_rule: EdgeRule = a.edge_rule.map(Into::into).unwrap_or(EdgeRule::Random);
            if cost_mode == CostMode::Gctp && a.metric.is_some() {
                bail!("--metric only applies to ctp cost mode; gctp stores both metrics");
            }
            let metric: Metric = a
                .metric
                .map(Into::into)
                .unwrap_or_else(|| edge_rule.default_metric());
            InstanceSpec::Location {
                n,
                density: density()?,
                distribution: a.dist.map(Into::into).unwrap_or(PointDistribution::Uniform),
                edge_rule,
                metric,
                cost_mode,
                seed,
            }
        }
        Family::Windmill => unreachable!("handled above"),
    })
}
