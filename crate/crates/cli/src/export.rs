use anyhow::{bail, Result};
use bgctp::solver::{export_milp, ExportOptions, Weights};

use crate::args::ExportArgs;
use crate::io::{emit, read_graph};

pub fn run(args: &ExportArgs) -> Result<u8> {
    if args.cut.enabled() && args.epsilon.is_none() {
        bail!("--cut on needs --epsilon");
    }
    let weights = match args.weights.as_deref() {
        None => None,
        Some(&[cable, trench]) if cable >= 0 && trench >= 0 && cable + trench > 0 => {
            Some(Weights::new(cable, trench))
        }
        Some(w) => bail!("--weights needs two non-negative values, not both zero; got {w:?}"),
    };
    let g = read_graph(&args.input)?;
    let options = ExportOptions {
        epsilon: args.epsilon,
        cut: args.cut.enabled(),
        weights,
    };
    emit(args.output.as_deref(), &export_milp(&g, &options)?)?;
    Ok(0)
}
