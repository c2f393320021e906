//! Instance sets shared by the criterion benches.

use bgctp::instances::{gen_windmill, CostMode, InstanceSpec};
use bgctp::Graph;

/// A named instance for a benchmark id.
pub struct Fixture {
    pub name: String,
    pub graph: Graph,
}

fn fixture(spec: InstanceSpec) -> Fixture {
    Fixture {
        name: spec.to_string(),
        graph: spec.generate().expect("bench specs are valid"),
    }
}

/// Random instances by density at a fixed size, both cost modes.
pub fn density_sweep(n: usize, seed: u64) -> Vec<Fixture> {
    let mut out = Vec::new();
    for cost_mode in [CostMode::Ctp, CostMode::Gctp] {
        for density in [0.25, 0.5, 0.75] {
            out.push(fixture(InstanceSpec::Incomplete {
                n,
                density,
                cost_mode,
                seed,
            }));
        }
        out.push(fixture(InstanceSpec::Complete { n, cost_mode, seed }));
    }
    out
}

pub fn windmills(max_blades: usize) -> Vec<Fixture> {
    (1..=max_blades)
        .map(|k| Fixture {
            name: format!("windmill-k{k}"),
            graph: gen_windmill(k).expect("blade count within the cost cap"),
        })
        .collect()
}

pub fn grid(n: usize, seed: u64) -> Fixture {
    fixture(InstanceSpec::Grid {
        n,
        cost_mode: CostMode::Ctp,
        seed,
    })
}
