use super::{CostMode, EdgeRule, InstanceError, InstanceSpec, Metric, PointDistribution, RngState};
use crate::graph::{Edge, Graph, UnionFind, MAX_COST};

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

fn check_n(n: usize) -> Result<(), InstanceError> {
    if n < 2 {
        return Err(InstanceError::InvalidParameter(format!(
            "need at least 2 vertices, got {n}"
        )));
    }
    Ok(())
}

/// `round(density * n(n-1)/2)`, rejected when below `n - 1`.
fn edge_target(n: usize, density: f64) -> Result<usize, InstanceError> {
    if !(density > 0.0 && density <= 1.0) {
        return Err(InstanceError::InvalidParameter(format!(
            "density must lie in (0, 1], got {density}"
        )));
    }
    let m = (density * pair_count(n) as f64).round() as usize;
    let m = m.min(pair_count(n));
    if m < n - 1 {
        return Err(InstanceError::InfeasibleDensity {
            n,
            density: density.to_string(),
            edges: m,
            needed: n - 1,
        });
    }
    Ok(m)
}

/// Random spanning tree, then uniformly drawn absent pairs up to `m` edges.
/// Returned pairs are sorted.
fn random_topology(rng: &mut RngState, n: usize, m: usize) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i + 1);
        perm.swap(i, j);
    }
    let mut present = vec![false; pair_count(n)];
    let index = |u: usize, v: usize| {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        // row-major over pairs u < v, 1-based vertices
        (u - 1) * (2 * n - u) / 2 + (v - u - 1)
    };
    let mut pairs = Vec::with_capacity(m);
    for i in 1..n {
        let attach = perm[rng.below(i)];
        let (u, v) = (attach.min(perm[i]), attach.max(perm[i]));
        present[index(u, v)] = true;
        pairs.push((u, v));
    }
    let mut absent: Vec<(usize, usize)> = Vec::with_capacity(pair_count(n) - (n - 1));
    for u in 1..=n {
        for v in u + 1..=n {
            if !present[index(u, v)] {
                absent.push((u, v));
            }
        }
    }
    while pairs.len() < m {
        let k = rng.below(absent.len());
        pairs.push(absent.swap_remove(k));
    }
    pairs.sort_unstable();
    pairs
}

fn with_drawn_costs(
    rng: &mut RngState,
    n: usize,
    pairs: &[(usize, usize)],
    mode: CostMode,
) -> Result<Graph, InstanceError> {
    let edges = pairs
        .iter()
        .map(|&(u, v)| match mode {
            CostMode::Ctp => {
                let c = rng.cost();
                Edge::new(u, v, c, c)
            }
            CostMode::Gctp => {
                let cable = rng.cost();
                let trench = rng.cost();
                Edge::new(u, v, cable, trench)
            }
        })
        .collect();
    Ok(Graph::new(n, 1, edges)?)
}

fn wrong_family(expected: &str) -> InstanceError {
    InstanceError::InvalidParameter(format!("expected a {expected} instance spec"))
}

/// Sparse random graph: random spanning tree plus uniform extra edges.
pub fn gen_incomplete(spec: &InstanceSpec) -> Result<Graph, InstanceError> {
    let &InstanceSpec::Incomplete {
        n,
        density,
        cost_mode,
        seed,
    } = spec
    else {
        return Err(wrong_family("incomplete"));
    };
    check_n(n)?;
    let m = edge_target(n, density)?;
    let mut rng = RngState::new(seed);
    let pairs = random_topology(&mut rng, n, m);
    with_drawn_costs(&mut rng, n, &pairs, cost_mode)
}

pub fn gen_complete(spec: &InstanceSpec) -> Result<Graph, InstanceError> {
    let &InstanceSpec::Complete { n, cost_mode, seed } = spec else {
        return Err(wrong_family("complete"));
    };
    check_n(n)?;
    let mut rng = RngState::new(seed);
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    with_drawn_costs(&mut rng, n, &pairs, cost_mode)
}

/// Row-major grid of width `round(sqrt(n))`; the last row may be short.
pub fn gen_grid(spec: &InstanceSpec) -> Result<Graph, InstanceError> {
    let &InstanceSpec::Grid { n, cost_mode, seed } = spec else {
        return Err(wrong_family("grid"));
    };
    check_n(n)?;
    let width = ((n as f64).sqrt().round() as usize).max(1);
    let mut pairs = Vec::new();
    for i in 0..n {
        if (i + 1) % width != 0 && i + 1 < n {
            pairs.push((i + 1, i + 2));
        }
        if i + width < n {
            pairs.push((i + 1, i + width + 1));
        }
    }
    pairs.sort_unstable();
    let mut rng = RngState::new(seed);
    with_drawn_costs(&mut rng, n, &pairs, cost_mode)
}

fn distance(metric: Metric, a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (a.0 - b.0, a.1 - b.1);
    match metric {
        Metric::Euclidean => (dx * dx + dy * dy).sqrt(),
        Metric::Manhattan => dx.abs() + dy.abs(),
    }
}

/// Points in the plane joined by random or shortest pairs; costs are
/// distances rescaled so the longest candidate pair costs 100.
pub fn gen_location(spec: &InstanceSpec) -> Result<Graph, InstanceError> {
    let &InstanceSpec::Location {
        n,
        density,
        distribution,
        edge_rule,
        metric,
        cost_mode,
        seed,
    } = spec
    else {
        return Err(wrong_family("location"));
    };
    check_n(n)?;
    let m = edge_target(n, density)?;
    let mut rng = RngState::new(seed);

    let points: Vec<(f64, f64)> = (0..n)
        .map(|_| match distribution {
            PointDistribution::Uniform => {
                let x = rng.uniform();
                let y = rng.uniform();
                (x, y)
            }
            PointDistribution::Normal => rng.normal_pair(),
        })
        .collect();
    let candidates: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    let dist =
        |metric: Metric, (u, v): (usize, usize)| distance(metric, points[u - 1], points[v - 1]);

    let pairs = match edge_rule {
        EdgeRule::Random => random_topology(&mut rng, n, m),
        EdgeRule::MinEuclidean | EdgeRule::MinManhattan => {
            let rule_metric = edge_rule.default_metric();
            let mut order: Vec<usize> = (0..candidates.len()).collect();
            order.sort_by(|&a, &b| {
                dist(rule_metric, candidates[a])
                    .total_cmp(&dist(rule_metric, candidates[b]))
                    .then(a.cmp(&b))
            });
            let mut uf = UnionFind::new(n + 1);
            let mut taken = vec![false; candidates.len()];
            let mut count = 0;
            for &k in &order {
                let (u, v) = candidates[k];
                if uf.union(u, v) {
                    taken[k] = true;
                    count += 1;
                }
            }
            for &k in &order {
                if count == m {
                    break;
                }
                if !taken[k] {
                    taken[k] = true;
                    count += 1;
                }
            }
            let mut pairs: Vec<(usize, usize)> = (0..candidates.len())
                .filter(|&k| taken[k])
                .map(|k| candidates[k])
                .collect();
            pairs.sort_unstable();
            pairs
        }
    };

    let scaled = |metric: Metric| {
        let longest = candidates
            .iter()
            .map(|&p| dist(metric, p))
            .fold(0.0f64, f64::max);
        move |p: (usize, usize)| -> i64 {
            if longest <= 0.0 {
                return 1;
            }
            ((dist(metric, p) * 100.0 / longest).round() as i64).clamp(1, MAX_COST)
        }
    };
    let edges: Vec<Edge> = match cost_mode {
        CostMode::Ctp => {
            let cost = scaled(metric);
            pairs
                .iter()
                .map(|&(u, v)| {
                    let c = cost((u, v));
                    Edge::new(u, v, c, c)
                })
                .collect()
        }
        CostMode::Gctp => {
            let cable = scaled(Metric::Euclidean);
            let trench = scaled(Metric::Manhattan);
            pairs
                .iter()
                .map(|&(u, v)| Edge::new(u, v, cable((u, v)), trench((u, v))))
                .collect()
        }
    };
    Ok(Graph::new(n, 1, edges)?)
}

/// The digit-separated windmill: hub `v0` (vertex 1) and `k` blades. Blade
/// `j` has vertices `2j` and `2j + 1` with edges `a_j = [v0, 2j]` of cost
/// `3 * 10^(j-1)`, `d_j = [v0, 2j + 1]` of cost `4 * 10^(j-1)` and
/// `b_j = [2j, 2j + 1]` of cost `2 * 10^(j-1)`.
pub fn gen_windmill(blades: usize) -> Result<Graph, InstanceError> {
    if blades == 0 {
        return Err(InstanceError::InvalidParameter(
            "a windmill needs at least one blade".into(),
        ));
    }
    let top = 10i64
        .checked_pow(blades as u32 - 1)
        .and_then(|p| p.checked_mul(4))
        .filter(|&c| c <= MAX_COST);
    if top.is_none() {
        return Err(InstanceError::CostOverflow(blades));
    }
    let mut edges = Vec::with_capacity(3 * blades);
    for j in 1..=blades {
        let unit = 10i64.pow(j as u32 - 1);
        let (a, d) = (2 * j, 2 * j + 1);
        edges.push(Edge::new(1, a, 3 * unit, 3 * unit));
        edges.push(Edge::new(1, d, 4 * unit, 4 * unit));
        edges.push(Edge::new(a, d, 2 * unit, 2 * unit));
    }
    Ok(Graph::new(2 * blades + 1, 1, edges)?)
}
