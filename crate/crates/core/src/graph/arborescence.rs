/// Minimum spanning arborescence (Chu-Liu/Edmonds) over nodes `0..node_count`.
///
/// Arcs are `(from, to, weight, id)`; the returned ids form an arborescence
/// rooted at `root` of minimum total weight, or `None` if some node cannot be
/// reached. Equal-weight candidates are resolved by the smaller id.
pub fn min_arborescence(
    node_count: usize,
    root: usize,
    arcs: &[(usize, usize, i64, usize)],
) -> Option<Vec<usize>> {
    let indexed: Vec<Arc> = arcs
        .iter()
        .enumerate()
        .map(|(k, &(from, to, weight, id))| Arc {
            from,
            to,
            weight,
            id,
            origin: k,
        })
        .collect();
    let chosen = solve(node_count, root, &indexed)?;
    let mut ids: Vec<usize> = chosen.into_iter().map(|k| arcs[k].3).collect();
    ids.sort_unstable();
    Some(ids)
}

#[derive(Debug, Clone, Copy)]
struct Arc {
    from: usize,
    to: usize,
    weight: i64,
    id: usize,
    // position in the caller's arc list
    origin: usize,
}

// Returns origins of the chosen arcs.
fn solve(node_count: usize, root: usize, arcs: &[Arc]) -> Option<Vec<usize>> {
    let mut best_in: Vec<Option<usize>> = vec![None; node_count];
    for (k, a) in arcs.iter().enumerate() {
        if a.to == root || a.from == a.to {
            continue;
        }
        let better = match best_in[a.to] {
            None => true,
            Some(b) => (a.weight, a.id) < (arcs[b].weight, arcs[b].id),
        };
        if better {
            best_in[a.to] = Some(k);
        }
    }
    if (0..node_count).any(|v| v != root && best_in[v].is_none()) {
        return None;
    }

    // label cycles of the best-in graph
    let mut cycle_of = vec![usize::MAX; node_count];
    let mut mark = vec![usize::MAX; node_count];
    let mut cycles = 0;
    for start in 0..node_count {
        let mut v = start;
        while v != root && mark[v] == usize::MAX && cycle_of[v] == usize::MAX {
            mark[v] = start;
            v = arcs[best_in[v].unwrap()].from;
        }
        if v != root && mark[v] == start && cycle_of[v] == usize::MAX {
            let mut w = v;
            loop {
                cycle_of[w] = cycles;
                w = arcs[best_in[w].unwrap()].from;
                if w == v {
                    break;
                }
            }
            cycles += 1;
        }
    }
    if cycles == 0 {
        return Some(
            (0..node_count)
                .filter(|&v| v != root)
                .map(|v| arcs[best_in[v].unwrap()].origin)
                .collect(),
        );
    }

    // contract each cycle into one node
    let mut comp = vec![usize::MAX; node_count];
    let mut next = cycles;
    for v in 0..node_count {
        comp[v] = if cycle_of[v] != usize::MAX {
            cycle_of[v]
        } else {
            next += 1;
            next - 1
        };
    }
    let mut contracted = Vec::new();
    let mut back = Vec::new();
    for (k, a) in arcs.iter().enumerate() {
        let (cu, cv) = (comp[a.from], comp[a.to]);
        if cu == cv || a.to == root {
            continue;
        }
        let reduced = if cycle_of[a.to] != usize::MAX {
            a.weight - arcs[best_in[a.to].unwrap()].weight
        } else {
            a.weight
        };
        contracted.push(Arc {
            from: cu,
            to: cv,
            weight: reduced,
            id: a.id,
            origin: contracted.len(),
        });
        back.push(k);
    }
    let picked = solve(next, comp[root], &contracted)?;

    let mut result = Vec::with_capacity(node_count - 1);
    let mut entered = vec![usize::MAX; cycles];
    for p in picked {
        let k = back[p];
        result.push(arcs[k].origin);
        let c = cycle_of[arcs[k].to];
        if c != usize::MAX {
            entered[c] = arcs[k].to;
        }
    }
    for v in 0..node_count {
        let c = cycle_of[v];
        if c != usize::MAX && entered[c] != v {
            result.push(arcs[best_in[v].unwrap()].origin);
        }
    }
    Some(result)
}
