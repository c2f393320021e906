//! Text format: a `p bgctp <n> <m> <root>` header, then one
//! `e <u> <v> <cable> <trench>` line per edge in ascending `(u, v)` order.
//! Lines starting with `c ` are comments.

use std::fmt::Write;

use super::InstanceError;
use crate::graph::{Edge, Graph};

pub fn write_instance(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * (g.m() + 1));
    let _ = writeln!(out, "p bgctp {} {} {}", g.n(), g.m(), g.root());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {} {} {}", e.u, e.v, e.cable, e.trench);
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> InstanceError {
    InstanceError::Parse {
        line,
        message: message.into(),
    }
}

fn fields<const K: usize>(
    line: usize,
    rest: &[&str],
    what: &str,
) -> Result<[i128; K], InstanceError> {
    if rest.len() != K {
        return Err(parse_err(
            line,
            format!("{what} line needs {K} fields, found {}", rest.len()),
        ));
    }
    let mut out = [0i128; K];
    for (slot, token) in out.iter_mut().zip(rest) {
        *slot = token
            .parse()
            .map_err(|_| parse_err(line, format!("not an integer: {token:?}")))?;
    }
    Ok(out)
}

fn to_usize(line: usize, v: i128) -> Result<usize, InstanceError> {
    usize::try_from(v)
        .map_err(|_| parse_err(line, format!("expected a non-negative index, got {v}")))
}

fn to_cost(line: usize, v: i128) -> Result<i64, InstanceError> {
    i64::try_from(v).map_err(|_| parse_err(line, format!("cost {v} out of range")))
}

pub fn read_instance(text: &str) -> Result<Graph, InstanceError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed == "c" || trimmed.starts_with("c ") {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate header"));
                }
                if tokens.get(1) != Some(&"bgctp") {
                    return Err(parse_err(line, "header must start with `p bgctp`"));
                }
                let [n, m, root] = fields::<3>(line, &tokens[2..], "header")?;
                header = Some((
                    to_usize(line, n)?,
                    to_usize(line, m)?,
                    to_usize(line, root)?,
                ));
            }
            "e" => {
                if header.is_none() {
                    return Err(parse_err(line, "edge line before header"));
                }
                let [u, v, cable, trench] = fields::<4>(line, &tokens[1..], "edge")?;
                edges.push(Edge::new(
                    to_usize(line, u)?,
                    to_usize(line, v)?,
                    to_cost(line, cable)?,
                    to_cost(line, trench)?,
                ));
            }
            other => return Err(parse_err(line, format!("unknown record type {other:?}"))),
        }
    }
    let (n, m, root) = header.ok_or_else(|| parse_err(1, "missing `p bgctp` header"))?;
    if edges.len() != m {
        return Err(parse_err(
            text.lines().count().max(1),
            format!(
                "header declares {m} edges but {} edge lines follow",
                edges.len()
            ),
        ));
    }
    Ok(Graph::new(n, root, edges)?)
}
