//! Edge-list text format.
//!
//! ```text
//! # comment lines start with '#'
//! 4            <- vertex count
//! 1 2 +        <- u v sign [weight], 1-based vertices
//! 2 3 - 2.5
//! ```
//!
//! Signs are `+`, `-`, `1` or `-1`; the weight is optional and defaults to 1.
//! Serialization writes `+`/`-` tokens and omits unit weights.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph, WeightedSignedGraph};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_sign(token: &str) -> Option<Sign> {
    match token {
        "+" | "1" => Some(Sign::Positive),
        "-" | "-1" => Some(Sign::Negative),
        _ => None,
    }
}

pub fn parse_edge_list(text: &str) -> Result<WeightedSignedGraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut weights = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some(n) = n else {
            if tokens.len() != 1 {
                return Err(parse_err(line_no, "expected the vertex count"));
            }
            let count: usize = tokens[0]
                .parse()
                .map_err(|_| parse_err(line_no, format!("invalid vertex count '{}'", tokens[0])))?;
            if count == 0 {
                return Err(parse_err(line_no, "vertex count must be positive"));
            }
            n = Some(count);
            continue;
        };

        if !(3..=4).contains(&tokens.len()) {
            return Err(parse_err(
                line_no,
                "malformed line, expected 'u v sign [weight]'",
            ));
        }
        let vertex = |tok: &str| -> Result<usize> {
            let v: usize = tok
                .parse()
                .map_err(|_| parse_err(line_no, format!("invalid vertex '{tok}'")))?;
            if v == 0 || v > n {
                return Err(parse_err(line_no, format!("vertex {v} outside 1..={n}")));
            }
            Ok(v - 1)
        };
        let u = vertex(tokens[0])?;
        let v = vertex(tokens[1])?;
        let sign = parse_sign(tokens[2])
            .ok_or_else(|| parse_err(line_no, format!("invalid sign '{}'", tokens[2])))?;
        let weight = match tokens.get(3) {
            Some(tok) => {
                let w: f64 = tok
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("invalid weight '{tok}'")))?;
                if !(w.is_finite() && w > 0.0) {
                    return Err(parse_err(line_no, format!("nonpositive weight {tok}")));
                }
                w
            }
            None => 1.0,
        };
        if u == v {
            return Err(parse_err(line_no, "loop"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line_no, "duplicate edge"));
        }
        edges.push(Edge::new(u, v, sign));
        weights.push(weight);
    }

    let n = n.ok_or_else(|| parse_err(text.lines().count().max(1), "missing vertex count"))?;
    WeightedSignedGraph::new(SignedGraph::new(n, edges)?, weights)
}

pub fn serialize_edge_list(g: &WeightedSignedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{}", g.vertex_count()).unwrap();
    for (e, &w) in g.graph().edges().iter().zip(g.weights()) {
        if w == 1.0 {
            writeln!(out, "{} {} {}", e.u + 1, e.v + 1, e.sign).unwrap();
        } else {
            writeln!(out, "{} {} {} {}", e.u + 1, e.v + 1, e.sign, w).unwrap();
        }
    }
    out
}

pub fn serialize_signed(g: &SignedGraph) -> String {
    serialize_edge_list(&g.unit_weighted())
}
