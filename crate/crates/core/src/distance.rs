//! Shortest-path distances with path-sign classification.
//!
//! For every ordered pair the table records the hop distance and whether some
//! shortest path is positive and whether some is negative. Both flags are
//! computed by a breadth-first layering: a vertex at distance `k` inherits the
//! flags of its predecessors at distance `k - 1`, composed with the sign of the
//! connecting edge. Path counts are never materialised.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph, WeightedSignedGraph};
use crate::matrix::SquareMatrix;

/// Which signed distance to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DistanceKind {
    /// `σ_max`: `-1` only if every shortest path is negative.
    Max,
    /// `σ_min`: `+1` only if every shortest path is positive.
    Min,
    /// Common value when the graph is distance-compatible.
    Pm,
}

impl DistanceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DistanceKind::Max => "max",
            DistanceKind::Min => "min",
            DistanceKind::Pm => "pm",
        }
    }
}

impl fmt::Display for DistanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DistanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(DistanceKind::Max),
            "min" => Ok(DistanceKind::Min),
            "pm" => Ok(DistanceKind::Pm),
            _ => Err(Error::InvalidArgument(format!(
                "unknown distance kind '{s}'"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairDistanceSummary {
    pub d: u32,
    pub exists_pos: bool,
    pub exists_neg: bool,
}

impl PairDistanceSummary {
    pub const DIAGONAL: PairDistanceSummary = PairDistanceSummary {
        d: 0,
        exists_pos: true,
        exists_neg: false,
    };

    pub fn sigma_max(&self) -> Sign {
        if self.exists_pos {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn sigma_min(&self) -> Sign {
        if self.exists_neg {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn is_compatible(&self) -> bool {
        !(self.exists_pos && self.exists_neg)
    }

    pub fn d_max(&self) -> i64 {
        self.sigma_max().to_i32() as i64 * self.d as i64
    }

    pub fn d_min(&self) -> i64 {
        self.sigma_min().to_i32() as i64 * self.d as i64
    }

    fn sign(&self, kind: DistanceKind) -> Sign {
        match kind {
            DistanceKind::Max | DistanceKind::Pm => self.sigma_max(),
            DistanceKind::Min => self.sigma_min(),
        }
    }
}

/// Distances and sign flags from `src` to every vertex.
pub fn sssp_signs(g: &SignedGraph, src: usize) -> Result<Vec<PairDistanceSummary>> {
    let n = g.vertex_count();
    if src >= n {
        return Err(Error::InvalidArgument(format!(
            "source {} outside 1..={n}",
            src + 1
        )));
    }
    let mut dist = vec![u32::MAX; n];
    let mut pos = vec![false; n];
    let mut neg = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([src]);
    dist[src] = 0;
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for nb in g.neighbors(x) {
            if dist[nb.vertex] == u32::MAX {
                dist[nb.vertex] = dist[x] + 1;
                queue.push_back(nb.vertex);
            }
        }
    }
    if let Some(v) = dist.iter().position(|&d| d == u32::MAX) {
        return Err(Error::Disconnected {
            from: src,
            unreachable: v,
        });
    }

    pos[src] = true;
    // BFS order guarantees every predecessor is final before its successors.
    for &v in order.iter().skip(1) {
        let (mut p, mut q) = (false, false);
        for nb in g.neighbors(v) {
            let u = nb.vertex;
            if dist[u] + 1 != dist[v] {
                continue;
            }
            match nb.sign {
                Sign::Positive => {
                    p |= pos[u];
                    q |= neg[u];
                }
                Sign::Negative => {
                    p |= neg[u];
                    q |= pos[u];
                }
            }
        }
        pos[v] = p;
        neg[v] = q;
    }

    Ok((0..n)
        .map(|v| PairDistanceSummary {
            d: dist[v],
            exists_pos: pos[v],
            exists_neg: neg[v],
        })
        .collect())
}

/// All-pairs table of [`PairDistanceSummary`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    entries: Vec<PairDistanceSummary>,
}

impl DistanceTable {
    pub fn new(g: &SignedGraph) -> Result<DistanceTable> {
        distance_table(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> PairDistanceSummary {
        self.entries[u * self.n + v]
    }

    /// Lexicographically least pair `(u, v)`, `u < v`, with both a positive and a
    /// negative shortest path.
    pub fn incompatible_pair(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .find(|&(u, v)| !self.get(u, v).is_compatible())
    }

    pub fn is_compatible(&self) -> bool {
        self.incompatible_pair().is_none()
    }

    /// Unsigned transmissions `Tr(v) = Σ_u d(v, u)`.
    pub fn transmission(&self) -> Vec<u64> {
        (0..self.n)
            .map(|v| (0..self.n).map(|u| self.get(v, u).d as u64).sum())
            .collect()
    }

    /// Signed distance matrix `D^max`, `D^min` or `D^±`.
    pub fn distance_matrix(&self, kind: DistanceKind) -> Result<SquareMatrix> {
        if kind == DistanceKind::Pm {
            if let Some((u, v)) = self.incompatible_pair() {
                return Err(Error::Incompatible(u, v));
            }
        }
        let data = self
            .entries
            .iter()
            .map(|e| match kind {
                DistanceKind::Max | DistanceKind::Pm => e.d_max() as f64,
                DistanceKind::Min => e.d_min() as f64,
            })
            .collect();
        SquareMatrix::from_data(self.n, data)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("u,v,d,exists_pos,exists_neg\n");
        for u in 0..self.n {
            for v in 0..self.n {
                let e = self.get(u, v);
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    u + 1,
                    v + 1,
                    e.d,
                    e.exists_pos,
                    e.exists_neg
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.n)
            .map(|u| {
                Value::Array(
                    (0..self.n)
                        .map(|v| {
                            let e = self.get(u, v);
                            json!({"d": e.d, "pos": e.exists_pos, "neg": e.exists_neg})
                        })
                        .collect(),
                )
            })
            .collect();
        json!({"n": self.n, "kind": "table", "rows": rows})
    }
}

/// Runs [`sssp_signs`] from every source (in parallel).
pub fn distance_table(g: &SignedGraph) -> Result<DistanceTable> {
    g.require_connected()?;
    let n = g.vertex_count();
    let rows: Vec<Vec<PairDistanceSummary>> = (0..n)
        .into_par_iter()
        .map(|src| sssp_signs(g, src))
        .collect::<Result<_>>()?;
    Ok(DistanceTable {
        n,
        entries: rows.into_iter().flatten().collect(),
    })
}

pub fn distance_matrix(table: &DistanceTable, kind: DistanceKind) -> Result<SquareMatrix> {
    table.distance_matrix(kind)
}

pub fn transmission(table: &DistanceTable) -> Vec<u64> {
    table.transmission()
}

/// Associated signed complete graph `K^{D^max}` / `K^{D^min}` as a weighted graph.
///
/// Edges are the pairs `u < v` in lexicographic order; each carries the
/// signed-distance sign and weight `d(u, v)`. Edges of `g` get weight 1 and
/// keep their sign. `Pm` requires a compatible table.
pub fn associated_complete(
    g: &SignedGraph,
    table: &DistanceTable,
    kind: DistanceKind,
) -> Result<WeightedSignedGraph> {
    g.require_connected()?;
    let n = g.vertex_count();
    if table.order() != n {
        return Err(Error::OrderMismatch(n, table.order()));
    }
    if kind == DistanceKind::Pm {
        if let Some((u, v)) = table.incompatible_pair() {
            return Err(Error::Incompatible(u, v));
        }
    }
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    let mut weights = Vec::with_capacity(edges.capacity());
    for u in 0..n {
        for v in u + 1..n {
            let e = table.get(u, v);
            edges.push(Edge::new(u, v, e.sign(kind)));
            weights.push(e.d as f64);
        }
    }
    WeightedSignedGraph::new(SignedGraph::new(n, edges)?, weights)
}
