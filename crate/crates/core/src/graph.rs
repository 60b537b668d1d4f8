//! Signed graph data model: construction, switching, path signs and components.
//!
//! Vertices are 0-based everywhere in the library. Graphs are immutable once
//! built; every operation returns a new value.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Mul;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::dsu::Dsu;
use crate::error::{Error, Result};

/// An edge sign, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn from_i32(v: i32) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.to_i32() as f64
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// An undirected edge as given at construction (endpoint order is kept).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn new(u: usize, v: usize, sign: Sign) -> Edge {
        Edge { u, v, sign }
    }

    /// Endpoints with the lower index first.
    pub fn ordered(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Neighbor entry of the adjacency list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Neighbor {
    pub vertex: usize,
    pub sign: Sign,
    pub edge: usize,
}

/// A simple undirected graph with `±1` edge signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Neighbor>>,
}

impl SignedGraph {
    /// Builds a graph, rejecting loops, out-of-range endpoints and repeated pairs.
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<SignedGraph> {
        let mut adjacency: Vec<Vec<Neighbor>> = vec![Vec::new(); n];
        for (idx, e) in edges.iter().enumerate() {
            if e.u >= n || e.v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {} has an endpoint outside 1..={}",
                    idx + 1,
                    n
                )));
            }
            if e.u == e.v {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", e.u + 1)));
            }
            if adjacency[e.u].iter().any(|nb| nb.vertex == e.v) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {} {}",
                    e.u + 1,
                    e.v + 1
                )));
            }
            adjacency[e.u].push(Neighbor {
                vertex: e.v,
                sign: e.sign,
                edge: idx,
            });
            adjacency[e.v].push(Neighbor {
                vertex: e.u,
                sign: e.sign,
                edge: idx,
            });
        }
        Ok(SignedGraph {
            n,
            edges,
            adjacency,
        })
    }

    /// Convenience constructor from `(u, v, ±1)` triples.
    pub fn from_triples(n: usize, triples: &[(usize, usize, i32)]) -> Result<SignedGraph> {
        let edges = triples
            .iter()
            .map(|&(u, v, s)| {
                Sign::from_i32(s)
                    .map(|sign| Edge::new(u, v, sign))
                    .ok_or_else(|| Error::InvalidGraph(format!("sign {s} is not ±1")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedGraph::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[Neighbor] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adjacency
            .get(u)?
            .iter()
            .find(|nb| nb.vertex == v)
            .map(|nb| nb.edge)
    }

    pub fn sign_between(&self, u: usize, v: usize) -> Option<Sign> {
        self.edge_between(u, v).map(|e| self.edges[e].sign)
    }

    pub fn is_connected(&self) -> bool {
        self.first_unreachable().is_none()
    }

    /// First vertex unreachable from vertex 0, if any.
    pub fn first_unreachable(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for nb in &self.adjacency[x] {
                if !seen[nb.vertex] {
                    seen[nb.vertex] = true;
                    queue.push_back(nb.vertex);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        match self.first_unreachable() {
            Some(v) => Err(Error::Disconnected {
                from: 0,
                unreachable: v,
            }),
            None => Ok(()),
        }
    }

    /// Partition of the vertices into connected components.
    ///
    /// Components are ordered by their least vertex and each vertex set is sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut dsu = Dsu::new(self.n);
        for e in &self.edges {
            dsu.union(e.u, e.v);
        }
        let mut index_of_root = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            let r = dsu.find(v);
            if index_of_root[r] == usize::MAX {
                index_of_root[r] = out.len();
                out.push(Vec::new());
            }
            out[index_of_root[r]].push(v);
        }
        out
    }

    /// Product of the edge signs along a walk.
    pub fn path_sign(&self, walk: &[usize]) -> Result<Sign> {
        let mut sign = Sign::Positive;
        for pair in walk.windows(2) {
            if pair[0] >= self.n || pair[1] >= self.n {
                return Err(Error::InvalidArgument(format!(
                    "walk vertex outside 1..={}",
                    self.n
                )));
            }
            let s = self
                .sign_between(pair[0], pair[1])
                .ok_or(Error::NotAdjacent(pair[0], pair[1]))?;
            sign = sign * s;
        }
        Ok(sign)
    }

    /// Switches the graph by `zeta`: edge `uv` gets sign `ζ(u)σ(uv)ζ(v)`.
    pub fn switch(&self, zeta: &SwitchingFunction) -> Result<SignedGraph> {
        if zeta.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: zeta.len(),
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(e.u, e.v, zeta.get(e.u) * e.sign * zeta.get(e.v)))
            .collect();
        SignedGraph::new(self.n, edges)
    }

    /// Same graph with every sign replaced by `sign`.
    pub fn with_uniform_sign(&self, sign: Sign) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(e.u, e.v, sign))
            .collect();
        SignedGraph::new(self.n, edges).expect("same shape as a valid graph")
    }

    pub fn is_all_positive(&self) -> bool {
        self.edges.iter().all(|e| e.sign.is_positive())
    }

    /// Unit-weighted view of this graph.
    pub fn unit_weighted(&self) -> WeightedSignedGraph {
        WeightedSignedGraph::new(self.clone(), vec![1.0; self.edge_count()])
            .expect("unit weights are valid")
    }
}

/// A signed graph with strictly positive edge weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedSignedGraph {
    base: SignedGraph,
    weights: Vec<f64>,
    integral: bool,
}

impl WeightedSignedGraph {
    pub fn new(base: SignedGraph, weights: Vec<f64>) -> Result<WeightedSignedGraph> {
        if weights.len() != base.edge_count() {
            return Err(Error::LengthMismatch {
                expected: base.edge_count(),
                got: weights.len(),
            });
        }
        if let Some(i) = weights.iter().position(|w| !(w.is_finite() && *w > 0.0)) {
            return Err(Error::InvalidGraph(format!(
                "edge {} has nonpositive weight {}",
                i + 1,
                weights[i]
            )));
        }
        let integral = weights
            .iter()
            .all(|w| w.fract() == 0.0 && *w <= i64::MAX as f64);
        Ok(WeightedSignedGraph {
            base,
            weights,
            integral,
        })
    }

    pub fn graph(&self) -> &SignedGraph {
        &self.base
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, edge: usize) -> f64 {
        self.weights[edge]
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.base.edge_count()
    }

    /// True when every weight is an integer; exact determinant paths apply.
    pub fn has_integer_weights(&self) -> bool {
        self.integral
    }

    pub fn integer_weights(&self) -> Option<Vec<i64>> {
        self.integral
            .then(|| self.weights.iter().map(|&w| w as i64).collect())
    }

    pub fn switch(&self, zeta: &SwitchingFunction) -> Result<WeightedSignedGraph> {
        Ok(WeightedSignedGraph {
            base: self.base.switch(zeta)?,
            weights: self.weights.clone(),
            integral: self.integral,
        })
    }

    pub fn into_parts(self) -> (SignedGraph, Vec<f64>) {
        (self.base, self.weights)
    }
}

/// A vertex function `ζ: V → {±1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingFunction {
    zeta: Vec<Sign>,
}

impl SwitchingFunction {
    pub fn new(zeta: Vec<Sign>) -> SwitchingFunction {
        SwitchingFunction { zeta }
    }

    pub fn identity(n: usize) -> SwitchingFunction {
        SwitchingFunction {
            zeta: vec![Sign::Positive; n],
        }
    }

    pub fn from_i32(values: &[i32]) -> Result<SwitchingFunction> {
        values
            .iter()
            .map(|&v| {
                Sign::from_i32(v).ok_or_else(|| Error::InvalidArgument(format!("{v} is not ±1")))
            })
            .collect::<Result<Vec<_>>>()
            .map(SwitchingFunction::new)
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SwitchingFunction {
        SwitchingFunction {
            zeta: (0..n)
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        Sign::Positive
                    } else {
                        Sign::Negative
                    }
                })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.zeta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeta.is_empty()
    }

    pub fn get(&self, v: usize) -> Sign {
        self.zeta[v]
    }

    pub fn values(&self) -> &[Sign] {
        &self.zeta
    }
}

/// Per-edge `(tail, head)` assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// Validates that every arc covers the endpoints of the matching edge.
    pub fn new(g: &SignedGraph, arcs: Vec<(usize, usize)>) -> Result<Orientation> {
        if arcs.len() != g.edge_count() {
            return Err(Error::LengthMismatch {
                expected: g.edge_count(),
                got: arcs.len(),
            });
        }
        for (i, (&(t, h), e)) in arcs.iter().zip(g.edges()).enumerate() {
            let (a, b) = e.ordered();
            if (t.min(h), t.max(h)) != (a, b) {
                return Err(Error::OrientationMismatch(i));
            }
        }
        Ok(Orientation { arcs })
    }

    /// Tail is the lower-indexed endpoint.
    pub fn canonical(g: &SignedGraph) -> Orientation {
        Orientation {
            arcs: g.edges().iter().map(Edge::ordered).collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(g: &SignedGraph, rng: &mut R) -> Orientation {
        Orientation {
            arcs: g
                .edges()
                .iter()
                .map(|e| {
                    let (a, b) = e.ordered();
                    if rng.gen_bool(0.5) {
                        (a, b)
                    } else {
                        (b, a)
                    }
                })
                .collect(),
        }
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}
