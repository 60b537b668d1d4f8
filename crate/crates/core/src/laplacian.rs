//! Matrix builders: weighted adjacency, degree, Laplacian, oriented incidence,
//! and the signed distance Laplacians `L^max = Tr - D^max`, `L^min = Tr - D^min`.

use crate::distance::{distance_table, DistanceKind, DistanceTable};
use crate::error::{Error, Result};
use crate::graph::{Orientation, WeightedSignedGraph};
use crate::matrix::{IncidenceMatrix, SquareMatrix};
use crate::SignedGraph;

/// `a_ij = σ(v_i v_j) w(v_i v_j)` on edges, zero elsewhere.
pub fn adjacency_matrix(g: &WeightedSignedGraph) -> SquareMatrix {
    let n = g.vertex_count();
    let mut data = vec![0.0; n * n];
    for (e, &w) in g.graph().edges().iter().zip(g.weights()) {
        let a = e.sign.to_f64() * w;
        data[e.u * n + e.v] = a;
        data[e.v * n + e.u] = a;
    }
    SquareMatrix::from_data(n, data).expect("n*n entries")
}

/// Diagonal of incident weight sums; signs are ignored.
pub fn weighted_degree_matrix(g: &WeightedSignedGraph) -> SquareMatrix {
    let mut deg = vec![0.0; g.vertex_count()];
    for (e, &w) in g.graph().edges().iter().zip(g.weights()) {
        deg[e.u] += w;
        deg[e.v] += w;
    }
    SquareMatrix::diagonal(&deg)
}

pub fn weighted_laplacian(g: &WeightedSignedGraph) -> SquareMatrix {
    weighted_degree_matrix(g)
        .sub(&adjacency_matrix(g))
        .expect("same order")
}

/// Oriented incidence matrix: column `e` holds `σ(e)√w(e)` at the tail and
/// `-√w(e)` at the head.
pub fn incidence_matrix(g: &WeightedSignedGraph, o: &Orientation) -> Result<IncidenceMatrix> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if o.len() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            got: o.len(),
        });
    }
    let mut data = vec![0.0; n * m];
    for (j, (e, &(tail, head))) in g.graph().edges().iter().zip(o.arcs()).enumerate() {
        let (a, b) = e.ordered();
        if (tail.min(head), tail.max(head)) != (a, b) {
            return Err(Error::OrientationMismatch(j));
        }
        let root = g.weight(j).sqrt();
        data[tail * m + j] = e.sign.to_f64() * root;
        data[head * m + j] = -root;
    }
    Ok(IncidenceMatrix::new(
        n,
        m,
        data,
        o.clone(),
        g.has_integer_weights(),
    ))
}

/// `Tr(G) - D^kind` from a precomputed table.
pub fn distance_laplacian_from_table(
    table: &DistanceTable,
    kind: DistanceKind,
) -> Result<SquareMatrix> {
    let d = table.distance_matrix(kind)?;
    let tr: Vec<f64> = table.transmission().into_iter().map(|t| t as f64).collect();
    SquareMatrix::diagonal(&tr).sub(&d)
}

pub fn distance_laplacian(g: &SignedGraph, kind: DistanceKind) -> Result<SquareMatrix> {
    distance_laplacian_from_table(&distance_table(g)?, kind)
}
