use std::collections::VecDeque;

use crate::error::Result;
use crate::graph::{Sign, SignedGraph, SwitchingFunction};

use super::{BalanceReport, Certificate, Method};

/// Decides balance by switching a BFS spanning tree to all-positive and then
/// checking every non-tree edge.
///
/// A balanced graph yields the switching function as certificate; otherwise the
/// fundamental cycle of the first failing non-tree edge is returned.
pub fn is_balanced_switching(g: &SignedGraph) -> Result<BalanceReport> {
    g.require_connected()?;
    let n = g.vertex_count();
    let mut zeta = vec![Sign::Positive; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut tree_edge = vec![false; g.edge_count()];
    let mut seen = vec![false; n];
    if n > 0 {
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for nb in g.neighbors(x) {
                if !seen[nb.vertex] {
                    seen[nb.vertex] = true;
                    parent[nb.vertex] = x;
                    depth[nb.vertex] = depth[x] + 1;
                    zeta[nb.vertex] = zeta[x] * nb.sign;
                    tree_edge[nb.edge] = true;
                    queue.push_back(nb.vertex);
                }
            }
        }
    }

    for (idx, e) in g.edges().iter().enumerate() {
        if tree_edge[idx] || zeta[e.u] * e.sign * zeta[e.v] == Sign::Positive {
            continue;
        }
        let cycle = fundamental_cycle(&parent, &depth, e.u, e.v);
        return Ok(BalanceReport {
            balanced: false,
            method: Method::Switching,
            determinant: None,
            certificate: Some(Certificate::NegativeCycle(cycle)),
        });
    }

    Ok(BalanceReport {
        balanced: true,
        method: Method::Switching,
        determinant: None,
        certificate: Some(Certificate::Switching(SwitchingFunction::new(zeta))),
    })
}

/// Tree path `u → lca → v`; the closing edge `v u` is implicit.
fn fundamental_cycle(parent: &[usize], depth: &[usize], u: usize, v: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut up = vec![a];
    let mut down = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        down.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up.push(a);
        down.push(b);
    }
    down.pop();
    up.extend(down.into_iter().rev());
    up
}
