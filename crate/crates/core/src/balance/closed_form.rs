use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::{Sign, WeightedSignedGraph};

use super::forest::one_tree_components;
use super::DetValue;

/// Shape recognised by [`closed_form_det`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Tree,
    /// Acyclic or mixed graph with at least one tree component.
    Forest,
    Cycle,
    Unicyclic,
    OneForest,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForm {
    pub shape: Shape,
    pub value: DetValue,
}

/// Closed-form `det L(Σ, w)` for trees, cycles, unicyclic graphs and 1-forests.
///
/// A tree component makes the Laplacian singular, so any graph with one gets 0.
/// When every component is a 1-tree the determinant is
/// `w(Σ) · Π_ψ 2(1 - σ(C_ψ))`. Graphs with a component holding more edges than
/// vertices return `None`.
pub fn closed_form_det(g: &WeightedSignedGraph) -> Option<ClosedForm> {
    let graph = g.graph();
    let (n, m) = (graph.vertex_count(), graph.edge_count());
    let comps = graph.components();
    let mut comp_of = vec![0usize; n];
    for (k, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = k;
        }
    }
    let mut edge_count = vec![0usize; comps.len()];
    for e in graph.edges() {
        edge_count[comp_of[e.u]] += 1;
    }
    if comps.iter().zip(&edge_count).any(|(c, &ec)| ec > c.len()) {
        return None;
    }

    let zero = || match g.has_integer_weights() {
        true => DetValue::Exact(BigInt::zero()),
        false => DetValue::Real(0.0),
    };
    if comps.iter().zip(&edge_count).any(|(c, &ec)| ec < c.len()) {
        let shape = if comps.len() == 1 {
            Shape::Tree
        } else {
            Shape::Forest
        };
        return Some(ClosedForm {
            shape,
            value: zero(),
        });
    }

    let all: Vec<usize> = (0..m).collect();
    let one_trees = one_tree_components(graph, &all).expect("every component is a 1-tree");
    let factor: u32 = one_trees
        .iter()
        .map(|c| match c.cycle_sign {
            Sign::Negative => 4,
            Sign::Positive => 0,
        })
        .product();
    let shape = if one_trees.len() > 1 {
        Shape::OneForest
    } else if (0..n).all(|v| graph.degree(v) == 2) {
        Shape::Cycle
    } else {
        Shape::Unicyclic
    };
    let value = match g.integer_weights() {
        Some(w) => DetValue::Exact(
            w.iter().fold(BigInt::one(), |p, &x| p * BigInt::from(x)) * BigInt::from(factor),
        ),
        None => DetValue::Real(g.weights().iter().product::<f64>() * factor as f64),
    };
    Some(ClosedForm { shape, value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_edge_list;

    fn cf(text: &str) -> Option<ClosedForm> {
        closed_form_det(&parse_edge_list(text).unwrap())
    }

    #[test]
    fn tree_is_zero() {
        let r = cf("4\n1 2 - 3\n2 3 + 2\n2 4 -").unwrap();
        assert_eq!(r.shape, Shape::Tree);
        assert_eq!(r.value, DetValue::Exact(0.into()));
    }

    #[test]
    fn cycles() {
        let r = cf("3\n1 2 - 2\n2 3 - 3\n3 1 - 5").unwrap();
        assert_eq!(r.shape, Shape::Cycle);
        assert_eq!(r.value, DetValue::Exact(120.into()));
        let r = cf("4\n1 2 +\n2 3 -\n3 4 -\n4 1 +").unwrap();
        assert_eq!(r.value, DetValue::Exact(0.into()));
    }

    #[test]
    fn triangle_with_pendant() {
        let r = cf("4\n1 2 -\n2 3 -\n1 3 -\n3 4 +").unwrap();
        assert_eq!(r.shape, Shape::Unicyclic);
        assert_eq!(r.value, DetValue::Exact(4.into()));
    }

    #[test]
    fn two_negative_triangles() {
        let r = cf("6\n1 2 -\n2 3 -\n1 3 -\n4 5 -\n5 6 -\n4 6 -").unwrap();
        assert_eq!(r.shape, Shape::OneForest);
        assert_eq!(r.value, DetValue::Exact(16.into()));
    }

    #[test]
    fn dense_graphs_not_applicable() {
        assert!(cf("4\n1 2 -\n2 3 -\n1 3 -\n3 4 +\n1 4 +").is_none());
    }

    #[test]
    fn forest_with_isolated_vertex() {
        let r = cf("4\n1 2 -\n2 3 -\n1 3 -").unwrap();
        assert_eq!(r.shape, Shape::Forest);
        assert_eq!(r.value, DetValue::Exact(0.into()));
    }
}
