//! Spanning 1-forests and the forest expansion of the weighted Laplacian
//! determinant: `det L(Σ, w) = Σ_Ψ 4^{c(Ψ)} w(Ψ)` over contrabalanced spanning
//! 1-forests `Ψ`.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, WeightedSignedGraph};

use super::DetValue;

/// Largest vertex count accepted by the exhaustive enumeration.
pub const MAX_FOREST_VERTICES: usize = 10;

/// One component of a 1-forest: its vertices, its unique cycle and the cycle sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestComponent {
    pub vertices: Vec<usize>,
    /// Cycle as a vertex sequence; the closing edge back to the first vertex is implicit.
    pub cycle: Vec<usize>,
    pub cycle_sign: Sign,
}

/// A spanning subgraph with `n` edges whose every component is a 1-tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneForest {
    /// Indices into the host graph's edge list, ascending.
    pub edges: Vec<usize>,
    pub components: Vec<ForestComponent>,
}

impl OneForest {
    pub fn is_contrabalanced(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.cycle_sign == Sign::Negative)
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }
}

/// Components of the subgraph `(V, edges)` when every component has exactly as
/// many edges as vertices; `None` otherwise. Components are ordered by least vertex.
pub(crate) fn one_tree_components(
    g: &SignedGraph,
    edges: &[usize],
) -> Option<Vec<ForestComponent>> {
    let n = g.vertex_count();
    let all = g.edges();
    let mut dsu = Dsu::new(n);
    let mut extras = Vec::new();
    for &i in edges {
        if !dsu.union(all[i].u, all[i].v) {
            extras.push(i);
        }
    }
    let mut vcount = vec![0usize; n];
    let mut ecount = vec![0usize; n];
    for v in 0..n {
        vcount[dsu.find(v)] += 1;
    }
    for &i in edges {
        ecount[dsu.find(all[i].u)] += 1;
    }
    if (0..n).any(|r| vcount[r] > 0 && ecount[r] != vcount[r]) {
        return None;
    }

    // spanning-tree adjacency: subset edges minus the one closing edge per component
    let mut tree: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); n];
    for &i in edges {
        if !extras.contains(&i) {
            let e = all[i];
            tree[e.u].push((e.v, e.sign));
            tree[e.v].push((e.u, e.sign));
        }
    }

    let mut by_root: Vec<Option<usize>> = vec![None; n];
    let mut comps: Vec<ForestComponent> = Vec::new();
    for v in 0..n {
        let r = dsu.find(v);
        match by_root[r] {
            Some(k) => comps[k].vertices.push(v),
            None => {
                by_root[r] = Some(comps.len());
                comps.push(ForestComponent {
                    vertices: vec![v],
                    cycle: Vec::new(),
                    cycle_sign: Sign::Positive,
                });
            }
        }
    }
    for &i in &extras {
        let e = all[i];
        let k = by_root[dsu.find(e.u)].expect("component exists");
        let (path, sign) = tree_path(&tree, e.u, e.v);
        comps[k].cycle = path;
        comps[k].cycle_sign = sign * e.sign;
    }
    Some(comps)
}

/// Vertex path and sign product from `a` to `b` in a forest.
fn tree_path(tree: &[Vec<(usize, Sign)>], a: usize, b: usize) -> (Vec<usize>, Sign) {
    let n = tree.len();
    let mut prev: Vec<Option<(usize, Sign)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[a] = true;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for &(y, s) in &tree[x] {
            if !seen[y] {
                seen[y] = true;
                prev[y] = Some((x, s));
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![b];
    let mut sign = Sign::Positive;
    let mut cur = b;
    while let Some((p, s)) = prev[cur] {
        sign = sign * s;
        path.push(p);
        cur = p;
    }
    path.reverse();
    (path, sign)
}

/// Calls `visit` with every `k`-subset of `0..m` in lexicographic order.
fn for_each_subset(m: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn check_bound(n: usize) -> Result<()> {
    if n > MAX_FOREST_VERTICES {
        Err(Error::TooLarge {
            n,
            limit: MAX_FOREST_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// All spanning 1-forests (`n`-edge subsets whose components are 1-trees),
/// optionally restricted to contrabalanced ones.
pub fn enumerate_spanning_1forests(
    g: &WeightedSignedGraph,
    contrabalanced_only: bool,
) -> Result<Vec<OneForest>> {
    let n = g.vertex_count();
    check_bound(n)?;
    let mut out = Vec::new();
    for_each_subset(g.edge_count(), n, |subset| {
        if let Some(components) = one_tree_components(g.graph(), subset) {
            let f = OneForest {
                edges: subset.to_vec(),
                components,
            };
            if !contrabalanced_only || f.is_contrabalanced() {
                out.push(f);
            }
        }
    });
    Ok(out)
}

/// `Σ 4^{c(Ψ)} w(Ψ)` over contrabalanced spanning 1-forests; exact for integer weights.
pub fn forest_det(g: &WeightedSignedGraph) -> Result<DetValue> {
    let forests = enumerate_spanning_1forests(g, true)?;
    Ok(match g.integer_weights() {
        Some(w) => {
            let total = forests.iter().fold(BigInt::zero(), |acc, f| {
                let weight = f
                    .edges
                    .iter()
                    .fold(BigInt::one(), |p, &i| p * BigInt::from(w[i]));
                acc + (BigInt::from(4u32).pow(f.component_count() as u32) * weight)
            });
            DetValue::Exact(total)
        }
        None => DetValue::Real(
            forests
                .iter()
                .map(|f| {
                    4f64.powi(f.component_count() as i32)
                        * f.edges.iter().map(|&i| g.weight(i)).product::<f64>()
                })
                .sum(),
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_edge_list;

    #[test]
    fn subsets_are_lexicographic_and_complete() {
        let mut seen = Vec::new();
        for_each_subset(5, 3, |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 10);
        assert_eq!(seen[0], vec![0, 1, 2]);
        assert_eq!(seen[9], vec![2, 3, 4]);
        let mut count = 0;
        for_each_subset(3, 0, |s| {
            assert!(s.is_empty());
            count += 1
        });
        assert_eq!(count, 1);
        for_each_subset(2, 3, |_| panic!("no subsets"));
    }

    #[test]
    fn negative_triangle_has_one_forest() {
        let g = parse_edge_list("3\n1 2 -\n2 3 -\n1 3 -").unwrap();
        let all = enumerate_spanning_1forests(&g, false).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_contrabalanced());
        assert_eq!(all[0].components[0].cycle.len(), 3);
        assert_eq!(forest_det(&g).unwrap(), DetValue::Exact(4.into()));
    }

    #[test]
    fn trees_have_none() {
        let g = parse_edge_list("4\n1 2 -\n2 3 +\n2 4 -").unwrap();
        assert!(enumerate_spanning_1forests(&g, false).unwrap().is_empty());
        assert_eq!(forest_det(&g).unwrap(), DetValue::Exact(0.into()));
    }

    #[test]
    fn weighted_triangle() {
        let g = parse_edge_list("3\n1 2 - 2\n2 3 - 3\n3 1 - 5").unwrap();
        assert_eq!(forest_det(&g).unwrap(), DetValue::Exact(120.into()));
        let r = parse_edge_list("3\n1 2 - 0.5\n2 3 -\n3 1 -").unwrap();
        match forest_det(&r).unwrap() {
            DetValue::Real(x) => assert!((x - 2.0).abs() < 1e-12),
            other => panic!("expected a real value, got {other:?}"),
        }
    }

    #[test]
    fn cycle_sign_matches_path_sign() {
        let g = parse_edge_list("5\n1 2 +\n2 3 -\n3 1 +\n3 4 -\n4 5 +\n5 3 +\n1 4 -").unwrap();
        for f in enumerate_spanning_1forests(&g, false).unwrap() {
            for c in &f.components {
                let mut walk = c.cycle.clone();
                walk.push(c.cycle[0]);
                assert_eq!(g.graph().path_sign(&walk).unwrap(), c.cycle_sign);
            }
        }
    }

    #[test]
    fn size_bound() {
        let text = format!(
            "11\n{}",
            (1..11)
                .map(|i| format!("{} {} +\n", i, i + 1))
                .collect::<String>()
        );
        let g = parse_edge_list(&text).unwrap();
        assert_eq!(
            forest_det(&g),
            Err(Error::TooLarge {
                n: 11,
                limit: MAX_FOREST_VERTICES
            })
        );
    }
}
