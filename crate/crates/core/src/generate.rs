//! Deterministic graph families and seeded random signed graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph, WeightedSignedGraph};

/// Attempts made by [`GraphKind::Random`] before giving up on connectivity.
pub const MAX_CONNECT_ATTEMPTS: usize = 1000;

/// Default edge probability for random graphs.
pub const DEFAULT_DENSITY: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphKind {
    Cycle,
    Path,
    Complete,
    /// Erdős–Rényi `G(n, density)`, resampled until connected.
    Random {
        density: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum SignSpec {
    AllPositive,
    AllNegative,
    /// Unordered vertex pairs whose edges are negative; all others positive.
    NegativeEdges(Vec<(usize, usize)>),
    /// One sign per edge, in generation order.
    Explicit(Vec<Sign>),
    /// Each edge is negative independently with this probability.
    Probability(f64),
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_probability(p: f64, what: &str) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{what} {p} outside [0, 1]")))
    }
}

fn family_pairs(kind: GraphKind, n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<(usize, usize)>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let pairs = match kind {
        GraphKind::Cycle => {
            if n < 3 {
                return Err(Error::InvalidArgument("cycles need n >= 3".into()));
            }
            let mut p: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            p.push((n - 1, 0));
            p
        }
        GraphKind::Path => (0..n - 1).map(|i| (i, i + 1)).collect(),
        GraphKind::Complete => all_pairs(n).collect(),
        GraphKind::Random { density } => {
            check_probability(density, "density")?;
            let mut found = None;
            for _ in 0..MAX_CONNECT_ATTEMPTS {
                let pairs: Vec<_> = all_pairs(n).filter(|_| rng.gen_bool(density)).collect();
                if pairs_connected(n, &pairs) {
                    found = Some(pairs);
                    break;
                }
            }
            found.ok_or(Error::ConnectivityNotReached(MAX_CONNECT_ATTEMPTS))?
        }
    };
    Ok(pairs)
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

fn pairs_connected(n: usize, pairs: &[(usize, usize)]) -> bool {
    let edges = pairs
        .iter()
        .map(|&(u, v)| Edge::new(u, v, Sign::Positive))
        .collect();
    SignedGraph::new(n, edges)
        .map(|g| g.is_connected())
        .unwrap_or(false)
}

fn assign_signs(
    pairs: &[(usize, usize)],
    spec: &SignSpec,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Sign>> {
    Ok(match spec {
        SignSpec::AllPositive => vec![Sign::Positive; pairs.len()],
        SignSpec::AllNegative => vec![Sign::Negative; pairs.len()],
        SignSpec::NegativeEdges(neg) => {
            for &(a, b) in neg {
                let key = (a.min(b), a.max(b));
                if !pairs.iter().any(|&(u, v)| (u.min(v), u.max(v)) == key) {
                    return Err(Error::InvalidArgument(format!(
                        "negative edge {} {} is not in the graph",
                        a + 1,
                        b + 1
                    )));
                }
            }
            pairs
                .iter()
                .map(|&(u, v)| {
                    let key = (u.min(v), u.max(v));
                    if neg.iter().any(|&(a, b)| (a.min(b), a.max(b)) == key) {
                        Sign::Negative
                    } else {
                        Sign::Positive
                    }
                })
                .collect()
        }
        SignSpec::Explicit(signs) => {
            if signs.len() != pairs.len() {
                return Err(Error::LengthMismatch {
                    expected: pairs.len(),
                    got: signs.len(),
                });
            }
            signs.clone()
        }
        SignSpec::Probability(p) => {
            check_probability(*p, "sign probability")?;
            pairs
                .iter()
                .map(|_| {
                    if rng.gen_bool(*p) {
                        Sign::Negative
                    } else {
                        Sign::Positive
                    }
                })
                .collect()
        }
    })
}

/// Builds a graph of the given family. Output depends only on the arguments.
pub fn generate(kind: GraphKind, n: usize, signs: &SignSpec, seed: u64) -> Result<SignedGraph> {
    let mut rng = seeded_rng(seed);
    let pairs = family_pairs(kind, n, &mut rng)?;
    let signs = assign_signs(&pairs, signs, &mut rng)?;
    let edges = pairs
        .iter()
        .zip(signs)
        .map(|(&(u, v), s)| Edge::new(u, v, s))
        .collect();
    SignedGraph::new(n, edges)
}

/// Random connected signed graph: a random spanning tree plus each remaining
/// pair with probability `density`, vertices relabelled by a random permutation.
pub fn random_connected<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    density: f64,
    neg_prob: f64,
) -> SignedGraph {
    assert!(n >= 1, "n must be at least 1");
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut pairs = Vec::new();
    let mut in_tree = vec![vec![false; n]; n];
    for i in 1..n {
        let j = rng.gen_range(0..i);
        in_tree[i][j] = true;
        in_tree[j][i] = true;
        pairs.push((perm[j], perm[i]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !in_tree[u][v] && rng.gen_bool(density) {
                pairs.push((perm[u], perm[v]));
            }
        }
    }
    pairs.shuffle(rng);
    let edges = pairs
        .into_iter()
        .map(|(u, v)| {
            let s = if rng.gen_bool(neg_prob) {
                Sign::Negative
            } else {
                Sign::Positive
            };
            Edge::new(u, v, s)
        })
        .collect();
    SignedGraph::new(n, edges).expect("generated pairs are simple")
}

/// [`random_connected`] with integer weights drawn uniformly from `1..=max_weight`.
pub fn random_connected_weighted<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    density: f64,
    neg_prob: f64,
    max_weight: u32,
) -> WeightedSignedGraph {
    let g = random_connected(rng, n, density, neg_prob);
    let weights = (0..g.edge_count())
        .map(|_| rng.gen_range(1..=max_weight) as f64)
        .collect();
    WeightedSignedGraph::new(g, weights).expect("weights are positive")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_five_cycle() {
        let g = generate(GraphKind::Cycle, 5, &SignSpec::AllNegative, 0).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(g.edges().iter().all(|e| e.sign == Sign::Negative));
        assert_eq!(g.edges()[4].ordered(), (0, 4));
        assert!(g.components().len() == 1);
    }

    #[test]
    fn positive_path() {
        let g = generate(GraphKind::Path, 3, &SignSpec::AllPositive, 0).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.is_all_positive());
    }

    #[test]
    fn random_is_deterministic() {
        let kind = GraphKind::Random { density: 0.5 };
        let a = generate(kind, 6, &SignSpec::Probability(0.5), 7).unwrap();
        let b = generate(kind, 6, &SignSpec::Probability(0.5), 7).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
    }

    #[test]
    fn invalid_sizes() {
        assert!(generate(GraphKind::Cycle, 2, &SignSpec::AllPositive, 0).is_err());
        assert!(generate(GraphKind::Path, 0, &SignSpec::AllPositive, 0).is_err());
        assert_eq!(
            generate(
                GraphKind::Random { density: 0.0 },
                4,
                &SignSpec::AllPositive,
                1
            ),
            Err(Error::ConnectivityNotReached(MAX_CONNECT_ATTEMPTS))
        );
        assert!(generate(GraphKind::Complete, 3, &SignSpec::Probability(1.5), 0).is_err());
    }

    #[test]
    fn negative_edge_set() {
        let spec = SignSpec::NegativeEdges(vec![(0, 3)]);
        let g = generate(GraphKind::Cycle, 4, &spec, 0).unwrap();
        assert_eq!(g.sign_between(3, 0), Some(Sign::Negative));
        assert_eq!(g.sign_between(0, 1), Some(Sign::Positive));
        let bad = SignSpec::NegativeEdges(vec![(0, 2)]);
        assert!(generate(GraphKind::Cycle, 4, &bad, 0).is_err());
    }

    #[test]
    fn random_connected_is_connected() {
        let mut rng = seeded_rng(11);
        for n in 1..9 {
            for _ in 0..20 {
                let g = random_connected_weighted(&mut rng, n, 0.3, 0.5, 5);
                assert!(g.graph().is_connected());
                assert!(g.weights().iter().all(|&w| (1.0..=5.0).contains(&w)));
            }
        }
    }
}
