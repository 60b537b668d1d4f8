//! Signed distances against exhaustive simple-path enumeration.

use rand::Rng;
use sgdl_core::distance::{distance_table, DistanceKind};
use sgdl_core::generate::seeded_rng;
use sgdl_core::{Sign, SignedGraph};

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// For each target: (shortest length, some shortest path positive, some negative).
fn oracle_from(n: usize, adj: &[Vec<(usize, i32)>], src: usize) -> Vec<Option<(u32, bool, bool)>> {
    fn dfs(
        v: usize,
        len: u32,
        sign: i32,
        adj: &[Vec<(usize, i32)>],
        seen: &mut [bool],
        best: &mut [Option<(u32, bool, bool)>],
    ) {
        let entry = &mut best[v];
        match entry {
            Some((d, _, _)) if *d < len => {}
            Some((d, pos, neg)) if *d == len => {
                *pos |= sign > 0;
                *neg |= sign < 0;
            }
            _ => *entry = Some((len, sign > 0, sign < 0)),
        }
        for &(w, s) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                dfs(w, len + 1, sign * s, adj, seen, best);
                seen[w] = false;
            }
        }
    }
    let mut best = vec![None; n];
    let mut seen = vec![false; n];
    seen[src] = true;
    dfs(src, 0, 1, adj, &mut seen, &mut best);
    best
}

fn check(n: usize, triples: &[(usize, usize, i32)]) {
    let g = SignedGraph::from_triples(n, triples).unwrap();
    if !g.is_connected() {
        assert!(distance_table(&g).is_err());
        return;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v, s) in triples {
        adj[u].push((v, s));
        adj[v].push((u, s));
    }
    let table = distance_table(&g).unwrap();
    let dmax = table.distance_matrix(DistanceKind::Max).unwrap();
    let dmin = table.distance_matrix(DistanceKind::Min).unwrap();
    for u in 0..n {
        let expected = oracle_from(n, &adj, u);
        for (v, e) in expected.iter().enumerate() {
            let (d, pos, neg) = e.unwrap();
            let got = table.get(u, v);
            assert_eq!(
                (got.d, got.exists_pos, got.exists_neg),
                (d, pos, neg),
                "{triples:?} {u} {v}"
            );
            if u != v {
                let smax = if pos { 1.0 } else { -1.0 };
                let smin = if neg { -1.0 } else { 1.0 };
                assert_eq!(dmax.get(u, v), smax * d as f64);
                assert_eq!(dmin.get(u, v), smin * d as f64);
            }
        }
    }
}

#[test]
fn every_signed_graph_up_to_five_vertices() {
    let mut checked = 0usize;
    for n in 1..=5 {
        let all = pairs(n);
        for mask in 0u32..(1 << all.len()) {
            let chosen: Vec<(usize, usize)> = (0..all.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| all[i])
                .collect();
            for signs in 0u32..(1 << chosen.len()) {
                let triples: Vec<(usize, usize, i32)> = chosen
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| (u, v, if signs >> i & 1 == 1 { -1 } else { 1 }))
                    .collect();
                check(n, &triples);
                checked += 1;
            }
        }
    }
    assert!(checked > 50_000);
}

#[test]
fn every_six_vertex_graph_one_random_signing() {
    let all = pairs(6);
    let mut rng = seeded_rng(6);
    for mask in 0u32..(1 << all.len()) {
        let triples: Vec<(usize, usize, i32)> = (0..all.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| (all[i].0, all[i].1, if rng.gen_bool(0.5) { -1 } else { 1 }))
            .collect();
        check(6, &triples);
    }
}

#[test]
fn sign_helpers_match_oracle_convention() {
    let g = SignedGraph::from_triples(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, -1)]).unwrap();
    let t = distance_table(&g).unwrap();
    let s = t.get(0, 2);
    assert_eq!(
        (s.sigma_max(), s.sigma_min()),
        (Sign::Positive, Sign::Negative)
    );
    assert!(!s.is_compatible());
}
