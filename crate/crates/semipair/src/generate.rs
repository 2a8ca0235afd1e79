//! Deterministic instance generators: random block graphs, random
//! degree-capped connected graphs, and an exhaustive catalog of small
//! connected graphs up to isomorphism. All randomness comes from a seeded
//! ChaCha stream, so the same arguments always produce the same graph.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

/// Connected block graph on exactly `n_target` vertices, grown by repeatedly
/// gluing a random clique (2 ..= max_clique vertices) onto a random existing
/// vertex.
pub fn random_block_graph(
    seed: u64,
    n_target: usize,
    max_clique: usize,
) -> Result<Graph, GenError> {
    if n_target < 2 {
        return Err(GenError::Infeasible(format!(
            "n_target = {n_target}, need at least 2"
        )));
    }
    if max_clique < 2 {
        return Err(GenError::Infeasible(format!(
            "max_clique = {max_clique}, need at least 2"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut count = 1usize; // vertex 0 exists up front
    while count < n_target {
        let room = (n_target - count).min(max_clique - 1);
        let fresh = rng.gen_range(1..=room);
        let anchor = rng.gen_range(0..count);
        let clique: Vec<usize> = std::iter::once(anchor)
            .chain(count..count + fresh)
            .collect();
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                edges.push((u, v));
            }
        }
        count += fresh;
    }
    Ok(Graph::build(n_target, &edges).expect("generated ids are in range"))
}

/// Connected graph on `n` vertices with maximum degree at most `max_deg`:
/// a random degree-capped spanning tree plus a few random extra edges that
/// respect the cap.
pub fn random_bounded_degree_graph(
    seed: u64,
    n: usize,
    max_deg: usize,
) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::Infeasible("n = 0".into()));
    }
    if max_deg == 0 && n > 1 {
        return Err(GenError::Infeasible(
            "max_deg = 0 cannot connect two or more vertices".into(),
        ));
    }
    if max_deg == 1 && n > 2 {
        return Err(GenError::Infeasible(
            "max_deg = 1 cannot connect three or more vertices".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    for v in 1..n {
        // the most recently attached vertex has degree 1 < max_deg, so with
        // max_deg >= 2 an open spot always exists
        let open: Vec<usize> = (0..v).filter(|&u| deg[u] < max_deg).collect();
        let u = open[rng.gen_range(0..open.len())];
        edges.push((u, v));
        deg[u] += 1;
        deg[v] += 1;
    }
    if n >= 2 {
        let has = |edges: &[(usize, usize)], a: usize, b: usize| {
            edges
                .iter()
                .any(|&(x, y)| (x, y) == (a.min(b), a.max(b)))
        };
        for _ in 0..2 * n {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b && deg[a] < max_deg && deg[b] < max_deg && !has(&edges, a, b) {
                edges.push((a.min(b), a.max(b)));
                deg[a] += 1;
                deg[b] += 1;
            }
        }
    }
    Ok(Graph::build(n, &edges).expect("generated ids are in range"))
}

/// Every connected graph with n_min ..= n_max vertices, one representative
/// per isomorphism class, in a deterministic order. Exponential in n — meant
/// for n_max <= 5 or so.
pub fn connected_catalog(n_min: usize, n_max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in n_min..=n_max {
        assert!(n <= 6, "catalog enumeration is exponential in n");
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let mut index = vec![vec![0usize; n]; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            index[u][v] = i;
            index[v][u] = i;
        }
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        for mask in 0u32..(1u32 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::build(n, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            // keep the graph only if its mask is the smallest over all
            // relabelings: exactly one representative per isomorphism class
            let canonical = perms
                .iter()
                .map(|p| {
                    edges
                        .iter()
                        .fold(0u32, |m, &(u, v)| m | 1 << index[p[u]][p[v]])
                })
                .min()
                .unwrap_or(0);
            if canonical == mask {
                out.push(g);
            }
        }
    }
    out
}
