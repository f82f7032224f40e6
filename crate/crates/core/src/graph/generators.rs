use std::collections::HashSet;

use super::lattice::{gen_lattice_subgraph, LatticeEmbedding};
use super::Graph;
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Draws allowed before [`gen_random_connected`] gives up.
pub const RANDOM_RETRY_BUDGET: usize = 1000;

fn require(family: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::TooFewVertices { family, n, min });
    }
    Ok(())
}

pub fn gen_path(n: usize) -> Result<Graph> {
    require("path", n, 2)?;
    let edges = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::from_sorted_edges(n, edges))
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    require("cycle", n, 3)?;
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Star with its centre at the highest id, `n - 1`.
pub fn gen_star(n: usize) -> Result<Graph> {
    require("star", n, 2)?;
    let edges = (0..n - 1).map(|i| (i, n - 1)).collect();
    Ok(Graph::from_sorted_edges(n, edges))
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    require("complete", n, 2)?;
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Join of an edgeless graph on `n - p` vertices with `K_p`.
///
/// The `p` centre vertices are the last ids, so the Laplacian has the block
/// layout `[[p I, -J], [-J, n I - J]]`. `p = 1` is the star, `p = n - 1` is `K_n`.
pub fn gen_join(n: usize, p: usize) -> Result<Graph> {
    if n < 2 || p == 0 || p >= n {
        return Err(Error::JoinParameter { n, p });
    }
    let first_center = n - p;
    let mut edges = Vec::with_capacity(p * (n - p) + p * (p - 1) / 2);
    for u in 0..n {
        for v in (u + 1).max(first_center)..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Erdős–Rényi `G(n, p)` conditioned on connectivity by rejection.
///
/// Pairs `(u, v)`, `u < v`, are visited in lexicographic order and kept when the
/// next [`SplitMix64`] uniform is below `probability`. Rejected draws continue
/// the same stream, so the result depends only on `(n, probability, seed)`.
pub fn gen_random_connected(n: usize, probability: f64, seed: u64) -> Result<Graph> {
    require("random graph", n, 1)?;
    if !(probability > 0.0 && probability <= 1.0) {
        return Err(Error::InvalidProbability(probability));
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..RANDOM_RETRY_BUDGET {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.next_f64() < probability {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_sorted_edges(n, edges);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RetryBudget {
        attempts: RANDOM_RETRY_BUDGET,
        probability,
    })
}

/// Full rectangular grid `dims[0] × dims[1] × …` as an induced lattice subgraph.
/// Vertex ids follow lexicographic coordinate order.
pub fn gen_grid(dims: &[usize]) -> Result<(Graph, LatticeEmbedding)> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::InvalidArgument(format!(
            "grid dimensions must be positive, got {dims:?}"
        )));
    }
    let total: usize = dims.iter().product();
    let mut coords = Vec::with_capacity(total);
    let mut current = vec![0i64; dims.len()];
    for _ in 0..total {
        coords.push(current.clone());
        for axis in (0..dims.len()).rev() {
            current[axis] += 1;
            if (current[axis] as usize) < dims[axis] {
                break;
            }
            current[axis] = 0;
        }
    }
    gen_lattice_subgraph(coords, true, None)
}

/// Random connected induced subgraph of `ℤ^ν` with exactly `n` vertices, grown
/// from the origin by attaching a uniformly chosen lattice neighbour of a
/// uniformly chosen existing vertex. Vertex ids follow lexicographic coordinate order.
pub fn gen_lattice_cluster(nu: usize, n: usize, seed: u64) -> Result<(Graph, LatticeEmbedding)> {
    if nu == 0 {
        return Err(Error::InvalidArgument("lattice dimension must be positive".into()));
    }
    require("lattice cluster", n, 1)?;
    let mut rng = SplitMix64::new(seed);
    let mut points = vec![vec![0i64; nu]];
    let mut seen: HashSet<Vec<i64>> = points.iter().cloned().collect();
    while points.len() < n {
        let base = &points[rng.next_below(points.len())];
        let mut candidate = base.clone();
        let axis = rng.next_below(nu);
        candidate[axis] += if rng.next_bool() { 1 } else { -1 };
        if seen.insert(candidate.clone()) {
            points.push(candidate);
        }
    }
    points.sort();
    gen_lattice_subgraph(points, true, None)
}
