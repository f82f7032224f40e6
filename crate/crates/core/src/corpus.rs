//! Deterministic graph collections used by the acceptance suite, the CLI
//! `report` command and the benchmarks.

use crate::error::Result;
use crate::graph::{
    gen_complete, gen_cycle, gen_grid, gen_join, gen_lattice_cluster, gen_path, gen_random_connected, gen_star, Graph,
    LatticeEmbedding,
};
use crate::rng::SplitMix64;

#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

#[derive(Debug, Clone)]
pub struct NamedLattice {
    pub name: String,
    pub graph: Graph,
    pub embedding: LatticeEmbedding,
}

fn named(name: String, graph: Graph) -> NamedGraph {
    NamedGraph { name, graph }
}

/// Paths, cycles, complete graphs, stars and every join `G_{n,p}` for each `n`.
pub fn family_graphs(sizes: &[usize]) -> Result<Vec<NamedGraph>> {
    let mut out = Vec::new();
    for &n in sizes {
        out.push(named(format!("path_{n}"), gen_path(n)?));
        if n >= 3 {
            out.push(named(format!("cycle_{n}"), gen_cycle(n)?));
        }
        out.push(named(format!("complete_{n}"), gen_complete(n)?));
        out.push(named(format!("star_{n}"), gen_star(n)?));
        for p in 2..n.saturating_sub(1) {
            out.push(named(format!("join_{n}_{p}"), gen_join(n, p)?));
        }
    }
    Ok(out)
}

/// `count` connected `G(n, p)` graphs with `4 ≤ n ≤ max_n` and `p ∈ [0.15, 0.6)`.
pub fn random_graphs(count: usize, max_n: usize, seed: u64) -> Result<Vec<NamedGraph>> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|i| {
            let n = 4 + rng.next_below(max_n.max(4) - 3);
            let p = 0.15 + 0.45 * rng.next_f64();
            let graph_seed = rng.next_u64();
            let g = gen_random_connected(n, p, graph_seed)?;
            Ok(named(format!("random_{i}_n{n}"), g))
        })
        .collect()
}

/// The small standard corpus: families on 4..=10 vertices plus random graphs.
pub fn standard_corpus(random_count: usize, seed: u64) -> Result<Vec<NamedGraph>> {
    let sizes: Vec<usize> = (4..=10).collect();
    let mut out = family_graphs(&sizes)?;
    out.extend(random_graphs(random_count, 40, seed)?);
    Ok(out)
}

/// Random lattice clusters alternating between `ℤ²` and `ℤ³`, with sizes
/// spread over `8..=max_n`, followed by a few full grids.
pub fn lattice_corpus(count: usize, max_n: usize, seed: u64) -> Result<Vec<NamedLattice>> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count + 3);
    for i in 0..count {
        let nu = 2 + i % 2;
        let n = 8 + rng.next_below(max_n.max(8) - 7);
        let (graph, embedding) = gen_lattice_cluster(nu, n, rng.next_u64())?;
        out.push(NamedLattice {
            name: format!("cluster_z{nu}_{i}_n{n}"),
            graph,
            embedding,
        });
    }
    for dims in [vec![6, 6], vec![12, 5], vec![4, 4, 4]] {
        let (graph, embedding) = gen_grid(&dims)?;
        let label: Vec<String> = dims.iter().map(usize::to_string).collect();
        out.push(NamedLattice {
            name: format!("grid_{}", label.join("x")),
            graph,
            embedding,
        });
    }
    Ok(out)
}
