//! Finite simple undirected graphs and their three matrices.
//!
//! Vertices are the contiguous ids `0..n`. Edges are stored once, as `(u, v)`
//! with `u < v`, in lexicographic order; neighbour lists are sorted so that
//! adjacency tests are a binary search.

mod generators;
pub mod io;
mod lattice;

pub use generators::{
    gen_complete, gen_cycle, gen_grid, gen_join, gen_lattice_cluster, gen_path, gen_random_connected, gen_star,
    RANDOM_RETRY_BUDGET,
};
pub use lattice::{gen_lattice_subgraph, LatticeEmbedding};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::matrix::SymMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a simple graph from unordered pairs; duplicates (in either
    /// orientation) collapse. Errors carry the index of the offending pair.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooFewVertices {
                family: "graph",
                n,
                min: 1,
            });
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for (line, &(u, v)) in pairs.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { line, vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line, vertex: u });
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_sorted_edges(n, edges))
    }

    fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        let degrees = neighbors.iter().map(Vec::len).collect();
        Self {
            n,
            edges,
            neighbors,
            degrees,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// `a_uv` as a real number.
    #[inline]
    pub fn a(&self, u: usize, v: usize) -> f64 {
        if self.has_edge(u, v) {
            1.0
        } else {
            0.0
        }
    }

    /// Number of common neighbours, i.e. `(A²)_uv` for `u != v` and `d_u` for `u == v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        let (a, b) = (&self.neighbors[u], &self.neighbors[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Regularity degree, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = *self.degrees.first()?;
        self.degrees.iter().all(|&x| x == d).then_some(d)
    }

    /// First Zagreb index `Σ_v d_v²`.
    pub fn zagreb_index(&self) -> u64 {
        self.degrees.iter().map(|&d| (d as u64) * (d as u64)).sum()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.neighbors[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == self.n
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_sorted_edges(self.n, edges)
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut inverse = vec![0; self.n];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let pairs: Vec<_> = self.edges.iter().map(|&(u, v)| (inverse[u], inverse[v])).collect();
        Graph::from_edge_list(self.n, &pairs).expect("relabeling preserves simplicity")
    }

    pub fn adjacency_matrix(&self) -> SymMatrix {
        let mut m = SymMatrix::zeros(self.n);
        for &(u, v) in &self.edges {
            m.set(u, v, 1.0);
        }
        m
    }

    /// Combinatorial Laplacian `H = Deg - A`.
    pub fn laplacian(&self) -> SymMatrix {
        let mut m = SymMatrix::zeros(self.n);
        for (v, &d) in self.degrees.iter().enumerate() {
            m.set(v, v, d as f64);
        }
        for &(u, v) in &self.edges {
            m.set(u, v, -1.0);
        }
        m
    }

    /// Renormalized Laplacian `Deg^{-1/2} H Deg^{-1/2}`; needs every degree positive.
    pub fn normalized_laplacian(&self) -> Result<SymMatrix> {
        if let Some(vertex) = self.degrees.iter().position(|&d| d == 0) {
            return Err(Error::IsolatedVertex { vertex });
        }
        let mut m = SymMatrix::identity(self.n);
        for &(u, v) in &self.edges {
            let w = ((self.degrees[u] * self.degrees[v]) as f64).sqrt();
            m.set(u, v, -1.0 / w);
        }
        Ok(m)
    }
}
