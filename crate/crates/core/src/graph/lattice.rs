use std::collections::HashMap;

use super::Graph;
use crate::error::{Error, Result};

/// Integer coordinates placing each vertex of a graph in the cubic lattice `ℤ^ν`.
///
/// Every graph edge joins lattice neighbours (coordinates differing by ±1 in
/// exactly one axis). When `induced` is set the converse holds as well: any two
/// lattice neighbours among the vertices are adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeEmbedding {
    nu: usize,
    coords: Vec<Vec<i64>>,
    induced: bool,
}

pub(crate) fn is_lattice_neighbor(a: &[i64], b: &[i64]) -> bool {
    let mut diff = 0;
    for (x, y) in a.iter().zip(b) {
        let d = (x - y).abs();
        if d > 1 {
            return false;
        }
        diff += d;
    }
    diff == 1
}

impl LatticeEmbedding {
    pub fn new(nu: usize, coords: Vec<Vec<i64>>, induced: bool) -> Result<Self> {
        if nu == 0 {
            return Err(Error::InvalidArgument("lattice dimension must be positive".into()));
        }
        if coords.is_empty() {
            return Err(Error::TooFewVertices {
                family: "lattice embedding",
                n: 0,
                min: 1,
            });
        }
        let mut index: HashMap<&[i64], usize> = HashMap::with_capacity(coords.len());
        for (v, c) in coords.iter().enumerate() {
            if c.len() != nu {
                return Err(Error::DimensionMismatch {
                    vertex: v,
                    expected: nu,
                    found: c.len(),
                });
            }
            if let Some(&first) = index.get(c.as_slice()) {
                return Err(Error::DuplicateCoordinate { first, second: v });
            }
            index.insert(c, v);
        }
        Ok(Self { nu, coords, induced })
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn induced(&self) -> bool {
        self.induced
    }

    pub fn coords(&self) -> &[Vec<i64>] {
        &self.coords
    }

    pub fn coord(&self, v: usize) -> &[i64] {
        &self.coords[v]
    }

    /// Map from coordinates to vertex id.
    pub fn index(&self) -> HashMap<&[i64], usize> {
        self.coords.iter().enumerate().map(|(v, c)| (c.as_slice(), v)).collect()
    }

    /// Checks that this embedding is consistent with `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if g.n() != self.n() {
            return Err(Error::InconsistentEmbedding(format!(
                "graph has {} vertices, embedding has {}",
                g.n(),
                self.n()
            )));
        }
        for (index, &(u, v)) in g.edges().iter().enumerate() {
            if !is_lattice_neighbor(&self.coords[u], &self.coords[v]) {
                return Err(Error::NotLatticeNeighbors { index, u, v });
            }
        }
        if self.induced {
            let lookup = self.index();
            for (u, c) in self.coords.iter().enumerate() {
                for axis in 0..self.nu {
                    let mut q = c.clone();
                    q[axis] += 1;
                    if let Some(&v) = lookup.get(q.as_slice()) {
                        if !g.has_edge(u, v) {
                            return Err(Error::InconsistentEmbedding(format!(
                                "embedding is marked induced but lattice neighbours {u} and {v} are not adjacent"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds a lattice subgraph from coordinates.
///
/// With `induced = true` the edges are exactly the lattice-neighbour pairs and
/// `edges` must be `None`. Otherwise the given edges (or none) are used after
/// checking that each joins lattice neighbours.
pub fn gen_lattice_subgraph(
    coords: Vec<Vec<i64>>,
    induced: bool,
    edges: Option<&[(usize, usize)]>,
) -> Result<(Graph, LatticeEmbedding)> {
    let nu = coords.first().map_or(0, Vec::len);
    let emb = LatticeEmbedding::new(nu, coords, induced)?;
    let n = emb.n();
    let graph = if induced {
        if edges.is_some() {
            return Err(Error::InvalidArgument(
                "an induced lattice subgraph takes its edges from the coordinates".into(),
            ));
        }
        let lookup = emb.index();
        let mut pairs = Vec::new();
        for (u, c) in emb.coords.iter().enumerate() {
            let mut q = c.clone();
            for axis in 0..nu {
                q[axis] += 1;
                if let Some(&v) = lookup.get(q.as_slice()) {
                    pairs.push((u, v));
                }
                q[axis] -= 1;
            }
        }
        Graph::from_edge_list(n, &pairs)?
    } else {
        let pairs = edges.unwrap_or(&[]);
        for (index, &(u, v)) in pairs.iter().enumerate() {
            if u < n && v < n && u != v && !is_lattice_neighbor(&emb.coords[u], &emb.coords[v]) {
                return Err(Error::NotLatticeNeighbors { index, u, v });
            }
        }
        Graph::from_edge_list(n, pairs)?
    };
    Ok((graph, emb))
}
