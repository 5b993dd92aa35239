//! Simple undirected graphs on vertices `0..n`.

use std::collections::BTreeSet;

use crate::error::{input, Result};

pub type Vertex = usize;

/// A simple undirected graph. Neighbor lists are kept sorted and symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut sets = vec![BTreeSet::new(); n];
        for (x, y) in edges {
            if x >= n || y >= n {
                return Err(input(format!(
                    "edge ({x}, {y}) out of range for {n} vertices"
                )));
            }
            if x == y {
                return Err(input(format!("self-loop on vertex {x}")));
            }
            sets[x].insert(y);
            sets[y].insert(x);
        }
        Ok(Graph {
            adjacency: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adjacency.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, x: Vertex, y: Vertex) -> bool {
        self.adjacency[x].binary_search(&y).is_ok()
    }

    /// Edges `(x, y)` with `x < y`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(x, ns)| ns.iter().filter(move |&&y| x < y).map(move |&y| (x, y)))
    }

    pub fn is_stable(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &x)| set[i + 1..].iter().all(|&y| !self.has_edge(x, y)))
    }

    /// Subgraph induced by `keep`, together with the map from new ids to old ids.
    /// New ids follow the order of `keep`.
    pub fn induced(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let adjacency = keep
            .iter()
            .map(|&v| {
                let mut ns: Vec<Vertex> = self.adjacency[v]
                    .iter()
                    .filter(|&&w| new_id[w] != usize::MAX)
                    .map(|&w| new_id[w])
                    .collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        (Graph { adjacency }, keep.to_vec())
    }

    /// Degeneracy (max over the min-degree elimination of the remaining minimum degree).
    pub fn degeneracy(&self) -> usize {
        let n = self.vertex_count();
        let mut deg: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        let mut removed = vec![false; n];
        let mut best = 0;
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| deg[v])
                .expect("a vertex remains");
            best = best.max(deg[v]);
            removed[v] = true;
            for &w in &self.adjacency[v] {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        best
    }
}
