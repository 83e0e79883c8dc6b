//! Immutable simple undirected graphs.
//!
//! A [`Graph`] is a value: it owns a sorted edge list together with sorted
//! neighbor lists and one adjacency bitset per vertex. Every "mutation"
//! (adding or removing an edge, deleting vertices) returns a new graph.

pub mod canon;
pub mod format;

use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub use canon::{canonical_code, canonical_form, canonical_labeling, CanonicalCode};
pub use format::{
    decode_edge_list, encode_edge_list, graph6_decode, graph6_encode, parse_graph, FormatError,
};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("({0}, {1}) is not an edge")]
    MissingEdge(Vertex, Vertex),
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    neighbors: Vec<Vec<Vertex>>,
    rows: Vec<FixedBitSet>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Pairs may be given in either
    /// orientation; loops, out-of-range endpoints and repeated pairs are
    /// rejected.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, normalized))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted(n, edges)
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Self {
        Self::from_sorted(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// Cycle 0-1-...-(n-1)-0, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Self::from_sorted(n, edges)
    }

    /// Star with center 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        Self::from_sorted(n, (1..n).map(|v| (0, v)).collect())
    }

    /// Edges must be normalized (u < v), sorted and distinct.
    pub(crate) fn from_sorted(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut neighbors = vec![Vec::new(); n];
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
            rows[u].insert(v);
            rows[v].insert(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            neighbors,
            rows,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    /// Adjacency row of `v` as a bitset over all vertices.
    pub fn row(&self, v: Vertex) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.neighbors.iter().map(Vec::len).min()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.rows[u].contains(v)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Pairs `(u, v)`, `u < v`, that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.rows[u].contains(v))
                .map(move |v| (u, v))
        })
    }

    pub fn non_edge_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2 - self.edges.len()
    }

    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::OutOfRange { u, v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let e = (u.min(v), u.max(v));
        match self.edges.binary_search(&e) {
            Ok(_) => Err(GraphError::DuplicateEdge(e.0, e.1)),
            Err(pos) => {
                let mut edges = self.edges.clone();
                edges.insert(pos, e);
                Ok(Self::from_sorted(self.n, edges))
            }
        }
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        let e = (u.min(v), u.max(v));
        match self.edges.binary_search(&e) {
            Ok(pos) => {
                let mut edges = self.edges.clone();
                edges.remove(pos);
                Ok(Self::from_sorted(self.n, edges))
            }
            Err(_) => Err(GraphError::MissingEdge(u, v)),
        }
    }

    /// Subgraph induced by `keep`, relabeled to `0..keep.len()` in the order
    /// given. Returns the graph and the map new label -> old vertex.
    pub fn induced(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut new_label = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_label[v] = i;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_label[u] != usize::MAX && new_label[v] != usize::MAX)
            .map(|&(u, v)| {
                let (a, b) = (new_label[u], new_label[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        (Self::from_sorted(keep.len(), edges), keep.to_vec())
    }

    /// Deletes the given vertices; survivors keep their relative order.
    pub fn without_vertices(&self, removed: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let keep: Vec<_> = (0..self.n).filter(|v| !removed.contains(v)).collect();
        self.induced(&keep)
    }

    /// Relabels vertices: `perm[old] = new`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Self::from_sorted(self.n, edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::from_sorted(self.n + other.n, edges)
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: Vertex) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(u) = stack.pop() {
            for &w in &self.neighbors[u] {
                if !seen.put(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0).count_ones(..) == self.n
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn edgeless() {
        let g = Graph::new(4, &[]).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.min_degree(), Some(0));
        assert_eq!(g.non_edges().count(), 6);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::OutOfRange { u: 0, v: 2, n: 2 })
        );
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn edges_are_normalized_and_sorted() {
        let g = Graph::new(4, &[(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert_eq!(g.neighbors(2), &[0, 3]);
    }

    #[test]
    fn add_and_remove_are_values() {
        let g = Graph::path(3);
        let h = g.with_edge(2, 0).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(h, Graph::complete(3));
        assert_eq!(h.without_edge(0, 2).unwrap(), g);
        assert!(g.with_edge(0, 1).is_err());
        assert!(g.without_edge(0, 2).is_err());
    }

    #[test]
    fn vertex_deletion_relabels() {
        let (h, map) = Graph::star(5).without_vertices(&[2]);
        assert_eq!(map, vec![0, 1, 3, 4]);
        assert_eq!(h, Graph::star(4));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::cycle(5).is_connected());
        assert!(!Graph::path(3).disjoint_union(&Graph::path(2)).is_connected());
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn handshake() {
        for g in [Graph::cycle(7), Graph::star(6), Graph::complete(5)] {
            assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        }
    }
}
