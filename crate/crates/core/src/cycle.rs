//! Exact-length simple path and cycle search.
//!
//! Every verifier in the crate reduces to one question: is there a simple
//! `u`-`v` path with exactly `len` edges? The search is a depth-first
//! backtrack over simple paths, neighbors in ascending order, with two
//! prunings:
//!
//! * distance: the BFS distance to the target (inside the allowed vertex
//!   set) must not exceed the remaining length;
//! * reachability: the unvisited allowed vertices reachable from the
//!   frontier must contain the target and be at least as many as the
//!   vertices the rest of the path still needs.
//!
//! A node-expansion budget turns pathological inputs into
//! [`SearchError::BudgetExceeded`] instead of a hang.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub const DEFAULT_EXPANSION_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("path endpoints must differ (both are {0})")]
    SameEndpoints(Vertex),
    #[error("vertex {vertex} is outside 0..{n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("path length must be at least 1")]
    ZeroLength,
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("search budget of {budget} node expansions exceeded")]
    BudgetExceeded { budget: u64 },
}

/// A simple path, listed from one endpoint to the other.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathWitness {
    vertices: Vec<Vertex>,
}

impl PathWitness {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        PathWitness { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().expect("non-empty path")
    }

    /// True iff the vertices are distinct and consecutive ones adjacent in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        !self.vertices.is_empty()
            && all_distinct(&self.vertices, g.vertex_count())
            && self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

/// A cycle as a cyclic vertex sequence; its length is its vertex count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleWitness {
    vertices: Vec<Vertex>,
}

impl CycleWitness {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        CycleWitness { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn length(&self) -> usize {
        self.vertices.len()
    }

    /// Consecutive vertex pairs, including the closing pair.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    pub fn uses_pair(&self, u: Vertex, v: Vertex) -> bool {
        self.edges()
            .any(|(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.vertices.len() >= 3
            && all_distinct(&self.vertices, g.vertex_count())
            && self.edges().all(|(a, b)| g.has_edge(a, b))
    }
}

fn all_distinct(vertices: &[Vertex], n: usize) -> bool {
    let mut seen = FixedBitSet::with_capacity(n);
    vertices.iter().all(|&v| v < n && !seen.put(v))
}

/// Exact-length path queries against one graph.
#[derive(Debug, Clone)]
pub struct PathSearch<'g> {
    graph: &'g Graph,
    allowed: FixedBitSet,
    budget: u64,
}

impl<'g> PathSearch<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let mut allowed = FixedBitSet::with_capacity(graph.vertex_count());
        allowed.insert_range(..);
        PathSearch {
            graph,
            allowed,
            budget: DEFAULT_EXPANSION_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// Restricts every path (endpoints included) to `vertices`.
    pub fn within(mut self, vertices: &[Vertex]) -> Self {
        self.allowed.clear();
        for &v in vertices {
            self.allowed.insert(v);
        }
        self
    }

    pub fn within_set(mut self, vertices: FixedBitSet) -> Self {
        assert_eq!(vertices.len(), self.graph.vertex_count());
        self.allowed = vertices;
        self
    }

    /// A simple `u`-`v` path with exactly `len` edges, if one exists.
    pub fn path(&self, u: Vertex, v: Vertex, len: usize) -> Result<Option<PathWitness>, SearchError> {
        self.path_counted(u, v, len).map(|(p, _)| p)
    }

    /// As [`PathSearch::path`], also reporting the node expansions used.
    pub fn path_counted(
        &self,
        u: Vertex,
        v: Vertex,
        len: usize,
    ) -> Result<(Option<PathWitness>, u64), SearchError> {
        let n = self.graph.vertex_count();
        for vertex in [u, v] {
            if vertex >= n {
                return Err(SearchError::VertexOutOfRange { vertex, n });
            }
        }
        if u == v {
            return Err(SearchError::SameEndpoints(u));
        }
        if len == 0 {
            return Err(SearchError::ZeroLength);
        }
        if !self.allowed.contains(u) || !self.allowed.contains(v) || len >= n {
            return Ok((None, 0));
        }
        let dist = self.distances_to(v);
        if dist[u] > len {
            return Ok((None, 0));
        }
        let mut visited = FixedBitSet::with_capacity(n);
        visited.insert(u);
        let mut dfs = Dfs {
            g: self.graph,
            allowed: &self.allowed,
            target: v,
            dist,
            visited,
            path: vec![u],
            expansions: 0,
            budget: self.budget,
            scratch: FixedBitSet::with_capacity(n),
        };
        let found = dfs.extend(u, len)?;
        let expansions = dfs.expansions;
        Ok((found.then(|| PathWitness::new(dfs.path)), expansions))
    }

    /// BFS distances to `target` through allowed vertices; `usize::MAX` if
    /// unreachable.
    fn distances_to(&self, target: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.graph.vertex_count()];
        dist[target] = 0;
        let mut queue = VecDeque::from([target]);
        while let Some(x) = queue.pop_front() {
            for &y in self.graph.neighbors(x) {
                if self.allowed.contains(y) && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    allowed: &'a FixedBitSet,
    target: Vertex,
    dist: Vec<usize>,
    visited: FixedBitSet,
    path: Vec<Vertex>,
    expansions: u64,
    budget: u64,
    scratch: FixedBitSet,
}

impl Dfs<'_> {
    /// Tries to reach the target from `cur` in exactly `remaining` edges.
    fn extend(&mut self, cur: Vertex, remaining: usize) -> Result<bool, SearchError> {
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(SearchError::BudgetExceeded {
                budget: self.budget,
            });
        }
        if remaining == 1 {
            if self.g.has_edge(cur, self.target) {
                self.path.push(self.target);
                return Ok(true);
            }
            return Ok(false);
        }
        if remaining >= 3 && !self.enough_room(cur, remaining) {
            return Ok(false);
        }
        for i in 0..self.g.neighbors(cur).len() {
            let w = self.g.neighbors(cur)[i];
            if w == self.target
                || !self.allowed.contains(w)
                || self.visited.contains(w)
                || self.dist[w] > remaining - 1
            {
                continue;
            }
            self.visited.insert(w);
            self.path.push(w);
            if self.extend(w, remaining - 1)? {
                return Ok(true);
            }
            self.path.pop();
            self.visited.set(w, false);
        }
        Ok(false)
    }

    /// Counts unvisited allowed vertices reachable from `cur` without passing
    /// through the target; the path still needs `remaining` of them,
    /// the target included.
    fn enough_room(&mut self, cur: Vertex, remaining: usize) -> bool {
        let seen = &mut self.scratch;
        seen.clear();
        let mut stack = vec![cur];
        let mut count = 0;
        let mut target_seen = false;
        while let Some(x) = stack.pop() {
            for &y in self.g.neighbors(x) {
                if !self.allowed.contains(y) || self.visited.contains(y) || seen.put(y) {
                    continue;
                }
                count += 1;
                if y == self.target {
                    target_seen = true;
                } else {
                    stack.push(y);
                }
            }
        }
        target_seen && count >= remaining
    }
}

/// A simple `u`-`v` path with exactly `len` edges, default budget.
pub fn exists_path_of_length(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    len: usize,
) -> Result<Option<PathWitness>, SearchError> {
    PathSearch::new(g).path(u, v, len)
}

/// A cycle on exactly `k` vertices, if one exists.
///
/// Cycles are found by their smallest vertex `u`: for each neighbor `v > u`
/// look for a `u`-`v` path of length `k - 1` through vertices `>= u`. The
/// path never uses the edge `uv` itself since its length is at least 2.
pub fn has_cycle_of_length(g: &Graph, k: usize) -> Result<Option<CycleWitness>, SearchError> {
    has_cycle_of_length_with_budget(g, k, DEFAULT_EXPANSION_BUDGET)
}

pub fn has_cycle_of_length_with_budget(
    g: &Graph,
    k: usize,
    budget: u64,
) -> Result<Option<CycleWitness>, SearchError> {
    if k < 3 {
        return Err(SearchError::CycleTooShort(k));
    }
    let n = g.vertex_count();
    if k > n {
        return Ok(None);
    }
    let mut allowed = FixedBitSet::with_capacity(n);
    allowed.insert_range(..);
    for u in 0..=(n - k) {
        let search = PathSearch::new(g)
            .with_budget(budget)
            .within_set(allowed.clone());
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            if let Some(p) = search.path(u, v, k - 1)? {
                return Ok(Some(CycleWitness::new(p.vertices)));
            }
        }
        allowed.set(u, false);
    }
    Ok(None)
}

/// Length of a shortest cycle through `w`, if any.
///
/// BFS from `w`, tagging each vertex with the neighbor of `w` its tree path
/// starts with. A shortest cycle through `w` closes along an edge `xy` whose
/// endpoints carry different tags, and has length `d(x) + d(y) + 1`.
pub fn shortest_cycle_through(g: &Graph, w: Vertex) -> Option<usize> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut branch = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    dist[w] = 0;
    for &z in g.neighbors(w) {
        dist[z] = 1;
        branch[z] = z;
        queue.push_back(z);
    }
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if y != w && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                branch[y] = branch[x];
                queue.push_back(y);
            }
        }
    }
    g.edges()
        .iter()
        .filter(|&&(x, y)| {
            x != w && y != w && branch[x] != usize::MAX && branch[x] != branch[y]
        })
        .map(|&(x, y)| dist[x] + dist[y] + 1)
        .min()
}
