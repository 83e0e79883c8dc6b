//! Degree partition around pendant vertices and the structural facts that
//! (semi)saturated graphs must satisfy. Each fact is an independent named
//! check; a violation is a result, not an error.

use std::fmt;

use super::{first_unsaturated_pair, SaturationError};
use crate::cycle::shortest_cycle_through;
use crate::graph::{Graph, Vertex};

/// Five-part split of the vertex set driven by the degree-1 vertices.
///
/// `x` holds the degree-1 vertices and `pendant_pairs` their `(x, y)`
/// edges. Neighbors of `x` are split into `y3` (degree 3) and `y4plus`
/// (degree at least 4); the rest into `z2` (degree 2) and `z3plus` (degree
/// at least 3). Vertices fitting none of these (a leaf neighbor of degree 2,
/// or an isolated vertex) land in `unclassified`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreePartition {
    pub x: Vec<Vertex>,
    pub pendant_pairs: Vec<(Vertex, Vertex)>,
    pub y3: Vec<Vertex>,
    pub y4plus: Vec<Vertex>,
    pub z2: Vec<Vertex>,
    pub z3plus: Vec<Vertex>,
    pub unclassified: Vec<Vertex>,
}

impl DegreePartition {
    /// `|Z2|`
    pub fn a(&self) -> usize {
        self.z2.len()
    }

    /// `|Y3|`
    pub fn b(&self) -> usize {
        self.y3.len()
    }

    /// `|Z3+|`
    pub fn c(&self) -> usize {
        self.z3plus.len()
    }

    /// `|Y4+|`
    pub fn d(&self) -> usize {
        self.y4plus.len()
    }

    /// Distinct neighbors of degree-1 vertices.
    pub fn y_count(&self) -> usize {
        let mut ys: Vec<_> = self.pendant_pairs.iter().map(|&(_, y)| y).collect();
        ys.sort_unstable();
        ys.dedup();
        ys.len()
    }

    /// `n = a + 2b + c + 2d`, evaluated only when every leaf has its own
    /// neighbor and nothing is unclassified.
    pub fn counting_identity(&self, n: usize) -> Option<bool> {
        (self.y_count() == self.x.len() && self.unclassified.is_empty())
            .then(|| n == self.a() + 2 * self.b() + self.c() + 2 * self.d())
    }
}

pub fn degree_partition(g: &Graph) -> DegreePartition {
    let n = g.vertex_count();
    let mut p = DegreePartition::default();
    let mut is_y = vec![false; n];
    for v in g.vertices() {
        if g.degree(v) == 1 {
            let y = g.neighbors(v)[0];
            p.x.push(v);
            p.pendant_pairs.push((v, y));
            is_y[y] = true;
        }
    }
    for v in g.vertices() {
        let d = g.degree(v);
        if d == 1 {
            continue;
        }
        let bucket = match (is_y[v], d) {
            (true, 3) => &mut p.y3,
            (true, d) if d >= 4 => &mut p.y4plus,
            (false, 2) => &mut p.z2,
            (false, d) if d >= 3 => &mut p.z3plus,
            _ => &mut p.unclassified,
        };
        bucket.push(v);
    }
    p
}

/// Deletes every degree-1 vertex at once. Returns the remaining graph and
/// the map from its vertices to the original ones.
pub fn strip_leaves(g: &Graph) -> (Graph, Vec<Vertex>) {
    let leaves: Vec<_> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
    g.without_vertices(&leaves)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructuralCheck {
    /// No two degree-1 vertices share a neighbor.
    DistinctLeafNeighbors,
    /// Every neighbor of a degree-1 vertex has degree at least 3.
    LeafNeighborDegree,
    /// Deleting a degree-1 vertex keeps the graph semisaturated.
    LeafDeletion,
    /// On any path `x y w` from a degree-1 vertex `x`, `deg(w) >= 3`.
    LeafPathEnd,
    /// Adjacent leaf neighbors both have degree at least 4; every degree-3
    /// leaf neighbor has one neighbor in X and two in Z3+.
    LeafNeighborAdjacency,
    /// The degree-2 non-leaf-neighbor vertices induce paths of length at
    /// most `k - 2`.
    DegreeTwoPaths,
    /// Every vertex lies on a cycle of length at most `k + 1`.
    ShortCycleThroughEveryVertex,
}

impl StructuralCheck {
    /// Facts about degree-1 vertices of semisaturated graphs.
    pub const LEAF_FACTS: [StructuralCheck; 3] = [
        StructuralCheck::DistinctLeafNeighbors,
        StructuralCheck::LeafNeighborDegree,
        StructuralCheck::LeafDeletion,
    ];

    /// Extra structure of saturated graphs, `k >= 5`.
    pub const SATURATED_FACTS: [StructuralCheck; 3] = [
        StructuralCheck::LeafPathEnd,
        StructuralCheck::LeafNeighborAdjacency,
        StructuralCheck::DegreeTwoPaths,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructuralCheck::DistinctLeafNeighbors => "distinct-leaf-neighbors",
            StructuralCheck::LeafNeighborDegree => "leaf-neighbor-degree",
            StructuralCheck::LeafDeletion => "leaf-deletion",
            StructuralCheck::LeafPathEnd => "leaf-path-end",
            StructuralCheck::LeafNeighborAdjacency => "leaf-neighbor-adjacency",
            StructuralCheck::DegreeTwoPaths => "degree-two-paths",
            StructuralCheck::ShortCycleThroughEveryVertex => "short-cycle-through-every-vertex",
        }
    }
}

impl fmt::Display for StructuralCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Violations(Vec<String>),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub outcomes: Vec<(StructuralCheck, CheckStatus)>,
}

impl StructureReport {
    pub fn status(&self, check: StructuralCheck) -> Option<&CheckStatus> {
        self.outcomes
            .iter()
            .find(|(c, _)| *c == check)
            .map(|(_, s)| s)
    }

    pub fn violations(&self) -> impl Iterator<Item = (StructuralCheck, &str)> {
        self.outcomes.iter().flat_map(|(c, s)| match s {
            CheckStatus::Violations(v) => v.iter().map(|m| (*c, m.as_str())).collect(),
            _ => Vec::new(),
        })
    }

    pub fn is_clean(&self) -> bool {
        self.violations().next().is_none()
    }
}

/// Runs the requested checks on `g`. The input is not assumed to satisfy
/// any hypothesis; callers decide what a violation means.
pub fn check_structure(
    g: &Graph,
    k: usize,
    checks: &[StructuralCheck],
) -> Result<StructureReport, SaturationError> {
    let p = degree_partition(g);
    let mut outcomes = Vec::with_capacity(checks.len());
    for &check in checks {
        let status = match check {
            StructuralCheck::DistinctLeafNeighbors => distinct_leaf_neighbors(&p),
            StructuralCheck::LeafNeighborDegree => leaf_neighbor_degree(g, &p),
            StructuralCheck::LeafDeletion => leaf_deletion(g, k, &p)?,
            StructuralCheck::LeafPathEnd => leaf_path_end(g, &p),
            StructuralCheck::LeafNeighborAdjacency => leaf_neighbor_adjacency(g, &p),
            StructuralCheck::DegreeTwoPaths => degree_two_paths(g, k, &p),
            StructuralCheck::ShortCycleThroughEveryVertex => short_cycles(g, k),
        };
        outcomes.push((check, status));
    }
    Ok(StructureReport { outcomes })
}

fn status_from(violations: Vec<String>) -> CheckStatus {
    if violations.is_empty() {
        CheckStatus::Pass
    } else {
        CheckStatus::Violations(violations)
    }
}

fn distinct_leaf_neighbors(p: &DegreePartition) -> CheckStatus {
    let mut by_y: Vec<(Vertex, Vertex)> = p.pendant_pairs.iter().map(|&(x, y)| (y, x)).collect();
    by_y.sort_unstable();
    status_from(
        by_y.windows(2)
            .filter(|w| w[0].0 == w[1].0)
            .map(|w| format!("leaves {} and {} share neighbor {}", w[0].1, w[1].1, w[0].0))
            .collect(),
    )
}

fn leaf_neighbor_degree(g: &Graph, p: &DegreePartition) -> CheckStatus {
    status_from(
        p.pendant_pairs
            .iter()
            .filter(|&&(_, y)| g.degree(y) < 3)
            .map(|&(x, y)| format!("neighbor {y} of leaf {x} has degree {}", g.degree(y)))
            .collect(),
    )
}

fn leaf_deletion(g: &Graph, k: usize, p: &DegreePartition) -> Result<CheckStatus, SaturationError> {
    if p.x.is_empty() {
        return Ok(CheckStatus::Pass);
    }
    if g.vertex_count() <= k {
        return Ok(CheckStatus::Skipped(format!(
            "deleting a vertex leaves fewer than k = {k} vertices"
        )));
    }
    let mut violations = Vec::new();
    for &x in &p.x {
        let (h, map) = g.without_vertices(&[x]);
        if let Some((u, v)) = first_unsaturated_pair(&h, k)? {
            violations.push(format!(
                "after deleting leaf {x}, adding ({}, {}) creates no new C_{k}",
                map[u], map[v]
            ));
        }
    }
    Ok(status_from(violations))
}

fn leaf_path_end(g: &Graph, p: &DegreePartition) -> CheckStatus {
    let mut violations = Vec::new();
    for &(x, y) in &p.pendant_pairs {
        for &w in g.neighbors(y) {
            if w != x && g.degree(w) < 3 {
                violations.push(format!("path {x} {y} {w} ends at degree {}", g.degree(w)));
            }
        }
    }
    status_from(violations)
}

fn leaf_neighbor_adjacency(g: &Graph, p: &DegreePartition) -> CheckStatus {
    let n = g.vertex_count();
    let mut is_y = vec![false; n];
    let mut is_x = vec![false; n];
    for &(x, y) in &p.pendant_pairs {
        is_x[x] = true;
        is_y[y] = true;
    }
    let mut is_z3 = vec![false; n];
    for &z in &p.z3plus {
        is_z3[z] = true;
    }
    let mut violations = Vec::new();
    for &(u, v) in g.edges() {
        if is_y[u] && is_y[v] && !is_x[u] && !is_x[v] {
            for y in [u, v] {
                if g.degree(y) < 4 {
                    violations.push(format!(
                        "leaf neighbors {u} and {v} are adjacent but {y} has degree {}",
                        g.degree(y)
                    ));
                }
            }
        }
    }
    for &y in &p.y3 {
        let in_x = g.neighbors(y).iter().filter(|&&w| is_x[w]).count();
        let in_z3 = g.neighbors(y).iter().filter(|&&w| is_z3[w]).count();
        if (in_x, in_z3) != (1, 2) {
            violations.push(format!(
                "degree-3 leaf neighbor {y} has {in_x} neighbors in X and {in_z3} in Z3+"
            ));
        }
    }
    status_from(violations)
}

fn degree_two_paths(g: &Graph, k: usize, p: &DegreePartition) -> CheckStatus {
    let (h, map) = g.induced(&p.z2);
    let mut done = vec![false; h.vertex_count()];
    let mut violations = Vec::new();
    for start in h.vertices() {
        if done[start] {
            continue;
        }
        let component = h.component_of(start);
        let vertices: Vec<_> = component.ones().collect();
        for &v in &vertices {
            done[v] = true;
        }
        let edges = vertices.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
        let names: Vec<_> = vertices.iter().map(|&v| map[v]).collect();
        if edges >= vertices.len() {
            violations.push(format!("degree-2 vertices {names:?} form a cycle"));
        } else if edges > k.saturating_sub(2) {
            violations.push(format!(
                "degree-2 vertices {names:?} form a path of length {edges} > {}",
                k.saturating_sub(2)
            ));
        }
    }
    status_from(violations)
}

fn short_cycles(g: &Graph, k: usize) -> CheckStatus {
    status_from(
        g.vertices()
            .filter_map(|w| match shortest_cycle_through(g, w) {
                Some(len) if len <= k + 1 => None,
                Some(len) => Some(format!("shortest cycle through {w} has length {len}")),
                None => Some(format!("vertex {w} lies on no cycle")),
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_partition() {
        let p = degree_partition(&Graph::star(6));
        assert_eq!(p.x, vec![1, 2, 3, 4, 5]);
        assert_eq!(p.y4plus, vec![0]);
        assert!(p.y3.is_empty() && p.z2.is_empty() && p.z3plus.is_empty());
        // Five leaves share one neighbor, so the counting identity is not asserted.
        assert_eq!(p.counting_identity(6), None);
    }

    #[test]
    fn cycle_partition() {
        let p = degree_partition(&Graph::cycle(6));
        assert_eq!(p.z2, (0..6).collect::<Vec<_>>());
        assert_eq!(p.counting_identity(6), Some(true));
    }

    #[test]
    fn shared_leaf_neighbor_is_reported() {
        // Leaves 3 and 4 both hang off vertex 0 of a triangle.
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]).unwrap();
        let report = check_structure(&g, 5, &[StructuralCheck::DistinctLeafNeighbors]).unwrap();
        assert!(matches!(
            report.status(StructuralCheck::DistinctLeafNeighbors),
            Some(CheckStatus::Violations(v)) if v.len() == 1
        ));
    }

    #[test]
    fn wheel_vertices_lie_on_triangles() {
        let mut edges: Vec<_> = (1..6).map(|v| (0, v)).collect();
        edges.extend([(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]);
        let g = Graph::new(6, &edges).unwrap();
        let report =
            check_structure(&g, 6, &[StructuralCheck::ShortCycleThroughEveryVertex]).unwrap();
        assert!(report.is_clean());
    }

    #[test]
    fn degree_two_path_limits() {
        // Two triangles joined by the path 0-1-...-6.
        let mut edges: Vec<_> = (1..7).map(|v| (v - 1, v)).collect();
        edges.extend([(0, 7), (7, 8), (0, 8), (6, 9), (9, 10), (6, 10)]);
        let g = Graph::new(11, &edges).unwrap();
        let report = check_structure(&g, 5, &[StructuralCheck::DegreeTwoPaths]).unwrap();
        assert!(!report.is_clean());
        let cyc = check_structure(&Graph::cycle(5), 5, &[StructuralCheck::DegreeTwoPaths]).unwrap();
        assert!(!cyc.is_clean());
    }

    #[test]
    fn leaf_deletion_skips_small_graphs() {
        let report = check_structure(&Graph::star(5), 5, &[StructuralCheck::LeafDeletion]).unwrap();
        assert!(matches!(
            report.status(StructuralCheck::LeafDeletion),
            Some(CheckStatus::Skipped(_))
        ));
    }
}
