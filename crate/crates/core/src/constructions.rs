//! Builders for the saturated graph `H1`, wheels with spikes, and the
//! semisaturated extensions `H2(G)` and `H3(G)` of a suitable core `G`.
//!
//! Vertices are numbered block by block in a fixed order so that equal
//! parameters always give an identical graph.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::saturation::{is_semisaturated, SaturationError, Verdict};
use crate::suitability::{is_k_suitable, is_kk2_suitable, SuitabilityError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    H1,
    H2,
    H3,
    Wheel,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::H1 => "h1",
            Family::H2 => "h2",
            Family::H3 => "h3",
            Family::Wheel => "wheel",
        })
    }
}

/// A named vertex class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    A1,
    A2,
    Hub,
    A,
    B,
    C,
    D,
    Q,
    /// The internal vertices of the `α`-th path block, `α >= 1`.
    R(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::A1 => f.write_str("a1"),
            Role::A2 => f.write_str("a2"),
            Role::Hub => f.write_str("hub"),
            Role::A => f.write_str("A"),
            Role::B => f.write_str("B"),
            Role::C => f.write_str("C"),
            Role::D => f.write_str("D"),
            Role::Q => f.write_str("Q"),
            Role::R(a) => write!(f, "R{a}"),
        }
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "a1" => Role::A1,
            "a2" => Role::A2,
            "hub" => Role::Hub,
            "A" => Role::A,
            "B" => Role::B,
            "C" => Role::C,
            "D" => Role::D,
            "Q" => Role::Q,
            _ => match s.strip_prefix('R').and_then(|a| a.parse().ok()) {
                Some(a) if a >= 1 => Role::R(a),
                _ => return Err(format!("unknown role {s:?}")),
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{family} needs k >= {min}, got {k}")]
    KTooSmall { family: Family, k: usize, min: usize },
    #[error("n = {n} cannot be written as (k-1) + r + t(k-4) with t >= 1, 0 <= r <= k-5 (k = {k})")]
    NotDecomposable { k: usize, n: usize },
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("core graph lacks special vertices a1 and a2")]
    MissingSpecialVertices,
    #[error("core graph is not suitable: {0}")]
    UnsuitableCore(String),
    #[error("built graph is not C_k-semisaturated: adding ({u}, {v}) creates no C_k")]
    NotSemisaturated { u: Vertex, v: Vertex },
    #[error("label sidecar line {line}: {message}")]
    Sidecar { line: usize, message: String },
    #[error(transparent)]
    Saturation(#[from] SaturationError),
    #[error(transparent)]
    Suitability(#[from] SuitabilityError),
}

/// A graph together with its named vertex classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: Graph,
    labels: BTreeMap<Role, Vec<Vertex>>,
}

impl LabeledGraph {
    pub fn new(graph: Graph, labels: BTreeMap<Role, Vec<Vertex>>) -> Self {
        LabeledGraph { graph, labels }
    }

    /// A graph whose only labels are the special vertices.
    pub fn with_special(graph: Graph, a1: Vertex, a2: Vertex) -> Self {
        let labels = BTreeMap::from([(Role::A1, vec![a1]), (Role::A2, vec![a2])]);
        LabeledGraph { graph, labels }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn labels(&self) -> &BTreeMap<Role, Vec<Vertex>> {
        &self.labels
    }

    pub fn get(&self, role: Role) -> Option<&[Vertex]> {
        self.labels.get(&role).map(Vec::as_slice)
    }

    /// `(a1, a2)` when both are labeled by a single vertex.
    pub fn special(&self) -> Option<(Vertex, Vertex)> {
        match (self.get(Role::A1)?, self.get(Role::A2)?) {
            ([a1], [a2]) => Some((*a1, *a2)),
            _ => None,
        }
    }

    /// One `role=v1 v2 ...` line per role.
    pub fn to_sidecar(&self) -> String {
        let mut out = String::new();
        for (role, vs) in &self.labels {
            let vs: Vec<String> = vs.iter().map(ToString::to_string).collect();
            out.push_str(&format!("{role}={}\n", vs.join(" ")));
        }
        out
    }

    pub fn from_sidecar(graph: Graph, text: &str) -> Result<Self, ConstructionError> {
        let mut labels = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| ConstructionError::Sidecar {
                line: i + 1,
                message,
            };
            let (role, vs) = line
                .split_once('=')
                .ok_or_else(|| err("expected role=vertices".into()))?;
            let role: Role = role.trim().parse().map_err(err)?;
            let vs = vs
                .split_whitespace()
                .map(|v| match v.parse::<Vertex>() {
                    Ok(v) if v < graph.vertex_count() => Ok(v),
                    _ => Err(err(format!("bad vertex {v:?}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            labels.insert(role, vs);
        }
        Ok(LabeledGraph { graph, labels })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConstructionParams {
    pub family: Family,
    pub k: usize,
    pub n: usize,
    pub t: usize,
    pub r: usize,
}

impl ConstructionParams {
    /// Writes `n = (k-1) + r + t(k-4)` with `t >= 1` and `0 <= r <= k-5`.
    pub fn h1(k: usize, n: usize) -> Result<Self, ConstructionError> {
        if k < 7 {
            return Err(ConstructionError::KTooSmall {
                family: Family::H1,
                k,
                min: 7,
            });
        }
        if n + 5 < 2 * k {
            return Err(ConstructionError::NotDecomposable { k, n });
        }
        let rest = n - (k - 1);
        let (t, r) = (rest / (k - 4), rest % (k - 4));
        if t < 1 || r > k - 5 {
            return Err(ConstructionError::NotDecomposable { k, n });
        }
        Ok(ConstructionParams {
            family: Family::H1,
            k,
            n,
            t,
            r,
        })
    }
}

/// A built graph with its parameters and the edge count the closed formula
/// predicts for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub labeled: LabeledGraph,
    pub params: ConstructionParams,
    pub predicted_edges: usize,
}

impl Construction {
    pub fn graph(&self) -> &Graph {
        self.labeled.graph()
    }
}

/// Whether the core of `H2`/`H3` (and the result of `H3`) are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreCheck {
    Verify,
    Unchecked,
}

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

fn range(start: Vertex, len: usize) -> Vec<Vertex> {
    (start..start + len).collect()
}

fn build(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
    Graph::new(n, &edges).expect("builder produces a simple graph")
}

/// Appends a path `from - internal... - to`.
fn push_path(edges: &mut Vec<(Vertex, Vertex)>, from: Vertex, internal: &[Vertex], to: Vertex) {
    let mut prev = from;
    for &x in internal.iter().chain(std::iter::once(&to)) {
        edges.push((prev, x));
        prev = x;
    }
}

/// The saturated graph on `n` vertices: `A = {a1, a2}`, `B = {b1, b2}`, the
/// cliques on `C ∪ B` and `A ∪ B` minus `b1b2`, pendant edges `c_i d_i` and
/// `t` paths `a1 - R_α - a2` of length `k - 3`.
pub fn build_h1(k: usize, n: usize) -> Result<Construction, ConstructionError> {
    let params = ConstructionParams::h1(k, n)?;
    let (t, r) = (params.t, params.r);
    let (a1, a2, b1, b2) = (0, 1, 2, 3);
    let c = range(4, k - 5);
    let d = range(4 + c.len(), r);
    let r_start = 4 + c.len() + r;

    let mut edges = Vec::new();
    let cb: Vec<Vertex> = [b1, b2].into_iter().chain(c.iter().copied()).collect();
    for (i, &x) in cb.iter().enumerate() {
        for &y in &cb[i + 1..] {
            if (x, y) != (b1, b2) {
                edges.push((x, y));
            }
        }
    }
    edges.extend([(a1, a2), (a1, b1), (a1, b2), (a2, b1), (a2, b2)]);
    edges.extend(c.iter().zip(&d).map(|(&ci, &di)| (ci, di)));
    let mut labels = BTreeMap::from([
        (Role::A1, vec![a1]),
        (Role::A2, vec![a2]),
        (Role::A, vec![a1, a2]),
        (Role::B, vec![b1, b2]),
        (Role::Q, range(0, r_start)),
    ]);
    for alpha in 1..=t {
        let block = range(r_start + (alpha - 1) * (k - 4), k - 4);
        push_path(&mut edges, a1, &block, a2);
        labels.insert(Role::R(alpha), block);
    }
    labels.insert(Role::C, c);
    labels.insert(Role::D, d);

    Ok(Construction {
        labeled: LabeledGraph::new(build(n, edges), labels),
        params,
        predicted_edges: binom2(k - 3) + 4 + r + t * (k - 3),
    })
}

/// The wheel `W_k^r`: hub `a1` joined to `a2..ak`, rim cycle `a2 a3 ... ak`,
/// and spikes `d_i a_i` for `i <= r`. Vertex `a_i` is `i - 1`, `d_i` is
/// `k + i - 1`.
pub fn build_wheel(k: usize, r: usize) -> Result<Construction, ConstructionError> {
    if k < 4 {
        return Err(ConstructionError::KTooSmall {
            family: Family::Wheel,
            k,
            min: 4,
        });
    }
    if r > k {
        return Err(ConstructionError::BadParameter(format!(
            "wheel has at most k = {k} spikes, got {r}"
        )));
    }
    let mut edges: Vec<_> = (1..k).map(|i| (0, i)).collect();
    edges.extend((1..k - 1).map(|i| (i, i + 1)));
    edges.push((1, k - 1));
    edges.extend((0..r).map(|i| (i, k + i)));
    let labels = BTreeMap::from([
        (Role::A1, vec![0]),
        (Role::A2, vec![1]),
        (Role::Hub, vec![0]),
        (Role::A, range(0, k)),
        (Role::D, range(k, r)),
    ]);
    Ok(Construction {
        labeled: LabeledGraph::new(build(k + r, edges), labels),
        params: ConstructionParams {
            family: Family::Wheel,
            k,
            n: k + r,
            t: 0,
            r,
        },
        predicted_edges: 2 * k - 2 + r,
    })
}

fn core_special(core: &LabeledGraph) -> Result<(Vertex, Vertex), ConstructionError> {
    match core.special() {
        Some((a1, a2)) if a1 != a2 && a1.max(a2) < core.graph().vertex_count() => Ok((a1, a2)),
        _ => Err(ConstructionError::MissingSpecialVertices),
    }
}

/// Adds `t` paths with `len` internal vertices each between `a1` and `a2`.
/// Returns the edge list and the labels shared by `H2` and `H3`.
fn attach_paths(
    core: &LabeledGraph,
    len: usize,
    t: usize,
) -> Result<(Vec<(Vertex, Vertex)>, BTreeMap<Role, Vec<Vertex>>), ConstructionError> {
    let (a1, a2) = core_special(core)?;
    let base = core.graph().vertex_count();
    let mut edges = core.graph().edges().to_vec();
    let mut labels = BTreeMap::from([
        (Role::A1, vec![a1]),
        (Role::A2, vec![a2]),
        (Role::Q, range(0, base)),
    ]);
    for alpha in 1..=t {
        let block = range(base + (alpha - 1) * len, len);
        push_path(&mut edges, a1, &block, a2);
        labels.insert(Role::R(alpha), block);
    }
    Ok((edges, labels))
}

/// `H2(G)`: the core plus `t` disjoint `a1`-`a2` paths of length `k - 2`.
pub fn build_h2(
    core: &LabeledGraph,
    k: usize,
    t: usize,
    check: CoreCheck,
) -> Result<Construction, ConstructionError> {
    if k < 4 {
        return Err(ConstructionError::KTooSmall {
            family: Family::H2,
            k,
            min: 4,
        });
    }
    core_special(core)?;
    if check == CoreCheck::Verify {
        let report = is_k_suitable(core, k)?;
        if !report.holds() {
            return Err(ConstructionError::UnsuitableCore(report.summary()));
        }
    }
    let (edges, labels) = attach_paths(core, k - 3, t)?;
    let n = core.graph().vertex_count() + t * (k - 3);
    Ok(Construction {
        labeled: LabeledGraph::new(build(n, edges), labels),
        params: ConstructionParams {
            family: Family::H2,
            k,
            n,
            t,
            r: 0,
        },
        predicted_edges: core.graph().edge_count() + t * (k - 2),
    })
}

/// `H3(G)`: the core plus `t` paths of length `k - 4` between `a1` and `a2`,
/// then a pendant vertex on every path vertex except the last `r` in
/// numbering order. Spike vertices `D` are numbered after all paths.
pub fn build_h3(
    core: &LabeledGraph,
    k: usize,
    t: usize,
    r: usize,
    check: CoreCheck,
) -> Result<Construction, ConstructionError> {
    if k < 6 {
        return Err(ConstructionError::KTooSmall {
            family: Family::H3,
            k,
            min: 6,
        });
    }
    if t < 2 {
        return Err(ConstructionError::BadParameter(format!("H3 needs t >= 2, got {t}")));
    }
    if r >= 2 * k - 10 {
        return Err(ConstructionError::BadParameter(format!(
            "H3 needs r < 2k - 10 = {}, got {r}",
            2 * k - 10
        )));
    }
    core_special(core)?;
    if check == CoreCheck::Verify {
        let report = is_kk2_suitable(core, k)?;
        if !report.holds() {
            return Err(ConstructionError::UnsuitableCore(report.summary()));
        }
    }
    let (mut edges, mut labels) = attach_paths(core, k - 5, t)?;
    let base = core.graph().vertex_count();
    let path_vertices = t * (k - 5);
    let spikes = path_vertices - r;
    let d_start = base + path_vertices;
    edges.extend((0..spikes).map(|j| (base + j, d_start + j)));
    labels.insert(Role::D, range(d_start, spikes));
    let n = d_start + spikes;
    let graph = build(n, edges);

    if check == CoreCheck::Verify {
        if let Verdict::Unsaturated { u, v } = is_semisaturated(&graph, k)? {
            return Err(ConstructionError::NotSemisaturated { u, v });
        }
    }
    Ok(Construction {
        labeled: LabeledGraph::new(graph, labels),
        params: ConstructionParams {
            family: Family::H3,
            k,
            n,
            t,
            r,
        },
        predicted_edges: core.graph().edge_count() + t * (2 * k - 9) - r,
    })
}
