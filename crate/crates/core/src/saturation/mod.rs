//! `C_k`-freeness, saturation and semisaturation.
//!
//! Adding a non-edge `uv` creates a new `C_k` exactly when `G` has a `u`-`v`
//! path of length `k - 1`, since every new copy must use `uv`. Both
//! verifiers reduce to that path query, one per non-edge, and each success
//! is recorded as a witness cycle in a [`Certificate`].

mod certificate;
mod structure;

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::cycle::{has_cycle_of_length, CycleWitness, PathSearch, PathWitness, SearchError};
use crate::graph::{Graph, Vertex};

pub use certificate::{Certificate, CertificateError, NonEdgeWitness};
pub use structure::{
    check_structure, degree_partition, strip_leaves, CheckStatus, DegreePartition, StructuralCheck,
    StructureReport,
};

/// Below this many non-edges the per-pair checks run sequentially.
const PARALLEL_PAIRS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Saturated,
    Semisaturated,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Saturated => "saturated",
            Mode::Semisaturated => "semisaturated",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "saturated" | "sat" => Ok(Mode::Saturated),
            "semisaturated" | "ssat" => Ok(Mode::Semisaturated),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SaturationError {
    #[error("impossible: too few vertices ({n} < cycle length {k})")]
    TooFewVertices { n: usize, k: usize },
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// Outcome of a (semi)saturation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds(Certificate),
    /// Saturation only: the graph already contains a `C_k`.
    ContainsCycle(CycleWitness),
    /// Adding this non-edge creates no new `C_k`.
    Unsaturated { u: Vertex, v: Vertex },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::Holds(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Freeness {
    Free,
    Contains(CycleWitness),
}

impl Freeness {
    pub fn is_free(&self) -> bool {
        matches!(self, Freeness::Free)
    }
}

fn check_k(k: usize) -> Result<(), SaturationError> {
    if k < 3 {
        Err(SaturationError::CycleTooShort(k))
    } else {
        Ok(())
    }
}

fn check_order(g: &Graph, k: usize) -> Result<(), SaturationError> {
    check_k(k)?;
    if g.vertex_count() < k {
        return Err(SaturationError::TooFewVertices {
            n: g.vertex_count(),
            k,
        });
    }
    Ok(())
}

pub fn is_ck_free(g: &Graph, k: usize) -> Result<Freeness, SaturationError> {
    check_k(k)?;
    Ok(match has_cycle_of_length(g, k)? {
        None => Freeness::Free,
        Some(c) => Freeness::Contains(c),
    })
}

fn closing_path(g: &Graph, k: usize, u: Vertex, v: Vertex) -> Result<Option<PathWitness>, SearchError> {
    PathSearch::new(g).path(u, v, k - 1)
}

/// First non-edge (in lexicographic order) whose addition creates no new
/// `C_k`, or `None` if the graph is semisaturated. Stops at the first
/// failure and builds no certificate.
pub fn first_unsaturated_pair(g: &Graph, k: usize) -> Result<Option<(Vertex, Vertex)>, SaturationError> {
    check_order(g, k)?;
    for (u, v) in g.non_edges() {
        if closing_path(g, k, u, v)?.is_none() {
            return Ok(Some((u, v)));
        }
    }
    Ok(None)
}

pub fn is_semisaturated(g: &Graph, k: usize) -> Result<Verdict, SaturationError> {
    check_order(g, k)?;
    match witnesses(g, k)? {
        Ok(witnesses) => Ok(Verdict::Holds(Certificate::new(
            g.vertex_count(),
            k,
            Mode::Semisaturated,
            false,
            witnesses,
        ))),
        Err((u, v)) => Ok(Verdict::Unsaturated { u, v }),
    }
}

pub fn is_saturated(g: &Graph, k: usize) -> Result<Verdict, SaturationError> {
    check_order(g, k)?;
    if let Freeness::Contains(c) = is_ck_free(g, k)? {
        return Ok(Verdict::ContainsCycle(c));
    }
    match witnesses(g, k)? {
        Ok(witnesses) => Ok(Verdict::Holds(Certificate::new(
            g.vertex_count(),
            k,
            Mode::Saturated,
            true,
            witnesses,
        ))),
        Err((u, v)) => Ok(Verdict::Unsaturated { u, v }),
    }
}

pub fn verify(g: &Graph, k: usize, mode: Mode) -> Result<Verdict, SaturationError> {
    match mode {
        Mode::Saturated => is_saturated(g, k),
        Mode::Semisaturated => is_semisaturated(g, k),
    }
}

/// Witness cycles for every non-edge in order, or the first pair lacking one.
fn witnesses(
    g: &Graph,
    k: usize,
) -> Result<Result<Vec<NonEdgeWitness>, (Vertex, Vertex)>, SaturationError> {
    let pairs: Vec<_> = g.non_edges().collect();
    let found: Vec<Option<PathWitness>> = if pairs.len() >= PARALLEL_PAIRS {
        pairs
            .par_iter()
            .map(|&(u, v)| closing_path(g, k, u, v))
            .collect::<Result<_, _>>()?
    } else {
        let mut found = Vec::with_capacity(pairs.len());
        for &(u, v) in &pairs {
            let p = closing_path(g, k, u, v)?;
            let missing = p.is_none();
            found.push(p);
            if missing {
                break;
            }
        }
        found
    };
    let mut out = Vec::with_capacity(pairs.len());
    for (&(u, v), path) in pairs.iter().zip(found) {
        match path {
            Some(p) => out.push(NonEdgeWitness {
                u,
                v,
                cycle: CycleWitness::new(p.vertices().to_vec()),
            }),
            None => return Ok(Err((u, v))),
        }
    }
    Ok(Ok(out))
}

/// Scans `order` and keeps each pair whose addition leaves the graph
/// `C_k`-free. `order` must list every vertex pair exactly once. The result
/// is maximal `C_k`-free, hence `C_k`-saturated.
pub fn greedy_saturate(
    n: usize,
    k: usize,
    order: &[(Vertex, Vertex)],
) -> Result<Graph, SaturationError> {
    check_k(k)?;
    if n < k {
        return Err(SaturationError::TooFewVertices { n, k });
    }
    let mut seen = vec![false; n * n];
    for &(u, v) in order {
        assert!(u < n && v < n && u != v, "pair ({u}, {v}) is not a vertex pair");
        let (a, b) = (u.min(v), u.max(v));
        assert!(!seen[a * n + b], "pair ({a}, {b}) listed twice");
        seen[a * n + b] = true;
    }
    assert_eq!(order.len(), n * (n - 1) / 2, "order must list every pair");

    let mut g = Graph::empty(n);
    for &(u, v) in order {
        if closing_path(&g, k, u, v)?.is_none() {
            g = g.with_edge(u, v).expect("pair is a non-edge");
        }
    }
    Ok(g)
}

/// All vertex pairs in a uniformly random order.
pub fn random_pair_order<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<(Vertex, Vertex)> {
    let mut pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    pairs
}
