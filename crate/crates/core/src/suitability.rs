//! Suitable cores for the semisaturated path constructions, and a search for
//! the smallest ones on `k` vertices.
//!
//! A graph `G` with special vertices `a1, a2` is suitable for `k` when
//!
//! * (S1) `G` is `C_k`-semisaturated,
//! * (S2) `G` has an `a1`-`a2` path of every length `1..=k-2`,
//! * (S3) for every `q` other than `a1, a2` and every split `m1 + m2` from a
//!   list of allowed splits, `G` has an `a1`-`q` path of length `m1` or an
//!   `a2`-`q` path of length `m2`.
//!
//! Plain suitability allows `m1 + m2 = k` with `2 <= m_i <= k-2`. The
//! `{k, k+2}` variant allows `m1 + m2 = k` with `3 <= m_i <= k-3` and
//! `m1 + m2 = k + 2` with `4 <= m_i <= k-4`.

use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::constructions::LabeledGraph;
use crate::cycle::{PathSearch, PathWitness};
use crate::graph::{CanonicalCode, Graph, Vertex};
use crate::oracle::enumerate::{search_stratum, Levels};
use crate::saturation::{first_unsaturated_pair, is_semisaturated, SaturationError, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuitabilityMode {
    /// Splits of `k`.
    K,
    /// Splits of `k` and `k + 2`.
    KPlus2,
}

impl fmt::Display for SuitabilityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuitabilityMode::K => "k-suitable",
            SuitabilityMode::KPlus2 => "{k,k+2}-suitable",
        })
    }
}

impl SuitabilityMode {
    pub fn min_k(self) -> usize {
        match self {
            SuitabilityMode::K => 4,
            SuitabilityMode::KPlus2 => 6,
        }
    }

    /// The `(m1, m2)` splits that (S3) quantifies over.
    pub fn splits(self, k: usize) -> Vec<(usize, usize)> {
        match self {
            SuitabilityMode::K => (2..=k.saturating_sub(2)).map(|m| (m, k - m)).collect(),
            SuitabilityMode::KPlus2 => {
                let mut out: Vec<_> = (3..=k.saturating_sub(3)).map(|m| (m, k - m)).collect();
                out.extend(
                    (4..=k.saturating_sub(4))
                        .map(|m| (m, k + 2 - m))
                        .filter(|&(_, m2)| (4..=k - 4).contains(&m2)),
                );
                out
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuitabilityError {
    #[error("graph lacks distinct special vertices a1 and a2")]
    MissingLabels,
    #[error("{mode} needs k >= {min}, got {k}")]
    KTooSmall {
        mode: SuitabilityMode,
        k: usize,
        min: usize,
    },
    #[error("mining k = {k} exceeds the configured ceiling {ceiling}")]
    CeilingExceeded { k: usize, ceiling: usize },
    #[error(transparent)]
    Saturation(#[from] SaturationError),
}

impl From<crate::cycle::SearchError> for SuitabilityError {
    fn from(e: crate::cycle::SearchError) -> Self {
        SuitabilityError::Saturation(e.into())
    }
}

/// One (S3) requirement: some `a_i`-`q` path of length `m_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Split {
    pub q: Vertex,
    pub m1: usize,
    pub m2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuitabilityReport {
    pub mode: SuitabilityMode,
    pub k: usize,
    pub a1: Vertex,
    pub a2: Vertex,
    pub s1: bool,
    /// A non-edge whose addition creates no `C_k`, when (S1) fails.
    pub s1_failure: Option<(Vertex, Vertex)>,
    /// For each length `1..=k-2`, an `a1`-`a2` path of that length.
    pub s2: Vec<(usize, Option<PathWitness>)>,
    /// Satisfied requirements with the path that satisfies them.
    pub s3_witnesses: Vec<(Split, PathWitness)>,
    pub s3_failures: Vec<Split>,
}

impl SuitabilityReport {
    pub fn s2_holds(&self) -> bool {
        self.s2.iter().all(|(_, p)| p.is_some())
    }

    pub fn s3_holds(&self) -> bool {
        self.s3_failures.is_empty()
    }

    pub fn holds(&self) -> bool {
        self.s1 && self.s2_holds() && self.s3_holds()
    }

    /// Re-checks every recorded witness against `g`, edge by edge.
    pub fn witnesses_valid(&self, g: &Graph) -> bool {
        let s2 = self.s2.iter().all(|(len, p)| match p {
            None => true,
            Some(p) => {
                p.length() == *len && p.start() == self.a1 && p.end() == self.a2 && p.is_valid_in(g)
            }
        });
        let s3 = self.s3_witnesses.iter().all(|(s, p)| {
            let ok_end = p.end() == s.q && p.is_valid_in(g);
            let by_a1 = p.start() == self.a1 && p.length() == s.m1;
            let by_a2 = p.start() == self.a2 && p.length() == s.m2;
            ok_end && (by_a1 || by_a2)
        });
        s2 && s3
    }

    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        if let Some((u, v)) = self.s1_failure {
            parts.push(format!("S1 fails at non-edge ({u}, {v})"));
        }
        let missing: Vec<String> = self
            .s2
            .iter()
            .filter(|(_, p)| p.is_none())
            .map(|(l, _)| l.to_string())
            .collect();
        if !missing.is_empty() {
            parts.push(format!("S2 lacks a1-a2 paths of length {}", missing.join(", ")));
        }
        if let Some(s) = self.s3_failures.first() {
            parts.push(format!(
                "S3 fails for {} requirement(s), first q = {}, (m1, m2) = ({}, {})",
                self.s3_failures.len(),
                s.q,
                s.m1,
                s.m2
            ));
        }
        if parts.is_empty() {
            format!("{} for k = {}", self.mode, self.k)
        } else {
            parts.join("; ")
        }
    }
}

fn check_args(g: &Graph, a1: Vertex, a2: Vertex, k: usize, mode: SuitabilityMode) -> Result<(), SuitabilityError> {
    if a1 == a2 || a1 >= g.vertex_count() || a2 >= g.vertex_count() {
        return Err(SuitabilityError::MissingLabels);
    }
    if k < mode.min_k() {
        return Err(SuitabilityError::KTooSmall {
            mode,
            k,
            min: mode.min_k(),
        });
    }
    Ok(())
}

/// Cached `a_i`-`q` path queries.
struct Paths<'g> {
    search: PathSearch<'g>,
    cache: HashMap<(Vertex, Vertex, usize), Option<PathWitness>>,
}

impl<'g> Paths<'g> {
    fn new(g: &'g Graph) -> Self {
        Paths {
            search: PathSearch::new(g),
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, from: Vertex, to: Vertex, len: usize) -> Result<Option<PathWitness>, SuitabilityError> {
        if let Some(p) = self.cache.get(&(from, to, len)) {
            return Ok(p.clone());
        }
        let p = self.search.path(from, to, len)?;
        self.cache.insert((from, to, len), p.clone());
        Ok(p)
    }
}

/// Full report for `g` with special vertices `a1, a2`.
pub fn check_suitability(
    g: &Graph,
    a1: Vertex,
    a2: Vertex,
    k: usize,
    mode: SuitabilityMode,
) -> Result<SuitabilityReport, SuitabilityError> {
    check_args(g, a1, a2, k, mode)?;
    let s1_failure = match is_semisaturated(g, k)? {
        Verdict::Unsaturated { u, v } => Some((u, v)),
        _ => None,
    };
    let mut paths = Paths::new(g);
    let mut s2 = Vec::new();
    for len in 1..=k - 2 {
        s2.push((len, paths.get(a1, a2, len)?));
    }
    let mut s3_witnesses = Vec::new();
    let mut s3_failures = Vec::new();
    for q in g.vertices().filter(|&q| q != a1 && q != a2) {
        for (m1, m2) in mode.splits(k) {
            let split = Split { q, m1, m2 };
            let p = match paths.get(a1, q, m1)? {
                Some(p) => Some(p),
                None => paths.get(a2, q, m2)?,
            };
            match p {
                Some(p) => s3_witnesses.push((split, p)),
                None => s3_failures.push(split),
            }
        }
    }
    Ok(SuitabilityReport {
        mode,
        k,
        a1,
        a2,
        s1: s1_failure.is_none(),
        s1_failure,
        s2,
        s3_witnesses,
        s3_failures,
    })
}

fn labeled_special(g: &LabeledGraph) -> Result<(Vertex, Vertex), SuitabilityError> {
    g.special().ok_or(SuitabilityError::MissingLabels)
}

pub fn is_k_suitable(g: &LabeledGraph, k: usize) -> Result<SuitabilityReport, SuitabilityError> {
    let (a1, a2) = labeled_special(g)?;
    check_suitability(g.graph(), a1, a2, k, SuitabilityMode::K)
}

pub fn is_kk2_suitable(g: &LabeledGraph, k: usize) -> Result<SuitabilityReport, SuitabilityError> {
    let (a1, a2) = labeled_special(g)?;
    check_suitability(g.graph(), a1, a2, k, SuitabilityMode::KPlus2)
}

/// (S2) and (S3) with early exit; (S1) is the caller's business.
fn special_pair_works(
    paths: &mut Paths<'_>,
    g: &Graph,
    a1: Vertex,
    a2: Vertex,
    k: usize,
    splits: &[(usize, usize)],
) -> Result<bool, SuitabilityError> {
    for len in 1..=k - 2 {
        if paths.get(a1, a2, len)?.is_none() {
            return Ok(false);
        }
    }
    for q in g.vertices().filter(|&q| q != a1 && q != a2) {
        for &(m1, m2) in splits {
            if paths.get(a1, q, m1)?.is_none() && paths.get(a2, q, m2)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The least adjacent pair `(a1, a2)` with `a1 < a2` making `g` suitable,
/// assuming (S1) holds. Both orders are covered since the splits are
/// symmetric.
pub fn find_special_pair(
    g: &Graph,
    k: usize,
    mode: SuitabilityMode,
) -> Result<Option<(Vertex, Vertex)>, SuitabilityError> {
    let splits = mode.splits(k);
    let mut paths = Paths::new(g);
    for &(a1, a2) in g.edges() {
        if special_pair_works(&mut paths, g, a1, a2, k, &splits)? {
            return Ok(Some((a1, a2)));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinerConfig {
    /// Largest `k` accepted.
    pub ceiling: usize,
    pub shards: usize,
    pub time_budget: Option<Duration>,
}

impl Default for MinerConfig {
    fn default() -> Self {
        MinerConfig {
            ceiling: 8,
            shards: 1,
            time_budget: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinedWitness {
    pub edges: usize,
    pub code: CanonicalCode,
    pub labeled: LabeledGraph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MineOutcome {
    Found(MinedWitness),
    /// No graph on `k` vertices qualifies.
    NotFound,
    /// Time ran out; every edge count below `at_least` was ruled out.
    TimedOut { at_least: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MineResult {
    pub k: usize,
    pub mode: SuitabilityMode,
    pub outcome: MineOutcome,
    pub graphs_examined: usize,
}

impl MineResult {
    pub fn value(&self) -> Option<usize> {
        match &self.outcome {
            MineOutcome::Found(w) => Some(w.edges),
            _ => None,
        }
    }
}

/// Least edge count of a `k`-vertex graph that is suitable for some choice
/// of special vertices. Edge counts are tried in increasing order and each
/// level in canonical-code order, so the witness is the least code at the
/// least edge count. Only connected graphs can pass (S1).
pub fn mine_suitable(
    k: usize,
    mode: SuitabilityMode,
    config: &MinerConfig,
) -> Result<MineResult, SuitabilityError> {
    if k > config.ceiling {
        return Err(SuitabilityError::CeilingExceeded {
            k,
            ceiling: config.ceiling,
        });
    }
    if k < mode.min_k() {
        return Err(SuitabilityError::KTooSmall {
            mode,
            k,
            min: mode.min_k(),
        });
    }
    let deadline = config.time_budget.map(|d| Instant::now() + d);
    let mut levels = Levels::new(k);
    let mut examined = 0;
    loop {
        if levels.edge_count() + 1 >= k {
            let outcome = search_stratum(levels.classes(), config.shards, deadline, |code| {
                let g = code.to_graph();
                if !g.is_connected() || first_unsaturated_pair(&g, k)?.is_some() {
                    return Ok::<_, SuitabilityError>(None);
                }
                find_special_pair(&g, k, mode)
            })?;
            examined += outcome.examined;
            if outcome.timed_out {
                return Ok(MineResult {
                    k,
                    mode,
                    outcome: MineOutcome::TimedOut {
                        at_least: levels.edge_count(),
                    },
                    graphs_examined: examined,
                });
            }
            if let Some((i, (a1, a2))) = outcome.found {
                let code = levels.classes()[i].clone();
                let labeled = LabeledGraph::with_special(code.to_graph(), a1, a2);
                return Ok(MineResult {
                    k,
                    mode,
                    outcome: MineOutcome::Found(MinedWitness {
                        edges: levels.edge_count(),
                        code,
                        labeled,
                    }),
                    graphs_examined: examined,
                });
            }
        }
        if levels.is_last() {
            return Ok(MineResult {
                k,
                mode,
                outcome: MineOutcome::NotFound,
                graphs_examined: examined,
            });
        }
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Ok(MineResult {
                k,
                mode,
                outcome: MineOutcome::TimedOut {
                    at_least: (levels.edge_count() + 1).max(k - 1),
                },
                graphs_examined: examined,
            });
        }
        levels.advance(config.shards);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_wheel;

    #[test]
    fn split_lists() {
        assert_eq!(SuitabilityMode::K.splits(6), vec![(2, 4), (3, 3), (4, 2)]);
        assert_eq!(SuitabilityMode::KPlus2.splits(8), vec![(3, 5), (4, 4), (5, 3)]);
        assert_eq!(
            SuitabilityMode::KPlus2.splits(10),
            vec![(3, 7), (4, 6), (5, 5), (6, 4), (7, 3), (6, 6)]
        );
    }

    #[test]
    fn wheels_are_suitable() {
        let w = build_wheel(6, 4).unwrap().labeled;
        let report = is_k_suitable(&w, 6).unwrap();
        assert!(report.holds(), "{}", report.summary());
        assert!(report.witnesses_valid(w.graph()));
        let w = build_wheel(8, 0).unwrap().labeled;
        assert!(is_kk2_suitable(&w, 8).unwrap().holds());
        let w = build_wheel(6, 6).unwrap().labeled;
        assert!(is_kk2_suitable(&w, 6).unwrap().holds());
    }

    #[test]
    fn path_is_not_suitable() {
        let p = LabeledGraph::with_special(Graph::path(6), 0, 5);
        let report = is_k_suitable(&p, 6).unwrap();
        assert!(!report.holds());
        assert!(report.s2[0].1.is_none());
        assert!(report.witnesses_valid(p.graph()));
    }

    #[test]
    fn edgeless_fails_s1() {
        let e = LabeledGraph::with_special(Graph::empty(8), 0, 1);
        let report = is_kk2_suitable(&e, 8).unwrap();
        assert!(!report.s1 && !report.holds());
    }

    #[test]
    fn argument_errors() {
        let g = LabeledGraph::with_special(Graph::complete(5), 2, 2);
        assert_eq!(is_k_suitable(&g, 5), Err(SuitabilityError::MissingLabels));
        let g = LabeledGraph::with_special(Graph::complete(5), 0, 1);
        assert!(matches!(is_kk2_suitable(&g, 5), Err(SuitabilityError::KTooSmall { .. })));
        assert!(matches!(
            mine_suitable(9, SuitabilityMode::K, &MinerConfig::default()),
            Err(SuitabilityError::CeilingExceeded { .. })
        ));
    }

    #[test]
    fn mined_six_is_at_most_the_wheel() {
        let result = mine_suitable(6, SuitabilityMode::K, &MinerConfig::default()).unwrap();
        let MineOutcome::Found(w) = &result.outcome else {
            panic!("no suitable graph on 6 vertices");
        };
        assert!(w.edges <= 10);
        assert!(is_k_suitable(&w.labeled, 6).unwrap().holds());
    }
}
