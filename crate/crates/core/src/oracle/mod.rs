//! Exact `sat(n, C_k)` and `ssat(n, C_k)` for small `n` by exhaustive search
//! over isomorphism classes, edge counts ascending.

pub mod enumerate;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bounds::{eval_bounds, Quantity};
use crate::cycle::has_cycle_of_length;
use crate::graph::{CanonicalCode, Graph};
use crate::saturation::{first_unsaturated_pair, SaturationError};

use enumerate::{search_stratum, Levels};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SatMode {
    Sat,
    Ssat,
}

impl fmt::Display for SatMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SatMode::Sat => "sat",
            SatMode::Ssat => "ssat",
        })
    }
}

impl FromStr for SatMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sat" | "saturated" => Ok(SatMode::Sat),
            "ssat" | "semisaturated" => Ok(SatMode::Ssat),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

impl SatMode {
    /// Default largest order searched.
    pub fn default_ceiling(self) -> usize {
        match self {
            SatMode::Sat => 8,
            SatMode::Ssat => 9,
        }
    }
}

/// Where the search starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FloorPolicy {
    /// The largest applicable lower bound, and `n - 1` from connectivity.
    Bounds,
    /// `n - 1` from connectivity only, so the bounds can be tested.
    Connectivity,
    /// A caller-chosen edge count.
    Fixed(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `n` accepted; `None` uses the mode default.
    pub ceiling: Option<usize>,
    pub shards: usize,
    pub time_budget: Option<Duration>,
    pub floor: FloorPolicy,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            ceiling: None,
            shards: 1,
            time_budget: None,
            floor: FloorPolicy::Bounds,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("order {n} exceeds the configured ceiling {ceiling}")]
    CeilingExceeded { n: usize, ceiling: usize },
    #[error(transparent)]
    Saturation(#[from] SaturationError),
}

impl From<crate::cycle::SearchError> for OracleError {
    fn from(e: crate::cycle::SearchError) -> Self {
        OracleError::Saturation(e.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    /// The minimum edge count with the least-code witness at that count.
    Exact { value: usize, witness: Graph, code: CanonicalCode },
    /// Time ran out; every edge count below this one was ruled out.
    AtLeast(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub n: usize,
    pub k: usize,
    pub mode: SatMode,
    pub floor: usize,
    pub outcome: OracleOutcome,
    pub graphs_examined: usize,
    pub elapsed: Duration,
}

impl OracleResult {
    pub fn value(&self) -> Option<usize> {
        match &self.outcome {
            OracleOutcome::Exact { value, .. } => Some(*value),
            OracleOutcome::AtLeast(_) => None,
        }
    }
}

/// Connectivity is assumed only for `k >= 5`: a saturated or semisaturated
/// graph with `n >= k >= 3` is connected, but for `k` in `{3, 4}` the search
/// checks that instead of relying on it.
fn assumes_connected(k: usize) -> bool {
    k >= 5
}

/// First edge count examined under `policy`.
pub fn search_floor(n: usize, k: usize, mode: SatMode, policy: FloorPolicy) -> usize {
    let connectivity = if assumes_connected(k) { n.saturating_sub(1) } else { 0 };
    match policy {
        FloorPolicy::Fixed(m) => m,
        FloorPolicy::Connectivity => connectivity,
        FloorPolicy::Bounds => {
            let quantity = match mode {
                SatMode::Sat => Quantity::Sat,
                SatMode::Ssat => Quantity::Ssat,
            };
            let bound = eval_bounds(n, k).lower_floor(quantity).unwrap_or(0).max(0) as usize;
            bound.max(connectivity)
        }
    }
}

/// Whether `g` is `C_k`-(semi)saturated, checked cheaply without witnesses.
pub fn passes(g: &Graph, k: usize, mode: SatMode) -> Result<bool, OracleError> {
    if mode == SatMode::Sat && has_cycle_of_length(g, k)?.is_some() {
        return Ok(false);
    }
    Ok(first_unsaturated_pair(g, k)?.is_none())
}

pub fn exact_min(n: usize, k: usize, mode: SatMode) -> Result<OracleResult, OracleError> {
    exact_min_with(n, k, mode, &OracleConfig::default())
}

pub fn exact_min_sharded(n: usize, k: usize, mode: SatMode, shards: usize) -> Result<OracleResult, OracleError> {
    exact_min_with(
        n,
        k,
        mode,
        &OracleConfig {
            shards,
            ..OracleConfig::default()
        },
    )
}

pub fn exact_min_with(
    n: usize,
    k: usize,
    mode: SatMode,
    config: &OracleConfig,
) -> Result<OracleResult, OracleError> {
    let ceiling = config.ceiling.unwrap_or(mode.default_ceiling());
    if n > ceiling {
        return Err(OracleError::CeilingExceeded { n, ceiling });
    }
    if k < 3 {
        return Err(SaturationError::CycleTooShort(k).into());
    }
    if n < k {
        return Err(SaturationError::TooFewVertices { n, k }.into());
    }
    let start = Instant::now();
    let deadline = config.time_budget.map(|d| start + d);
    let floor = search_floor(n, k, mode, config.floor);
    let connected_only = assumes_connected(k);
    let mut levels = Levels::new(n);
    let mut examined = 0;
    let finish = |outcome, examined| OracleResult {
        n,
        k,
        mode,
        floor,
        outcome,
        graphs_examined: examined,
        elapsed: start.elapsed(),
    };
    loop {
        if levels.edge_count() >= floor {
            let outcome = search_stratum(levels.classes(), config.shards, deadline, |code| {
                let g = code.to_graph();
                if connected_only && !g.is_connected() {
                    return Ok::<_, OracleError>(None);
                }
                Ok(passes(&g, k, mode)?.then_some(g))
            })?;
            examined += outcome.examined;
            if outcome.timed_out {
                return Ok(finish(OracleOutcome::AtLeast(levels.edge_count()), examined));
            }
            if let Some((i, witness)) = outcome.found {
                let code = levels.classes()[i].clone();
                let value = levels.edge_count();
                return Ok(finish(OracleOutcome::Exact { value, witness, code }, examined));
            }
        }
        // The complete graph is vacuously semisaturated, and for sat some
        // maximal C_k-free graph always exists, so the loop ends in a match.
        assert!(!levels.is_last(), "no (semi)saturated graph on {n} vertices");
        if deadline.is_some_and(|d| Instant::now() >= d) {
            // Counts below the floor are ruled out without search.
            let ruled_out = (levels.edge_count() + 1).max(floor);
            return Ok(finish(OracleOutcome::AtLeast(ruled_out), examined));
        }
        levels.advance(config.shards);
    }
}

/// Canonical codes of all classes with `m` edges on `n` vertices
/// that pass, in code order. For cross-checking a reported minimum.
pub fn passing_classes(n: usize, k: usize, mode: SatMode, m: usize) -> Result<Vec<CanonicalCode>, OracleError> {
    let mut levels = Levels::new(n);
    while levels.edge_count() < m {
        levels.advance(1);
    }
    let mut out = Vec::new();
    for code in levels.classes() {
        let g = code.to_graph();
        if passes(&g, k, mode)? {
            out.push(code.clone());
        }
    }
    Ok(out)
}
