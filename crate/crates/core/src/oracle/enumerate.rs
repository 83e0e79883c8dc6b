//! Isomorphism classes of graphs on `n` vertices, generated one edge count
//! at a time, and a sharded first-match search over a level.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::graph::{canonical_code, CanonicalCode, Graph};

/// All isomorphism classes with a given number of edges, as sorted
/// canonical codes. Level `m + 1` is obtained by adding each non-edge to the
/// canonical representative of each class on level `m` and removing
/// duplicates; every graph with `m + 1` edges has a parent on level `m`, so
/// nothing is missed.
#[derive(Debug, Clone)]
pub struct Levels {
    n: usize,
    edges: usize,
    classes: Vec<CanonicalCode>,
}

impl Levels {
    /// Starts at the edgeless graph.
    pub fn new(n: usize) -> Self {
        Levels {
            n,
            edges: 0,
            classes: vec![canonical_code(&Graph::empty(n))],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn classes(&self) -> &[CanonicalCode] {
        &self.classes
    }

    pub fn is_last(&self) -> bool {
        self.edges == self.n * self.n.saturating_sub(1) / 2
    }

    /// Moves to the next edge count. `shards` is the number of work units
    /// the current level is cut into.
    pub fn advance(&mut self, shards: usize) {
        assert!(!self.is_last(), "already at the complete graph");
        let chunk = self.classes.len().div_ceil(shards.max(1) * 4).max(1);
        let next: HashSet<CanonicalCode> = self
            .classes
            .par_chunks(chunk)
            .map(|chunk| {
                let mut local = HashSet::new();
                for code in chunk {
                    let g = code.to_graph();
                    for (u, v) in g.non_edges() {
                        local.insert(canonical_code(&g.with_edge(u, v).expect("non-edge")));
                    }
                }
                local
            })
            .reduce(HashSet::new, |mut a, b| {
                if a.len() < b.len() {
                    return b.into_iter().chain(a).collect();
                }
                a.extend(b);
                a
            });
        let mut classes: Vec<_> = next.into_iter().collect();
        classes.sort();
        self.classes = classes;
        self.edges += 1;
    }
}

/// Isomorphism classes with `m` edges found by canonicalizing every labeled
/// graph on `n` vertices. Independent of [`Levels`]; meant for `n <= 6`.
pub fn classes_by_bitmask(n: usize, m: usize) -> Vec<CanonicalCode> {
    assert!(n <= 7, "bitmask enumeration is for tiny orders");
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut seen = HashSet::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        seen.insert(canonical_code(&Graph::new(n, &edges).expect("valid pairs")));
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumOutcome<T> {
    /// The passing candidate with the least index, with its payload.
    pub found: Option<(usize, T)>,
    pub examined: usize,
    /// The deadline passed before the level was settled.
    pub timed_out: bool,
}

/// Finds the first candidate (in slice order) for which `test` returns
/// `Some`. The slice is cut into `shards` contiguous ranges searched
/// concurrently; a shard stops once it passes an index that another shard
/// already matched, so the merged answer does not depend on scheduling.
pub fn search_stratum<T, E, F>(
    candidates: &[CanonicalCode],
    shards: usize,
    deadline: Option<Instant>,
    test: F,
) -> Result<StratumOutcome<T>, E>
where
    T: Send,
    E: Send,
    F: Fn(&CanonicalCode) -> Result<Option<T>, E> + Sync,
{
    let shards = shards.clamp(1, candidates.len().max(1));
    let size = candidates.len().div_ceil(shards).max(1);
    let best = AtomicUsize::new(usize::MAX);
    let examined = AtomicUsize::new(0);
    let timed_out = AtomicBool::new(false);
    let expired = || deadline.is_some_and(|d| Instant::now() >= d);

    let run = |shard: usize| -> Result<Option<(usize, T)>, E> {
        let start = shard * size;
        let end = (start + size).min(candidates.len());
        for (i, code) in candidates.iter().enumerate().take(end).skip(start) {
            if i > best.load(Ordering::Acquire) {
                return Ok(None);
            }
            if expired() {
                timed_out.store(true, Ordering::Release);
                return Ok(None);
            }
            examined.fetch_add(1, Ordering::Relaxed);
            if let Some(payload) = test(code)? {
                best.fetch_min(i, Ordering::AcqRel);
                return Ok(Some((i, payload)));
            }
        }
        Ok(None)
    };

    let results: Vec<Result<Option<(usize, T)>, E>> = if shards == 1 {
        vec![run(0)]
    } else {
        (0..shards).into_par_iter().map(run).collect()
    };
    let mut found: Option<(usize, T)> = None;
    for r in results {
        if let Some((i, payload)) = r? {
            if found.as_ref().is_none_or(|(j, _)| i < *j) {
                found = Some((i, payload));
            }
        }
    }
    let timed_out = timed_out.load(Ordering::Acquire);
    Ok(StratumOutcome {
        // With a timeout some lower index may be unexamined.
        found: if timed_out { None } else { found },
        examined: examined.load(Ordering::Relaxed),
        timed_out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Graphs on n vertices up to isomorphism, per edge count.
    const CLASS_COUNTS_5: [usize; 11] = [1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1];

    #[test]
    fn five_vertex_levels() {
        let mut levels = Levels::new(5);
        let mut counts = vec![levels.classes().len()];
        while !levels.is_last() {
            levels.advance(3);
            counts.push(levels.classes().len());
        }
        assert_eq!(counts, CLASS_COUNTS_5);
        assert_eq!(counts.iter().sum::<usize>(), 34);
    }

    #[test]
    fn levels_agree_with_bitmask() {
        for n in 1..=6 {
            let mut levels = Levels::new(n);
            loop {
                assert_eq!(
                    levels.classes(),
                    classes_by_bitmask(n, levels.edge_count()).as_slice(),
                    "n = {n}, m = {}",
                    levels.edge_count()
                );
                if levels.is_last() {
                    break;
                }
                levels.advance(2);
            }
        }
    }

    #[test]
    fn stratum_search_is_shard_independent() {
        let mut levels = Levels::new(6);
        for _ in 0..7 {
            levels.advance(1);
        }
        let test = |c: &CanonicalCode| -> Result<Option<usize>, ()> {
            let g = c.to_graph();
            Ok((g.is_connected() && g.min_degree() == Some(2)).then(|| g.edge_count()))
        };
        let one = search_stratum(levels.classes(), 1, None, test).unwrap();
        for shards in [2, 3, 8, 100] {
            let many = search_stratum(levels.classes(), shards, None, test).unwrap();
            assert_eq!(many.found, one.found, "shards = {shards}");
        }
        assert!(one.found.is_some());
        let none = search_stratum(levels.classes(), 4, None, |_| Ok::<Option<()>, ()>(None)).unwrap();
        assert_eq!(none.found, None);
        assert_eq!(none.examined, levels.classes().len());
    }

    #[test]
    fn expired_deadline() {
        let levels = Levels::new(4);
        let past = Instant::now();
        let out = search_stratum(levels.classes(), 1, Some(past), |_| Ok::<_, ()>(Some(()))).unwrap();
        assert!(out.timed_out);
        assert_eq!(out.found, None);
    }
}
