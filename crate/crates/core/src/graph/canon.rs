//! Canonical labeling by color refinement plus individualization search.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, pick the first non-singleton cell, individualize each of
//! its vertices in turn and recurse. Every discrete leaf yields a labeling;
//! the canonical labeling is the one whose relabeled graph has the largest
//! graph6 string. Leaves with equal strings give automorphisms, which prune
//! siblings lying in a common orbit of the prefix-fixing subgroup they
//! generate.

use std::fmt;

use super::format::graph6_from_pairs;
use super::{Graph, Vertex};

/// Graph6 string of the canonical form. Two graphs have equal codes iff
/// they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        super::graph6_decode(&self.0).expect("canonical codes are valid graph6")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    let (_, code) = Canonizer::run(g);
    CanonicalCode(code)
}

/// Canonical labeling as `perm[old] = new`.
pub fn canonical_labeling(g: &Graph) -> Vec<Vertex> {
    Canonizer::run(g).0
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

struct Canonizer<'g> {
    g: &'g Graph,
    best: Option<(String, Vec<Vertex>)>,
    automorphisms: Vec<Vec<Vertex>>,
}

impl<'g> Canonizer<'g> {
    fn run(g: &'g Graph) -> (Vec<Vertex>, String) {
        let n = g.vertex_count();
        let mut colors = vec![0; n];
        refine(g, &mut colors);
        let mut canonizer = Canonizer {
            g,
            best: None,
            automorphisms: Vec::new(),
        };
        canonizer.search(colors, &mut Vec::new());
        match canonizer.best {
            Some((code, labeling)) => (labeling, code),
            None => (Vec::new(), graph6_from_pairs(0, std::iter::empty())),
        }
    }

    fn search(&mut self, colors: Vec<usize>, prefix: &mut Vec<Vertex>) {
        let n = colors.len();
        let cells = colors.iter().max().map_or(0, |&c| c + 1);
        if cells == n {
            self.leaf(&colors);
            return;
        }
        let mut sizes = vec![0usize; cells];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..cells)
            .find(|&c| sizes[c] > 1)
            .expect("non-discrete partition");
        let cell: Vec<Vertex> = (0..n).filter(|&v| colors[v] == target).collect();

        let mut explored: Vec<Vertex> = Vec::new();
        for &v in &cell {
            if self.in_explored_orbit(v, &explored, prefix) {
                continue;
            }
            let mut child = individualize(&colors, v);
            refine(self.g, &mut child);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn in_explored_orbit(&self, v: Vertex, explored: &[Vertex], prefix: &[Vertex]) -> bool {
        if explored.is_empty() {
            return false;
        }
        let n = self.g.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for x in 0..n {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry);
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == rv)
    }

    fn leaf(&mut self, labeling: &[usize]) {
        let n = labeling.len();
        let code = graph6_from_pairs(
            n,
            self.g
                .edges()
                .iter()
                .map(|&(u, v)| (labeling[u], labeling[v])),
        );
        match &self.best {
            None => self.best = Some((code, labeling.to_vec())),
            Some((best_code, best_labeling)) => match code.cmp(best_code) {
                std::cmp::Ordering::Greater => self.best = Some((code, labeling.to_vec())),
                std::cmp::Ordering::Equal => {
                    let mut inverse = vec![0; n];
                    for (v, &l) in best_labeling.iter().enumerate() {
                        inverse[l] = v;
                    }
                    let gamma: Vec<Vertex> = (0..n).map(|v| inverse[labeling[v]]).collect();
                    if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                        debug_assert!(self
                            .g
                            .edges()
                            .iter()
                            .all(|&(u, v)| self.g.has_edge(gamma[u], gamma[v])));
                        self.automorphisms.push(gamma);
                    }
                }
                std::cmp::Ordering::Less => {}
            },
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Splits `v` off its cell, placing it first; colors stay dense.
fn individualize(colors: &[usize], v: Vertex) -> Vec<usize> {
    let keyed: Vec<usize> = colors
        .iter()
        .enumerate()
        .map(|(w, &c)| 2 * c + usize::from(w != v))
        .collect();
    compress(&keyed)
}

fn compress(keys: &[usize]) -> Vec<usize> {
    let mut sorted = keys.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect()
}

/// Refines `colors` to the coarsest equitable partition finer than it.
/// New colors are ranked by (old color, sorted neighbor colors), which is
/// independent of vertex names.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = colors.len();
    let mut cells = colors.iter().max().map_or(0, |&c| c + 1);
    loop {
        if cells == n {
            return;
        }
        let mut signatures: Vec<(usize, Vec<usize>, Vertex)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around, v)
            })
            .collect();
        signatures.sort_unstable();
        let mut rank = 0;
        for i in 0..n {
            if i > 0
                && (signatures[i].0 != signatures[i - 1].0
                    || signatures[i].1 != signatures[i - 1].1)
            {
                rank += 1;
            }
            colors[signatures[i].2] = rank;
        }
        if rank + 1 == cells {
            return;
        }
        cells = rank + 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_paths_agree() {
        let a = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::new(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
    }

    #[test]
    fn triangle_differs_from_path() {
        assert_ne!(
            canonical_code(&Graph::complete(3)),
            canonical_code(&Graph::path(3))
        );
    }

    #[test]
    fn reversed_cycle() {
        let c5 = Graph::cycle(5);
        let reversed = c5.relabel(&[4, 3, 2, 1, 0]);
        assert_eq!(canonical_code(&c5), canonical_code(&reversed));
    }

    #[test]
    fn canonical_form_is_fixed_point() {
        let g = Graph::new(6, &[(0, 3), (3, 5), (5, 1), (1, 2), (2, 4), (0, 5)]).unwrap();
        let f = canonical_form(&g);
        assert_eq!(canonical_form(&f), f);
        assert_eq!(canonical_code(&g).to_graph(), f);
    }

    #[test]
    fn symmetric_graphs_finish() {
        // Large automorphism groups must not blow up the search.
        for g in [
            Graph::empty(12),
            Graph::complete(12),
            Graph::star(14),
            Graph::cycle(16),
        ] {
            let code = canonical_code(&g);
            assert_eq!(code.to_graph().edge_count(), g.edge_count());
        }
    }

    #[test]
    fn empty_vertex_set() {
        assert_eq!(canonical_code(&Graph::empty(0)).as_str(), "?");
    }
}
