use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{is_ck_free, Mode, SaturationError};
use crate::cycle::CycleWitness;
use crate::graph::{Graph, Vertex};

/// The `k`-cycle created by adding the non-edge `uv`. The cycle is listed
/// from `u` to `v`; its closing pair is the non-edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonEdgeWitness {
    pub u: Vertex,
    pub v: Vertex,
    pub cycle: CycleWitness,
}

/// Evidence that a graph is `C_k`-(semi)saturated: one witness cycle per
/// non-edge, and for saturation a record that the `C_k` search came back
/// empty.
///
/// Text form:
///
/// ```text
/// certificate n=9 k=7 mode=saturated free=confirmed
/// 0 4 : 0 2 6 3 5 1 4
/// ...
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    n: usize,
    k: usize,
    mode: Mode,
    ck_free_confirmed: bool,
    witnesses: Vec<NonEdgeWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("certificate line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("certificate is for {expected} vertices, graph has {found}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("pair ({0}, {1}) is an edge of the graph")]
    NotANonEdge(Vertex, Vertex),
    #[error("pair ({0}, {1}) appears more than once")]
    DuplicatePair(Vertex, Vertex),
    #[error("non-edge ({0}, {1}) has no witness")]
    MissingPair(Vertex, Vertex),
    #[error("witness for ({u}, {v}) has length {found}, expected {expected}")]
    WrongLength {
        u: Vertex,
        v: Vertex,
        expected: usize,
        found: usize,
    },
    #[error("witness for ({0}, {1}) does not start at u, end at v and close over the pair")]
    DoesNotUsePair(Vertex, Vertex),
    #[error("witness for ({0}, {1}) is not a cycle of the graph plus the pair")]
    NotACycle(Vertex, Vertex),
    #[error("saturation certificate lacks a freeness confirmation")]
    FreenessMissing,
    #[error("graph contains a C_k although the certificate claims freeness")]
    ContainsCycle,
    #[error(transparent)]
    Search(#[from] SaturationError),
}

impl Certificate {
    pub fn new(
        n: usize,
        k: usize,
        mode: Mode,
        ck_free_confirmed: bool,
        witnesses: Vec<NonEdgeWitness>,
    ) -> Self {
        Certificate {
            n,
            k,
            mode,
            ck_free_confirmed,
            witnesses,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn ck_free_confirmed(&self) -> bool {
        self.ck_free_confirmed
    }

    pub fn witnesses(&self) -> &[NonEdgeWitness] {
        &self.witnesses
    }

    /// Re-checks every witness against `g` independently of how it was
    /// found. For saturation certificates the freeness claim is re-run
    /// through the cycle search.
    pub fn validate(&self, g: &Graph) -> Result<(), CertificateError> {
        if g.vertex_count() != self.n {
            return Err(CertificateError::OrderMismatch {
                expected: self.n,
                found: g.vertex_count(),
            });
        }
        let mut covered = BTreeSet::new();
        for w in &self.witnesses {
            let (u, v) = (w.u, w.v);
            let pair = (u.min(v), u.max(v));
            if u == v || u >= self.n || v >= self.n || g.has_edge(u, v) {
                return Err(CertificateError::NotANonEdge(u, v));
            }
            if !covered.insert(pair) {
                return Err(CertificateError::DuplicatePair(pair.0, pair.1));
            }
            let cycle = w.cycle.vertices();
            if cycle.len() != self.k {
                return Err(CertificateError::WrongLength {
                    u,
                    v,
                    expected: self.k,
                    found: cycle.len(),
                });
            }
            if cycle.first() != Some(&u) || cycle.last() != Some(&v) {
                return Err(CertificateError::DoesNotUsePair(u, v));
            }
            let with_pair = g.with_edge(u, v).expect("checked non-edge");
            if !w.cycle.is_valid_in(&with_pair) {
                return Err(CertificateError::NotACycle(u, v));
            }
        }
        if let Some((u, v)) = g.non_edges().find(|p| !covered.contains(p)) {
            return Err(CertificateError::MissingPair(u, v));
        }
        if self.mode == Mode::Saturated {
            if !self.ck_free_confirmed {
                return Err(CertificateError::FreenessMissing);
            }
            if !is_ck_free(g, self.k)?.is_free() {
                return Err(CertificateError::ContainsCycle);
            }
        }
        Ok(())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "certificate n={} k={} mode={} free={}",
            self.n,
            self.k,
            self.mode,
            if self.ck_free_confirmed {
                "confirmed"
            } else {
                "unchecked"
            }
        )?;
        for w in &self.witnesses {
            write!(f, "{} {} :", w.u, w.v)?;
            for c in w.cycle.vertices() {
                write!(f, " {c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> CertificateError {
    CertificateError::Parse {
        line,
        message: message.into(),
    }
}

impl FromStr for Certificate {
    type Err = CertificateError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, header) = lines.next().ok_or_else(|| parse_error(1, "empty certificate"))?;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("certificate") {
            return Err(parse_error(line, "header must start with `certificate`"));
        }
        let (mut n, mut k, mut mode, mut free) = (None, None, None, None);
        for field in fields {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| parse_error(line, format!("malformed header field {field:?}")))?;
            let bad = || parse_error(line, format!("bad value in {field:?}"));
            match key {
                "n" => n = Some(value.parse().map_err(|_| bad())?),
                "k" => k = Some(value.parse().map_err(|_| bad())?),
                "mode" => mode = Some(value.parse().map_err(|_| bad())?),
                "free" => {
                    free = Some(match value {
                        "confirmed" => true,
                        "unchecked" => false,
                        _ => return Err(bad()),
                    })
                }
                _ => return Err(parse_error(line, format!("unknown header field {key:?}"))),
            }
        }
        let missing = |what: &str| parse_error(line, format!("header lacks {what}"));
        let n = n.ok_or_else(|| missing("n"))?;
        let k = k.ok_or_else(|| missing("k"))?;
        let mode = mode.ok_or_else(|| missing("mode"))?;
        let free = free.ok_or_else(|| missing("free"))?;

        let mut witnesses = Vec::new();
        for (line, l) in lines {
            let (pair, cycle) = l
                .split_once(':')
                .ok_or_else(|| parse_error(line, "expected `u v : c0 c1 ...`"))?;
            let numbers = |s: &str| -> Result<Vec<Vertex>, CertificateError> {
                s.split_whitespace()
                    .map(|x| x.parse().map_err(|_| parse_error(line, format!("bad vertex {x:?}"))))
                    .collect()
            };
            let pair = numbers(pair)?;
            let [u, v] = pair[..] else {
                return Err(parse_error(line, "expected exactly two pair vertices"));
            };
            witnesses.push(NonEdgeWitness {
                u,
                v,
                cycle: CycleWitness::new(numbers(cycle)?),
            });
        }
        Ok(Certificate::new(n, k, mode, free, witnesses))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::saturation::{is_saturated, is_semisaturated};

    fn star_certificate() -> (Graph, Certificate) {
        let g = Graph::star(5);
        let cert = is_saturated(&g, 3).unwrap().certificate().unwrap().clone();
        (g, cert)
    }

    #[test]
    fn text_round_trip() {
        let (g, cert) = star_certificate();
        let text = cert.to_string();
        assert!(text.starts_with("certificate n=5 k=3 mode=saturated free=confirmed\n1 2 : 1 0 2\n"));
        let parsed: Certificate = text.parse().unwrap();
        assert_eq!(parsed, cert);
        parsed.validate(&g).unwrap();
    }

    #[test]
    fn tampering_is_detected() {
        let (g, cert) = star_certificate();
        let mut w = cert.witnesses().to_vec();
        w.pop();
        let short = Certificate::new(5, 3, Mode::Saturated, true, w.clone());
        assert_eq!(short.validate(&g), Err(CertificateError::MissingPair(3, 4)));

        w.push(w[0].clone());
        let dup = Certificate::new(5, 3, Mode::Saturated, true, w);
        assert_eq!(dup.validate(&g), Err(CertificateError::DuplicatePair(1, 2)));

        let mut w = cert.witnesses().to_vec();
        w[0].cycle = CycleWitness::new(vec![1, 3, 2]);
        let bogus = Certificate::new(5, 3, Mode::Saturated, true, w);
        assert_eq!(bogus.validate(&g), Err(CertificateError::NotACycle(1, 2)));

        let unconfirmed = Certificate::new(5, 3, Mode::Saturated, false, cert.witnesses().to_vec());
        assert_eq!(unconfirmed.validate(&g), Err(CertificateError::FreenessMissing));

        assert!(matches!(
            cert.validate(&Graph::star(6)),
            Err(CertificateError::OrderMismatch { .. })
        ));
    }

    #[test]
    fn false_freeness_claim() {
        let g = Graph::complete(4);
        let cert = is_semisaturated(&g, 3).unwrap().certificate().unwrap().clone();
        let claimed = Certificate::new(4, 3, Mode::Saturated, true, cert.witnesses().to_vec());
        assert_eq!(claimed.validate(&g), Err(CertificateError::ContainsCycle));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "".parse::<Certificate>(),
            Err(CertificateError::Parse { .. })
        ));
        assert!(matches!(
            "certificate n=5 k=3 mode=saturated".parse::<Certificate>(),
            Err(CertificateError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            "certificate n=5 k=3 mode=saturated free=confirmed\n1 2 3 : 1 0 2".parse::<Certificate>(),
            Err(CertificateError::Parse { line: 2, .. })
        ));
    }
}
