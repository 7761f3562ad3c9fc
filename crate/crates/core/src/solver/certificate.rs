//! Witnesses for strong geodetic sets and cores, and an independent checker.
//!
//! The checker trusts nothing but the [`Graph`]: it recomputes distances with
//! its own breadth-first searches and re-verifies every path and the coverage.

use crate::graph::{Graph, Path};
use crate::vertex_set::VertexSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A fixed geodesic for one unordered pair; `pair.0 < pair.1` and the path
/// runs from `pair.0` to `pair.1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairPath {
    pub pair: (usize, usize),
    pub path: Path,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SgCertificate {
    pub set: VertexSet,
    pub paths: Vec<PairPath>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreCertificate {
    pub set: VertexSet,
    pub core: VertexSet,
    pub paths: Vec<PairPath>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("vertex {0} outside the graph")]
    VertexOutOfRange(usize),
    #[error("core is not a subset of the set")]
    CoreNotSubset,
    #[error("pair {0:?} is not a required pair")]
    UnexpectedPair((usize, usize)),
    #[error("pair {0:?} has no path")]
    MissingPair((usize, usize)),
    #[error("pair {0:?} has more than one path")]
    RepeatedPair((usize, usize)),
    #[error("path for {0:?} does not join its pair")]
    WrongEndpoints((usize, usize)),
    #[error("path for {0:?} is not a path of the graph")]
    NotAPath((usize, usize)),
    #[error("path for {pair:?} has length {length} but the distance is {distance}")]
    NotGeodesic {
        pair: (usize, usize),
        length: usize,
        distance: usize,
    },
    #[error("vertices {0:?} are not covered")]
    Uncovered(Vec<usize>),
    #[error("empty set")]
    EmptySet,
}

/// JSON form shared by both certificate kinds; `core` is present only for
/// core certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub set: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub core: Option<Vec<usize>>,
    pub paths: Vec<PairPath>,
    pub value: usize,
    pub status: String,
}

impl SgCertificate {
    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            set: self.set.to_vec(),
            core: None,
            paths: self.paths.clone(),
            value: self.set.len(),
            status: "proved".into(),
        }
    }

    pub fn verify(&self, g: &Graph) -> Result<(), CertificateError> {
        let members = self.set.to_vec();
        let required: Vec<(usize, usize)> = all_pairs(&members, &members);
        check(g, &self.set, &required, &self.paths)
    }
}

impl CoreCertificate {
    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            set: self.set.to_vec(),
            core: Some(self.core.to_vec()),
            paths: self.paths.clone(),
            value: self.core.len(),
            status: "proved".into(),
        }
    }

    pub fn verify(&self, g: &Graph) -> Result<(), CertificateError> {
        if self.core.universe() != self.set.universe() || !self.core.is_subset(&self.set) {
            return Err(CertificateError::CoreNotSubset);
        }
        if self.core.is_empty() && g.order() > 1 {
            return Err(CertificateError::EmptySet);
        }
        let required = all_pairs(&self.core.to_vec(), &self.set.to_vec());
        check(g, &self.set, &required, &self.paths)
    }
}

impl CertificateJson {
    /// Rebuilds a typed certificate over a graph of order `n`.
    pub fn into_sg(self, n: usize) -> Result<SgCertificate, CertificateError> {
        Ok(SgCertificate {
            set: to_set(n, &self.set)?,
            paths: self.paths,
        })
    }

    pub fn into_core(self, n: usize) -> Result<CoreCertificate, CertificateError> {
        let core = self.core.clone().unwrap_or_default();
        Ok(CoreCertificate {
            set: to_set(n, &self.set)?,
            core: to_set(n, &core)?,
            paths: self.paths,
        })
    }
}

fn to_set(n: usize, vs: &[usize]) -> Result<VertexSet, CertificateError> {
    if let Some(&v) = vs.iter().find(|&&v| v >= n) {
        return Err(CertificateError::VertexOutOfRange(v));
    }
    Ok(VertexSet::from_vertices(n, vs.iter().copied()))
}

/// Unordered pairs `{a, b}`, `a != b`, with `a` in `left` and `b` in `right`,
/// normalised to `a < b`, sorted and deduplicated.
pub(crate) fn all_pairs(left: &[usize], right: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = left
        .iter()
        .flat_map(|&a| {
            right
                .iter()
                .filter(move |&&b| b != a)
                .map(move |&b| (a.min(b), a.max(b)))
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn check(
    g: &Graph,
    set: &VertexSet,
    required: &[(usize, usize)],
    paths: &[PairPath],
) -> Result<(), CertificateError> {
    let n = g.order();
    if set.universe() != n {
        return Err(CertificateError::VertexOutOfRange(set.universe()));
    }
    if set.is_empty() {
        return Err(CertificateError::EmptySet);
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut covered = vec![false; n];
    for pp in paths {
        let (a, b) = pp.pair;
        if a >= n || b >= n {
            return Err(CertificateError::VertexOutOfRange(a.max(b)));
        }
        if required.binary_search(&pp.pair).is_err() {
            return Err(CertificateError::UnexpectedPair(pp.pair));
        }
        if !seen.insert(pp.pair) {
            return Err(CertificateError::RepeatedPair(pp.pair));
        }
        if pp.path.first() != Some(a) || pp.path.last() != Some(b) {
            return Err(CertificateError::WrongEndpoints(pp.pair));
        }
        if !pp.path.is_path_in(g) {
            return Err(CertificateError::NotAPath(pp.pair));
        }
        let distance = g.bfs(a)[b].expect("path exists, so b is reachable");
        if pp.path.len() != distance {
            return Err(CertificateError::NotGeodesic {
                pair: pp.pair,
                length: pp.path.len(),
                distance,
            });
        }
        for &v in pp.path.vertices() {
            covered[v] = true;
        }
    }
    if let Some(missing) = required.iter().find(|p| !seen.contains(p)) {
        return Err(CertificateError::MissingPair(*missing));
    }
    // A single vertex is its own strong geodetic set.
    if n == 1 {
        covered[0] = set.contains(0);
    }
    let uncovered: Vec<usize> = (0..n).filter(|&v| !covered[v]).collect();
    if uncovered.is_empty() {
        Ok(())
    } else {
        Err(CertificateError::Uncovered(uncovered))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn pp(a: usize, b: usize, path: &[usize]) -> PairPath {
        PairPath {
            pair: (a, b),
            path: Path(path.to_vec()),
        }
    }

    #[test]
    fn accepts_valid_and_rejects_tampering() {
        let c6 = families::cycle(6).unwrap();
        let cert = SgCertificate {
            set: VertexSet::from_vertices(6, [0, 2, 4]),
            paths: vec![
                pp(0, 2, &[0, 1, 2]),
                pp(0, 4, &[0, 5, 4]),
                pp(2, 4, &[2, 3, 4]),
            ],
        };
        assert_eq!(cert.verify(&c6), Ok(()));

        let mut bad = cert.clone();
        bad.paths[1] = pp(0, 4, &[0, 1, 2, 3, 4]);
        assert!(matches!(
            bad.verify(&c6),
            Err(CertificateError::NotGeodesic { .. })
        ));

        let mut missing = cert.clone();
        missing.paths.pop();
        assert_eq!(
            missing.verify(&c6),
            Err(CertificateError::MissingPair((2, 4)))
        );

        let antipodal = SgCertificate {
            set: VertexSet::from_vertices(6, [0, 3]),
            paths: vec![pp(0, 3, &[0, 1, 2, 3])],
        };
        assert_eq!(
            antipodal.verify(&c6),
            Err(CertificateError::Uncovered(vec![4, 5]))
        );
    }

    #[test]
    fn core_certificate_pairs() {
        let p3 = families::path(3).unwrap();
        let cert = CoreCertificate {
            set: VertexSet::from_vertices(3, [0, 2]),
            core: VertexSet::from_vertices(3, [0]),
            paths: vec![pp(0, 2, &[0, 1, 2])],
        };
        assert_eq!(cert.verify(&p3), Ok(()));
        let json = serde_json::to_value(cert.to_json()).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"set":[0,2],"core":[0],"paths":[{"pair":[0,2],"path":[0,1,2]}],"value":1,"status":"proved"})
        );
        let back: CertificateJson = serde_json::from_value(json).unwrap();
        assert_eq!(back.into_core(3).unwrap(), cert);
    }

    #[test]
    fn single_vertex_convention() {
        let k1 = families::complete(1).unwrap();
        let cert = SgCertificate {
            set: VertexSet::from_vertices(1, [0]),
            paths: vec![],
        };
        assert_eq!(cert.verify(&k1), Ok(()));
    }
}
